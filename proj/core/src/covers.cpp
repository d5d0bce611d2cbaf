#include "edgereg/covers.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <unordered_map>

#include "edgereg/invariants.hpp"

namespace edgereg {

namespace {

using edge_mask = std::uint64_t;

std::vector<edge> mask_edges(const std::vector<edge>& all, edge_mask mask) {
    std::vector<edge> out;
    for (edge_mask m = mask; m; m &= m - 1) out.push_back(all[static_cast<std::size_t>(std::countr_zero(m))]);
    return out;
}

struct cochord_engine {
    struct timeout_tag {};

    const graph& g;
    std::vector<edge> edges;
    int m;
    std::vector<int> gstar_degree;
    std::vector<int> greedy_order; // edge indices, most conflicting first
    std::unordered_map<edge_mask, bool> memo;
    std::vector<std::vector<edge_mask>> parts_cache;
    std::vector<bool> parts_ready;
    std::chrono::steady_clock::time_point deadline{};
    bool armed = false;
    std::uint64_t ticks = 0;

    explicit cochord_engine(const graph& host) : g(host), edges(host.edges()), m(static_cast<int>(edges.size())) {
        graph gstar = edge_conflict_graph(g);
        gstar_degree.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) gstar_degree[static_cast<std::size_t>(i)] = gstar.degree(i);
        greedy_order.resize(static_cast<std::size_t>(m));
        std::iota(greedy_order.begin(), greedy_order.end(), 0);
        std::stable_sort(greedy_order.begin(), greedy_order.end(),
                         [&](int a, int b) { return gstar_degree[static_cast<std::size_t>(a)] > gstar_degree[static_cast<std::size_t>(b)]; });
        parts_cache.resize(static_cast<std::size_t>(m));
        parts_ready.assign(static_cast<std::size_t>(m), false);
    }

    edge_mask all_edges() const { return m == 64 ? ~edge_mask{0} : (edge_mask{1} << m) - 1; }

    void tick() {
        if (armed && (++ticks & 255) == 0 && std::chrono::steady_clock::now() > deadline) throw timeout_tag{};
    }

    bool cochordal(edge_mask mask) {
        if (std::popcount(mask) <= 1) return true;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        tick();
        bool ok = chordal_verdict(complement(spanned_subgraph(edge_set(g.n(), mask_edges(edges, mask)))));
        memo.emplace(mask, ok);
        return ok;
    }

    // all maximal co-chordal edge subsets containing the anchor edge. include/exclude
    // branching on the first addable candidate; sandwich monotonicity of chordal graphs
    // guarantees every maximal superset is reached through single-edge additions
    const std::vector<edge_mask>& parts_for(int anchor) {
        if (parts_ready[static_cast<std::size_t>(anchor)]) return parts_cache[static_cast<std::size_t>(anchor)];
        std::set<edge_mask> found;
        const edge_mask all = all_edges();
        auto rec = [&](auto&& self, edge_mask cur, edge_mask banned) -> void {
            tick();
            edge_mask addable = 0;
            for (edge_mask rest = all & ~cur; rest; rest &= rest - 1) {
                int f = std::countr_zero(rest);
                if (cochordal(cur | (edge_mask{1} << f))) addable |= edge_mask{1} << f;
            }
            if (!addable) {
                found.insert(cur);
                return;
            }
            edge_mask cands = addable & ~banned;
            if (!cands) return; // only banned extensions remain: not maximal on this branch
            int f = std::countr_zero(cands);
            self(self, cur | (edge_mask{1} << f), banned);
            self(self, cur, banned | (edge_mask{1} << f));
        };
        rec(rec, edge_mask{1} << anchor, 0);
        parts_cache[static_cast<std::size_t>(anchor)].assign(found.begin(), found.end());
        parts_ready[static_cast<std::size_t>(anchor)] = true;
        return parts_cache[static_cast<std::size_t>(anchor)];
    }

    bool cover_dfs(edge_mask uncovered, int left, std::vector<edge_mask>& chosen) {
        if (!uncovered) return true;
        if (left == 0) return false;
        tick();
        int anchor = -1;
        for (edge_mask mm = uncovered; mm; mm &= mm - 1) {
            int e = std::countr_zero(mm);
            if (anchor < 0 || gstar_degree[static_cast<std::size_t>(e)] > gstar_degree[static_cast<std::size_t>(anchor)])
                anchor = e;
        }
        std::vector<edge_mask> options = parts_for(anchor);
        std::sort(options.begin(), options.end(), [&](edge_mask a, edge_mask b) {
            int ca = std::popcount(a & uncovered), cb = std::popcount(b & uncovered);
            return ca != cb ? ca > cb : a < b;
        });
        for (edge_mask part : options) {
            chosen.push_back(part);
            if (cover_dfs(uncovered & ~part, left - 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    std::vector<edge_mask> greedy_parts() {
        std::vector<edge_mask> parts;
        edge_mask remaining = all_edges();
        while (remaining) {
            edge_mask part = 0;
            for (;;) {
                int pick = -1;
                for (int idx : greedy_order) {
                    edge_mask b = edge_mask{1} << idx;
                    if (!(remaining & b) || (part & b)) continue;
                    if (cochordal(part | b)) {
                        pick = idx;
                        break;
                    }
                }
                if (pick < 0) break;
                part |= edge_mask{1} << pick;
            }
            parts.push_back(part);
            remaining &= ~part;
        }
        return parts;
    }
};

cover build_cochordal_cover(const graph& g, const std::vector<edge>& all, const std::vector<edge_mask>& masks,
                            cover_kind kind) {
    cover c;
    c.kind = kind;
    for (edge_mask mask : masks) {
        edge_set part(g.n(), mask_edges(all, mask));
        chordality_certificate cert = is_cochordal(spanned_subgraph(part));
        if (!cert.chordal) throw invariant_violation("cover: part failed its co-chordality certificate");
        c.parts.push_back(std::move(part));
        c.certificates.push_back(std::move(cert));
    }
    return c;
}

} // namespace

cochord_result cochord_exact(const graph& g, std::chrono::milliseconds budget) {
    constexpr int edge_cap = 48;
    auto all = g.edges();
    if (static_cast<int>(all.size()) > edge_cap)
        throw capacity_error("cochord_exact: |E|=" + std::to_string(all.size()) + " exceeds cap " + std::to_string(edge_cap));
    if (all.empty()) return {0, cover{cover_kind::cochordal, {}, {}}, true};

    cochord_engine eng(g);
    int lower = max_clique(complement(edge_conflict_graph(g))).value; // indmatch: each part holds <= 1 of an induced matching
    std::vector<edge_mask> greedy = eng.greedy_parts();               // polynomial, run before arming the deadline
    int upper = static_cast<int>(greedy.size());

    if (budget.count() > 0) {
        eng.armed = true;
        eng.deadline = std::chrono::steady_clock::now() + budget;
    }
    try {
        for (int k = lower; k < upper; ++k) {
            std::vector<edge_mask> chosen;
            if (eng.cover_dfs(eng.all_edges(), k, chosen))
                return {k, build_cochordal_cover(g, all, chosen, cover_kind::cochordal), true};
        }
        return {upper, build_cochordal_cover(g, all, greedy, cover_kind::cochordal), true};
    } catch (const cochord_engine::timeout_tag&) {
        return {upper, build_cochordal_cover(g, all, greedy, cover_kind::cochordal), false};
    }
}

cover cochord_greedy(const graph& g) {
    auto all = g.edges();
    if (all.empty()) return cover{cover_kind::cochordal, {}, {}};
    cochord_engine eng(g);
    return build_cochordal_cover(g, all, eng.greedy_parts(), cover_kind::cochordal);
}

namespace {

struct split_solver {
    const graph& g;
    std::vector<int> order;
    int best;
    split_partition best_partition;
    std::vector<vertex_mask> cliques;
    vertex_mask j0 = 0;

    void rec(std::size_t idx) {
        if (static_cast<int>(cliques.size()) >= best) return;
        if (idx == order.size()) {
            best = static_cast<int>(cliques.size());
            best_partition = {j0, cliques};
            return;
        }
        int v = order[idx];
        // index access: deeper recursion may reallocate cliques via push_back
        for (std::size_t ci = 0; ci < cliques.size(); ++ci) {
            if (cliques[ci] & ~g.adjacency(v)) continue;
            cliques[ci] |= bit(v);
            rec(idx + 1);
            cliques[ci] &= ~bit(v);
        }
        if (static_cast<int>(cliques.size()) + 1 < best) {
            cliques.push_back(bit(v));
            rec(idx + 1);
            cliques.pop_back();
        }
        if (!(g.adjacency(v) & j0)) {
            j0 |= bit(v);
            rec(idx + 1);
            j0 &= ~bit(v);
        }
    }
};

} // namespace

split_cover_result split_cover(const graph& g) {
    constexpr int cap = 20;
    if (g.n() > cap)
        throw capacity_error("split_cover: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    split_solver solver{g, std::move(order), g.n() + 1, {}, {}, 0};
    solver.rec(0);

    vertex_mask seen = solver.best_partition.j0;
    for (vertex_mask c : solver.best_partition.cliques) {
        if (seen & c) throw invariant_violation("split_cover: overlapping blocks");
        seen |= c;
    }
    if (seen != g.vertices()) throw invariant_violation("split_cover: blocks do not partition the vertices");

    split_cover_result result;
    result.partition = solver.best_partition;
    result.cov.kind = cover_kind::split;
    for (vertex_mask clique : result.partition.cliques) {
        std::vector<edge> part_edges;
        for (const auto& e : g.edges())
            if ((bit(e.first) | bit(e.second)) & clique) part_edges.push_back(e);
        edge_set part(g.n(), part_edges);
        chordality_certificate cert = is_cochordal(spanned_subgraph(part));
        if (!cert.chordal) throw invariant_violation("split_cover: part failed its co-chordality certificate");
        result.cov.parts.push_back(std::move(part));
        result.cov.certificates.push_back(std::move(cert));
    }
    return result;
}

namespace {

struct mixed_engine {
    struct timeout_tag {};

    const graph& g;
    std::vector<edge> edges;
    int m;
    std::chrono::steady_clock::time_point deadline{};
    bool armed = false;
    std::uint64_t ticks = 0;

    void tick() {
        if (armed && (++ticks & 1023) == 0 && std::chrono::steady_clock::now() > deadline) throw timeout_tag{};
    }

    // no induced 2K2 and no induced claw in the subgraph spanned by the masked edges
    bool free_part(edge_mask mask) const {
        std::array<vertex_mask, max_vertices> padj{};
        for (edge_mask mm = mask; mm; mm &= mm - 1) {
            const edge& e = edges[static_cast<std::size_t>(std::countr_zero(mm))];
            padj[static_cast<std::size_t>(e.first)] |= bit(e.second);
            padj[static_cast<std::size_t>(e.second)] |= bit(e.first);
        }
        std::vector<int> idx;
        for (edge_mask mm = mask; mm; mm &= mm - 1) idx.push_back(std::countr_zero(mm));
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const edge& a = edges[static_cast<std::size_t>(idx[i])];
            vertex_mask pa = bit(a.first) | bit(a.second);
            for (std::size_t j = i + 1; j < idx.size(); ++j) {
                const edge& b = edges[static_cast<std::size_t>(idx[j])];
                vertex_mask pb = bit(b.first) | bit(b.second);
                if ((pa & pb) == 0 &&
                    ((padj[static_cast<std::size_t>(b.first)] | padj[static_cast<std::size_t>(b.second)]) & pa) == 0)
                    return false; // induced 2K2
            }
        }
        for (int c = 0; c < g.n(); ++c) {
            vertex_mask nb = padj[static_cast<std::size_t>(c)];
            if (popcount(nb) < 3) continue;
            for (vertex_mask mx = nb; mx; mx &= mx - 1) {
                int x = lowest_bit(mx);
                vertex_mask rest = nb & ~padj[static_cast<std::size_t>(x)] & ~all_mask(x + 1);
                for (vertex_mask my = rest; my; my &= my - 1) {
                    int y = lowest_bit(my);
                    if (rest & ~padj[static_cast<std::size_t>(y)] & ~all_mask(y + 1)) return false; // induced claw
                }
            }
        }
        return true;
    }

    bool cover_dfs(edge_mask uncovered, int left, const std::vector<edge_mask>& parts, std::vector<edge_mask>& chosen) {
        if (!uncovered) return true;
        if (left == 0) return false;
        tick();
        int anchor = std::countr_zero(uncovered);
        std::vector<edge_mask> options;
        for (edge_mask p : parts)
            if (p & (edge_mask{1} << anchor)) options.push_back(p);
        std::sort(options.begin(), options.end(), [&](edge_mask a, edge_mask b) {
            int ca = std::popcount(a & uncovered), cb = std::popcount(b & uncovered);
            return ca != cb ? ca > cb : a < b;
        });
        for (edge_mask part : options) {
            chosen.push_back(part);
            if (cover_dfs(uncovered & ~part, left - 1, parts, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

mixed_cover_result mixed_cover_search(const graph& g, int target, std::chrono::milliseconds budget) {
    constexpr int edge_cap = 20; // subset-lattice enumeration bound
    if (target < 0) throw argument_error("mixed_cover_search: negative target");
    auto all = g.edges();
    const int m = static_cast<int>(all.size());
    if (m == 0) return {target, true, cover{cover_kind::mixed, {}, {}}, true};
    if (m > 48)
        throw capacity_error("mixed_cover_search: |E|=" + std::to_string(all.size()) + " exceeds cap 48");

    mixed_engine eng{g, all, m};
    if (target >= 1 && eng.free_part((edge_mask{1} << m) - 1)) {
        mixed_cover_result result{target, true, cover{cover_kind::mixed, {}, {}}, true};
        result.cov.parts.emplace_back(g.n(), all);
        return result;
    }
    if (m > edge_cap)
        throw capacity_error("mixed_cover_search: |E|=" + std::to_string(all.size()) + " exceeds cap " + std::to_string(edge_cap));
    if (budget.count() > 0) {
        eng.armed = true;
        eng.deadline = std::chrono::steady_clock::now() + budget;
    }
    try {
        std::vector<edge_mask> free_masks;
        for (edge_mask mask = 1; mask < (edge_mask{1} << m); ++mask) {
            eng.tick();
            if (eng.free_part(mask)) free_masks.push_back(mask);
        }
        // a cover by free parts can be rebuilt from parts that admit no single-edge free
        // extension (grow each part greedily), so only those are kept as candidates
        std::set<edge_mask> free_set(free_masks.begin(), free_masks.end());
        std::vector<edge_mask> candidates;
        for (edge_mask f : free_masks) {
            bool extendable = false;
            for (edge_mask rest = ((edge_mask{1} << m) - 1) & ~f; rest && !extendable; rest &= rest - 1)
                extendable = free_set.count(f | (rest & ~(rest - 1))) != 0;
            if (!extendable) candidates.push_back(f);
        }
        std::vector<edge_mask> chosen;
        if (!eng.cover_dfs((edge_mask{1} << m) - 1, target, candidates, chosen)) return {target, false, {}, true};
        mixed_cover_result result{target, true, cover{cover_kind::mixed, {}, {}}, true};
        for (edge_mask mask : chosen) result.cov.parts.emplace_back(g.n(), mask_edges(all, mask));
        return result;
    } catch (const mixed_engine::timeout_tag&) {
        return {target, false, {}, false};
    }
}

std::vector<vertex_mask> all_cliques(const graph& g) {
    constexpr int cap = 20;
    if (g.n() > cap)
        throw capacity_error("all_cliques: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    constexpr std::size_t count_cap = std::size_t{1} << 20;
    std::vector<vertex_mask> out;
    auto rec = [&](auto&& self, vertex_mask cur, vertex_mask cands) -> void {
        for (vertex_mask mm = cands; mm; mm &= mm - 1) {
            int v = lowest_bit(mm);
            if (out.size() == count_cap) throw capacity_error("all_cliques: more than 2^20 cliques");
            out.push_back(cur | bit(v));
            self(self, cur | bit(v), mm & ~bit(v) & g.adjacency(v));
        }
    };
    rec(rec, 0, g.n() == 0 ? 0 : all_mask(g.n()));
    std::sort(out.begin(), out.end());
    return out;
}

long count_clique_pair_partitions(const graph& g) {
    std::vector<vertex_mask> cliques = all_cliques(g);
    auto independent = [&](vertex_mask w) {
        for (vertex_mask mm = w; mm; mm &= mm - 1)
            if (g.adjacency(lowest_bit(mm)) & w) return false;
        return true;
    };
    long count = 0;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            if (cliques[i] & cliques[j]) continue;
            if (independent(all_mask(g.n()) & ~cliques[i] & ~cliques[j])) ++count;
        }
    return count;
}

cover chain_cover_wc_bipartite(const graph& g) {
    auto b = is_bipartite(g);
    if (!b) throw argument_error("chain_cover_wc_bipartite: graph is not bipartite");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) throw argument_error("chain_cover_wc_bipartite: isolated vertex " + std::to_string(v));
    if (!is_well_covered(g).well_covered) throw argument_error("chain_cover_wc_bipartite: graph is not well-covered");
    if (g.n() == 0) return cover{cover_kind::chain, {}, {}};

    auto pm = perfect_matching_bipartite(g, *b);
    if (!pm) throw invariant_violation("chain_cover_wc_bipartite: perfect matching missing in a well-covered bipartite graph");
    graph mstar = matching_conflict_graph(g, *pm);
    coloring_witness cover_classes = chromatic_number(complement(mstar));
    int alpha_mstar = max_clique(complement(mstar)).value;
    if (alpha_mstar != cover_classes.value)
        throw invariant_violation("chain_cover_wc_bipartite: clique cover of M* differs from its independence number");

    const auto& matched = pm->edges();
    cover out;
    out.kind = cover_kind::chain;
    for (int cls = 0; cls < cover_classes.value; ++cls) {
        vertex_mask covered = 0;
        for (std::size_t i = 0; i < matched.size(); ++i)
            if (cover_classes.colors[i] == cls) covered |= bit(matched[i].first) | bit(matched[i].second);
        std::vector<edge> part_edges;
        for (const auto& e : g.edges())
            if ((bit(e.first) | bit(e.second)) & covered) part_edges.push_back(e);
        edge_set part(g.n(), part_edges);
        if (induced_matching_number(spanned_subgraph(part)).value != 1)
            throw invariant_violation("chain_cover_wc_bipartite: part has induced matching number != 1");
        chordality_certificate cert = is_cochordal(spanned_subgraph(part));
        if (!cert.chordal) throw invariant_violation("chain_cover_wc_bipartite: part is not co-chordal");
        out.parts.push_back(std::move(part));
        out.certificates.push_back(std::move(cert));
    }
    if (static_cast<int>(out.parts.size()) != induced_matching_number(g).value)
        throw invariant_violation("chain_cover_wc_bipartite: part count differs from the induced matching number");
    return out;
}

} // namespace edgereg
