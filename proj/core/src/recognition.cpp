#include "edgereg/recognition.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "edgereg/invariants.hpp"

namespace edgereg {

namespace {

// complete decision procedure: g is non-chordal iff some v has nonadjacent neighbors x,y
// joined by a path avoiding N[v]\{x,y} (walk around any hole through v shows "only if")
std::vector<int> find_hole_ge4(const graph& g) {
    const int n = g.n();
    for (int v = 0; v < n; ++v) {
        vertex_mask nb = g.adjacency(v);
        for (vertex_mask mx = nb; mx; mx &= mx - 1) {
            int x = lowest_bit(mx);
            for (vertex_mask my = mx & (mx - 1); my; my &= my - 1) {
                int y = lowest_bit(my);
                if (g.has_edge(x, y)) continue;
                vertex_mask allowed = (g.vertices() & ~g.closed_neighborhood(v)) | bit(x) | bit(y);
                // BFS shortest x-y path inside allowed; shortest => chordless there
                std::array<int, max_vertices> parent;
                parent.fill(-2);
                parent[static_cast<std::size_t>(x)] = -1;
                vertex_mask frontier = bit(x);
                vertex_mask seen = bit(x);
                while (frontier && !(seen & bit(y))) {
                    vertex_mask next = 0;
                    for (vertex_mask f = frontier; f; f &= f - 1) {
                        int u = lowest_bit(f);
                        vertex_mask fresh = g.adjacency(u) & allowed & ~seen;
                        for (vertex_mask m = fresh; m; m &= m - 1)
                            parent[static_cast<std::size_t>(lowest_bit(m))] = u;
                        next |= fresh;
                    }
                    seen |= next;
                    frontier = next;
                }
                if (!(seen & bit(y))) continue;
                std::vector<int> path;
                for (int u = y; u != -1; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
                std::reverse(path.begin(), path.end()); // x .. y
                std::vector<int> hole;
                hole.push_back(v);
                hole.insert(hole.end(), path.begin(), path.end());
                assert(hole.size() >= 4);
                return hole;
            }
        }
    }
    return {};
}

} // namespace

namespace {

// maximum cardinality search; the reverse visit order is a PEO iff g is chordal
bool mcs_peo(const graph& g, std::vector<int>& peo) {
    const int n = g.n();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(n));
    vertex_mask unvisited = g.vertices();
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (vertex_mask m = unvisited; m; m &= m - 1) {
            int v = lowest_bit(m);
            if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
        }
        visit.push_back(best);
        unvisited &= ~bit(best);
        for (vertex_mask m = g.adjacency(best) & unvisited; m; m &= m - 1)
            ++weight[static_cast<std::size_t>(lowest_bit(m))];
    }

    peo.assign(visit.rbegin(), visit.rend());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        int v = peo[static_cast<std::size_t>(i)];
        vertex_mask later = 0;
        for (vertex_mask m = g.adjacency(v); m; m &= m - 1) {
            int u = lowest_bit(m);
            if (pos[static_cast<std::size_t>(u)] > i) later |= bit(u);
        }
        for (vertex_mask m = later; m; m &= m - 1) {
            int u = lowest_bit(m);
            if ((later & ~bit(u)) & ~g.adjacency(u)) return false;
        }
    }
    return true;
}

} // namespace

bool chordal_verdict(const graph& g) {
    std::vector<int> peo;
    return mcs_peo(g, peo);
}

chordality_certificate is_chordal(const graph& g) {
    chordality_certificate cert;
    std::vector<int> peo;
    cert.chordal = mcs_peo(g, peo);
    if (cert.chordal) {
        cert.peo = std::move(peo);
    } else {
        cert.hole = find_hole_ge4(g);
        assert(!cert.hole.empty());
    }
    return cert;
}

chordality_certificate is_cochordal(const graph& g) { return is_chordal(complement(g)); }

std::optional<split_partition_witness> is_split(const graph& g) {
    const int n = g.n();
    auto check = [&](vertex_mask clique) -> bool {
        for (vertex_mask m = clique; m; m &= m - 1) {
            int v = lowest_bit(m);
            if ((clique & ~bit(v)) & ~g.adjacency(v)) return false;
        }
        vertex_mask indep = g.vertices() & ~clique;
        for (vertex_mask m = indep; m; m &= m - 1) {
            int v = lowest_bit(m);
            if (g.adjacency(v) & indep) return false;
        }
        return true;
    };
    // if (K, I) is any split partition and K0 a maximum clique, then |K0 \ K| <= 1
    // (K0 \ K is a clique inside I) and K can be shrunk into (K0 minus one vertex) plus
    // at most one vertex, so scanning those candidates decides split-ness with a witness
    vertex_mask k0 = max_clique(g).witness;
    std::vector<vertex_mask> removals;
    removals.push_back(k0);
    for (vertex_mask m = k0; m; m &= m - 1) removals.push_back(k0 & ~bit(lowest_bit(m)));
    for (vertex_mask base : removals) {
        if (check(base)) return split_partition_witness{base, g.vertices() & ~base};
        for (vertex_mask m = g.vertices() & ~base; m; m &= m - 1) {
            vertex_mask cand = base | bit(lowest_bit(m));
            if (check(cand)) return split_partition_witness{cand, g.vertices() & ~cand};
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_induced_cycle(const graph& g, int min_len, bool exact) {
    if (min_len < 3) throw argument_error("find_induced_cycle: min_len must be >= 3");
    const int n = g.n();
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(n));
    std::optional<std::vector<int>> found;

    // path = s, p1, ..., last is an induced path whose minimum vertex is s;
    // mid_adj = union of N(p1..p_{t-2}); close with u adjacent to last and s only
    auto rec = [&](auto&& self, int s, vertex_mask path_mask, vertex_mask mid_adj) -> bool {
        const int t = static_cast<int>(path.size());
        const int last = path.back();
        const vertex_mask low = all_mask(s + 1);
        if (t >= 2 && t + 1 >= min_len) {
            vertex_mask closers = g.adjacency(last) & g.adjacency(s) & ~mid_adj & ~path_mask & ~low;
            for (vertex_mask m = closers; m; m &= m - 1) {
                int u = lowest_bit(m);
                if (path[1] < u || t == 2) { // canonical direction; t==2 means triangle, symmetric
                    auto cycle = path;
                    cycle.push_back(u);
                    found = std::move(cycle);
                    return true;
                }
            }
        }
        if (exact && t + 1 >= min_len) return false;
        vertex_mask ext = g.adjacency(last) & ~path_mask & ~low;
        if (t >= 2) ext &= ~mid_adj & ~g.adjacency(s);
        for (vertex_mask m = ext; m; m &= m - 1) {
            int u = lowest_bit(m);
            path.push_back(u);
            vertex_mask new_mid = t >= 2 ? (mid_adj | g.adjacency(last)) : mid_adj;
            if (self(self, s, path_mask | bit(u), new_mid)) return true;
            path.pop_back();
        }
        return false;
    };

    for (int s = 0; s < n; ++s) {
        path.clear();
        path.push_back(s);
        if (rec(rec, s, bit(s), 0)) return found;
    }
    return std::nullopt;
}

weakly_chordal_result is_weakly_chordal(const graph& g) {
    constexpr int cap = 20;
    if (g.n() > cap)
        throw capacity_error("is_weakly_chordal: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    weakly_chordal_result res;
    if (auto hole = find_induced_cycle(g, 5)) {
        res.weakly_chordal = false;
        res.hole = *hole;
        res.hole_in_complement = false;
        return res;
    }
    if (auto hole = find_induced_cycle(complement(g), 5)) {
        res.weakly_chordal = false;
        res.hole = *hole;
        res.hole_in_complement = true;
        return res;
    }
    res.weakly_chordal = true;
    return res;
}

std::optional<bipartition> is_bipartite(const graph& g) {
    bipartition b;
    vertex_mask seen = 0;
    for (int root = 0; root < g.n(); ++root) {
        if (seen & bit(root)) continue;
        vertex_mask layer = bit(root);
        bool in_a = true;
        while (layer) {
            (in_a ? b.side_a : b.side_b) |= layer;
            seen |= layer;
            vertex_mask next = 0;
            for (vertex_mask m = layer; m; m &= m - 1) next |= g.adjacency(lowest_bit(m));
            layer = next & ~seen;
            in_a = !in_a;
        }
    }
    for (vertex_mask side : {b.side_a, b.side_b})
        for (vertex_mask m = side; m; m &= m - 1)
            if (g.adjacency(lowest_bit(m)) & side) return std::nullopt;
    return b;
}

namespace {

// Bron-Kerbosch over independent sets (cliques of the complement), early exit on size mismatch
struct mis_scan {
    const graph& g;
    int first_size = -1;
    vertex_mask first_set = 0;
    vertex_mask mismatch = 0;
    bool done = false;

    vertex_mask nonadj(int v) const { return g.vertices() & ~g.adjacency(v) & ~bit(v); }

    void run(vertex_mask r, vertex_mask p, vertex_mask x) {
        if (done) return;
        if (!p && !x) {
            int size = popcount(r);
            if (first_size < 0) {
                first_size = size;
                first_set = r;
            } else if (size != first_size) {
                mismatch = r;
                done = true;
            }
            return;
        }
        int pivot = -1, best = -1;
        for (vertex_mask m = p | x; m; m &= m - 1) {
            int u = lowest_bit(m);
            int cnt = popcount(p & nonadj(u));
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        for (vertex_mask m = p & ~nonadj(pivot); m && !done; m &= m - 1) {
            int v = lowest_bit(m);
            run(r | bit(v), p & nonadj(v), x & nonadj(v));
            p &= ~bit(v);
            x |= bit(v);
        }
    }
};

} // namespace

well_covered_result is_well_covered(const graph& g) {
    constexpr int cap = 32;
    if (g.n() > cap)
        throw capacity_error("is_well_covered: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    well_covered_result res;
    if (g.n() == 0) {
        res.well_covered = true;
        return res;
    }
    mis_scan scan{g};
    scan.run(0, g.vertices(), 0);
    if (scan.done) {
        res.well_covered = false;
        res.witness_a = scan.first_set;
        res.witness_b = scan.mismatch;
    } else {
        res.well_covered = true;
    }
    return res;
}

std::optional<vertex_mask> has_induced(const graph& g, const family_spec& pattern) {
    if (pattern.kind == family_kind::matching && pattern.a == 2) {
        auto es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i) {
            auto [a, b] = es[i];
            vertex_mask em = bit(a) | bit(b);
            vertex_mask reach = g.adjacency(a) | g.adjacency(b) | em;
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                auto [c, d] = es[j];
                if ((bit(c) | bit(d)) & reach) continue;
                return em | bit(c) | bit(d);
            }
        }
        return std::nullopt;
    }
    if (pattern.kind == family_kind::complete_bipartite &&
        ((pattern.a == 1 && pattern.b == 3) || (pattern.a == 3 && pattern.b == 1))) {
        for (int v = 0; v < g.n(); ++v) {
            vertex_mask nb = g.adjacency(v);
            for (vertex_mask mx = nb; mx; mx &= mx - 1) {
                int x = lowest_bit(mx);
                vertex_mask rest = mx & (mx - 1) & ~g.adjacency(x);
                for (vertex_mask my = rest; my; my &= my - 1) {
                    int y = lowest_bit(my);
                    vertex_mask third = my & (my - 1) & ~g.adjacency(y);
                    if (third) return bit(v) | bit(x) | bit(y) | bit(lowest_bit(third));
                }
            }
        }
        return std::nullopt;
    }
    if (pattern.kind == family_kind::cycle) {
        if (pattern.a < 3) throw argument_error("has_induced: cycle length must be >= 3");
        if (auto cyc = find_induced_cycle(g, pattern.a, /*exact=*/true)) {
            vertex_mask m = 0;
            for (int v : *cyc) m |= bit(v);
            return m;
        }
        return std::nullopt;
    }
    throw argument_error("has_induced: unsupported pattern (need matching(2), complete_bipartite(1,3), or cycle(k))");
}

std::optional<edge_set> perfect_matching_bipartite(const graph& g, const bipartition& b) {
    if ((b.side_a & b.side_b) || ((b.side_a | b.side_b) != g.vertices()))
        throw argument_error("perfect_matching_bipartite: not a partition of the vertices");
    for (vertex_mask side : {b.side_a, b.side_b})
        for (vertex_mask m = side; m; m &= m - 1)
            if (g.adjacency(lowest_bit(m)) & side) throw argument_error("perfect_matching_bipartite: side is not independent");
    if (popcount(b.side_a) != popcount(b.side_b)) return std::nullopt;

    std::array<int, max_vertices> match;
    match.fill(-1);
    auto augment = [&](auto&& self, int u, vertex_mask& visited) -> bool {
        for (vertex_mask m = g.adjacency(u) & ~visited; m; m &= m - 1) {
            int w = lowest_bit(m);
            visited |= bit(w);
            int prev = match[static_cast<std::size_t>(w)];
            if (prev == -1 || self(self, prev, visited)) {
                match[static_cast<std::size_t>(w)] = u;
                match[static_cast<std::size_t>(u)] = w;
                return true;
            }
        }
        return false;
    };
    for (vertex_mask m = b.side_a; m; m &= m - 1) {
        int u = lowest_bit(m);
        vertex_mask visited = 0;
        if (!augment(augment, u, visited)) return std::nullopt;
    }
    edge_set out(g.n());
    for (vertex_mask m = b.side_a; m; m &= m - 1) {
        int u = lowest_bit(m);
        out.insert({u, match[static_cast<std::size_t>(u)]});
    }
    return out;
}

} // namespace edgereg
