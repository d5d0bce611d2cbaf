#include "edgereg/invariants.hpp"

#include <algorithm>
#include <cassert>

namespace edgereg {

namespace {

struct clique_solver {
    const graph& g;
    int best = 0;
    vertex_mask best_set = 0;

    void expand(vertex_mask r, int rsize, vertex_mask p) {
        if (!p) {
            if (rsize > best) {
                best = rsize;
                best_set = r;
            }
            return;
        }
        // greedy color classes over p; class number bounds the clique extension
        std::vector<int> verts, colors;
        vertex_mask uncolored = p;
        int color = 0;
        while (uncolored) {
            ++color;
            vertex_mask avail = uncolored;
            while (avail) {
                int v = lowest_bit(avail);
                avail &= ~g.closed_neighborhood(v);
                uncolored &= ~bit(v);
                verts.push_back(v);
                colors.push_back(color);
            }
        }
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (rsize + colors[static_cast<std::size_t>(i)] <= best) return;
            int v = verts[static_cast<std::size_t>(i)];
            expand(r | bit(v), rsize + 1, p & g.adjacency(v));
            p &= ~bit(v);
        }
    }
};

} // namespace

int_witness max_clique(const graph& g) {
    clique_solver solver{g};
    solver.expand(0, 0, g.vertices());
    return {solver.best, solver.best_set};
}

int_witness independence_number(const graph& g) {
    constexpr int cap = 40;
    if (g.n() > cap)
        throw capacity_error("independence_number: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    return max_clique(complement(g));
}

int_witness clique_number(const graph& g) {
    constexpr int cap = 40;
    if (g.n() > cap)
        throw capacity_error("clique_number: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    return max_clique(g);
}

namespace {

struct coloring_solver {
    const graph& g;
    int k;
    std::vector<int>& colors; // -1 = uncolored

    bool rec(int colored, int used) {
        if (colored == g.n()) return true;
        // most saturated uncolored vertex; ties by degree then index
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (colors[static_cast<std::size_t>(v)] != -1) continue;
            vertex_mask seen = 0;
            for (vertex_mask m = g.adjacency(v); m; m &= m - 1) {
                int c = colors[static_cast<std::size_t>(lowest_bit(m))];
                if (c != -1) seen |= bit(c);
            }
            int sat = popcount(seen), deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        vertex_mask banned = 0;
        for (vertex_mask m = g.adjacency(pick); m; m &= m - 1) {
            int c = colors[static_cast<std::size_t>(lowest_bit(m))];
            if (c != -1) banned |= bit(c);
        }
        int limit = std::min(k - 1, used); // at most one brand-new color, breaking class symmetry
        for (int c = 0; c <= limit; ++c) {
            if (banned & bit(c)) continue;
            colors[static_cast<std::size_t>(pick)] = c;
            if (rec(colored + 1, std::max(used, c + 1))) return true;
            colors[static_cast<std::size_t>(pick)] = -1;
        }
        return false;
    }
};

} // namespace

coloring_witness chromatic_number(const graph& g) {
    constexpr int cap = 24;
    if (g.n() > cap)
        throw capacity_error("chromatic_number: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    if (g.n() == 0) return {0, {}};
    for (int k = std::max(1, max_clique(g).value); k <= g.n(); ++k) {
        std::vector<int> colors(static_cast<std::size_t>(g.n()), -1);
        coloring_solver solver{g, k, colors};
        if (solver.rec(0, 0)) return {k, colors};
    }
    throw invariant_violation("chromatic_number: no coloring with n colors"); // unreachable
}

namespace {

struct matching_solver {
    const graph& g;
    int best = 0;
    std::vector<edge> best_edges;
    std::vector<edge> current;

    void rec(vertex_mask active, int size) {
        // drop active vertices with no active neighbor
        for (;;) {
            vertex_mask dead = 0;
            for (vertex_mask m = active; m; m &= m - 1) {
                int v = lowest_bit(m);
                if (!(g.adjacency(v) & active)) dead |= bit(v);
            }
            if (!dead) break;
            active &= ~dead;
        }
        if (!active) {
            if (size > best) {
                best = size;
                best_edges = current;
            }
            return;
        }
        if (size + popcount(active) / 2 <= best) return;
        int v = lowest_bit(active);
        for (vertex_mask m = g.adjacency(v) & active; m; m &= m - 1) {
            int u = lowest_bit(m);
            current.push_back(make_edge(v, u));
            rec(active & ~bit(v) & ~bit(u), size + 1);
            current.pop_back();
        }
        rec(active & ~bit(v), size); // v unmatched
    }
};

} // namespace

matching_witness matching_number(const graph& g) {
    constexpr int cap = 40;
    if (g.n() > cap)
        throw capacity_error("matching_number: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    matching_solver solver{g};
    solver.rec(g.vertices(), 0);
    return {solver.best, edge_set(g.n(), solver.best_edges)};
}

namespace {

struct mmm_solver {
    const graph& g;
    std::vector<edge> edges;
    int best;
    std::vector<edge> best_edges;
    std::vector<edge> current;

    // first edge with both endpoints uncovered must be dominated by some new matching edge
    void rec(vertex_mask covered) {
        edge pending{-1, -1};
        for (const auto& e : edges)
            if (!((bit(e.first) | bit(e.second)) & covered)) {
                pending = e;
                break;
            }
        if (pending.first < 0) {
            if (static_cast<int>(current.size()) < best) {
                best = static_cast<int>(current.size());
                best_edges = current;
            }
            return;
        }
        // lower bound: greedy matching among undominated edges; one new edge dominates at most 2 of them
        vertex_mask taken = 0;
        int disjoint = 0;
        for (const auto& e : edges) {
            vertex_mask em = bit(e.first) | bit(e.second);
            if ((em & covered) || (em & taken)) continue;
            taken |= em;
            ++disjoint;
        }
        if (static_cast<int>(current.size()) + (disjoint + 1) / 2 >= best) return;

        auto try_edge = [&](edge f) {
            vertex_mask fm = bit(f.first) | bit(f.second);
            if (fm & covered) return;
            current.push_back(f);
            rec(covered | fm);
            current.pop_back();
        };
        for (int end : {pending.first, pending.second})
            for (vertex_mask m = g.adjacency(end); m; m &= m - 1) {
                int u = lowest_bit(m);
                edge f = make_edge(end, u);
                // avoid trying the pending edge twice (once per endpoint)
                if (end == pending.second && f == pending) continue;
                try_edge(f);
            }
    }
};

} // namespace

matching_witness min_maximal_matching(const graph& g) {
    constexpr int cap = 24;
    if (g.n() > cap)
        throw capacity_error("min_maximal_matching: n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
    mmm_solver solver{g, g.edges(), g.n() / 2 + 1, {}, {}};
    solver.rec(0);
    return {solver.best, edge_set(g.n(), solver.best_edges)};
}

matching_witness induced_matching_number(const graph& g) {
    constexpr int edge_cap = 40;
    auto es = g.edges();
    if (static_cast<int>(es.size()) > edge_cap)
        throw capacity_error("induced_matching_number: |E|=" + std::to_string(es.size()) + " exceeds cap " +
                             std::to_string(edge_cap));
    if (es.empty()) return {0, edge_set(g.n())};
    int_witness alpha = max_clique(complement(edge_conflict_graph(g)));
    std::vector<edge> chosen;
    for (vertex_mask m = alpha.witness; m; m &= m - 1) chosen.push_back(es[static_cast<std::size_t>(lowest_bit(m))]);
    return {alpha.value, edge_set(g.n(), chosen)};
}

bool clique_deletion_check(const graph& g, vertex_mask j, field_spec f, const regularity_options& opts) {
    if (j & ~g.vertices()) throw argument_error("clique_deletion_check: mask outside vertex set");
    for (vertex_mask m = j; m; m &= m - 1) {
        int v = lowest_bit(m);
        if ((j & ~bit(v)) & ~g.adjacency(v)) throw argument_error("clique_deletion_check: mask is not a clique");
    }
    int whole = complex_regularity(g, f, opts).value;
    int deleted = complex_regularity(induced_subgraph(g, g.vertices() & ~j), f, opts).value;
    return whole <= deleted + 1;
}

} // namespace edgereg
