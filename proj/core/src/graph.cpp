#include "edgereg/graph.hpp"

#include <algorithm>
#include <cassert>

namespace edgereg {

edge_set::edge_set(int host_n, std::vector<edge> edges) : host_n_(host_n) {
    for (auto& e : edges) {
        if (e.first == e.second) throw argument_error("edge set: loop at " + std::to_string(e.first));
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= host_n_)
            throw argument_error("edge set: edge out of range for host n=" + std::to_string(host_n_));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool edge_set::contains(edge e) const {
    e = make_edge(e.first, e.second);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool edge_set::insert(edge e) {
    e = make_edge(e.first, e.second);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return false;
    edges_.insert(it, e);
    return true;
}

namespace families {

graph path(int n) {
    if (n < 1) throw argument_error("path: n must be >= 1");
    graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge_checked(i, i + 1);
    return g;
}

graph cycle(int n) {
    if (n < 3) throw argument_error("cycle: n must be >= 3");
    graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge_checked(i, (i + 1) % n);
    return g;
}

graph complete(int n) {
    if (n < 0) throw argument_error("complete: n must be >= 0");
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge_checked(u, v);
    return g;
}

graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw argument_error("complete_bipartite: sides must be >= 0");
    graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge_checked(u, a + v);
    return g;
}

graph matching(int m) {
    if (m < 0) throw argument_error("matching: m must be >= 0");
    graph g(2 * m);
    for (int i = 0; i < m; ++i) g.add_edge_checked(2 * i, 2 * i + 1);
    return g;
}

graph petersen() {
    graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge_checked(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge_checked(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge_checked(i, 5 + i);                // spokes
    }
    return g;
}

} // namespace families

graph make_family(const family_spec& spec) {
    switch (spec.kind) {
        case family_kind::path: return families::path(spec.a);
        case family_kind::cycle: return families::cycle(spec.a);
        case family_kind::complete: return families::complete(spec.a);
        case family_kind::complete_bipartite: return families::complete_bipartite(spec.a, spec.b);
        case family_kind::matching: return families::matching(spec.a);
        case family_kind::petersen: return families::petersen();
    }
    throw argument_error("make_family: unknown kind");
}

graph complement(const graph& g) {
    const int n = g.n();
    graph h(n);
    for (int u = 0; u < n; ++u) {
        vertex_mask row = ~g.adjacency(u) & all_mask(n) & ~bit(u);
        vertex_mask later = row & ~all_mask(u + 1);
        while (later) {
            int v = lowest_bit(later);
            later &= later - 1;
            h.add_edge_checked(u, v);
        }
    }
    return h;
}

graph disjoint_union(const graph& a, const graph& b) {
    if (a.n() + b.n() > max_vertices)
        throw capacity_error("disjoint_union: combined order " + std::to_string(a.n() + b.n()) + " exceeds " + std::to_string(max_vertices));
    graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge_checked(u, v);
    for (auto [u, v] : b.edges()) g.add_edge_checked(a.n() + u, a.n() + v);
    return g;
}

graph induced_subgraph(const graph& g, vertex_mask w) {
    if ((w & ~g.vertices()) != 0) throw argument_error("induced_subgraph: vertex mask outside host graph");
    std::vector<int> keep;
    vertex_mask m = w;
    while (m) {
        keep.push_back(lowest_bit(m));
        m &= m - 1;
    }
    graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) h.add_edge_checked(static_cast<int>(i), static_cast<int>(j));
    return h;
}

graph whisker(const graph& g) {
    const int n = g.n();
    if (2 * n > max_vertices)
        throw capacity_error("whisker: result order " + std::to_string(2 * n) + " exceeds " + std::to_string(max_vertices));
    graph h(2 * n);
    for (auto [u, v] : g.edges()) h.add_edge_checked(u, v);
    for (int i = 0; i < n; ++i) h.add_edge_checked(i, n + i);
    return h;
}

namespace {

// do edges e and f of g induce a 2K2 (disjoint, and no edge of g between them)?
bool induces_2k2(const graph& g, edge e, edge f) {
    auto [a, b] = e;
    auto [c, d] = f;
    vertex_mask em = bit(a) | bit(b), fm = bit(c) | bit(d);
    if (em & fm) return false;
    if ((g.adjacency(a) | g.adjacency(b)) & fm) return false;
    return true;
}

} // namespace

graph edge_conflict_graph(const graph& g) {
    auto es = g.edges();
    if (es.size() > static_cast<std::size_t>(max_vertices))
        throw capacity_error("edge_conflict_graph: " + std::to_string(es.size()) + " edges exceed " + std::to_string(max_vertices));
    graph h(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!induces_2k2(g, es[i], es[j])) h.add_edge_checked(static_cast<int>(i), static_cast<int>(j));
    return h;
}

graph matching_conflict_graph(const graph& g, const edge_set& m) {
    if (m.host_n() != g.n()) throw argument_error("matching_conflict_graph: edge set host mismatch");
    vertex_mask seen = 0;
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v)) throw argument_error("matching_conflict_graph: edge not in graph");
        if (seen & (bit(u) | bit(v))) throw argument_error("matching_conflict_graph: edges are not a matching");
        seen |= bit(u) | bit(v);
    }
    const auto& es = m.edges();
    graph h(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!induces_2k2(g, es[i], es[j])) h.add_edge_checked(static_cast<int>(i), static_cast<int>(j));
    return h;
}

graph spanned_subgraph(const edge_set& es) {
    std::vector<int> keep;
    vertex_mask m = es.spanned_vertices();
    while (m) {
        keep.push_back(lowest_bit(m));
        m &= m - 1;
    }
    std::vector<int> pos(static_cast<std::size_t>(es.host_n()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    graph h(static_cast<int>(keep.size()));
    for (auto [u, v] : es) h.add_edge_checked(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return h;
}

std::vector<vertex_mask> components(const graph& g, vertex_mask w) {
    std::vector<vertex_mask> out;
    vertex_mask rest = w & g.vertices();
    while (rest) {
        vertex_mask comp = bit(lowest_bit(rest));
        for (;;) {
            vertex_mask grow = comp;
            vertex_mask m = comp;
            while (m) {
                int v = lowest_bit(m);
                m &= m - 1;
                grow |= g.adjacency(v) & rest;
            }
            if (grow == comp) break;
            comp = grow;
        }
        out.push_back(comp);
        rest &= ~comp;
    }
    return out;
}

bool is_connected_on(const graph& g, vertex_mask w) {
    if (!w) return true;
    return components(g, w).size() == 1;
}

} // namespace edgereg
