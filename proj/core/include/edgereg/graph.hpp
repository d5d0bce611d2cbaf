#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgereg/errors.hpp"

namespace edgereg {

constexpr int max_vertices = 64;

using vertex_mask = std::uint64_t;

inline int popcount(vertex_mask m) { return std::popcount(m); }
inline int lowest_bit(vertex_mask m) { return std::countr_zero(m); }
inline vertex_mask bit(int v) { return vertex_mask{1} << v; }
inline vertex_mask all_mask(int n) { return n == 64 ? ~vertex_mask{0} : (vertex_mask{1} << n) - 1; }

// vertices u < v
using edge = std::pair<int, int>;

inline edge make_edge(int u, int v) {
    return u < v ? edge{u, v} : edge{v, u};
}

// simple undirected graph on vertices 0..n-1, adjacency stored as one 64-bit row per vertex.
// immutable after construction; labels are optional display names and ignored by comparisons.
class graph {
  public:
    graph() = default;
    explicit graph(int n) : n_(check_n(n)), adj_(static_cast<std::size_t>(n), 0) {}
    graph(int n, const std::vector<edge>& edges) : graph(n) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
    }

    int n() const { return n_; }
    vertex_mask vertices() const { return all_mask(n_); }
    vertex_mask adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    vertex_mask closed_neighborhood(int v) const { return adj_[static_cast<std::size_t>(v)] | bit(v); }
    int degree(int v) const { return popcount(adjacency(v)); }

    bool has_edge(int u, int v) const {
        return u != v && u >= 0 && v >= 0 && u < n_ && v < n_ && (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
    }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    // edges in lexicographic order
    std::vector<edge> edges() const {
        std::vector<edge> out;
        for (int u = 0; u < n_; ++u) {
            vertex_mask later = adjacency(u) & ~(all_mask(u + 1));
            while (later) {
                int v = lowest_bit(later);
                later &= later - 1;
                out.push_back({u, v});
            }
        }
        return out;
    }

    bool is_edgeless() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(v)]) return false;
        return true;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && static_cast<int>(labels.size()) != n_)
            throw argument_error("labels: expected " + std::to_string(n_) + " names, got " + std::to_string(labels.size()));
        labels_ = std::move(labels);
    }

    friend bool operator==(const graph& a, const graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }
    friend bool operator!=(const graph& a, const graph& b) { return !(a == b); }

    // construction helper for module-internal builders; keeps the public type immutable in spirit
    void add_edge_checked(int u, int v) {
        if (u == v) throw argument_error("loop edge at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw argument_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n_));
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }

  private:
    static int check_n(int n) {
        if (n < 0 || n > max_vertices)
            throw capacity_error("graph order " + std::to_string(n) + " outside [0," + std::to_string(max_vertices) + "]");
        return n;
    }

    int n_ = 0;
    std::vector<vertex_mask> adj_;
    std::vector<std::string> labels_;
};

// edge subset of a host graph; edges kept normalized (u<v), sorted, deduplicated
class edge_set {
  public:
    edge_set() = default;
    explicit edge_set(int host_n) : host_n_(host_n) {}
    edge_set(int host_n, std::vector<edge> edges);

    int host_n() const { return host_n_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool contains(edge e) const;
    // returns false if already present
    bool insert(edge e);

    const std::vector<edge>& edges() const { return edges_; }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    vertex_mask spanned_vertices() const {
        vertex_mask m = 0;
        for (auto [u, v] : edges_) m |= bit(u) | bit(v);
        return m;
    }

    friend bool operator==(const edge_set& a, const edge_set& b) { return a.host_n_ == b.host_n_ && a.edges_ == b.edges_; }

  private:
    int host_n_ = 0;
    std::vector<edge> edges_;
};

// --- families ---

enum class family_kind { path, cycle, complete, complete_bipartite, matching, petersen };

struct family_spec {
    family_kind kind;
    int a = 0; // n for path/cycle/complete, m for matching, first side for complete_bipartite
    int b = 0; // second side for complete_bipartite
};

graph make_family(const family_spec& spec);

namespace families {
graph path(int n);
graph cycle(int n);
graph complete(int n);
graph complete_bipartite(int a, int b);
graph matching(int m);
graph petersen();
} // namespace families

// --- transforms ---

graph complement(const graph& g);
graph disjoint_union(const graph& a, const graph& b);
graph induced_subgraph(const graph& g, vertex_mask w);
// adds one pendant vertex per original vertex; pendant of i gets index n+i
graph whisker(const graph& g);
// conflict graph G*: one vertex per edge of g in lexicographic order; two edge-vertices
// are adjacent unless the four endpoints induce a 2K2 in g
graph edge_conflict_graph(const graph& g);
// induced subgraph of G* on the edges of matching m (vertex order = position in m)
graph matching_conflict_graph(const graph& g, const edge_set& m);
// graph spanned by an edge set: vertices are the endpoints, relabeled in increasing order
graph spanned_subgraph(const edge_set& es);

// components of g[w] as vertex masks, ordered by lowest contained vertex
std::vector<vertex_mask> components(const graph& g, vertex_mask w);
bool is_connected_on(const graph& g, vertex_mask w);

} // namespace edgereg
