#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgereg/covers.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/graph_io.hpp"
#include "edgereg/recognition.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(EDGEREG_TEST_DATA_DIR) + "/" + name;
}

// isomorphism-reduced corpus of all graphs with n <= 7, one graph6 line each
inline const std::vector<edgereg::graph>& corpus() {
    static const std::vector<edgereg::graph> graphs = [] {
        std::ifstream in(data_path("graphs_le7.g6"));
        if (!in) throw std::runtime_error("missing test corpus: " + data_path("graphs_le7.g6"));
        std::vector<edgereg::graph> out;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) out.push_back(edgereg::parse_graph6(line));
        }
        return out;
    }();
    return graphs;
}

inline std::vector<edgereg::graph> corpus_nmax(int nmax) {
    std::vector<edgereg::graph> out;
    for (const auto& g : corpus())
        if (g.n() <= nmax) out.push_back(g);
    return out;
}

// stdlib distributions vary across implementations; modulo keeps streams reproducible
inline edgereg::graph random_graph(std::mt19937_64& rng, int n, int percent) {
    edgereg::graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge_checked(u, v);
    return g;
}

inline edgereg::graph random_bipartite(std::mt19937_64& rng, int a, int b, int percent) {
    edgereg::graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge_checked(u, v);
    return g;
}

// --- brute-force oracles, deliberately sharing no machinery with the library ---

inline int brute_alpha(const edgereg::graph& g) {
    const int n = g.n();
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (s & (std::uint64_t{1} << u)) ok = (g.adjacency(u) & s) == 0;
        if (ok) best = std::max(best, edgereg::popcount(s));
    }
    return best;
}

inline int brute_matching(const edgereg::graph& g) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
        std::uint64_t used = 0;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(s & (std::uint32_t{1} << i))) continue;
            std::uint64_t pair = edgereg::bit(edges[static_cast<std::size_t>(i)].first) |
                                 edgereg::bit(edges[static_cast<std::size_t>(i)].second);
            ok = (used & pair) == 0;
            used |= pair;
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

inline int brute_indmatch(const edgereg::graph& g) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    int best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if (s & (std::uint32_t{1} << i)) idx.push_back(i);
        bool ok = true;
        for (std::size_t i = 0; i < idx.size() && ok; ++i)
            for (std::size_t j = i + 1; j < idx.size() && ok; ++j) {
                auto [a, b] = edges[static_cast<std::size_t>(idx[i])];
                auto [c, d] = edges[static_cast<std::size_t>(idx[j])];
                ok = a != c && a != d && b != c && b != d && !g.has_edge(a, c) && !g.has_edge(a, d) &&
                     !g.has_edge(b, c) && !g.has_edge(b, d);
            }
        if (ok) best = std::max(best, static_cast<int>(idx.size()));
    }
    return best;
}

// minimum co-chordal cover by plain set-cover over every co-chordal edge subset;
// no maximality or accessibility assumptions anywhere
inline int brute_cochord(const edgereg::graph& g) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0) return 0;
    std::vector<std::uint32_t> good;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<edgereg::edge> sub;
        for (int i = 0; i < m; ++i)
            if (mask & (std::uint32_t{1} << i)) sub.push_back(edges[static_cast<std::size_t>(i)]);
        if (edgereg::is_cochordal(edgereg::spanned_subgraph(edgereg::edge_set(g.n(), sub))).chordal)
            good.push_back(mask);
    }
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    auto cover = [&](auto&& self, std::uint32_t uncovered, int left) -> bool {
        if (!uncovered) return true;
        if (left == 0) return false;
        std::uint32_t anchor_bit = uncovered & ~(uncovered - 1);
        if (left == 1) {
            for (std::uint32_t c : good)
                if ((c & uncovered) == uncovered) return true;
            return false;
        }
        for (std::uint32_t c : good)
            if ((c & anchor_bit) && self(self, uncovered & ~c, left - 1)) return true;
        return false;
    };
    for (int k = 1;; ++k)
        if (cover(cover, full, k)) return k;
}

// --- dense homology oracle: faces by direct subset scan, textbook elimination ---

struct oracle_complex {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> faces; // faces[d+1] = d-faces ascending, faces[0] = {0}
};

inline oracle_complex oracle_independence_complex(const edgereg::graph& g) {
    oracle_complex c;
    c.n = g.n();
    c.faces.assign(1, {0});
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.n()); ++s) {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            if (s & (std::uint64_t{1} << u)) ok = (g.adjacency(u) & s) == 0;
        if (!ok) continue;
        std::size_t d = static_cast<std::size_t>(std::popcount(s)); // dimension + 1
        if (c.faces.size() <= d) c.faces.resize(d + 1);
        c.faces[d].push_back(s);
    }
    return c;
}

inline std::vector<std::vector<long>> oracle_boundary(const oracle_complex& c, std::size_t d, long p) {
    const auto& rows_f = c.faces[d + 1];
    const auto& cols_f = c.faces[d];
    std::vector<std::vector<long>> mat(rows_f.size(), std::vector<long>(cols_f.size(), 0));
    for (std::size_t r = 0; r < rows_f.size(); ++r) {
        int k = 0;
        for (std::uint64_t mm = rows_f[r]; mm; mm &= mm - 1, ++k) {
            std::uint64_t face = rows_f[r] & ~(mm & ~(mm - 1));
            std::size_t col = 0;
            while (cols_f[col] != face) ++col;
            mat[r][col] = (k % 2 == 0) ? 1 : p - 1;
        }
    }
    return mat;
}

inline int oracle_rank(std::vector<std::vector<long>> mat, long p) {
    if (mat.empty() || mat[0].empty()) return 0;
    const std::size_t rows = mat.size(), cols = mat[0].size();
    std::size_t r = 0;
    int rank = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && mat[piv][col] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(mat[piv], mat[r]);
        long inv = 1, base = mat[r][col] % p, e = p - 2;
        while (e) { // fermat inverse
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (auto& x : mat[r]) x = x * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || mat[i][col] % p == 0) continue;
            long f = mat[i][col] % p;
            for (std::size_t j = 0; j < cols; ++j) mat[i][j] = ((mat[i][j] - f * mat[r][j]) % p + p) % p;
        }
        ++r;
        ++rank;
    }
    return rank;
}

// betti[j] = dim H̃_{j-1}, matching the library's indexing
inline std::vector<int> oracle_betti(const edgereg::graph& g, long p) {
    oracle_complex c = oracle_independence_complex(g);
    const std::size_t levels = c.faces.size();
    std::vector<int> rank(levels + 1, 0);
    for (std::size_t d = 1; d < levels; ++d)
        rank[d] = oracle_rank(oracle_boundary(c, d - 1, p), p);
    std::vector<int> betti(levels, 0);
    for (std::size_t d = 0; d < levels; ++d)
        betti[d] = static_cast<int>(c.faces[d].size()) - rank[d] - rank[d + 1];
    return betti;
}

inline bool oracle_boundary_squares_to_zero(const edgereg::graph& g, long p) {
    oracle_complex c = oracle_independence_complex(g);
    for (std::size_t d = 2; d < c.faces.size(); ++d) {
        auto a = oracle_boundary(c, d - 1, p);      // C_d -> C_{d-1}
        auto b = oracle_boundary(c, d - 2, p);      // C_{d-1} -> C_{d-2}
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t k = 0; k < (b.empty() ? 0 : b[0].size()); ++k) {
                long sum = 0;
                for (std::size_t j = 0; j < b.size(); ++j) sum += a[i][j] * b[j][k];
                if (sum % p != 0) return false;
            }
    }
    return true;
}

// independent graph6 reader: whole bitstring first, then row-major fill
inline edgereg::graph ref_decode_graph6(const std::string& s) {
    std::size_t pos = 0;
    int n;
    if (s.at(0) == '~') {
        n = ((s.at(1) - 63) << 12) | ((s.at(2) - 63) << 6) | (s.at(3) - 63);
        pos = 4;
    } else {
        n = s.at(0) - 63;
        pos = 1;
    }
    std::vector<int> bits;
    for (std::size_t i = pos; i < s.size(); ++i)
        for (int b = 5; b >= 0; --b) bits.push_back((s[i] - 63) >> b & 1);
    edgereg::graph g(n);
    std::size_t idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits.at(idx++)) g.add_edge_checked(u, v);
    return g;
}

} // namespace testutil
