#pragma once

#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/homology.hpp"

namespace edgereg {

struct regularity_options {
    // bound on the largest subset scan: whole graph in direct mode, largest component otherwise
    int vertex_cap = 18;
    std::size_t face_cap = default_face_cap;
    // decompose each G[W] (and g itself) into components and add their contributions;
    // direct mode (false) builds Ind(G[W]) whole and exists so the additivity claim can be
    // cross-checked against a computation that does not assume it
    bool use_components = true;
    int jobs = 1;
};

struct regularity_result {
    field_spec field;
    int value = 0;
    vertex_mask witness = 0; // subset W with nonvanishing reduced homology of Ind(G[W]) in degree value-1
    int witness_degree = 0;  // equals value
};

// Castelnuovo-Mumford regularity of R/I(g) via Hochster's formula: the maximum i over
// vertex subsets W with dim H̃_{i-1}(Ind(G[W]); GF(p)) != 0. Subsets with an isolated
// vertex are skipped (cone => acyclic); ties among maximizers break to the smallest
// witness bitmask, independent of scan order and worker count
regularity_result complex_regularity(const graph& g, field_spec f, const regularity_options& opts = {});

struct multi_field_regularity {
    std::vector<regularity_result> results;
    bool agree = true;
};

multi_field_regularity regularity_multi_field(const graph& g, const std::vector<field_spec>& primes,
                                              const regularity_options& opts = {});

// recomputes the disjoint union in direct (non-additive) mode and compares with the sum
bool join_regularity_check(const graph& g1, const graph& g2, field_spec f, const regularity_options& opts = {});

} // namespace edgereg
