#pragma once

#include <optional>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

struct chordality_certificate {
    bool chordal = false;
    std::vector<int> peo;  // perfect elimination ordering, present iff chordal
    std::vector<int> hole; // induced cycle of length >= 4, present iff not chordal
};

struct bipartition {
    vertex_mask side_a = 0;
    vertex_mask side_b = 0;
};

struct split_partition_witness {
    vertex_mask clique = 0;
    vertex_mask independent = 0;
};

struct weakly_chordal_result {
    bool weakly_chordal = false;
    std::vector<int> hole;          // induced cycle of length >= 5, present iff verdict false
    bool hole_in_complement = false;
};

struct well_covered_result {
    bool well_covered = false;
    vertex_mask witness_a = 0; // two maximal independent sets of different sizes, set iff verdict false
    vertex_mask witness_b = 0;
};

// maximum cardinality search ordering + perfect-elimination verification;
// on failure the certificate carries an induced hole found by triple scan
chordality_certificate is_chordal(const graph& g);

// verdict only, no certificate construction (hot path for cover search)
bool chordal_verdict(const graph& g);

// is_chordal(complement(g)); certificate vertices refer to the same indices
chordality_certificate is_cochordal(const graph& g);

// witness partition into a clique and an independent set, absent when g is not split.
// search is seeded from a maximum clique K: every candidate clique side differs from K
// by removing at most one vertex and adding at most one.
std::optional<split_partition_witness> is_split(const graph& g);

// neither g nor complement(g) has an induced cycle of length >= 5; brute-force hole search, n <= 20
weakly_chordal_result is_weakly_chordal(const graph& g);

std::optional<bipartition> is_bipartite(const graph& g);

// enumerates maximal independent sets (Bron-Kerbosch with pivoting), early exit on first size mismatch; n <= 32
well_covered_result is_well_covered(const graph& g);

// pattern must be matching(2), complete_bipartite(1,3) (the claw), or cycle(k)
std::optional<vertex_mask> has_induced(const graph& g, const family_spec& pattern);

// Kuhn augmenting paths; absent when sides differ in size or some vertex cannot be matched
std::optional<edge_set> perfect_matching_bipartite(const graph& g, const bipartition& b);

// first induced cycle with >= min_len vertices (exactly target_len when exact), canonical DFS order
std::optional<std::vector<int>> find_induced_cycle(const graph& g, int min_len, bool exact = false);

} // namespace edgereg
