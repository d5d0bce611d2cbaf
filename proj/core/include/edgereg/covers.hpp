#pragma once

#include <chrono>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/recognition.hpp"

namespace edgereg {

enum class cover_kind { split, chain, cochordal, mixed };

// edge cover of a graph by co-chordal pieces; certificate i is the chordality
// certificate of the complement of part i's spanned subgraph
struct cover {
    cover_kind kind = cover_kind::cochordal;
    std::vector<edge_set> parts;
    std::vector<chordality_certificate> certificates;
};

struct split_partition {
    vertex_mask j0 = 0;                // independent block
    std::vector<vertex_mask> cliques;  // J_1..J_s
};

struct split_cover_result {
    split_partition partition;
    cover cov;
};

// minimum number of cliques s over partitions V = J_0 ∪ J_1 ∪ ... ∪ J_s with J_0
// independent; part i collects every edge meeting J_i. exact DFS, n <= 20
split_cover_result split_cover(const graph& g);

// for well-covered bipartite g without isolated vertices: perfect matching M, clique
// cover of the conflict graph M*, one part of incident edges per clique. part count
// always equals indmatch(g); violations of the underlying lemmas throw invariant_violation
cover chain_cover_wc_bipartite(const graph& g);

struct cochord_result {
    int value = 0;
    cover cov;
    bool exact = true; // false when the time budget expired and value is only an upper bound
};

// exact co-chordal cover number by iterative deepening between the induced matching
// number (lower bound) and the greedy cover size (upper bound). the DFS branches, at an
// uncovered anchor edge, over all maximal co-chordal edge subsets containing it; parts
// may overlap, which minimum covers of some graphs require. |E| <= 48; budget <= 0 means no limit
cochord_result cochord_exact(const graph& g, std::chrono::milliseconds budget = std::chrono::milliseconds{10000});

// grows each part to a maximal co-chordal subset of the remaining edges
// (most-conflicting-first order), so a co-chordal input always yields one part
cover cochord_greedy(const graph& g);

struct mixed_cover_result {
    int target = 0;     // maximum number of parts allowed
    bool found = false; // a cover with at most target parts exists
    cover cov;          // populated when found; certificates stay empty (parts are not co-chordal in general)
    bool exact = true;  // false when the time budget expired before the search finished
};

// searches for a cover of E(g) by at most target parts whose spanned subgraphs contain
// no induced 2K2 and no induced claw. freeness is not monotone under edge additions, so
// candidate parts are enumerated from the full subset lattice; |E| <= 20
mixed_cover_result mixed_cover_search(const graph& g, int target,
                                      std::chrono::milliseconds budget = std::chrono::milliseconds{10000});

// every nonempty clique of g, ascending as bitmasks. n <= 20 and at most 2^20 cliques
std::vector<vertex_mask> all_cliques(const graph& g);

// unordered pairs {A, B} of disjoint nonempty cliques with V \ (A ∪ B) independent:
// exactly the two-clique instances of the split covering bound
long count_clique_pair_partitions(const graph& g);

} // namespace edgereg
