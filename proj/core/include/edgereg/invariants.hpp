#pragma once

#include "edgereg/graph.hpp"
#include "edgereg/regularity.hpp"

namespace edgereg {

struct int_witness {
    int value = 0;
    vertex_mask witness = 0;
};

struct coloring_witness {
    int value = 0;
    std::vector<int> colors; // colors[v] in 0..value-1
};

struct matching_witness {
    int value = 0;
    edge_set witness;
};

// branch-and-bound max clique with greedy-coloring bound; no cap (engine for the capped wrappers)
int_witness max_clique(const graph& g);

int_witness independence_number(const graph& g); // n <= 40
int_witness clique_number(const graph& g);       // n <= 40
coloring_witness chromatic_number(const graph& g); // n <= 24, iterative deepening from omega
matching_witness matching_number(const graph& g);  // n <= 40, branch and bound
matching_witness min_maximal_matching(const graph& g); // n <= 24
// alpha of the edge conflict graph; witness edges induce a matching. |E| <= 40
matching_witness induced_matching_number(const graph& g);

// reg(g) <= reg(g minus the clique j) + 1
bool clique_deletion_check(const graph& g, vertex_mask j, field_spec f, const regularity_options& opts = {});

} // namespace edgereg
