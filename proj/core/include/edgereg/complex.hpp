#pragma once

#include <cstddef>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

constexpr std::size_t default_face_cap = std::size_t{1} << 22;

// faces grouped by dimension: faces_by_dim[d+1] holds the d-faces as vertex bitmasks,
// sorted ascending; faces_by_dim[0] is always {0}, the empty face
struct simplicial_complex {
    int n = 0;
    std::vector<std::vector<vertex_mask>> faces_by_dim;

    int dim() const { return static_cast<int>(faces_by_dim.size()) - 2; }

    std::size_t face_count() const {
        std::size_t total = 0;
        for (const auto& bucket : faces_by_dim) total += bucket.size();
        return total;
    }

    const std::vector<vertex_mask>& faces_of_dim(int d) const {
        return faces_by_dim[static_cast<std::size_t>(d + 1)];
    }
};

// all independent sets of g, including the empty face and all singletons
simplicial_complex independence_complex(const graph& g, std::size_t face_cap = default_face_cap);

} // namespace edgereg
