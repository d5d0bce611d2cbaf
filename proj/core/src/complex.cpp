#include "edgereg/complex.hpp"

#include <algorithm>

namespace edgereg {

simplicial_complex independence_complex(const graph& g, std::size_t face_cap) {
    simplicial_complex c;
    c.n = g.n();
    c.faces_by_dim.push_back({0}); // empty face
    std::size_t count = 1;

    auto bucket_for = [&](int d) -> std::vector<vertex_mask>& {
        while (c.dim() < d) c.faces_by_dim.emplace_back();
        return c.faces_by_dim[static_cast<std::size_t>(d + 1)];
    };

    // lexicographic DFS over independent sets: extend by vertices above the last one
    auto rec = [&](auto&& self, vertex_mask face, int d, vertex_mask cands) -> void {
        while (cands) {
            int v = lowest_bit(cands);
            cands &= cands - 1;
            vertex_mask f = face | bit(v);
            if (++count > face_cap)
                throw capacity_error("independence_complex: face cap " + std::to_string(face_cap) +
                                     " exceeded (reached " + std::to_string(count) + " faces)");
            bucket_for(d + 1).push_back(f);
            self(self, f, d + 1, cands & ~g.adjacency(v));
        }
    };
    rec(rec, 0, -1, g.vertices());

    for (auto& bucket : c.faces_by_dim) std::sort(bucket.begin(), bucket.end());
    return c;
}

} // namespace edgereg
