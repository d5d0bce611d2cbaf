#pragma once

#include <cstdint>
#include <vector>

#include "edgereg/complex.hpp"
#include "edgereg/errors.hpp"

namespace edgereg {

struct field_spec {
    std::uint32_t p;

    explicit field_spec(std::uint32_t prime) : p(prime) {
        if (!is_prime(prime)) throw argument_error("field_spec: " + std::to_string(prime) + " is not a prime in [2, 2^31]");
    }

    static bool is_prime(std::uint32_t p);
    friend bool operator==(const field_spec& a, const field_spec& b) { return a.p == b.p; }
};

// betti[j] = dim H̃_{j-1}(c; GF(p)); length dim(c) + 2, starting at the (-1)-st reduced group
struct betti_vector {
    field_spec field;
    std::vector<int> betti;
};

// ranks of the boundary maps (augmented: ∂_0 hits the empty face) by Gaussian elimination,
// bit-packed rows for p = 2 and word-per-entry arithmetic for odd p
betti_vector reduced_betti(const simplicial_complex& c, field_spec f);

// largest i with betti[i] != 0, or -1 when the complex is acyclic over f.
// for Ind(G[W]) this i is W's contribution to the Hochster maximum
int max_nonvanishing_degree(const betti_vector& b);

} // namespace edgereg
