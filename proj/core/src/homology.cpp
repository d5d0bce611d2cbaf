#include "edgereg/homology.hpp"

#include <algorithm>
#include <cassert>

namespace edgereg {

bool field_spec::is_prime(std::uint32_t p) {
    if (p < 2 || p > (std::uint32_t{1} << 31)) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {

int rank_gf2(std::vector<std::vector<std::uint64_t>>& rows) {
    std::vector<std::size_t> pivot_cols;
    std::vector<const std::vector<std::uint64_t>*> basis;
    int rank = 0;
    for (auto& row : rows) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::size_t col = pivot_cols[i];
            if (row[col >> 6] & (std::uint64_t{1} << (col & 63)))
                for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= (*basis[i])[w];
        }
        std::size_t col = row.size() * 64;
        for (std::size_t w = 0; w < row.size(); ++w)
            if (row[w]) {
                col = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
                break;
            }
        if (col == row.size() * 64) continue;
        pivot_cols.push_back(col);
        basis.push_back(&row);
        ++rank;
    }
    return rank;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

int rank_modp(std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
    const std::int64_t m = p;
    std::vector<std::size_t> pivot_cols;
    std::vector<const std::vector<std::int64_t>*> basis; // normalized so entry at pivot col is 1
    int rank = 0;
    for (auto& row : rows) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::int64_t c = row[pivot_cols[i]];
            if (c)
                for (std::size_t j = 0; j < row.size(); ++j)
                    row[j] = ((row[j] - c * (*basis[i])[j]) % m + m) % m;
        }
        std::size_t col = row.size();
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j]) {
                col = j;
                break;
            }
        if (col == row.size()) continue;
        std::int64_t inv = mod_pow(row[col], m - 2, m);
        for (auto& x : row) x = x * inv % m;
        pivot_cols.push_back(col);
        basis.push_back(&row);
        ++rank;
    }
    return rank;
}

} // namespace

betti_vector reduced_betti(const simplicial_complex& c, field_spec f) {
    const int dim = c.dim();
    // rank[d+1] = rank of ∂_d : C_d -> C_{d-1}; augmentation ∂_0 included (d = 0 hits the empty face)
    std::vector<int> rank(static_cast<std::size_t>(dim) + 3, 0);
    for (int d = 0; d <= dim; ++d) {
        const auto& row_faces = c.faces_of_dim(d);
        const auto& col_faces = c.faces_of_dim(d - 1);
        if (row_faces.empty() || col_faces.empty()) continue;
        auto col_of = [&](vertex_mask face) -> std::size_t {
            auto it = std::lower_bound(col_faces.begin(), col_faces.end(), face);
            assert(it != col_faces.end() && *it == face);
            return static_cast<std::size_t>(it - col_faces.begin());
        };
        if (f.p == 2) {
            const std::size_t words = (col_faces.size() + 63) / 64;
            std::vector<std::vector<std::uint64_t>> rows(row_faces.size(), std::vector<std::uint64_t>(words, 0));
            for (std::size_t r = 0; r < row_faces.size(); ++r)
                for (vertex_mask mm = row_faces[r]; mm; mm &= mm - 1) {
                    std::size_t col = col_of(row_faces[r] & ~bit(lowest_bit(mm)));
                    rows[r][col >> 6] ^= std::uint64_t{1} << (col & 63);
                }
            rank[static_cast<std::size_t>(d) + 1] = rank_gf2(rows);
        } else {
            std::vector<std::vector<std::int64_t>> rows(row_faces.size(), std::vector<std::int64_t>(col_faces.size(), 0));
            for (std::size_t r = 0; r < row_faces.size(); ++r) {
                int k = 0; // position of the removed vertex within the ascending face
                for (vertex_mask mm = row_faces[r]; mm; mm &= mm - 1, ++k) {
                    std::size_t col = col_of(row_faces[r] & ~bit(lowest_bit(mm)));
                    rows[r][col] = (k % 2 == 0) ? 1 : static_cast<std::int64_t>(f.p) - 1;
                }
            }
            rank[static_cast<std::size_t>(d) + 1] = rank_modp(rows, f.p);
        }
    }

    betti_vector out{f, std::vector<int>(static_cast<std::size_t>(dim) + 2, 0)};
    for (int d = -1; d <= dim; ++d) {
        int fd = static_cast<int>(c.faces_of_dim(d).size());
        out.betti[static_cast<std::size_t>(d) + 1] =
            fd - rank[static_cast<std::size_t>(d) + 1] - rank[static_cast<std::size_t>(d) + 2];
    }
    return out;
}

int max_nonvanishing_degree(const betti_vector& b) {
    for (int j = static_cast<int>(b.betti.size()) - 1; j >= 0; --j)
        if (b.betti[static_cast<std::size_t>(j)] != 0) return j;
    return -1;
}

} // namespace edgereg
