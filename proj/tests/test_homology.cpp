#include "doctest.h"

#include "edgereg/complex.hpp"
#include "edgereg/homology.hpp"
#include "test_util.hpp"

using namespace edgereg;

namespace {

// reduced Euler characteristic two ways: alternating face counts vs alternating betti numbers
void check_euler(const simplicial_complex& c, const betti_vector& b) {
    long faces = 0;
    for (std::size_t i = 0; i < c.faces_by_dim.size(); ++i)
        faces += (i % 2 == 0 ? -1 : 1) * static_cast<long>(c.faces_by_dim[i].size());
    long betti = 0;
    for (std::size_t j = 0; j < b.betti.size(); ++j)
        betti += (j % 2 == 0 ? -1 : 1) * static_cast<long>(b.betti[j]);
    CHECK(faces == betti);
}

} // namespace

TEST_CASE("field_spec accepts primes only") {
    CHECK(field_spec::is_prime(2));
    CHECK(field_spec::is_prime(3));
    CHECK(field_spec::is_prime(5));
    CHECK(field_spec::is_prime(97));
    CHECK(field_spec::is_prime(2147483647u)); // 2^31 - 1
    CHECK_FALSE(field_spec::is_prime(0));
    CHECK_FALSE(field_spec::is_prime(1));
    CHECK_FALSE(field_spec::is_prime(4));
    CHECK_FALSE(field_spec::is_prime(91)); // 7 * 13
    CHECK_THROWS_AS(field_spec(4), argument_error);
    CHECK_THROWS_AS(field_spec(1), argument_error);
    CHECK(field_spec(7).p == 7);
}

TEST_CASE("independence complex structure") {
    const graph c5 = families::cycle(5);
    simplicial_complex ind = independence_complex(c5);
    CHECK(ind.n == 5);
    CHECK(ind.dim() == 1);
    CHECK(ind.faces_of_dim(-1).size() == 1);
    CHECK(ind.faces_of_dim(0).size() == 5);
    CHECK(ind.faces_of_dim(1).size() == 5);
    CHECK(ind.face_count() == 11);
    for (int d = -1; d <= ind.dim(); ++d) {
        const auto& bucket = ind.faces_of_dim(d);
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            CHECK(popcount(bucket[i]) == d + 1);
            if (i) CHECK(bucket[i - 1] < bucket[i]); // sorted, no duplicates
        }
    }
    // every face is independent and every subset of a face is present (via oracle comparison)
    testutil::oracle_complex oc = testutil::oracle_independence_complex(c5);
    REQUIRE(oc.faces.size() == ind.faces_by_dim.size());
    for (std::size_t i = 0; i < oc.faces.size(); ++i) {
        std::sort(oc.faces[i].begin(), oc.faces[i].end());
        CHECK(oc.faces[i] == ind.faces_by_dim[i]);
    }
}

TEST_CASE("independence complex face cap") {
    CHECK_THROWS_AS(independence_complex(graph(23)), capacity_error);
    CHECK_THROWS_AS(independence_complex(families::path(4), 3), capacity_error);
    CHECK(independence_complex(graph(21)).face_count() == (std::size_t{1} << 21));
}

TEST_CASE("betti numbers of named complexes") {
    // Ind(C5) is a 5-cycle, a circle
    betti_vector b5 = reduced_betti(independence_complex(families::cycle(5)), field_spec(2));
    CHECK(b5.betti == std::vector<int>{0, 0, 1});
    CHECK(max_nonvanishing_degree(b5) == 2);
    CHECK(reduced_betti(independence_complex(families::cycle(5)), field_spec(3)).betti == std::vector<int>{0, 0, 1});

    // Ind(mK2) is the boundary of the m-dimensional cross-polytope, a sphere S^{m-1}
    for (int m = 1; m <= 5; ++m) {
        simplicial_complex ind = independence_complex(families::matching(m));
        CHECK(ind.dim() == m - 1);
        for (field_spec f : {field_spec(2), field_spec(3), field_spec(5)}) {
            betti_vector b = reduced_betti(ind, f);
            REQUIRE(static_cast<int>(b.betti.size()) == m + 1);
            for (int j = 0; j <= m; ++j) CHECK(b.betti[static_cast<std::size_t>(j)] == (j == m ? 1 : 0));
            CHECK(max_nonvanishing_degree(b) == m);
        }
    }

    // empty graph: the complex {∅} has one unit of (-1)-st homology
    betti_vector bempty = reduced_betti(independence_complex(graph(0)), field_spec(2));
    CHECK(bempty.betti == std::vector<int>{1});
    CHECK(max_nonvanishing_degree(bempty) == 0);

    // a single vertex is contractible
    betti_vector bpoint = reduced_betti(independence_complex(graph(1)), field_spec(2));
    CHECK(bpoint.betti == std::vector<int>{0, 0});
    CHECK(max_nonvanishing_degree(bpoint) == -1);

    // Ind(K4) = 4 isolated points
    betti_vector bk4 = reduced_betti(independence_complex(families::complete(4)), field_spec(2));
    CHECK(bk4.betti == std::vector<int>{0, 3});

    // Ind(P4) is contractible (a path of faces), Ind(C4) = two disjoint edges
    CHECK(max_nonvanishing_degree(reduced_betti(independence_complex(families::path(4)), field_spec(2))) == -1);
    CHECK(reduced_betti(independence_complex(families::cycle(4)), field_spec(2)).betti == std::vector<int>{0, 1, 0});

    // Ind(C6) is a wedge of two circles: f = (1,6,9,2), reduced euler characteristic -2
    CHECK(reduced_betti(independence_complex(families::cycle(6)), field_spec(2)).betti == std::vector<int>{0, 0, 2, 0});
}

TEST_CASE("library betti numbers match the dense oracle on the corpus") {
    for (const graph& g : testutil::corpus_nmax(5)) {
        simplicial_complex ind = independence_complex(g);
        for (long p : {2L, 3L}) {
            betti_vector b = reduced_betti(ind, field_spec(static_cast<std::uint32_t>(p)));
            CHECK(b.betti == testutil::oracle_betti(g, p));
            check_euler(ind, b);
        }
    }
}

TEST_CASE("library betti numbers match the dense oracle on random n=6..7 graphs") {
    std::mt19937_64 rng(12021);
    for (int trial = 0; trial < 30; ++trial) {
        graph g = testutil::random_graph(rng, 6 + static_cast<int>(rng() % 2), 40);
        simplicial_complex ind = independence_complex(g);
        for (long p : {2L, 3L, 5L}) {
            betti_vector b = reduced_betti(ind, field_spec(static_cast<std::uint32_t>(p)));
            CHECK(b.betti == testutil::oracle_betti(g, p));
            check_euler(ind, b);
        }
    }
}

TEST_CASE("oracle boundary maps square to zero") {
    for (const graph& g : {families::cycle(6), families::path(7), families::petersen(), families::matching(3)})
        for (long p : {2L, 3L, 5L}) CHECK(testutil::oracle_boundary_squares_to_zero(g, p));
}

TEST_CASE("euler characteristic identity on every corpus graph") {
    for (const graph& g : testutil::corpus_nmax(6)) {
        simplicial_complex ind = independence_complex(g);
        check_euler(ind, reduced_betti(ind, field_spec(2)));
    }
}
