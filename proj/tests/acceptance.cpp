// acceptance gate: one line per criterion, exit 1 if any fails
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "edgereg/covers.hpp"
#include "edgereg/graph_io.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/recognition.hpp"
#include "edgereg/regularity.hpp"
#include "test_util.hpp"

using namespace edgereg;

namespace {

struct criterion_failure {
    std::string details;
};

void require(bool ok, const std::string& details) {
    if (!ok) throw criterion_failure{details};
}

long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

regularity_options direct_opts() {
    regularity_options o;
    o.use_components = false;
    return o;
}

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// --- 1: path and cycle casework through n = 12, under two minutes ---
std::string crit_paths_cycles() {
    auto start = std::chrono::steady_clock::now();
    const field_spec f(2);
    for (int n = 3; n <= 12; ++n) {
        const int expected_reg = (n + 1) / 3;
        graph p = families::path(n);
        require(complex_regularity(p, f).value == expected_reg, fmt("reg(P_%d) != %d", n, expected_reg));
        cochord_result cp = cochord_exact(p, std::chrono::milliseconds{0});
        require(cp.exact && cp.value == expected_reg, fmt("cochord(P_%d) != reg(P_%d) = %d", n, n, expected_reg));

        graph c = families::cycle(n);
        require(complex_regularity(c, f).value == expected_reg, fmt("reg(C_%d) != %d", n, expected_reg));
        const int expected_cc = n < 5 ? 1 : (n + 2) / 3;
        cochord_result cc = cochord_exact(c, std::chrono::milliseconds{0});
        require(cc.exact && cc.value == expected_cc, fmt("cochord(C_%d) != %d", n, expected_cc));
    }
    require(cochord_exact(families::cycle(7)).value == 3, "cochord(C_7) != 3");
    require(cochord_exact(families::cycle(10)).value == 4, "cochord(C_10) != 4");
    long ms = elapsed_ms(start);
    require(ms < 120000, fmt("exceeded the 2 minute budget: %ld ms", ms));
    return fmt("n=3..12, 20 regularity values and 20 exact covers, %ld ms", ms);
}

// --- 2: Ind(mK2) is a homology (m-1)-sphere and reg(mK2) = m ---
std::string crit_cross_polytopes() {
    for (int m = 1; m <= 5; ++m) {
        betti_vector b = reduced_betti(independence_complex(families::matching(m)), field_spec(2));
        require(static_cast<int>(b.betti.size()) == m + 1, fmt("Ind(%dK2): unexpected betti length", m));
        for (int j = 0; j <= m; ++j)
            require(b.betti[static_cast<std::size_t>(j)] == (j == m ? 1 : 0),
                    fmt("Ind(%dK2): betti[%d] != %d", m, j, j == m ? 1 : 0));
        require(complex_regularity(families::matching(m), field_spec(2)).value == m, fmt("reg(%dK2) != %d", m, m));
    }
    return "betti(Ind(mK2)) = e_m and reg = m for m = 1..5";
}

// --- 3: bound chain on the complete n <= 7 corpus at 8 workers ---
std::string crit_corpus_bound_chain() {
    auto start = std::chrono::steady_clock::now();
    const auto& graphs = testutil::corpus();
    std::atomic<std::size_t> next{0};
    std::mutex mtx;
    std::vector<std::string> failures;
    long comparisons = 0;

    auto worker = [&] {
        long local = 0;
        std::vector<std::string> local_fail;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            const graph& g = graphs[i];
            try {
                int im = induced_matching_number(g).value;
                int reg = complex_regularity(g, field_spec(2)).value;
                cochord_result cc = cochord_exact(g, std::chrono::milliseconds{0});
                int nu = matching_number(g).value;
                int mmm = min_maximal_matching(g).value;
                int alpha = independence_number(g).value;
                if (!cc.exact) local_fail.push_back(fmt("graph %zu: cochord not exact", i));
                if (!(im <= reg)) local_fail.push_back(fmt("graph %zu: indmatch %d > reg %d", i, im, reg));
                if (!(reg <= cc.value)) local_fail.push_back(fmt("graph %zu: reg %d > cochord %d", i, reg, cc.value));
                if (!(reg <= nu)) local_fail.push_back(fmt("graph %zu: reg %d > nu %d", i, reg, nu));
                if (!(reg <= mmm)) local_fail.push_back(fmt("graph %zu: reg %d > mmm %d", i, reg, mmm));
                if (!(reg <= alpha)) local_fail.push_back(fmt("graph %zu: reg %d > alpha %d", i, reg, alpha));
                local += 5;
            } catch (const std::exception& e) {
                local_fail.push_back(fmt("graph %zu: %s", i, e.what()));
            }
        }
        std::lock_guard<std::mutex> lock(mtx);
        comparisons += local;
        for (auto& s : local_fail) failures.push_back(std::move(s));
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();

    require(failures.empty(), failures.empty() ? "" : failures.front());
    long ms = elapsed_ms(start);
    require(ms < 1800000, fmt("exceeded the 30 minute budget: %ld ms", ms));
    return fmt("%zu graphs, %ld ordered comparisons, 8 workers, %ld ms", graphs.size(), comparisons, ms);
}

// --- 4: chordal graphs have reg = indmatch and a split partition of that size ---
std::string crit_chordal() {
    long count = 0;
    for (const graph& g : testutil::corpus()) {
        if (!chordal_verdict(g)) continue;
        ++count;
        int im = induced_matching_number(g).value;
        require(complex_regularity(g, field_spec(2)).value == im, fmt("chordal graph #%ld: reg != indmatch %d", count, im));
        require(static_cast<int>(split_cover(g).partition.cliques.size()) == im,
                fmt("chordal graph #%ld: split parts != indmatch %d", count, im));
    }
    return fmt("%ld chordal corpus graphs: reg = indmatch = split parts", count);
}

// --- 5: weakly chordal graphs have cochord = indmatch ---
std::string crit_weakly_chordal() {
    long count = 0;
    for (const graph& g : testutil::corpus()) {
        if (!is_weakly_chordal(g).weakly_chordal) continue;
        ++count;
        int im = induced_matching_number(g).value;
        cochord_result cc = cochord_exact(g, std::chrono::milliseconds{0});
        require(cc.exact && cc.value == im, fmt("weakly chordal graph #%ld: cochord %d != indmatch %d", count, cc.value, im));
    }
    return fmt("%ld weakly chordal corpus graphs: cochord = indmatch", count);
}

// --- 6: chain covers of 200 generated well-covered bipartite graphs, n <= 14 ---
std::string crit_chain_covers() {
    std::mt19937_64 rng(20260825);
    int accepted = 0, whiskered = 0, filtered = 0, blocks = 0;
    long attempts = 0;
    while (accepted < 200) {
        ++attempts;
        require(attempts < 20000, "generator stalled");
        graph g;
        if (attempts % 3 == 1) {
            int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 3);
            g = whisker(testutil::random_bipartite(rng, a, b, 55));
            ++whiskered;
        } else if (attempts % 3 == 2) {
            // disjoint K_{t,t} blocks: well-covered, one chain part per block
            g = graph(0);
            int parts = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < parts && g.n() <= 10; ++i) {
                int t = 1 + static_cast<int>(rng() % 2);
                g = disjoint_union(g, families::complete_bipartite(t, t));
            }
            ++blocks;
        } else {
            int a = 2 + static_cast<int>(rng() % 5), b = 2 + static_cast<int>(rng() % 5);
            g = testutil::random_bipartite(rng, a, b, 45);
            bool isolated = false;
            for (int v = 0; v < g.n(); ++v)
                if (g.degree(v) == 0) isolated = true;
            if (isolated || !is_well_covered(g).well_covered) continue;
            ++filtered;
        }
        ++accepted;
        int im = induced_matching_number(g).value;
        cover c = chain_cover_wc_bipartite(g); // internal lemma violations throw
        require(static_cast<int>(c.parts.size()) == im, fmt("instance %d: parts != indmatch %d", accepted, im));
        require(c.certificates.size() == c.parts.size(), fmt("instance %d: missing certificates", accepted));
        edge_set all(g.n(), g.edges());
        std::size_t covered = 0;
        std::vector<bool> hit(all.size(), false);
        for (std::size_t pi = 0; pi < c.parts.size(); ++pi) {
            require(c.certificates[pi].chordal, fmt("instance %d: certificate %zu not chordal", accepted, pi));
            require(is_cochordal(spanned_subgraph(c.parts[pi])).chordal, fmt("instance %d: part %zu not co-chordal", accepted, pi));
            require(induced_matching_number(spanned_subgraph(c.parts[pi])).value <= 1,
                    fmt("instance %d: part %zu has indmatch > 1", accepted, pi));
            for (edge e : c.parts[pi])
                for (std::size_t k = 0; k < all.size(); ++k)
                    if (all.edges()[k] == e && !hit[k]) {
                        hit[k] = true;
                        ++covered;
                    }
        }
        require(covered == all.size(), fmt("instance %d: cover misses edges", accepted));
    }
    return fmt("200 instances (%d whiskered, %d block unions, %d filtered random), parts = indmatch, all certified",
               whiskered, blocks, filtered);
}

// --- 7: prescribed gaps reg - indmatch = r and cochord - reg = s ---
std::string crit_gaps() {
    auto check_gap = [&](int r, int s, bool direct) {
        graph g(0);
        for (int i = 0; i < r; ++i) g = disjoint_union(g, families::cycle(5));
        for (int i = 0; i < s; ++i) g = disjoint_union(g, families::cycle(7));
        int im, reg, cc;
        if (direct) {
            im = induced_matching_number(g).value;
            reg = complex_regularity(g, field_spec(2), direct_opts()).value;
            cochord_result c = cochord_exact(g, std::chrono::milliseconds{0});
            require(c.exact, fmt("(%d,%d): cochord inexact", r, s));
            cc = c.value;
        } else {
            im = 0;
            reg = complex_regularity(g, field_spec(2)).value;
            cc = 0;
            for (vertex_mask comp : components(g, g.vertices())) {
                graph h = induced_subgraph(g, comp);
                im += induced_matching_number(h).value;
                cochord_result c = cochord_exact(h, std::chrono::milliseconds{0});
                require(c.exact, fmt("(%d,%d): component cochord inexact", r, s));
                cc += c.value;
            }
        }
        require(reg - im == r, fmt("(%d,%d) %s: reg - indmatch = %d", r, s, direct ? "direct" : "additive", reg - im));
        require(cc - reg == s, fmt("(%d,%d) %s: cochord - reg = %d", r, s, direct ? "direct" : "additive", cc - reg));
    };
    check_gap(1, 0, true);
    check_gap(0, 1, true);
    check_gap(1, 1, true);
    check_gap(2, 1, false);
    check_gap(1, 2, false);
    check_gap(2, 2, false);
    return "(1,0),(0,1),(1,1) direct and (2,1),(1,2),(2,2) additive";
}

// --- 8: whiskering: indmatch(W(G)) = alpha(G), cochord(W(G)) = chi(complement(G)) ---
std::string crit_whiskers() {
    long count = 0;
    for (const graph& g : testutil::corpus_nmax(5)) {
        ++count;
        graph w = whisker(g);
        require(is_well_covered(w).well_covered, fmt("whisker #%ld: not well-covered", count));
        require(induced_matching_number(w).value == independence_number(g).value,
                fmt("whisker #%ld: indmatch != alpha", count));
        cochord_result cc = cochord_exact(w, std::chrono::milliseconds{0});
        require(cc.exact && cc.value == chromatic_number(complement(g)).value,
                fmt("whisker #%ld: cochord != chi of the complement", count));
    }
    graph wc5 = whisker(families::cycle(5));
    require(induced_matching_number(wc5).value == 2, "W(C5): indmatch != 2");
    require(cochord_exact(wc5).value == 3, "W(C5): cochord != 3");
    return fmt("%ld whiskered corpus graphs (n <= 5) plus W(C_5) = (2, 3)", count);
}

// --- 9: the sequentially Cohen-Macaulay example separating indmatch from cochord ---
std::string crit_scm_example() {
    graph g(10);
    for (int i = 0; i < 6; ++i) g.add_edge_checked(i, (i + 1) % 6);
    for (int i = 0; i < 4; ++i) g.add_edge_checked(i, 6 + i);
    require(induced_matching_number(g).value == 2, "indmatch != 2");
    cochord_result cc = cochord_exact(g, std::chrono::milliseconds{0});
    require(cc.exact && cc.value == 3, "cochord != 3");
    require(complex_regularity(g, field_spec(2)).value == 2, "reg != 2");
    return "C_6 with four pendants: indmatch 2, reg 2, cochord 3";
}

// --- 10: regularity is subadditive over edge bipartitions ---
std::string crit_edge_subadditivity() {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 500; ++trial) {
        graph g = testutil::random_graph(rng, 8, 40);
        graph g1(8), g2(8);
        for (auto [u, v] : g.edges())
            (rng() % 2 ? g1 : g2).add_edge_checked(u, v);
        int whole = complex_regularity(g, field_spec(2)).value;
        int part = complex_regularity(g1, field_spec(2)).value + complex_regularity(g2, field_spec(2)).value;
        require(whole <= part, fmt("trial %d: reg %d > split sum %d", trial, whole, part));
    }
    return "500 random edge bipartitions on n = 8: reg(G) <= reg(G1) + reg(G2)";
}

// --- 11: regularity adds over disjoint unions, union computed directly ---
std::string crit_union_additivity() {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 200; ++trial) {
        int n1 = 1 + static_cast<int>(rng() % 6);
        graph a = testutil::random_graph(rng, n1, 40);
        int n2 = 1 + static_cast<int>(rng() % 6);
        graph b = testutil::random_graph(rng, n2, 40);
        int ra = complex_regularity(a, field_spec(2), direct_opts()).value;
        int rb = complex_regularity(b, field_spec(2), direct_opts()).value;
        int ru = complex_regularity(disjoint_union(a, b), field_spec(2), direct_opts()).value;
        require(ru == ra + rb, fmt("trial %d: union reg %d != %d + %d", trial, ru, ra, rb));
    }
    return "200 random pairs with n <= 6: direct reg of the union equals the sum";
}

// --- 12: GF(2) homology equals the dense oracle on every n <= 6 graph ---
std::string crit_oracle_equivalence() {
    long count = 0;
    for (const graph& g : testutil::corpus_nmax(6)) {
        ++count;
        simplicial_complex ind = independence_complex(g);
        betti_vector b = reduced_betti(ind, field_spec(2));
        require(b.betti == testutil::oracle_betti(g, 2), fmt("graph #%ld: betti mismatch", count));
        require(testutil::oracle_boundary_squares_to_zero(g, 2), fmt("graph #%ld: boundary square nonzero", count));
        long faces = 0, betti_sum = 0;
        for (std::size_t i = 0; i < ind.faces_by_dim.size(); ++i)
            faces += (i % 2 == 0 ? -1 : 1) * static_cast<long>(ind.faces_by_dim[i].size());
        for (std::size_t j = 0; j < b.betti.size(); ++j)
            betti_sum += (j % 2 == 0 ? -1 : 1) * static_cast<long>(b.betti[j]);
        require(faces == betti_sum, fmt("graph #%ld: euler characteristic mismatch", count));
    }
    return fmt("%ld graphs: library = oracle over GF(2), boundaries square to zero, euler identity", count);
}

// --- 13: characteristic independence, recorded rather than asserted ---
std::string crit_field_independence() {
    long count = 0, disagreements = 0;
    for (const graph& g : testutil::corpus_nmax(6)) {
        ++count;
        multi_field_regularity mf = regularity_multi_field(g, {field_spec(2), field_spec(3), field_spec(5)});
        if (!mf.agree) ++disagreements;
    }
    return fmt("%ld graphs over GF(2)/GF(3)/GF(5), %ld disagreements recorded", count, disagreements);
}

// --- 14: no two-clique split instance exists in the petersen complement ---
std::string crit_petersen_complement() {
    graph pc = complement(families::petersen());
    require(!has_induced(pc, {family_kind::matching, 2}).has_value(), "petersen complement has an induced 2K2");
    require(!has_induced(pc, {family_kind::complete_bipartite, 1, 3}).has_value(), "petersen complement has an induced claw");
    std::size_t cliques = all_cliques(pc).size();
    require(cliques == 75, fmt("clique count %zu != 75", cliques));
    long pairs = count_clique_pair_partitions(pc);
    require(pairs == 0, fmt("found %ld two-clique partitions", pairs));
    require(split_cover(pc).partition.cliques.size() == 3, "minimum split partition != 3 cliques");
    return "75 cliques scanned, 0 admissible pairs, minimum split partition needs 3 cliques";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
        {"paths_cycles_casework", crit_paths_cycles},
        {"cross_polytope_homology", crit_cross_polytopes},
        {"corpus_bound_chain", crit_corpus_bound_chain},
        {"chordal_reg_equals_indmatch", crit_chordal},
        {"weakly_chordal_cochord_equals_indmatch", crit_weakly_chordal},
        {"wc_bipartite_chain_covers", crit_chain_covers},
        {"prescribed_gap_configurations", crit_gaps},
        {"whisker_formulas", crit_whiskers},
        {"scm_separating_example", crit_scm_example},
        {"edge_bipartition_subadditivity", crit_edge_subadditivity},
        {"disjoint_union_additivity", crit_union_additivity},
        {"gf2_oracle_equivalence", crit_oracle_equivalence},
        {"field_independence_recorded", crit_field_independence},
        {"petersen_complement_scan", crit_petersen_complement},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string verdict, details;
        try {
            details = criteria[i].second();
            verdict = "PASS";
        } catch (const criterion_failure& f) {
            details = f.details;
            verdict = "FAIL";
            ++failed;
        } catch (const std::exception& e) {
            details = std::string("unexpected error: ") + e.what();
            verdict = "FAIL";
            ++failed;
        }
        std::printf("[%2zu/14] %s %s (%s)\n", i + 1, verdict.c_str(), criteria[i].first.c_str(), details.c_str());
        std::fflush(stdout);
    }
    if (failed) {
        std::printf("acceptance: %d of 14 criteria failed\n", failed);
        return 1;
    }
    std::printf("acceptance: 14/14 criteria passed\n");
    return 0;
}
