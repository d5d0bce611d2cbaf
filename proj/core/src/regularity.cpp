#include "edgereg/regularity.hpp"

#include <exception>
#include <thread>
#include <unordered_map>
#include <utility>

namespace edgereg {

namespace {

std::vector<int> mask_vertices(vertex_mask w) {
    std::vector<int> out;
    for (vertex_mask m = w; m; m &= m - 1) out.push_back(lowest_bit(m));
    return out;
}

vertex_mask map_back(vertex_mask local, const std::vector<int>& verts) {
    vertex_mask out = 0;
    for (vertex_mask m = local; m; m &= m - 1)
        out |= bit(verts[static_cast<std::size_t>(lowest_bit(m))]);
    return out;
}

struct scan_state {
    int best_i = 0;
    vertex_mask best_w = 0;

    void offer(int i, vertex_mask w) {
        if (i > best_i || (i == best_i && w < best_w)) {
            best_i = i;
            best_w = w;
        }
    }
};

// max i with betti[i] != 0 for Ind(g[w]) (relabeled), -1 when acyclic
int subset_maxdeg(const graph& g, vertex_mask w, field_spec f, std::size_t face_cap) {
    return max_nonvanishing_degree(reduced_betti(independence_complex(induced_subgraph(g, w), face_cap), f));
}

// scan all vertex subsets of h; in decompose mode each subset contributes the sum of its
// components' maximal nonvanishing degrees (join additivity), with a per-component memo
std::pair<int, vertex_mask> scan_graph(const graph& h, field_spec f, const regularity_options& opts, bool decompose) {
    const int k = h.n();
    if (k > 30) throw capacity_error("complex_regularity: subset scan over n=" + std::to_string(k) + " is infeasible");
    const int jobs = std::max(1, opts.jobs);

    auto run_worker = [&](int worker, scan_state& state) {
        std::unordered_map<vertex_mask, int> memo;
        auto comp_maxdeg = [&](vertex_mask comp) -> int {
            auto it = memo.find(comp);
            if (it != memo.end()) return it->second;
            int d = subset_maxdeg(h, comp, f, opts.face_cap);
            memo.emplace(comp, d);
            return d;
        };
        auto process = [&](vertex_mask w) {
            for (vertex_mask m = w; m; m &= m - 1)
                if (!(h.adjacency(lowest_bit(m)) & w)) return; // isolated vertex: cone, acyclic
            int i;
            if (decompose) {
                i = 0;
                for (vertex_mask comp : components(h, w)) {
                    int d = comp_maxdeg(comp);
                    if (d < 0) return; // acyclic factor kills the join
                    i += d;
                }
            } else {
                i = subset_maxdeg(h, w, f, opts.face_cap);
                if (i < 0) return;
            }
            state.offer(i, w);
        };
        // increasing popcount, Gosper's hack within each class; workers take strided items
        std::uint64_t counter = 0;
        for (int size = 2; size <= k; ++size) {
            vertex_mask w = all_mask(size);
            for (;;) {
                if (counter++ % static_cast<std::uint64_t>(jobs) == static_cast<std::uint64_t>(worker)) process(w);
                vertex_mask c = w & (~w + 1);
                vertex_mask r = w + c;
                vertex_mask next = (((r ^ w) >> 2) / c) | r;
                if (next & ~all_mask(k)) break;
                w = next;
            }
        }
    };

    std::vector<scan_state> states(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        run_worker(0, states[0]);
    } else {
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back([&, t] {
                try {
                    run_worker(t, states[static_cast<std::size_t>(t)]);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        for (auto& th : threads) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    scan_state final_state;
    for (const auto& s : states) final_state.offer(s.best_i, s.best_w);
    return {final_state.best_i, final_state.best_w};
}

} // namespace

regularity_result complex_regularity(const graph& g, field_spec f, const regularity_options& opts) {
    if (!opts.use_components) {
        if (g.n() > opts.vertex_cap)
            throw capacity_error("complex_regularity: n=" + std::to_string(g.n()) + " exceeds vertex cap " +
                                 std::to_string(opts.vertex_cap));
        auto [value, witness] = scan_graph(g, f, opts, false);
        return {f, value, witness, value};
    }
    int total = 0;
    vertex_mask witness = 0;
    for (vertex_mask comp : components(g, g.vertices())) {
        if (popcount(comp) > opts.vertex_cap)
            throw capacity_error("complex_regularity: component size " + std::to_string(popcount(comp)) +
                                 " exceeds vertex cap " + std::to_string(opts.vertex_cap));
        auto verts = mask_vertices(comp);
        auto [value, local_witness] = scan_graph(induced_subgraph(g, comp), f, opts, true);
        total += value;
        witness |= map_back(local_witness, verts);
    }
    return {f, total, witness, total};
}

multi_field_regularity regularity_multi_field(const graph& g, const std::vector<field_spec>& primes,
                                              const regularity_options& opts) {
    multi_field_regularity out;
    for (field_spec f : primes) out.results.push_back(complex_regularity(g, f, opts));
    for (const auto& r : out.results)
        if (r.value != out.results.front().value) out.agree = false;
    return out;
}

bool join_regularity_check(const graph& g1, const graph& g2, field_spec f, const regularity_options& opts) {
    regularity_result r1 = complex_regularity(g1, f, opts);
    regularity_result r2 = complex_regularity(g2, f, opts);
    regularity_options direct = opts;
    direct.use_components = false;
    regularity_result ru = complex_regularity(disjoint_union(g1, g2), f, direct);
    return ru.value == r1.value + r2.value;
}

} // namespace edgereg
