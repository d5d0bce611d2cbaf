#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgereg/regularity.hpp"

namespace edgereg {

struct cochord_info {
    int value = 0;
    bool exact = true;
};

struct invariant_report {
    std::optional<int> alpha, omega, chi, nu, min_maximal_matching, indmatch;
    std::optional<cochord_info> cochord;
    std::vector<regularity_result> regularity;
    // per-invariant wall times; values stay 0 unless timing collection is enabled,
    // keeping default reports byte-identical across runs
    std::vector<std::pair<std::string, long>> timings_ms;
};

struct check_result {
    std::string name;
    bool pass = false;
    std::string details;
};

struct report_record {
    std::string graph_id;
    std::string graph6;
    invariant_report invariants;
    std::vector<check_result> checks;
    long runtime_ms = 0;
    std::string error; // empty when the record computed cleanly
};

enum class report_format { json, csv, text };

struct suite_config {
    int nmax = 0;
    std::vector<std::uint32_t> field_primes = {2};
    int jobs = 1;
    long timeout_ms = 10000;
    report_format format = report_format::json;
    bool include_timings = false;
    regularity_options reg_opts{};
};

// deterministic serialization: fixed key order, witness subsets as sorted vertex lists
std::string emit_report(const std::vector<report_record>& records, const suite_config& cfg);

} // namespace edgereg
