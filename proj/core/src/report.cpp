#include "edgereg/report.hpp"

#include <sstream>

#include "json.hpp"

#include "edgereg/graph.hpp"

namespace edgereg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<int> witness_vertices(vertex_mask w) {
    std::vector<int> out;
    for (vertex_mask m = w; m; m &= m - 1) out.push_back(lowest_bit(m));
    return out;
}

ordered_json regularity_json(const regularity_result& r) {
    ordered_json j;
    j["field"] = r.field.p;
    j["value"] = r.value;
    j["witness_subset"] = witness_vertices(r.witness);
    j["witness_degree"] = r.witness_degree;
    return j;
}

ordered_json record_json(const report_record& rec) {
    ordered_json j;
    j["graph_id"] = rec.graph_id;
    j["graph6"] = rec.graph6;
    ordered_json inv = ordered_json::object();
    const auto& iv = rec.invariants;
    if (iv.alpha) inv["alpha"] = *iv.alpha;
    if (iv.omega) inv["omega"] = *iv.omega;
    if (iv.chi) inv["chi"] = *iv.chi;
    if (iv.nu) inv["nu"] = *iv.nu;
    if (iv.min_maximal_matching) inv["min_maximal_matching"] = *iv.min_maximal_matching;
    if (iv.indmatch) inv["indmatch"] = *iv.indmatch;
    if (iv.cochord) {
        inv["cochord"] = ordered_json{{"value", iv.cochord->value},
                                      {"method", iv.cochord->exact ? "exact" : "upper_bound"}};
    }
    if (!iv.regularity.empty()) {
        ordered_json regs = ordered_json::array();
        for (const auto& r : iv.regularity) regs.push_back(regularity_json(r));
        inv["regularity"] = regs;
    }
    if (!iv.timings_ms.empty()) {
        ordered_json t = ordered_json::object();
        for (const auto& [name, ms] : iv.timings_ms) t[name] = ms;
        inv["timings_ms"] = t;
    }
    j["invariants"] = inv;
    ordered_json checks = ordered_json::array();
    for (const auto& c : rec.checks)
        checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    j["checks"] = checks;
    j["runtime_ms"] = rec.runtime_ms;
    if (!rec.error.empty()) j["error"] = rec.error;
    return j;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string emit_csv(const std::vector<report_record>& records, const suite_config& cfg) {
    std::ostringstream out;
    out << "graph_id,graph6,alpha,omega,chi,nu,min_maximal_matching,indmatch,cochord,cochord_method";
    for (auto p : cfg.field_primes) out << ",reg_gf" << p;
    out << ",checks_passed,checks_failed,runtime_ms,error\n";
    auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& rec : records) {
        const auto& iv = rec.invariants;
        out << csv_quote(rec.graph_id) << ',' << rec.graph6 << ',' << cell(iv.alpha) << ',' << cell(iv.omega) << ','
            << cell(iv.chi) << ',' << cell(iv.nu) << ',' << cell(iv.min_maximal_matching) << ',' << cell(iv.indmatch)
            << ',';
        if (iv.cochord)
            out << iv.cochord->value << ',' << (iv.cochord->exact ? "exact" : "upper_bound");
        else
            out << ',';
        for (auto p : cfg.field_primes) {
            out << ',';
            for (const auto& r : iv.regularity)
                if (r.field.p == p) {
                    out << r.value;
                    break;
                }
        }
        int passed = 0, failed = 0;
        for (const auto& c : rec.checks) (c.pass ? passed : failed)++;
        out << ',' << passed << ',' << failed << ',' << rec.runtime_ms << ',' << csv_quote(rec.error) << '\n';
    }
    return out.str();
}

std::string emit_text(const std::vector<report_record>& records) {
    std::ostringstream out;
    for (const auto& rec : records) {
        out << rec.graph_id << " " << rec.graph6;
        if (!rec.error.empty()) {
            out << " error: " << rec.error << '\n';
            continue;
        }
        const auto& iv = rec.invariants;
        auto field = [&](const char* name, const std::optional<int>& v) {
            if (v) out << ' ' << name << '=' << *v;
        };
        field("alpha", iv.alpha);
        field("omega", iv.omega);
        field("chi", iv.chi);
        field("nu", iv.nu);
        field("mmm", iv.min_maximal_matching);
        field("indmatch", iv.indmatch);
        if (iv.cochord) out << " cochord=" << iv.cochord->value << (iv.cochord->exact ? "" : "(upper_bound)");
        for (const auto& r : iv.regularity) out << " reg_gf" << r.field.p << '=' << r.value;
        out << '\n';
        for (const auto& c : rec.checks)
            out << "  check " << c.name << ": " << (c.pass ? "pass" : "FAIL")
                << (c.details.empty() ? "" : " (" + c.details + ")") << '\n';
    }
    return out.str();
}

} // namespace

std::string emit_report(const std::vector<report_record>& records, const suite_config& cfg) {
    switch (cfg.format) {
        case report_format::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& rec : records) arr.push_back(record_json(rec));
            return arr.dump(2) + "\n";
        }
        case report_format::csv:
            return emit_csv(records, cfg);
        case report_format::text:
            return emit_text(records);
    }
    throw argument_error("emit_report: unknown format");
}

} // namespace edgereg
