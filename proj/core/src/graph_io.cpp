#include "edgereg/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>

namespace edgereg {

namespace {

[[noreturn]] void bad_g6(std::size_t offset, const std::string& what) {
    throw parse_error("graph6: " + what + " at byte " + std::to_string(offset));
}

int sextet(std::string_view text, std::size_t offset) {
    if (offset >= text.size()) bad_g6(text.size(), "truncated input");
    unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126) bad_g6(offset, "byte outside 63..126");
    return c - 63;
}

} // namespace

graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) bad_g6(0, "empty input");

    std::size_t pos = 0;
    long n;
    if (text[0] != '~') {
        n = sextet(text, pos++);
    } else {
        if (text.size() >= 2 && text[1] == '~') {
            // 8-byte form encodes n >= 258048, far beyond the 64-vertex cap
            throw capacity_error("graph6: long form encodes n > 64 vertices");
        }
        ++pos;
        long a = sextet(text, pos++), b = sextet(text, pos++), c = sextet(text, pos++);
        n = (a << 12) | (b << 6) | c;
        if (n < 63) bad_g6(1, "non-canonical 4-byte order");
    }
    if (n > max_vertices)
        throw capacity_error("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(max_vertices));

    const long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != pos + nbytes) bad_g6(text.size(), "length mismatch");

    graph g(static_cast<int>(n));
    long k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            int val = sextet(text, pos + static_cast<std::size_t>(k / 6));
            if ((val >> (5 - k % 6)) & 1) g.add_edge_checked(u, v);
        }
    }
    // padding bits beyond the triangle must be zero
    for (long p = nbits; p < static_cast<long>(nbytes) * 6; ++p) {
        int val = sextet(text, pos + static_cast<std::size_t>(p / 6));
        if ((val >> (5 - p % 6)) & 1) bad_g6(pos + static_cast<std::size_t>(p / 6), "nonzero padding");
    }
    return g;
}

std::string emit_graph6(const graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nb = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

namespace {

[[noreturn]] void bad_edges(int line, const std::string& what) {
    throw parse_error("edge list: " + what + " at line " + std::to_string(line));
}

long parse_int(std::string_view tok, int line) {
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) bad_edges(line, "bad integer '" + std::string(tok) + "'");
    return v;
}

} // namespace

graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<long, long>> pairs;
    long declared_n = -1;
    long max_index = -1;
    int line_no = 0;
    bool first_content = true;

    while (!text.empty()) {
        ++line_no;
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<std::string_view> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) toks.push_back(line.substr(i, j - i));
            i = j;
        }
        if (toks.empty()) continue;

        if (first_content && toks[0] == "n") {
            if (toks.size() != 2) bad_edges(line_no, "header needs exactly 'n <count>'");
            declared_n = parse_int(toks[1], line_no);
            if (declared_n < 0 || declared_n > max_vertices)
                bad_edges(line_no, "declared order " + std::to_string(declared_n) + " outside [0," + std::to_string(max_vertices) + "]");
            first_content = false;
            continue;
        }
        first_content = false;

        if (toks.size() != 2) bad_edges(line_no, "expected 'u v'");
        long u = parse_int(toks[0], line_no), v = parse_int(toks[1], line_no);
        if (u < 0 || v < 0) bad_edges(line_no, "negative vertex index");
        if (u >= max_vertices || v >= max_vertices) bad_edges(line_no, "vertex index >= " + std::to_string(max_vertices));
        if (u == v) bad_edges(line_no, "loop edge " + std::to_string(u) + " " + std::to_string(v));
        pairs.push_back({u, v});
        max_index = std::max({max_index, u, v});
    }

    long n = declared_n >= 0 ? declared_n : max_index + 1;
    if (max_index >= n) throw parse_error("edge list: vertex index " + std::to_string(max_index) + " >= declared n " + std::to_string(n));
    graph g(static_cast<int>(n));
    for (auto [u, v] : pairs)
        if (!g.has_edge(static_cast<int>(u), static_cast<int>(v))) g.add_edge_checked(static_cast<int>(u), static_cast<int>(v));
    return g;
}

} // namespace edgereg
