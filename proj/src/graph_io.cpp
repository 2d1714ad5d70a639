#include "oddcycle/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace oddcycle {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;  // blank
}

// Parses exactly the integers a line should hold; rejects trailing junk.
std::vector<std::int64_t> parse_ints(const std::string& line, std::size_t expect, int lineno) {
    std::vector<std::int64_t> out;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
        while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        if (p == end) break;
        std::int64_t value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc())
            throw FormatError(lineno, "expected an integer, got '" + std::string(p, end) + "'");
        out.push_back(value);
        p = next;
    }
    if (out.size() != expect)
        throw FormatError(lineno, "expected " + std::to_string(expect) + " integers, got " +
                                      std::to_string(out.size()));
    return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::int64_t n = -1, m = -1;
    std::vector<Edge> edges;
    std::unordered_set<std::int64_t> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        if (n == -1) {
            auto header = parse_ints(line, 2, lineno);
            n = header[0];
            m = header[1];
            if (n < 0 || m < 0) throw FormatError(lineno, "n and m must be nonnegative");
            if (n > std::numeric_limits<Vertex>::max())
                throw FormatError(lineno, "vertex count too large");
            edges.reserve(static_cast<std::size_t>(m));
            seen.reserve(static_cast<std::size_t>(m) * 2);
            continue;
        }
        if (static_cast<std::int64_t>(edges.size()) == m)
            throw FormatError(lineno, "more than the declared " + std::to_string(m) + " edges");
        auto pair = parse_ints(line, 2, lineno);
        const std::int64_t u = pair[0], v = pair[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw FormatError(lineno, "endpoint out of range [0," + std::to_string(n) + ")");
        if (u == v) throw FormatError(lineno, "self-loop at vertex " + std::to_string(u));
        const std::int64_t key = std::min(u, v) * n + std::max(u, v);
        if (!seen.insert(key).second)
            throw FormatError(lineno, "duplicate edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n == -1) throw FormatError(lineno, "missing header line 'n m'");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw FormatError(lineno, "declared " + std::to_string(m) + " edges but found " +
                                      std::to_string(edges.size()));
    return Graph::from_edge_list(static_cast<Vertex>(n), edges);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
    return parse_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
    write_graph(g, out);
    out.flush();
    if (!out) throw Error(Errc::io_error, "write to '" + path + "' failed");
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(g, os);
    return os.str();
}

}  // namespace oddcycle
