#include "cforce/io.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace cforce {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

std::vector<long long> parse_ints(const std::string& line, int lineno) {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size())
            throw ParseError("line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
        out.push_back(value);
    }
    return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        auto ints = parse_ints(line, lineno);
        if (n < 0) {
            if (ints.size() != 1)
                throw ParseError("line " + std::to_string(lineno) + ": expected the vertex count alone");
            n = ints[0];
            if (n < 1) throw ParseError("line " + std::to_string(lineno) + ": vertex count must be >= 1");
            if (n > 20000)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": vertex count exceeds the supported maximum of 20000 "
                                 "(the adjacency representation is dense)");
            continue;
        }
        if (ints.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
        if (ints[0] < 0 || ints[0] >= n || ints[1] < 0 || ints[1] >= n)
            throw ParseError("line " + std::to_string(lineno) + ": endpoint outside 0.." +
                             std::to_string(n - 1));
        if (ints[0] == ints[1])
            throw ParseError("line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(static_cast<int>(ints[0]), static_cast<int>(ints[1]));
    }
    if (n < 0) throw ParseError("no vertex count found in input");
    return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

}  // namespace cforce
