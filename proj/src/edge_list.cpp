#include "pinning/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pinning/error.hpp"

namespace pinning {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw Error("line " + std::to_string(line) + ": " + what);
}

// Parses a non-negative integer token, rejecting signs and trailing junk.
std::size_t parse_id(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(line, "expected a non-negative integer, got '" + tok + "'");
    try {
        return static_cast<std::size_t>(std::stoull(tok));
    } catch (const std::out_of_range&) {
        fail(line, "integer '" + tok + "' out of range");
    }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    bool have_n = false;
    std::size_t n = 0;
    std::vector<Edge> edges;

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        if (!have_n) {
            if (toks.size() != 1) fail(lineno, "expected the node count on its own line");
            n = parse_id(toks[0], lineno);
            have_n = true;
            continue;
        }
        if (toks.size() != 2) fail(lineno, "expected 'u v', got " + std::to_string(toks.size()) + " fields");
        const NodeId u = parse_id(toks[0], lineno);
        const NodeId v = parse_id(toks[1], lineno);
        if (u >= n || v >= n) fail(lineno, "endpoint out of range for N=" + std::to_string(n));
        if (u == v) fail(lineno, "self-loop on node " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    if (!have_n) throw Error("edge list is empty: missing node count");
    return Graph::build(n, edges);
}

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    try {
        return read_edge_list(in);
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace pinning
