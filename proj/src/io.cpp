#include "rigikit/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace rigikit {

namespace {

Multigraph parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<EdgePair> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        if (stripped.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header 'n m'");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected edge 'u v'");
        std::string rest;
        if (ls >> rest)
            throw ParseError("line " + std::to_string(lineno) +
                             ": trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("line " + std::to_string(lineno) +
                             ": vertex out of range [0," + std::to_string(n) +
                             ")");
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("empty input: expected header 'n m'");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header promised " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()));
    return Multigraph(n, std::move(edges));
}

Multigraph parse_json_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("edges"))
        throw ParseError("JSON graph needs fields 'n' and 'edges'");
    std::vector<EdgePair> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("JSON edge entries must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Multigraph(j["n"].get<int>(), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace

Multigraph parse_multigraph(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty graph input");
    if (text[first] == '{') return parse_json_graph(text);
    return parse_text(text);
}

Multigraph parse_multigraph_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_multigraph(buf.str());
}

Multigraph load_multigraph(const std::string& path_or_dash) {
    if (path_or_dash == "-") return parse_multigraph_stream(std::cin);
    std::ifstream file(path_or_dash);
    if (!file) throw ParseError("cannot open input file: " + path_or_dash);
    return parse_multigraph_stream(file);
}

SimpleGraph require_simple(const Multigraph& h) {
    std::set<EdgePair> seen;
    for (auto e : h.edges)
        if (!seen.insert(e).second)
            throw ParseError("parallel edge " + std::to_string(e.first) + "-" +
                             std::to_string(e.second) +
                             " is not allowed here; this command needs a "
                             "simple graph");
    return SimpleGraph(h.n, h.edges);
}

std::string to_text_format(const Multigraph& h) {
    std::ostringstream os;
    os << h.n << ' ' << h.copy_count() << '\n';
    for (auto [u, v] : h.edges) os << u << ' ' << v << '\n';
    return os.str();
}

nlohmann::json multigraph_json(const Multigraph& h) {
    nlohmann::json edges = nlohmann::json::array();
    bool multi = false;
    std::set<EdgePair> seen;
    for (auto e : h.edges) {
        edges.push_back({e.first, e.second});
        multi = multi || !seen.insert(e).second;
    }
    return {{"n", h.n}, {"edges", edges}, {"multi", multi}};
}

} // namespace rigikit
