#pragma once

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "specturan/graph.hpp"
#include "specturan/graph6.hpp"

namespace specturan {

enum class GraphFormat { edge_list, graph6 };

// Edge list: one "u v" pair per line, '#' comments, blank lines ignored.
// Labels are nonnegative integers; n = max label + 1, so declared isolated
// vertices below the max survive the round trip.
inline Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::set<Edge> seen;
    std::string line;
    std::size_t lineno = 0;
    int maxv = -1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only
        if (!(ls >> v))
            throw ParseError("expected two vertex labels", lineno, line.size());
        long long extra;
        if (ls >> extra)
            throw ParseError("trailing token after edge", lineno, line.size());
        if (u < 0 || v < 0)
            throw ParseError("negative vertex label", lineno, 0);
        if (u == v)
            throw ParseError("self-loop " + std::to_string(u) + " " +
                             std::to_string(v), lineno, 0);
        if (!seen.insert(Edge(static_cast<int>(u), static_cast<int>(v))).second)
            throw ParseError("duplicate edge " + std::to_string(u) + " " +
                             std::to_string(v), lineno, 0);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        maxv = std::max({maxv, static_cast<int>(u), static_cast<int>(v)});
    }
    return Graph::from_edges(maxv + 1, edges);
}

inline Graph load_graph6_line(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        return graph6_decode(line);
    }
    throw ParseError("no graph6 record found", lineno, 0);
}

inline Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    switch (format) {
        case GraphFormat::edge_list: return load_edge_list(in);
        case GraphFormat::graph6: return load_graph6_line(in);
    }
    throw Error("unknown graph format");
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream in(text);
    return format == GraphFormat::edge_list ? load_edge_list(in)
                                            : load_graph6_line(in);
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

}  // namespace specturan
