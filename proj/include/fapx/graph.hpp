#pragma once

// Undirected simple graphs on vertices 0..n-1.
//
// Graph text format:
//   line 1: "n <int>"
//   then one "u v" pair per line; duplicates are ignored, self-loops rejected.

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fapx/errors.hpp"
#include "fapx/instance.hpp"

namespace fapx {

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw ParameterError("vertex count must be nonnegative");
    }

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::set<std::pair<int, int>>& edges() const noexcept { return edges_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw ParameterError("self-loops are not allowed");
        if (u > v) std::swap(u, v);
        edges_.emplace(u, v);
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        if (u > v) std::swap(u, v);
        return edges_.count({u, v}) > 0;
    }

    // Bitmask adjacency rows for the exhaustive solvers.
    std::vector<std::uint64_t> adjacency_masks() const {
        if (n_ > 64) throw GuardError("adjacency masks require at most 64 vertices");
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_), 0);
        for (const auto& [u, v] : edges_) {
            adj[static_cast<std::size_t>(u)] |= std::uint64_t(1) << v;
            adj[static_cast<std::size_t>(v)] |= std::uint64_t(1) << u;
        }
        return adj;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw ParameterError("vertex index out of range");
    }

    int n_ = 0;
    std::set<std::pair<int, int>> edges_;
};

inline Graph parse_graph(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty() || detail::blank(lines[0]))
        detail::parse_fail(1, "expected 'n <int>'");

    long long n = 0;
    {
        std::istringstream in(lines[0]);
        std::string tag;
        if (!(in >> tag) || tag != "n" || !(in >> n))
            detail::parse_fail(1, "expected 'n <int>'");
        std::string extra;
        if (in >> extra) detail::parse_fail(1, "unexpected token '" + extra + "'");
        if (n < 0) detail::parse_fail(1, "n must be nonnegative");
        if (n > 1'000'000) detail::parse_fail(1, "n is implausibly large");
    }

    Graph g(static_cast<int>(n));
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (detail::blank(lines[ln])) continue;
        std::istringstream in(lines[ln]);
        long long u = 0, v = 0;
        if (!(in >> u >> v)) detail::parse_fail(ln + 1, "expected 'u v'");
        std::string extra;
        if (in >> extra) detail::parse_fail(ln + 1, "unexpected token '" + extra + "'");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const ParameterError& e) {
            detail::parse_fail(ln + 1, e.what());
        }
    }
    return g;
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << "\n";
    return out.str();
}

}  // namespace fapx
