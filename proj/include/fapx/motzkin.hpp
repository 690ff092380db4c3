#pragma once

// Edge-sum maximization over the probability simplex. The integral points
// (vertex indicators) always score 0, while the fractional optimum equals
// (1 - 1/w)/2 for clique number w, attained by spreading mass uniformly over
// a maximum clique. A replicator-dynamics ascent recovers the fractional
// optimum numerically.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "fapx/errors.hpp"
#include "fapx/graph.hpp"
#include "fapx/oracles.hpp"
#include "fapx/rational.hpp"

namespace fapx {

// Exact point on the standard simplex: nonnegative coordinates summing to 1.
struct SimplexPoint {
    std::vector<Rat> coords;

    explicit SimplexPoint(std::vector<Rat> c) : coords(std::move(c)) {
        Rat sum(0);
        for (const auto& x : coords) {
            if (x < 0) throw ParameterError("simplex coordinates must be nonnegative");
            sum += x;
        }
        if (sum != 1) throw ParameterError("simplex coordinates must sum to 1");
    }
};

// g(y) = sum over edges {u,v} of y_u * y_v, evaluated exactly.
inline Rat eval_g(const Graph& g, const SimplexPoint& y) {
    if (y.coords.size() != static_cast<std::size_t>(g.vertex_count()))
        throw ParameterError("point dimension does not match the graph");
    Rat val(0);
    for (const auto& [u, v] : g.edges())
        val += y.coords[static_cast<std::size_t>(u)] * y.coords[static_cast<std::size_t>(v)];
    return val;
}

// Best value over vertex indicators. An indicator has a single coordinate 1,
// so every edge term vanishes.
inline Rat opt_int_ms(const Graph& g) {
    if (g.vertex_count() == 0) throw ParameterError("graph must have at least one vertex");
    return Rat(0);
}

// Fractional optimum (1 - 1/w)/2 via the exact clique oracle; 0 for edgeless
// graphs (where w <= 1).
inline Rat opt_frac_ms(const Graph& g) {
    if (g.vertex_count() == 0) throw ParameterError("graph must have at least one vertex");
    const int w = clique_number(g);
    if (w <= 1) return Rat(0);
    return (Rat(1) - make_rat(1, w)) / 2;
}

// Mass 1/|C| on each clique vertex; the classic witness for the formula.
inline SimplexPoint uniform_on_clique(const Graph& g, const std::vector<int>& clique) {
    if (clique.empty()) throw ParameterError("clique must be nonempty");
    std::vector<Rat> coords(static_cast<std::size_t>(g.vertex_count()), Rat(0));
    const Rat share = make_rat(1, static_cast<int>(clique.size()));
    for (int v : clique) {
        if (v < 0 || v >= g.vertex_count())
            throw ParameterError("clique vertex out of range");
        if (coords[static_cast<std::size_t>(v)] != 0)
            throw ParameterError("clique lists a vertex twice");
        coords[static_cast<std::size_t>(v)] = share;
    }
    return SimplexPoint(std::move(coords));
}

// All maximal cliques (Bron-Kerbosch with pivoting). Used to seed the
// numeric ascent so that every maximum clique's basin is reachable.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 25) throw GuardError("maximal clique enumeration supports at most 25 vertices");
    if (n == 0) return {};
    const auto adj = g.adjacency_masks();
    std::vector<std::vector<int>> out;
    std::vector<int> cur;

    auto expand = [&](auto&& self, std::uint64_t cand, std::uint64_t excl) -> void {
        if (cand == 0 && excl == 0) {
            out.push_back(cur);
            return;
        }
        // pivot on the candidate/excluded vertex covering the most candidates
        std::uint64_t both = cand | excl;
        int pivot = -1, cover = -1;
        for (std::uint64_t t = both; t;) {
            const int u = std::countr_zero(t);
            t &= t - 1;
            const int c = std::popcount(cand & adj[static_cast<std::size_t>(u)]);
            if (c > cover) {
                cover = c;
                pivot = u;
            }
        }
        std::uint64_t work = cand & ~adj[static_cast<std::size_t>(pivot)];
        while (work) {
            const int v = std::countr_zero(work);
            const std::uint64_t bit = std::uint64_t(1) << v;
            work &= work - 1;
            cur.push_back(v);
            self(self, cand & adj[static_cast<std::size_t>(v)],
                 excl & adj[static_cast<std::size_t>(v)]);
            cur.pop_back();
            cand &= ~bit;
            excl |= bit;
        }
    };
    const std::uint64_t all =
        (n == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    expand(expand, all, 0);
    return out;
}

struct ReplicatorResult {
    double value;               // g at the final point
    std::vector<double> point;  // nonnegative, sums to 1
};

namespace detail {

inline double quad_value(const Graph& g, const std::vector<double>& y) {
    double s = 0.0;
    for (const auto& [u, v] : g.edges())
        s += y[static_cast<std::size_t>(u)] * y[static_cast<std::size_t>(v)];
    return s;
}

}  // namespace detail

// Multiplicative-weights ascent y_i <- y_i * (Ay)_i / (y'Ay). The iteration
// is monotone in g, so the best over all starts is reported. Starts: the
// barycenter, every edge midpoint, every maximal clique's uniform point, and
// random simplex points from a fixed-seed generator.
inline ReplicatorResult replicator_maximize(const Graph& g, int restarts = 20,
                                            int max_iters = 2000, double tol = 1e-9) {
    const int n = g.vertex_count();
    if (n == 0) throw ParameterError("graph must have at least one vertex");
    if (restarts < 0) throw ParameterError("restarts must be nonnegative");
    if (max_iters < 1) throw ParameterError("max_iters must be positive");
    if (!(tol > 0)) throw ParameterError("tol must be positive");

    std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
    for (const auto& [u, v] : g.edges()) {
        neighbors[static_cast<std::size_t>(u)].push_back(v);
        neighbors[static_cast<std::size_t>(v)].push_back(u);
    }

    auto ascend = [&](std::vector<double> y) {
        std::vector<double> ay(static_cast<std::size_t>(n));
        for (int iter = 0; iter < max_iters; ++iter) {
            double denom = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) {
                double s = 0.0;
                for (int w : neighbors[i]) s += y[static_cast<std::size_t>(w)];
                ay[i] = s;
                denom += y[i] * s;
            }
            if (denom <= 0.0) break;  // edgeless support; this start is stuck at 0
            double change = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) {
                const double next = y[i] * ay[i] / denom;
                change = std::max(change, std::abs(next - y[i]));
                y[i] = next;
            }
            if (change <= tol) break;
        }
        return y;
    };

    ReplicatorResult best{0.0,
                          std::vector<double>(static_cast<std::size_t>(n), 1.0 / n)};
    auto consider = [&](std::vector<double> start) {
        auto y = ascend(std::move(start));
        const double val = detail::quad_value(g, y);
        if (val > best.value) best = {val, std::move(y)};
    };

    consider(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
    for (const auto& [u, v] : g.edges()) {
        std::vector<double> y(static_cast<std::size_t>(n), 0.0);
        y[static_cast<std::size_t>(u)] = 0.5;
        y[static_cast<std::size_t>(v)] = 0.5;
        consider(std::move(y));
    }
    if (n <= 25)
        for (const auto& clique : maximal_cliques(g)) {
            std::vector<double> y(static_cast<std::size_t>(n), 0.0);
            for (int v : clique)
                y[static_cast<std::size_t>(v)] = 1.0 / static_cast<double>(clique.size());
            consider(std::move(y));
        }

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (int r = 0; r < restarts; ++r) {
        // exponential draws normalized: uniform on the simplex
        std::vector<double> y(static_cast<std::size_t>(n));
        double sum = 0.0;
        for (auto& x : y) {
            const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
            x = -std::log(u);
            sum += x;
        }
        for (auto& x : y) x /= sum;
        consider(std::move(y));
    }
    return best;
}

}  // namespace fapx
