#pragma once

// Exact reference solvers. Each one is exhaustive (with pruning) and refuses
// oversized inputs by throwing GuardError, so callers can rely on the answers
// being ground truth whenever a call returns at all.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "fapx/errors.hpp"
#include "fapx/graph.hpp"
#include "fapx/instance.hpp"
#include "fapx/rational.hpp"

namespace fapx {

namespace detail {

// Totals up to this bound run in native 64-bit arithmetic; larger ones fall
// back to BigInt. Leaves headroom so deficits (up to 4 * (total + 1)) fit.
inline const BigInt kU64Budget = BigInt(1) << 60;

inline std::vector<std::uint64_t> to_u64(const std::vector<BigInt>& xs) {
    std::vector<std::uint64_t> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.convert_to<std::uint64_t>());
    return out;
}

// Branch and bound over item-to-bin assignments in lexicographic order.
// Two prunes: identical-sum bins are interchangeable (only the first of each
// sum value is tried, which also keeps the first optimum lexicographically
// minimal), and a branch dies when the remaining mass cannot fractionally
// lift every bin above the incumbent.
template <class Int>
std::pair<Int, std::vector<int>> maxmin_search(const std::vector<Int>& sizes, int k) {
    const std::size_t m = sizes.size();
    std::vector<Int> suffix(m + 1, Int(0));
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] + sizes[i];
    const Int cap = suffix[0] / static_cast<unsigned>(k);

    std::vector<Int> bins(static_cast<std::size_t>(k), Int(0));
    std::vector<int> cur(m, 0), best_assign;
    Int best{0};
    bool have = false, done = false;

    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            const Int v = *std::min_element(bins.begin(), bins.end());
            if (!have || v > best) {
                best = v;
                best_assign = cur;
                have = true;
                if (best == cap) done = true;
            }
            return;
        }
        if (have) {
            Int deficit{0};
            const Int target = best + 1;
            for (const Int& b : bins)
                if (b < target) deficit += target - b;
            if (deficit > suffix[i]) return;
        }
        for (int j = 0; j < k; ++j) {
            bool mirrored = false;
            for (int j2 = 0; j2 < j; ++j2)
                if (bins[j2] == bins[j]) {
                    mirrored = true;
                    break;
                }
            if (mirrored) continue;
            bins[static_cast<std::size_t>(j)] += sizes[i];
            cur[i] = j;
            self(self, i + 1);
            bins[static_cast<std::size_t>(j)] -= sizes[i];
            if (done) return;
        }
    };
    dfs(dfs, 0);
    return {best, std::move(best_assign)};
}

}  // namespace detail

struct ExactMaxMin {
    BigInt value;
    Assignment witness;
};

// Optimal max-min bin sum with a lexicographically minimal witness.
// Supports k <= 4 and (symmetry-reduced) search spaces up to 1e8 leaves.
inline ExactMaxMin exact_maxmin_partition(const PartitionInstance& inst) {
    const int k = inst.bins();
    if (k > 4) throw GuardError("exact partition oracle supports at most 4 bins");
    {
        using boost::multiprecision::pow;
        BigInt leaves = pow(BigInt(k), static_cast<unsigned>(inst.item_count()));
        BigInt fact = 1;
        for (int j = 2; j <= k; ++j) fact *= j;
        if ((leaves + fact - 1) / fact > 100'000'000)
            throw GuardError("instance exceeds the exact partition oracle budget");
    }
    if (inst.total() <= detail::kU64Budget) {
        auto [v, assign] = detail::maxmin_search<std::uint64_t>(detail::to_u64(inst.sizes()), k);
        return {BigInt(v), Assignment{std::move(assign)}};
    }
    auto [v, assign] = detail::maxmin_search<BigInt>(inst.sizes(), k);
    return {std::move(v), Assignment{std::move(assign)}};
}

namespace detail {

inline std::vector<BigInt> subset_sums(const std::vector<BigInt>& xs) {
    std::vector<BigInt> sums{BigInt(0)};
    sums.reserve(std::size_t(1) << xs.size());
    for (const auto& x : xs) {
        const std::size_t len = sums.size();
        for (std::size_t i = 0; i < len; ++i) sums.push_back(sums[i] + x);
    }
    return sums;
}

}  // namespace detail

// Largest subset sum not exceeding capacity. Exact; meet-in-the-middle for up
// to 30 items, otherwise a reachability bitset when the total is at most 1e7.
inline BigInt exact_subset_sum(const std::vector<BigInt>& sizes, const BigInt& capacity) {
    if (capacity < 0) throw ParameterError("capacity must be nonnegative");
    for (const auto& s : sizes)
        if (s < 0) throw ParameterError("item sizes must be nonnegative");

    const std::size_t m = sizes.size();
    if (m <= 30) {
        const std::size_t half = m / 2;
        std::vector<BigInt> lo(sizes.begin(), sizes.begin() + half);
        std::vector<BigInt> hi(sizes.begin() + half, sizes.end());
        auto a = detail::subset_sums(lo);
        auto b = detail::subset_sums(hi);
        std::sort(b.begin(), b.end());
        BigInt best = 0;
        for (const auto& x : a) {
            if (x > capacity) continue;
            const BigInt room = capacity - x;
            auto it = std::upper_bound(b.begin(), b.end(), room);
            best = std::max(best, BigInt(x + *std::prev(it)));  // b always contains 0
        }
        return best;
    }

    BigInt total = 0;
    for (const auto& s : sizes) total += s;
    if (total > 10'000'000)
        throw GuardError("subset-sum instance exceeds the exact oracle budget");

    const std::size_t limit =
        (capacity < total ? capacity : total).convert_to<std::size_t>();
    const std::size_t words = limit / 64 + 1;
    std::vector<std::uint64_t> reach(words, 0);
    reach[0] = 1;
    for (const auto& s : sizes) {
        if (s == 0 || s > limit) continue;
        const std::size_t shift = s.convert_to<std::size_t>();
        const std::size_t wshift = shift / 64, bshift = shift % 64;
        for (std::size_t w = words; w-- > 0;) {
            if (w < wshift) break;
            std::uint64_t v = reach[w - wshift] << bshift;
            if (bshift && w > wshift) v |= reach[w - wshift - 1] >> (64 - bshift);
            reach[w] |= v;
        }
        reach[words - 1] &= ~std::uint64_t(0) >> (63 - limit % 64);
    }
    for (std::size_t w = words; w-- > 0;)
        if (reach[w]) {
            const int top = 63 - std::countl_zero(reach[w]);
            return BigInt(w * 64 + static_cast<std::size_t>(top));
        }
    return 0;
}

// A multiset of 2m positive integers; asks whether it splits into two halves
// of m elements each with equal sums.
class EcpInstance {
public:
    explicit EcpInstance(std::vector<BigInt> values) : values_(std::move(values)) {
        if (values_.size() % 2 != 0) throw ParameterError("element count must be even");
        for (const auto& v : values_)
            if (v <= 0) throw ParameterError("elements must be positive");
    }

    const std::vector<BigInt>& values() const noexcept { return values_; }
    std::size_t half_cardinality() const noexcept { return values_.size() / 2; }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& v : values_) t += v;
        return t;
    }

    bool total_is_even() const { return total() % 2 == 0; }

    BigInt half_sum() const {
        BigInt t = total();
        if (t % 2 != 0) throw ParameterError("sum is odd; half-sum undefined");
        return t / 2;
    }

    friend bool operator==(const EcpInstance&, const EcpInstance&) = default;

private:
    std::vector<BigInt> values_;
};

namespace detail {

inline std::uint32_t next_combination(std::uint32_t v) {
    const std::uint32_t c = v & (0u - v);
    const std::uint32_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

template <class Int>
bool ecp_scan(const std::vector<Int>& vals, const Int& half) {
    const std::size_t n = vals.size();
    const std::size_t m = n / 2;
    if (m == 1) return vals[0] == half;
    // element 0 goes to the half-sum side without loss of generality
    const std::uint32_t end = std::uint32_t(1) << (n - 1);
    for (std::uint32_t mask = (std::uint32_t(1) << (m - 1)) - 1; mask < end;
         mask = next_combination(mask)) {
        Int sum = vals[0];
        for (std::uint32_t rest = mask; rest;) {
            const int b = std::countr_zero(rest);
            rest &= rest - 1;
            sum += vals[static_cast<std::size_t>(b) + 1];
        }
        if (sum == half) return true;
    }
    return false;
}

}  // namespace detail

// Equal-cardinality partition decision, exhaustive over half-size subsets.
inline bool decide_ecp(const EcpInstance& inst) {
    const auto& vals = inst.values();
    const std::size_t n = vals.size();
    if (n > 24) throw GuardError("equal-cardinality oracle supports at most 24 elements");
    if (n == 0) return true;
    if (!inst.total_is_even()) return false;
    const BigInt half = inst.half_sum();
    if (inst.total() <= detail::kU64Budget)
        return detail::ecp_scan<std::uint64_t>(detail::to_u64(vals),
                                               half.convert_to<std::uint64_t>());
    return detail::ecp_scan<BigInt>(vals, half);
}

// What a fractional-relative approximation is allowed to do, executed with the
// exact solver: report the optimum iff it reaches (1 - t) of the fractional
// optimum total/k, otherwise report that no value was found.
inline ApproxOutcome exact_ffptas(const PartitionInstance& inst, const Rat& t) {
    if (t <= 0) throw ParameterError("t must be positive");
    auto exact = exact_maxmin_partition(inst);
    const Rat opt_frac = make_rat(inst.total(), inst.bins());
    if (Rat(exact.value) >= (Rat(1) - t) * opt_frac)
        return Feasible{Rat(exact.value), std::move(exact.witness)};
    return std::nullopt;
}

// Lexicographically smallest maximum clique; empty graph has clique number 0.
inline std::vector<int> maximum_clique(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw GuardError("clique oracle supports at most 20 vertices");
    if (n == 0) return {};
    const auto adj = g.adjacency_masks();
    std::vector<int> best, cur;

    auto dfs = [&](auto&& self, std::uint64_t cand) -> void {
        if (cur.size() > best.size()) best = cur;
        if (cur.size() + static_cast<std::size_t>(std::popcount(cand)) <= best.size())
            return;
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            cur.push_back(v);
            self(self, cand & adj[static_cast<std::size_t>(v)]);
            cur.pop_back();
        }
    };
    const std::uint64_t all =
        (n == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    dfs(dfs, all);
    return best;
}

inline int clique_number(const Graph& g) {
    return static_cast<int>(maximum_clique(g).size());
}

}  // namespace fapx
