#pragma once

// Polynomial-time approximation schemes:
//   * subset_sum_fptas     classic trimmed-list FPTAS, with witness
//   * fptas_p2cc           capacity-constrained two-bin scheme built on it
//   * ffptas_p2            fractional-relative scheme for 2-way max-min
//   * fptas_from_ffptas    generic compiler turning the above into an FPTAS
//   * fptas_kway_maxmin    trimmed vector DP for k in {2,3,4}
//
// All guarantees are relative: a returned value v satisfies
// v >= (1 - eps) * OPT, and every reported value is exactly achievable.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "fapx/adapter.hpp"
#include "fapx/errors.hpp"
#include "fapx/instance.hpp"
#include "fapx/oracles.hpp"
#include "fapx/rational.hpp"

namespace fapx {

struct SubsetPick {
    BigInt value;
    std::vector<std::size_t> items;  // ascending indices of the chosen subset
};

// Largest subset sum <= capacity, up to a factor (1 - eps). Merge-and-trim:
// a candidate survives only if it exceeds the last kept sum by more than a
// (1 + eps/(2m)) ratio, which compounds to at most 1/(1 - eps) over m rounds.
inline SubsetPick subset_sum_fptas(const std::vector<BigInt>& sizes,
                                   const BigInt& capacity, const Rat& eps) {
    if (eps <= 0 || eps >= 1) throw ParameterError("eps must lie in (0,1)");
    if (capacity < 0) throw ParameterError("capacity must be nonnegative");
    for (const auto& s : sizes)
        if (s < 0) throw ParameterError("item sizes must be nonnegative");

    const std::size_t m = sizes.size();
    if (m == 0) return {BigInt(0), {}};

    struct Entry {
        BigInt sum;
        std::int32_t parent;
        bool took;
    };
    // keep y after last kept L iff y * keep_den > L * keep_num,
    // i.e. y > L * (1 + eps/(2m))
    const BigInt keep_den = BigInt(2) * m * rat_den(eps);
    const BigInt keep_num = keep_den + rat_num(eps);

    std::vector<std::vector<Entry>> layers;
    layers.reserve(m + 1);
    layers.push_back({Entry{BigInt(0), -1, false}});

    for (std::size_t i = 0; i < m; ++i) {
        const auto& prev = layers.back();
        const BigInt& x = sizes[i];
        std::vector<Entry> next;
        next.reserve(prev.size() + 8);

        auto keep = [&](const BigInt& s) {
            return next.empty() || s * keep_den > next.back().sum * keep_num;
        };
        std::size_t a = 0, b = 0;
        // the take-stream leaves capacity range once and for all (ascending)
        if (b < prev.size() && prev[b].sum + x > capacity) b = prev.size();
        while (a < prev.size() || b < prev.size()) {
            const bool from_a =
                b >= prev.size() ||
                (a < prev.size() && prev[a].sum <= prev[b].sum + x);
            if (from_a) {
                if (keep(prev[a].sum))
                    next.push_back({prev[a].sum, static_cast<std::int32_t>(a), false});
                ++a;
            } else {
                BigInt s = prev[b].sum + x;
                if (keep(s))
                    next.push_back({std::move(s), static_cast<std::int32_t>(b), true});
                if (++b < prev.size() && prev[b].sum + x > capacity) b = prev.size();
            }
        }
        layers.push_back(std::move(next));
    }

    SubsetPick out;
    std::size_t idx = layers[m].size() - 1;  // kept sums are ascending
    out.value = layers[m][idx].sum;
    for (std::size_t i = m; i-- > 0;) {
        const auto& e = layers[i + 1][idx];
        if (e.took) out.items.push_back(i);
        idx = static_cast<std::size_t>(e.parent);
    }
    std::reverse(out.items.begin(), out.items.end());
    return out;
}

// Two bins with a lower bound z on bin #1; the objective is the sum of bin #2.
struct P2ccInstance {
    std::vector<BigInt> sizes;
    Rat z;
};

// Best bin-#2 sum subject to bin #1 >= z, up to (1 - eps). Infeasible
// instances (z larger than the total) report no value.
inline ApproxOutcome fptas_p2cc(const P2ccInstance& inst, const Rat& eps) {
    if (eps <= 0 || eps >= 1) throw ParameterError("eps must lie in (0,1)");
    BigInt total = 0;
    for (const auto& s : inst.sizes) {
        if (s < 0) throw ParameterError("item sizes must be nonnegative");
        total += s;
    }
    if (inst.z > Rat(total)) return std::nullopt;
    const BigInt cap = rat_floor(Rat(total) - inst.z);
    auto pick = subset_sum_fptas(inst.sizes, cap, eps);
    // the complement (bin #1) holds total - value >= total - cap >= z
    return Feasible{Rat(std::move(pick.value)), std::nullopt};
}

// Fractional-relative scheme for 2-way max-min partition. Reports a feasible
// value v >= (1 - t) * total/2 whenever one exists, otherwise no value.
inline ApproxOutcome ffptas_p2(const PartitionInstance& inst, const Rat& t) {
    if (inst.bins() != 2) throw ParameterError("ffptas_p2 requires k = 2");
    if (t <= 0) throw ParameterError("t must be positive");

    const BigInt total = inst.total();
    const Rat opt_frac = make_rat(total, 2);
    const Rat z = (Rat(1) - t) * opt_frac;
    if (z <= 0) {
        // t >= 1 or an all-zero instance: the empty bin already qualifies
        Assignment all_first{std::vector<int>(inst.item_count(), 0)};
        return Feasible{Rat(0), std::move(all_first)};
    }

    const BigInt cap = rat_floor(Rat(total) - z);
    auto pick = subset_sum_fptas(inst.sizes(), cap, t / 2);
    if (Rat(pick.value) < z) return std::nullopt;

    std::vector<int> bin_of(inst.item_count(), 0);
    for (auto i : pick.items) bin_of[i] = 1;
    const BigInt other = total - pick.value;
    Rat value(pick.value < other ? pick.value : other);
    return Feasible{std::move(value), Assignment{std::move(bin_of)}};
}

inline ProblemAdapter p2_adapter() {
    return ProblemAdapter{
        "p2-maxmin",
        [](const PartitionInstance& x) { return make_rat(x.total(), 2); },
        [](std::size_t len) { return len; },
        [](const PartitionInstance& x, const Rat& t) { return ffptas_p2(x, t); },
    };
}

struct CompilerResult {
    Rat value;
    std::optional<Assignment> witness;
    std::size_t ffptas_calls;
};

// Generic compiler: probe the fractional-relative scheme with tolerances
// t_k = 1 - (1 - eps)^k. The first reported value already satisfies the
// integral (1 - eps) guarantee; if every probe fails, the optimum is 0.
inline CompilerResult fptas_from_ffptas(const ProblemAdapter& adapter,
                                        const PartitionInstance& x, const Rat& eps) {
    if (eps <= 0 || eps >= 1) throw ParameterError("eps must lie in (0,1)");
    CompilerResult res{Rat(0), std::nullopt, 0};
    if (adapter.opt_frac(x) == 0) return res;

    const BigInt rounds = rat_ceil(Rat(adapter.q_poly(x.bit_len())) / eps);
    const Rat shrink = Rat(1) - eps;
    Rat decay(1);
    for (BigInt k = 1; k <= rounds; ++k) {
        decay *= shrink;
        auto outcome = adapter.ffptas(x, Rat(1) - decay);
        ++res.ffptas_calls;
        if (outcome) {
            res.value = std::move(outcome->value);
            res.witness = std::move(outcome->witness);
            return res;
        }
    }
    return res;
}

struct KwayApprox {
    BigInt value;
    Assignment witness;
};

namespace detail {

// Integer bucket boundaries 1 = T_0 < T_1 < ... <= limit with
// T_{i+1} = floor(T_i * (1 + delta)) + 1, so each bucket spans at most a
// (1 + delta) ratio.
inline std::vector<BigInt> geometric_thresholds(const BigInt& limit, const Rat& delta) {
    std::vector<BigInt> t;
    const BigInt num = rat_num(delta) + rat_den(delta);
    const BigInt& den = rat_den(delta);
    BigInt cur = 1;
    while (cur <= limit) {
        t.push_back(cur);
        cur = (cur * num) / den + 1;
    }
    return t;
}

template <class Int>
struct KwayState {
    std::array<Int, 4> sums;
    std::int32_t parent;
    std::int8_t bin;
};

template <class Int>
std::pair<Int, std::vector<int>> kway_dp(const std::vector<Int>& sizes, int k,
                                         const Rat& eps) {
    const std::size_t m = sizes.size();
    const std::size_t bins_n = static_cast<std::size_t>(k);

    // longest-processing-time incumbent; doubles as the pruning bar
    std::vector<int> lpt_assign(m, 0);
    Int inc{0};
    {
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), std::size_t(0));
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
        std::vector<Int> lpt_bins(bins_n, Int(0));
        for (auto idx : order) {
            const std::size_t j = static_cast<std::size_t>(
                std::min_element(lpt_bins.begin(), lpt_bins.end()) - lpt_bins.begin());
            lpt_bins[j] += sizes[idx];
            lpt_assign[idx] = static_cast<int>(j);
        }
        if (m > 0) inc = *std::min_element(lpt_bins.begin(), lpt_bins.end());
    }
    if (m == 0) return {Int(0), {}};

    std::vector<Int> suffix(m + 1, Int(0));
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] + sizes[i];

    const Rat delta = eps / Rat(BigInt(2) * m);
    std::vector<Int> thresholds;
    {
        BigInt limit = 0;
        for (const auto& s : sizes) limit += BigInt(s);
        for (const auto& t : geometric_thresholds(limit, delta))
            thresholds.push_back(t.convert_to<Int>());
    }
    auto bucket = [&](const Int& v) -> std::uint32_t {
        if (v == 0) return 0;  // exact zero keeps its own bucket
        return static_cast<std::uint32_t>(
            std::upper_bound(thresholds.begin(), thresholds.end(), v) -
            thresholds.begin());
    };

    using Key = std::array<std::uint32_t, 4>;
    std::vector<std::vector<KwayState<Int>>> layers(m + 1);
    layers[0].push_back({{Int(0), Int(0), Int(0), Int(0)}, -1, -1});

    for (std::size_t i = 0; i < m; ++i) {
        std::map<Key, KwayState<Int>> cells;
        const Int target = inc + 1;
        for (std::size_t si = 0; si < layers[i].size(); ++si) {
            for (int j = 0; j < k; ++j) {
                KwayState<Int> ns{layers[i][si].sums, static_cast<std::int32_t>(si),
                                  static_cast<std::int8_t>(j)};
                ns.sums[static_cast<std::size_t>(j)] += sizes[i];
                // remaining mass cannot fractionally lift all bins past the
                // incumbent: this branch cannot strictly improve on it
                Int deficit{0};
                for (std::size_t l = 0; l < bins_n; ++l)
                    if (ns.sums[l] < target) deficit += target - ns.sums[l];
                if (deficit > suffix[i + 1]) continue;

                Key key{};
                for (std::size_t l = 0; l < bins_n; ++l) key[l] = bucket(ns.sums[l]);
                auto [it, fresh] = cells.try_emplace(key, ns);
                if (!fresh && it->second.sums < ns.sums) it->second = ns;
            }
        }
        layers[i + 1].reserve(cells.size());
        for (auto& [key, st] : cells) layers[i + 1].push_back(std::move(st));
        if (layers[i + 1].empty()) break;
    }

    Int best_val{0};
    std::ptrdiff_t best_idx = -1;
    for (std::size_t si = 0; si < layers[m].size(); ++si) {
        const auto& sums = layers[m][si].sums;
        Int v = sums[0];
        for (std::size_t l = 1; l < bins_n; ++l) v = std::min(v, sums[l]);
        if (best_idx < 0 || v > best_val) {
            best_val = v;
            best_idx = static_cast<std::ptrdiff_t>(si);
        }
    }
    if (best_idx < 0 || best_val <= inc) return {inc, std::move(lpt_assign)};

    std::vector<int> assign(m, 0);
    std::size_t idx = static_cast<std::size_t>(best_idx);
    for (std::size_t i = m; i-- > 0;) {
        const auto& st = layers[i + 1][idx];
        assign[i] = st.bin;
        idx = static_cast<std::size_t>(st.parent);
    }
    return {best_val, std::move(assign)};
}

}  // namespace detail

// Max-min partition into k in {2,3,4} bins, within a factor (1 - eps).
// Trimmed DP over bin-sum vectors, seeded with a greedy incumbent.
inline KwayApprox fptas_kway_maxmin(const PartitionInstance& inst, const Rat& eps) {
    if (eps <= 0 || eps >= 1) throw ParameterError("eps must lie in (0,1)");
    const int k = inst.bins();
    if (k > 4) throw ParameterError("k-way scheme supports k in {2,3,4}");
    if (inst.total() <= detail::kU64Budget) {
        auto [v, assign] =
            detail::kway_dp<std::uint64_t>(detail::to_u64(inst.sizes()), k, eps);
        return {BigInt(v), Assignment{std::move(assign)}};
    }
    auto [v, assign] = detail::kway_dp<BigInt>(inst.sizes(), k, eps);
    return {std::move(v), Assignment{std::move(assign)}};
}

}  // namespace fapx
