#pragma once

// Deterministic benchmark harness: generates random instances from a named
// 64-bit generator, runs each scheme against its exact oracle where the
// oracle's guard allows, and emits CSV. With timing disabled (the default)
// the output is byte-identical across runs for a fixed seed.

#include <chrono>
#include <cstdint>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "fapx/errors.hpp"
#include "fapx/instance.hpp"
#include "fapx/oracles.hpp"
#include "fapx/rational.hpp"
#include "fapx/schemes.hpp"

namespace fapx {

// mt19937_64 with rejection sampling; both are pinned by the standard, so the
// stream is identical on every platform.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw ParameterError("range must be positive");
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t bound = max - max % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= bound);
        return v % n;
    }

private:
    std::mt19937_64 eng_;
};

struct BenchConfig {
    std::uint64_t seed = 1;
    int count = 20;                   // instances to generate
    int max_m = 10;                   // item counts drawn from 1..max_m
    std::uint64_t max_size = 50;      // sizes drawn from 1..max_size
    int k = 2;                        // bin count for the k-way scheme
    std::vector<Rat> t_grid{make_rat(1, 4)};
    std::vector<Rat> eps_grid{make_rat(1, 4)};
    bool include_time = false;        // adds a wall-time column; breaks byte-identity
};

namespace detail {

struct BenchRow {
    int instance;
    std::size_t m;
    int k;
    std::string param;
    std::string scheme;
    std::string value;    // empty when the scheme reported no value
    std::string oracle;   // empty when the oracle's guard refused
    std::string ratio;    // value/oracle, empty when either side is missing or 0
    long long time_ns;
    std::string outcome;  // "Value" or "None"
};

inline void write_row(std::ostream& out, const BenchRow& row, bool include_time) {
    out << row.instance << ',' << row.m << ',' << row.k << ',' << row.param << ','
        << row.scheme << ',' << row.value << ',' << row.oracle << ',' << row.ratio;
    if (include_time) out << ',' << row.time_ns;
    out << ',' << row.outcome << '\n';
}

inline std::string ratio_of(const Rat& value, const Rat& oracle) {
    if (oracle == 0) return {};
    return rat_to_string(value / oracle);
}

}  // namespace detail

inline void run_bench(const BenchConfig& cfg, std::ostream& out) {
    if (cfg.count < 0) throw ParameterError("count must be nonnegative");
    if (cfg.max_m < 1) throw ParameterError("max-m must be positive");
    if (cfg.max_size < 1) throw ParameterError("max-size must be positive");
    if (cfg.k < 2 || cfg.k > 4) throw ParameterError("k must be in {2,3,4}");
    for (const auto& t : cfg.t_grid)
        if (t <= 0) throw ParameterError("t must be positive");
    for (const auto& eps : cfg.eps_grid)
        if (eps <= 0 || eps >= 1) throw ParameterError("eps must lie in (0,1)");

    out << "# generator=mt19937_64 seed=" << cfg.seed << '\n';
    out << "instance,m,k,param,scheme,value,oracle,ratio";
    if (cfg.include_time) out << ",time_ns";
    out << ",outcome\n";

    DeterministicRng rng(cfg.seed);
    using clock = std::chrono::steady_clock;

    for (int id = 0; id < cfg.count; ++id) {
        const std::size_t m =
            1 + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(cfg.max_m)));
        std::vector<BigInt> sizes;
        sizes.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            sizes.push_back(BigInt(1 + rng.below(cfg.max_size)));

        const PartitionInstance two_way(sizes, 2);
        const PartitionInstance k_way(sizes, cfg.k);
        BigInt total = two_way.total();

        std::string oracle_two;
        {
            try {
                oracle_two = rat_to_string(Rat(exact_maxmin_partition(two_way).value));
            } catch (const GuardError&) {
            }
        }

        auto emit = [&](const char* scheme, int k, const std::string& param,
                        const ApproxOutcome& outcome, const std::string& oracle,
                        long long ns) {
            detail::BenchRow row{id,    m,  k,  param, scheme, {}, oracle, {},
                                 ns, outcome ? "Value" : "None"};
            if (outcome) {
                row.value = rat_to_string(outcome->value);
                if (!oracle.empty()) row.ratio = detail::ratio_of(outcome->value, parse_rat(oracle));
            }
            detail::write_row(out, row, cfg.include_time);
        };

        for (const auto& t : cfg.t_grid) {
            const auto start = clock::now();
            const auto outcome = ffptas_p2(two_way, t);
            const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                clock::now() - start)
                                .count();
            emit("ffptas-p2", 2, rat_to_string(t), outcome, oracle_two, ns);
        }
        for (const auto& eps : cfg.eps_grid) {
            const auto start = clock::now();
            const auto res = fptas_from_ffptas(p2_adapter(), two_way, eps);
            const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                clock::now() - start)
                                .count();
            emit("fptas-p2", 2, rat_to_string(eps), Feasible{res.value, res.witness},
                 oracle_two, ns);
        }
        {
            const BigInt cap = total / 2;
            std::string oracle_ss;
            try {
                oracle_ss = rat_to_string(Rat(exact_subset_sum(sizes, cap)));
            } catch (const GuardError&) {
            }
            for (const auto& eps : cfg.eps_grid) {
                const auto start = clock::now();
                const auto pick = subset_sum_fptas(sizes, cap, eps);
                const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                    clock::now() - start)
                                    .count();
                emit("subset-sum", 2, rat_to_string(eps),
                     Feasible{Rat(pick.value), std::nullopt}, oracle_ss, ns);
            }
        }
        {
            std::string oracle_k = oracle_two;
            if (cfg.k != 2) {
                oracle_k.clear();
                try {
                    oracle_k = rat_to_string(Rat(exact_maxmin_partition(k_way).value));
                } catch (const GuardError&) {
                }
            }
            for (const auto& eps : cfg.eps_grid) {
                const auto start = clock::now();
                const auto res = fptas_kway_maxmin(k_way, eps);
                const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                    clock::now() - start)
                                    .count();
                emit("kway", cfg.k, rat_to_string(eps),
                     Feasible{Rat(res.value), res.witness}, oracle_k, ns);
            }
        }
    }
}

}  // namespace fapx
