#pragma once

// Constructive mapping from equal-cardinality partition (ECP) to 4-way
// max-min partition, plus the exhaustive verifier for the equivalence it is
// designed to establish.
//
// Given 2m positive integers with sum 2S and every element at most S, the
// mapping shifts each element x to 2x + 4S and adds 2(m + 1) filler items of
// size 4S. The 4-way instance then has fractional optimum (4m + 3) * S, and
// with tolerance t = 1/(4m + 3) a fractional-relative scheme must answer
// "value found" exactly when the ECP instance is solvable.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fapx/errors.hpp"
#include "fapx/instance.hpp"
#include "fapx/oracles.hpp"
#include "fapx/rational.hpp"

namespace fapx {

struct ReductionBundle {
    EcpInstance x1;
    BigInt s;                    // half sum S
    std::size_t m;               // half cardinality
    std::vector<BigInt> x2;      // shifted elements, each in [4S, 6S]
    PartitionInstance x4;        // 4-way instance: x2 plus 2(m+1) fillers of 4S
    Rat t_threshold;             // 1/(4m + 3)
};

inline ReductionBundle build_reduction(const EcpInstance& x1) {
    if (!x1.total_is_even())
        throw ParameterError("sum is odd; no equal split exists");
    const BigInt s = x1.half_sum();
    const std::size_t m = x1.half_cardinality();
    for (const auto& v : x1.values())
        if (v > s)
            throw ParameterError("trivial no-instance: an element exceeds the half sum");

    const BigInt four_s = 4 * s;
    std::vector<BigInt> x2;
    x2.reserve(2 * m);
    for (const auto& v : x1.values()) x2.push_back(2 * v + four_s);

    std::vector<BigInt> x4_sizes = x2;
    x4_sizes.insert(x4_sizes.end(), 2 * (m + 1), four_s);

    return ReductionBundle{
        x1,
        s,
        m,
        std::move(x2),
        PartitionInstance(std::move(x4_sizes), 4),
        make_rat(1, BigInt(4 * m + 3)),
    };
}

// Structural invariants of the shifted list: even length 2m, every element in
// [4s, 6s], and total 2(4m + 2)s.
inline bool scale_check(const std::vector<BigInt>& x2, const BigInt& s) {
    if (x2.size() % 2 != 0) return false;
    const std::size_t m = x2.size() / 2;
    BigInt total = 0;
    for (const auto& e : x2) {
        if (e < 4 * s || e > 6 * s) return false;
        total += e;
    }
    return total == BigInt(2) * (4 * m + 2) * s;
}

struct ClaimReport {
    std::vector<BigInt> x1_values;
    bool ecp;         // ECP instance solvable
    bool fourway;     // 4-way optimum reaches (4m + 2) * s
    bool ffptas_sim;  // exact run of the fractional-relative contract found a value
    bool equivalent;  // all three answers agree
};

// Run all three routes on one ECP instance. Exhaustive; the 4-way oracle
// explores up to 4^(4m+2) assignments, so only tiny inputs are accepted.
inline ClaimReport verify_claim_aux(const EcpInstance& x1) {
    if (x1.values().size() > 8)
        throw GuardError("claim verifier supports at most 8 elements");
    const auto bundle = build_reduction(x1);

    ClaimReport rep{x1.values(), false, false, false, false};
    rep.ecp = decide_ecp(x1);

    const auto exact = exact_maxmin_partition(bundle.x4);
    rep.fourway = exact.value >= BigInt(4 * bundle.m + 2) * bundle.s;

    rep.ffptas_sim = exact_ffptas(bundle.x4, bundle.t_threshold).has_value();

    rep.equivalent = (rep.ecp == rep.fourway) && (rep.fourway == rep.ffptas_sim);
    return rep;
}

inline constexpr const char* kClaimCsvHeader = "instance,ecp,fourway,ffptas_sim,equivalent";

inline std::string claim_report_csv_row(const ClaimReport& rep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < rep.x1_values.size(); ++i) {
        if (i) out << ' ';
        out << rep.x1_values[i];
    }
    auto word = [](bool b) { return b ? "true" : "false"; };
    out << ',' << word(rep.ecp) << ',' << word(rep.fourway) << ','
        << word(rep.ffptas_sim) << ',' << word(rep.equivalent);
    return out.str();
}

// All ECP instances with 2, 4, ..., max_items elements drawn from
// 1..max_value (nondecreasing), even sum, and no element above the half sum.
inline std::vector<EcpInstance> enumerate_ecp_instances(std::size_t max_items,
                                                        const BigInt& max_value) {
    if (max_items % 2 != 0) throw ParameterError("element count bound must be even");
    if (max_value < 1) throw ParameterError("value bound must be positive");

    std::vector<EcpInstance> out;
    std::vector<BigInt> cur;
    auto rec = [&](auto&& self, std::size_t want, const BigInt& low) -> void {
        if (want == 0) {
            BigInt total = 0;
            for (const auto& v : cur) total += v;
            if (total % 2 != 0) return;
            if (cur.back() > total / 2) return;
            out.emplace_back(cur);
            return;
        }
        for (BigInt v = low; v <= max_value; ++v) {
            cur.push_back(v);
            self(self, want - 1, v);
            cur.pop_back();
        }
    };
    for (std::size_t count = 2; count <= max_items; count += 2) {
        cur.clear();
        rec(rec, count, BigInt(1));
    }
    return out;
}

}  // namespace fapx
