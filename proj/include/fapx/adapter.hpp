#pragma once

// Bundle of the three capabilities the scheme compiler needs from a problem:
// the fractional optimum, a denominator polynomial for the encoding length,
// and a fractional-relative approximation routine.

#include <cstddef>
#include <functional>
#include <string>

#include "fapx/instance.hpp"
#include "fapx/rational.hpp"

namespace fapx {

struct ProblemAdapter {
    std::string name;
    std::function<Rat(const PartitionInstance&)> opt_frac;
    // q_poly(bit_len) bounds the bit width of the fractional optimum's
    // denominator-cleared gap; it drives the compiler's iteration count.
    std::function<std::size_t(std::size_t)> q_poly;
    std::function<ApproxOutcome(const PartitionInstance&, const Rat&)> ffptas;
};

}  // namespace fapx
