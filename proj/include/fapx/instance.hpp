#pragma once

// Max-min partition instances, item-to-bin assignments, and the outcome type
// shared by the approximation schemes.
//
// Instance text format:
//   line 1: "k <int>"            number of bins, k >= 2
//   line 2: whitespace-separated nonnegative item sizes (may be empty)

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fapx/errors.hpp"
#include "fapx/rational.hpp"

namespace fapx {

class PartitionInstance {
public:
    PartitionInstance() = default;

    PartitionInstance(std::vector<BigInt> sizes, int bins)
        : sizes_(std::move(sizes)), bins_(bins) {
        if (bins_ < 2) throw ParameterError("k must be >= 2");
        for (const auto& s : sizes_)
            if (s < 0) throw ParameterError("item sizes must be nonnegative");
    }

    const std::vector<BigInt>& sizes() const noexcept { return sizes_; }
    int bins() const noexcept { return bins_; }
    std::size_t item_count() const noexcept { return sizes_.size(); }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& s : sizes_) t += s;
        return t;
    }

    // Encoding length: the sum of the item sizes' bit widths.
    std::size_t bit_len() const {
        std::size_t bits = 0;
        for (const auto& s : sizes_) bits += bit_width(s);
        return bits;
    }

    friend bool operator==(const PartitionInstance&, const PartitionInstance&) = default;

private:
    std::vector<BigInt> sizes_;
    int bins_ = 2;
};

inline std::size_t bit_len(const PartitionInstance& x) { return x.bit_len(); }

// Item-to-bin map; bin_of[i] is the 0-based bin of item i.
struct Assignment {
    std::vector<int> bin_of;

    std::vector<BigInt> bin_sums(const PartitionInstance& inst) const {
        if (bin_of.size() != inst.item_count())
            throw ParameterError("assignment length does not match instance");
        std::vector<BigInt> sums(static_cast<std::size_t>(inst.bins()), BigInt(0));
        for (std::size_t i = 0; i < bin_of.size(); ++i) {
            const int b = bin_of[i];
            if (b < 0 || b >= inst.bins()) throw ParameterError("bin index out of range");
            sums[static_cast<std::size_t>(b)] += inst.sizes()[i];
        }
        return sums;
    }

    BigInt min_bin_sum(const PartitionInstance& inst) const {
        const auto sums = bin_sums(inst);
        return *std::min_element(sums.begin(), sums.end());
    }

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

// A feasible objective value, optionally certified by an assignment whose
// min bin sum equals the value.
struct Feasible {
    Rat value;
    std::optional<Assignment> witness;
};

// What an approximation run reports: a feasible value, or "no such value".
using ApproxOutcome = std::optional<Feasible>;

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    for (auto& line : lines)
        if (!line.empty() && line.back() == '\r') line.pop_back();
    // a trailing newline does not introduce an extra line
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

inline bool blank(const std::string& line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

inline PartitionInstance parse_instance(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty() || detail::blank(lines[0]))
        detail::parse_fail(1, "expected 'k <int>'");

    long long k = 0;
    {
        std::istringstream in(lines[0]);
        std::string tag;
        if (!(in >> tag) || tag != "k" || !(in >> k))
            detail::parse_fail(1, "expected 'k <int>'");
        std::string extra;
        if (in >> extra) detail::parse_fail(1, "unexpected token '" + extra + "'");
        if (k < 2) detail::parse_fail(1, "k must be >= 2");
        if (k > 1'000'000) detail::parse_fail(1, "k is implausibly large");
    }

    std::vector<BigInt> sizes;
    if (lines.size() >= 2) {
        std::istringstream in(lines[1]);
        std::string tok;
        while (in >> tok) {
            if (tok[0] == '-') detail::parse_fail(2, "negative size '" + tok + "'");
            for (char c : tok)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    detail::parse_fail(2, "malformed size '" + tok + "'");
            sizes.emplace_back(tok);
        }
    }
    for (std::size_t ln = 2; ln < lines.size(); ++ln)
        if (!detail::blank(lines[ln])) detail::parse_fail(ln + 1, "unexpected content");

    return PartitionInstance(std::move(sizes), static_cast<int>(k));
}

inline std::string format_instance(const PartitionInstance& inst) {
    std::ostringstream out;
    out << "k " << inst.bins() << "\n";
    if (!inst.sizes().empty()) {
        for (std::size_t i = 0; i < inst.sizes().size(); ++i) {
            if (i) out << ' ';
            out << inst.sizes()[i];
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace fapx
