#pragma once

// Arbitrary-precision integers and exact rationals. Every objective value,
// threshold, and approximation parameter in the library is one of these two
// types; floating point only appears in the numeric relaxation solver.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "fapx/errors.hpp"

namespace fapx {

using BigInt = boost::multiprecision::cpp_int;

// Kept in lowest terms with a positive denominator by the backend.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

// num/den as an exact rational. den may be negative but not zero.
inline Rat make_rat(BigInt num, BigInt den) {
    if (den.is_zero()) throw ParameterError("rational denominator must be nonzero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

// Exact k-th power; rat_pow(r, 0) == 1 for every r.
inline Rat rat_pow(const Rat& base, unsigned k) {
    if (k == 0) return Rat(1);
    using boost::multiprecision::pow;
    return make_rat(pow(rat_num(base), k), pow(rat_den(base), k));
}

inline BigInt rat_floor(const Rat& r) {
    BigInt q = rat_num(r) / rat_den(r);  // truncates toward zero
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

// "p" when integral, "p/q" otherwise. The only way rationals are printed.
inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p", "p/q" (q > 0) and exact decimals such as "0.25" or "-1.5".
inline Rat parse_rat(std::string_view text) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");

    const std::string s(text);
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        pos = 1;
    }
    auto digits = [&s](std::size_t from, std::size_t to) {
        if (from >= to) throw ParseError("malformed rational '" + s + "'");
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("malformed rational '" + s + "'");
        return s.substr(from, to - from);
    };

    Rat r;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        BigInt num(digits(pos, slash));
        BigInt den(digits(slash + 1, s.size()));
        if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
        r = make_rat(std::move(num), std::move(den));
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        if (dot == pos && dot + 1 == s.size()) throw ParseError("malformed rational '" + s + "'");
        BigInt ipart = (dot > pos) ? BigInt(digits(pos, dot)) : BigInt(0);
        std::string frac = (dot + 1 < s.size()) ? digits(dot + 1, s.size()) : std::string();
        using boost::multiprecision::pow;
        BigInt scale = pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt num = ipart * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
        r = make_rat(std::move(num), std::move(scale));
    } else {
        r = Rat(BigInt(digits(pos, s.size())));
    }
    return neg ? Rat(-r) : r;
}

// Bits in the binary representation; zero takes one bit. Callers pass
// nonnegative values only.
inline std::size_t bit_width(const BigInt& x) {
    if (x <= 1) return 1;
    return static_cast<std::size_t>(boost::multiprecision::msb(x)) + 1;
}

}  // namespace fapx
