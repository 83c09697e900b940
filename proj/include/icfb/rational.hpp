#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace icfb {

// Exact rational arithmetic on arbitrary-precision integers. cpp_rational keeps
// values in lowest terms with a positive denominator; construction helpers below
// normalize signs first (a negative denominator passed straight to the ctor is
// rejected by boost).
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rat(std::move(num), std::move(den));
}

inline Rat rat_parse(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        return make_rat(std::move(num), std::move(den));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
    }
}

// "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_pos(const Rat& r) { return r > 0 ? r : Rat(0); }

}  // namespace icfb
