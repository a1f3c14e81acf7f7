#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace ditcalc {

/// Exact rational in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// "3/4", or "0" / "1" for integers.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace ditcalc
