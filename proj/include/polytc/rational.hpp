#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace polytc {

/** Exact arbitrary-precision rational; all algebra coefficients use this type. */
using Rational = boost::multiprecision::mpq_rational;

/** "p" for integers, "p/q" otherwise; inverse of rational_from_string. */
[[nodiscard]] std::string rational_to_string(const Rational& r);

/** Parses "p" or "p/q"; throws std::domain_error on malformed input or q = 0. */
[[nodiscard]] Rational rational_from_string(const std::string& text);

}  // namespace polytc
