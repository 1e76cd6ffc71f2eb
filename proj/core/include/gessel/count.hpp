#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gessel {

// Arbitrary-precision nonnegative counts and exact rationals.
using Count = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

// binom(n, k) with the zero convention: 0 when k < 0, k > n or n < 0.
// Rows up to a fixed size come from an immutable Pascal table built on
// first use; larger rows fall back to the multiplicative formula.
Count binomial(std::int64_t n, std::int64_t k);

// binom(n, k) where both arguments are given doubled, so half-integers
// can be passed through; any odd (non-integral) argument yields 0.
Count binomial_half(std::int64_t twice_n, std::int64_t twice_k);

Count catalan(std::int64_t n);

// 2^e for e >= 0.
Count pow2(std::int64_t e);

// Reduces a rational that is known to be an integer, throwing
// IntegralityError (tagged with `what`) if it is not.
Count require_integer(const ExactRational& value, std::string_view what);

std::string to_decimal(const Count& value);
std::string to_string(const ExactRational& value);

}  // namespace gessel
