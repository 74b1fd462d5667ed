#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ccsim {

// All closed-form loads are ratios of binomial coefficients and must compare
// exactly, so every centralized quantity is kept as an arbitrary-precision
// rational in canonical reduced form (denominator > 0, gcd(|num|,den) = 1).
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// C(n,k) as an arbitrary-precision integer; 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// C(n,k) for n <= 63 (always fits in 64 bits); 0 outside [0..n].
std::uint64_t binomial_u64(int n, int k);

/// num/den with sign normalization; den must be nonzero.
Rat make_rat(const BigInt& num, const BigInt& den);

Rat rat_of(const BigInt& v);

bool is_integer(const Rat& v);

/// Largest integer <= v.
BigInt floor_rat(const Rat& v);

/// Smallest integer >= v.
BigInt ceil_rat(const Rat& v);

std::int64_t to_int64(const BigInt& v);

double to_double(const Rat& v);

/// Accepts "7", "3/2" and plain decimals such as "1.5" or ".25".
Rat parse_rational(std::string_view text);

/// "num/den", or just "num" for integers.
std::string to_fraction_string(const Rat& v);

/// Plain decimal with the given number of significant digits, round half up.
std::string to_decimal_string(const Rat& v, int significant_digits);

}  // namespace ccsim
