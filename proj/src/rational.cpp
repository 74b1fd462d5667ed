#include "ccsim/rational.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ccsim {

namespace {

struct PascalTable {
  // C(n,k) for n <= 63; every entry fits in uint64.
  std::array<std::array<std::uint64_t, 64>, 64> c{};
  PascalTable() {
    for (int n = 0; n < 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

}  // namespace

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || n > 63) throw std::invalid_argument("binomial_u64: n out of range");
  if (k < 0 || k > n) return 0;
  return pascal().c[n][k];
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (n <= 63) return BigInt(binomial_u64(static_cast<int>(n), static_cast<int>(k)));
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact at every step
  }
  return result;
}

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  return Rat(num, den);
}

Rat rat_of(const BigInt& v) { return Rat(v); }

bool is_integer(const Rat& v) { return denominator(v) == 1; }

BigInt floor_rat(const Rat& v) {
  BigInt num = numerator(v);
  BigInt den = denominator(v);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil_rat(const Rat& v) { return -floor_rat(-v); }

std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

double to_double(const Rat& v) { return v.convert_to<double>(); }

Rat parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("parse_rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string num(text.substr(0, slash));
    std::string den(text.substr(slash + 1));
    if (num.empty() || den.empty()) throw bad();
    return make_rat(BigInt(num), BigInt(den));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rat(BigInt(std::string(text)));
  std::string digits;
  bool negative = false;
  std::size_t start = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    start = 1;
  }
  std::int64_t frac_digits = 0;
  bool seen_digit = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '.') {
      if (i != dot) throw bad();
      continue;
    }
    if (ch < '0' || ch > '9') throw bad();
    digits.push_back(ch);
    seen_digit = true;
    if (i > dot) ++frac_digits;
  }
  if (!seen_digit) throw bad();
  BigInt num(digits.empty() ? "0" : digits);
  if (negative) num = -num;
  BigInt den = 1;
  for (std::int64_t i = 0; i < frac_digits; ++i) den *= 10;
  return make_rat(num, den);
}

std::string to_fraction_string(const Rat& v) {
  std::string out = numerator(v).str();
  if (denominator(v) != 1) out += "/" + denominator(v).str();
  return out;
}

std::string to_decimal_string(const Rat& v, int significant_digits) {
  if (significant_digits <= 0) throw std::invalid_argument("to_decimal_string: digits");
  if (v == 0) return "0";
  BigInt num = numerator(v);
  BigInt den = denominator(v);
  bool negative = num < 0;
  if (negative) num = -num;

  BigInt ipart = num / den;
  std::string istr = ipart.str();
  std::string out;

  if (ipart != 0) {
    int int_digits = static_cast<int>(istr.size());
    if (int_digits >= significant_digits) {
      // Round the integer part itself to the requested significance.
      BigInt scale = 1;
      for (int i = 0; i < int_digits - significant_digits; ++i) scale *= 10;
      BigInt scaled_num = num;
      BigInt scaled_den = den * scale;
      BigInt q = scaled_num / scaled_den;
      BigInt rem = scaled_num - q * scaled_den;
      if (rem * 2 >= scaled_den) ++q;
      out = (q * scale).str();
    } else {
      int frac_digits = significant_digits - int_digits;
      BigInt scale = 1;
      for (int i = 0; i < frac_digits; ++i) scale *= 10;
      BigInt q = num * scale / den;
      BigInt rem = num * scale - q * den;
      if (rem * 2 >= den) ++q;
      std::string qs = q.str();
      // q has int_digits + frac_digits digits unless rounding carried.
      while (static_cast<int>(qs.size()) < frac_digits + 1) qs.insert(qs.begin(), '0');
      out = qs.substr(0, qs.size() - frac_digits) + "." + qs.substr(qs.size() - frac_digits);
    }
  } else {
    // Pure fraction: skip leading zeros, they are not significant.
    BigInt rem = num;
    int leading_zeros = 0;
    while (rem * 10 < den) {
      rem *= 10;
      ++leading_zeros;
    }
    BigInt scale = 1;
    for (int i = 0; i < leading_zeros + significant_digits; ++i) scale *= 10;
    BigInt q = num * scale / den;
    BigInt r = num * scale - q * den;
    if (r * 2 >= den) ++q;
    std::string qs = q.str();
    while (static_cast<int>(qs.size()) < leading_zeros + significant_digits)
      qs.insert(qs.begin(), '0');
    out = "0." + qs;
  }

  // Trim trailing zeros in the fraction part.
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

}  // namespace ccsim
