#pragma once

#include <cmath>
#include <concepts>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "phyres/error.hpp"

namespace phyres {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// The two arithmetic modes: exact rationals and IEEE doubles.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

/// Absolute tolerance used by float-mode comparisons. Ignored in exact mode.
inline constexpr double kDefaultTolerance = 1e-9;

template <Scalar T>
T from_rational(const Rational& r) {
  if constexpr (is_exact_v<T>) {
    return r;
  } else {
    return r.convert_to<double>();
  }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

template <Scalar T>
T abs_value(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x < 0 ? T(-x) : x;
  } else {
    return std::fabs(x);
  }
}

/// a <= b, with slack `tol` in float mode.
template <Scalar T>
bool leq(const T& a, const T& b, double tol = kDefaultTolerance) {
  if constexpr (is_exact_v<T>) {
    return a <= b;
  } else {
    return a <= b + tol;
  }
}

template <Scalar T>
bool approx_equal(const T& a, const T& b, double tol = kDefaultTolerance) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return std::fabs(a - b) <= tol;
  }
}

template <Scalar T>
bool approx_zero(const T& a, double tol = kDefaultTolerance) {
  return approx_equal(a, T(0), tol);
}

/// Parses integers, decimals, scientific notation and `p/q` into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw fail();
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw fail();
    ++pos;
    std::string exp_text(text.substr(pos));
    if (exp_text.empty()) throw fail();
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(exp_text, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != exp_text.size() || e > 4000 || e < -4000) throw fail();
    exponent += e;
  }
  BigInt mantissa(digits);
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  return negative ? Rational(-value) : value;
}

/// `p/q` in lowest terms, or `p` when integral.
inline std::string format_rational(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Locale-independent `%.*g` formatting.
inline std::string format_double(double x, int precision = 6) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

template <Scalar T>
std::string format_scalar(const T& x, int precision = 6) {
  if constexpr (is_exact_v<T>) {
    return format_rational(x);
  } else {
    return format_double(x, precision);
  }
}

/// Square root of a rational when it is a perfect square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace phyres
