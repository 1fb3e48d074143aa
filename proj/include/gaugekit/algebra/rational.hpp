#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "gaugekit/errors.hpp"

namespace gaugekit {

using Integer = boost::multiprecision::mpz_int;
/// GMP keeps mpq values canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// Always "num/den", including integers ("3/1").
inline std::string to_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Short form for human-facing polynomial text: "3", "-1/2".
inline std::string to_short_string(const Rational& q) {
  return is_integer(q) ? numerator_of(q).str() : to_string(q);
}

inline Rational parse_rational(std::string_view text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    if (den == 0) fail(errc::division_by_zero, "rational literal with zero denominator");
    return Rational(num, den);
  } catch (const gaugekit::error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::invalid_argument, "cannot parse rational '" + std::string(text) + "'");
  }
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace gaugekit
