#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace repcheck {

// Exact rational coefficients. mpq_class keeps values canonical
// (coprime, positive denominator), which every serializer here relies on.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// r^e for possibly negative e; requires r != 0 when e < 0.
inline Rational pow_rational(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && r == 0) throw std::domain_error("pow_rational: 0 to a negative power");
  Rational base = r, acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  if (invert) return Rational(1) / acc;
  return acc;
}

// Exact square root of a nonnegative rational, if one exists.
inline std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  mpz_class sn, sd;
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

// Checked conversion for JSON emission; coefficients in this project are tiny.
inline std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("coefficient too large for JSON emission");
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace repcheck
