#pragma once

#include "repcheck/rational.hpp"

namespace repcheck {

// Rational angle theta in Q/Z, representing q^{sigma} = e^{2 pi i theta}
// for unitary parameters. Stored reduced to [0, 1).
struct UnitAngle {
  Rational frac;

  UnitAngle() : frac(0) {}
  explicit UnitAngle(const Rational& r) : frac(reduce(r)) {}

  static Rational reduce(const Rational& r) {
    // r - floor(r), exact.
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    Rational out = r - Rational(fl);
    out.canonicalize();
    return out;
  }

  UnitAngle operator+(const UnitAngle& o) const { return UnitAngle(frac + o.frac); }
  UnitAngle operator-() const { return UnitAngle(-frac); }
  UnitAngle operator-(const UnitAngle& o) const { return UnitAngle(frac - o.frac); }
  UnitAngle times(long k) const { return UnitAngle(frac * Rational(k)); }

  bool operator==(const UnitAngle& o) const { return frac == o.frac; }
  bool operator!=(const UnitAngle& o) const { return frac != o.frac; }
  bool operator<(const UnitAngle& o) const { return frac < o.frac; }

  // Congruence modulo a rational period p (0 < p <= 1).
  bool is_zero_mod(const Rational& period) const {
    Rational q = frac / period;
    return q.get_den() == 1;
  }
  bool equals_mod(const UnitAngle& o, const Rational& period) const {
    return (*this - o).is_zero_mod(period);
  }
};

}  // namespace repcheck
