#pragma once

#include <string>
#include <vector>

#include "repcheck/laurent.hpp"

namespace repcheck {

// Rational function num/den over the fixed variable order [t, X_1..X_n, Y].
// Kept normalized: no common monomial factor between num and den, and den is
// monic in the graded-lex leading coefficient. Equality is decided by
// cross-multiplication, never by multivariate gcd.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(VarCtx ctx)
      : num_(Laurent::zero(ctx)), den_(Laurent::constant(ctx, Rational(1))) {}
  RatFunc(Laurent num, Laurent den);
  explicit RatFunc(const Laurent& num);

  static RatFunc zero(VarCtx ctx) { return RatFunc(ctx); }
  static RatFunc constant(VarCtx ctx, const Rational& c) {
    return RatFunc(Laurent::constant(ctx, c));
  }
  static RatFunc one(VarCtx ctx) { return constant(ctx, Rational(1)); }
  // c * t^a * X_i^b style helper.
  static RatFunc monomial(VarCtx ctx, const Rational& c, const ExpVec& e) {
    return RatFunc(Laurent::monomial(ctx, c, e));
  }
  static RatFunc var_pow(VarCtx ctx, int var, int power, const Rational& c = Rational(1)) {
    return RatFunc(Laurent::var_pow(ctx, var, power, c));
  }

  const VarCtx& ctx() const { return num_.ctx(); }
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc pow(int k) const;
  RatFunc inverse() const;

  // Exact equality as rational functions (cross-multiplication).
  bool eq(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return eq(o); }
  bool operator!=(const RatFunc& o) const { return !eq(o); }

  RatFunc substitute(const std::vector<Monomial>& images, VarCtx target) const;
  RatFunc with_ctx(VarCtx target) const;

  // Exact numeric evaluation: q a perfect rational square fixes t = sqrt(q);
  // xs supplies X_1..X_n and y supplies Y. Throws on a zero denominator.
  Rational eval_numeric(const Rational& q, const std::vector<Rational>& xs,
                        const Rational& y) const;

  std::string to_string() const;
  // Fixed JSON schema:
  //   {"vars":[...], "num":[[cnum,cden,[e...]],...], "den":[...]}
  // with terms in ascending graded-lex order. Round-trips bit-exactly.
  std::string to_json() const;
  static RatFunc from_json(const std::string& text);

  std::string to_latex() const;

 private:
  void normalize();

  Laurent num_, den_;
};

inline RatFunc operator*(const Rational& c, const RatFunc& f) {
  return RatFunc::constant(f.ctx(), c) * f;
}

// Substitution images for the doubled parameter: in a rank-2r context,
// X_i -> Y^{-1} t^{2(r-i)+1} (so q^{sigma_i} = q^{s + r - i + 1/2}), t -> t,
// Y -> Y; the result lives in the rank-0 context [t, Y].
RatFunc specialize_doubled(const RatFunc& f, int r);

}  // namespace repcheck
