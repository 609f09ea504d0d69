#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "repcheck/rational.hpp"

namespace repcheck {

// Variable layout for symbolic computations, fixed once per rank n:
//   index 0      -> t   (t^2 = q)
//   index 1..n   -> X_1..X_n  (X_i = q^{sigma_i})
//   index n+1    -> Y   (Y = q^{-s})
struct VarCtx {
  int rank = 0;

  int nvars() const { return rank + 2; }
  int t() const { return 0; }
  int x(int i) const { return i; }  // 1-based i
  int y() const { return rank + 1; }
  std::string name(int v) const;
  bool operator==(const VarCtx& o) const { return rank == o.rank; }
  bool operator!=(const VarCtx& o) const { return rank != o.rank; }
};

using ExpVec = std::vector<std::int32_t>;

// Graded lexicographic order: total degree first, then leftmost difference.
struct GradedLex {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    long da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Substitution image of one variable: coeff * prod target_var^exps.
// coeff must be nonzero so negative source exponents stay defined.
struct Monomial {
  Rational coeff;
  ExpVec exps;
};

class Laurent {
 public:
  using TermMap = std::map<ExpVec, Rational, GradedLex>;

  Laurent() = default;
  explicit Laurent(VarCtx ctx) : ctx_(ctx) {}

  static Laurent zero(VarCtx ctx) { return Laurent(ctx); }
  static Laurent constant(VarCtx ctx, const Rational& c);
  static Laurent monomial(VarCtx ctx, const Rational& c, const ExpVec& e);
  // Single variable to a power.
  static Laurent var_pow(VarCtx ctx, int var, int power, const Rational& c = Rational(1));

  const VarCtx& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  // Graded-lex greatest term; polynomial must be nonzero.
  const std::pair<const ExpVec, Rational>& leading() const;
  // Componentwise minimum exponent over all terms; zero vector if empty.
  ExpVec min_exponents() const;

  void add_term(const ExpVec& e, const Rational& c);

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const Rational& c) const;
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Divide every coefficient by c (c nonzero).
  Laurent divide_coeffs(const Rational& c) const;
  // Multiply every term by the monomial t^e (e may be negative).
  Laurent shift(const ExpVec& e) const;

  // Map each source variable to a signed monomial in the target context.
  Laurent substitute(const std::vector<Monomial>& images, VarCtx target) const;
  // Reinterpret in a wider/narrower context; X-variables map by index,
  // t and Y stay in place. Dropping a variable requires exponent 0 on it.
  Laurent with_ctx(VarCtx target) const;

  // Evaluate with values[v] for every variable (all nonzero where needed).
  Rational eval(const std::vector<Rational>& values) const;

  std::string to_string() const;

 private:
  VarCtx ctx_;
  TermMap terms_;
};

inline Laurent operator*(const Rational& c, const Laurent& p) { return p * c; }

}  // namespace repcheck
