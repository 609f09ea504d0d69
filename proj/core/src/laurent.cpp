#include "repcheck/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace repcheck {

std::string VarCtx::name(int v) const {
  if (v == 0) return "t";
  if (v == rank + 1) return "Y";
  if (v >= 1 && v <= rank) return "X" + std::to_string(v);
  throw std::out_of_range("VarCtx::name");
}

Laurent Laurent::constant(VarCtx ctx, const Rational& c) {
  Laurent p(ctx);
  p.add_term(ExpVec(ctx.nvars(), 0), c);
  return p;
}

Laurent Laurent::monomial(VarCtx ctx, const Rational& c, const ExpVec& e) {
  if (static_cast<int>(e.size()) != ctx.nvars())
    throw std::invalid_argument("Laurent::monomial: exponent size mismatch");
  Laurent p(ctx);
  p.add_term(e, c);
  return p;
}

Laurent Laurent::var_pow(VarCtx ctx, int var, int power, const Rational& c) {
  ExpVec e(ctx.nvars(), 0);
  e.at(var) = power;
  return monomial(ctx, c, e);
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (auto e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

const std::pair<const ExpVec, Rational>& Laurent::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

ExpVec Laurent::min_exponents() const {
  ExpVec m(ctx_.nvars(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i)
        if (e[i] < m[i]) m[i] = e[i];
    }
  }
  return m;
}

void Laurent::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent out(ctx_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (ctx_ != o.ctx_) throw std::invalid_argument("Laurent::+ context mismatch");
  Laurent out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Laurent Laurent::operator-(const Laurent& o) const {
  if (ctx_ != o.ctx_) throw std::invalid_argument("Laurent::- context mismatch");
  Laurent out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Laurent Laurent::operator*(const Laurent& o) const {
  if (ctx_ != o.ctx_) throw std::invalid_argument("Laurent::* context mismatch");
  Laurent out(ctx_);
  ExpVec e(ctx_.nvars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Laurent Laurent::operator*(const Rational& c) const {
  Laurent out(ctx_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

bool Laurent::operator==(const Laurent& o) const {
  return ctx_ == o.ctx_ && terms_ == o.terms_;
}

Laurent Laurent::divide_coeffs(const Rational& c) const {
  if (c == 0) throw std::domain_error("Laurent::divide_coeffs by zero");
  Laurent out(ctx_);
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k / c);
  return out;
}

Laurent Laurent::shift(const ExpVec& s) const {
  if (static_cast<int>(s.size()) != ctx_.nvars())
    throw std::invalid_argument("Laurent::shift size mismatch");
  Laurent out(ctx_);
  ExpVec e(ctx_.nvars());
  for (const auto& [e0, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = e0[i] + s[i];
    out.terms_.emplace(e, c);
  }
  return out;
}

Laurent Laurent::substitute(const std::vector<Monomial>& images, VarCtx target) const {
  if (static_cast<int>(images.size()) != ctx_.nvars())
    throw std::invalid_argument("Laurent::substitute: one image per source variable required");
  for (const auto& im : images) {
    if (im.coeff == 0) throw std::invalid_argument("Laurent::substitute: zero image");
    if (static_cast<int>(im.exps.size()) != target.nvars())
      throw std::invalid_argument("Laurent::substitute: image exponent size mismatch");
  }
  Laurent out(target);
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    ExpVec exp(target.nvars(), 0);
    for (int v = 0; v < ctx_.nvars(); ++v) {
      int k = e[v];
      if (k == 0) continue;
      coeff *= pow_rational(images[v].coeff, k);
      for (int i = 0; i < target.nvars(); ++i) exp[i] += images[v].exps[i] * k;
    }
    out.add_term(exp, coeff);
  }
  return out;
}

Laurent Laurent::with_ctx(VarCtx target) const {
  std::vector<Monomial> images;
  images.reserve(ctx_.nvars());
  auto unit = [&](int var) {
    ExpVec e(target.nvars(), 0);
    e.at(var) = 1;
    return Monomial{Rational(1), e};
  };
  for (int v = 0; v < ctx_.nvars(); ++v) {
    if (v == ctx_.t()) {
      images.push_back(unit(target.t()));
    } else if (v == ctx_.y()) {
      images.push_back(unit(target.y()));
    } else {
      if (v > target.rank) {
        // Dropping a variable: legal only if it never appears.
        for (const auto& [e, c] : terms_)
          if (e[v] != 0) throw std::invalid_argument("Laurent::with_ctx drops a used variable");
        ExpVec z(target.nvars(), 0);
        z[target.t()] = 0;
        images.push_back(Monomial{Rational(1), z});
      } else {
        images.push_back(unit(target.x(v)));
      }
    }
  }
  return substitute(images, target);
}

Rational Laurent::eval(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != ctx_.nvars())
    throw std::invalid_argument("Laurent::eval: value count mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < ctx_.nvars(); ++v)
      if (e[v] != 0) term *= pow_rational(values[v], e[v]);
    acc += term;
  }
  return acc;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex reads most naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    std::string vars;
    for (int v = 0; v < ctx_.nvars(); ++v) {
      if (e[v] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ctx_.name(v);
      if (e[v] != 1) vars += "^" + std::to_string(e[v]);
    }
    if (vars.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << vars;
    }
  }
  return os.str();
}

}  // namespace repcheck
