#include "repcheck/ratfunc.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace repcheck {

RatFunc::RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.ctx() != den_.ctx()) throw std::invalid_argument("RatFunc: context mismatch");
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

RatFunc::RatFunc(const Laurent& num)
    : num_(num), den_(Laurent::constant(num.ctx(), Rational(1))) {
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent::constant(num_.ctx(), Rational(1));
    return;
  }
  // Remove the common monomial content, then scale den monic.
  ExpVec mn = num_.min_exponents();
  ExpVec md = den_.min_exponents();
  ExpVec shift(mn.size());
  bool any = false;
  for (std::size_t i = 0; i < mn.size(); ++i) {
    shift[i] = -std::min(mn[i], md[i]);
    if (shift[i] != 0) any = true;
  }
  if (any) {
    num_ = num_.shift(shift);
    den_ = den_.shift(shift);
  }
  Rational lead = den_.leading().second;
  if (lead != 1) {
    num_ = num_.divide_coeffs(lead);
    den_ = den_.divide_coeffs(lead);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc acc = RatFunc::one(ctx());
  RatFunc base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool RatFunc::eq(const RatFunc& o) const {
  if (ctx() != o.ctx()) return false;
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RatFunc RatFunc::substitute(const std::vector<Monomial>& images, VarCtx target) const {
  return RatFunc(num_.substitute(images, target), den_.substitute(images, target));
}

RatFunc RatFunc::with_ctx(VarCtx target) const {
  return RatFunc(num_.with_ctx(target), den_.with_ctx(target));
}

Rational RatFunc::eval_numeric(const Rational& q, const std::vector<Rational>& xs,
                               const Rational& y) const {
  auto t = sqrt_exact(q);
  if (!t) throw std::domain_error("eval_numeric: q must be a perfect rational square");
  if (static_cast<int>(xs.size()) != ctx().rank)
    throw std::invalid_argument("eval_numeric: need one value per X variable");
  std::vector<Rational> values;
  values.reserve(ctx().nvars());
  values.push_back(*t);
  for (const auto& x : xs) values.push_back(x);
  values.push_back(y);
  Rational d = den_.eval(values);
  if (d == 0) throw std::domain_error("eval_numeric: denominator vanishes");
  return num_.eval(values) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && !den_.is_zero() && den_.terms().begin()->second == 1)
    return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

nlohmann::json poly_to_json(const Laurent& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (auto k : e) exps.push_back(k);
    terms.push_back({to_int64(c.get_num()), to_int64(c.get_den()), exps});
  }
  return terms;
}

Laurent poly_from_json(const nlohmann::json& j, VarCtx ctx) {
  Laurent p(ctx);
  for (const auto& term : j) {
    Rational c(term.at(0).get<std::int64_t>(), term.at(1).get<std::int64_t>());
    c.canonicalize();
    ExpVec e;
    for (const auto& k : term.at(2)) e.push_back(k.get<std::int32_t>());
    if (static_cast<int>(e.size()) != ctx.nvars())
      throw std::invalid_argument("RatFunc::from_json: exponent arity mismatch");
    p.add_term(e, c);
  }
  return p;
}

std::string latex_poly(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
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
    for (int v = 0; v < p.ctx().nvars(); ++v) {
      if (e[v] == 0) continue;
      std::string nm = p.ctx().name(v);
      if (nm.size() > 1) nm = nm.substr(0, 1) + "_{" + nm.substr(1) + "}";
      vars += nm;
      if (e[v] != 1) vars += "^{" + std::to_string(e[v]) + "}";
    }
    bool unit_coeff = (a == 1) && !vars.empty();
    if (!unit_coeff) {
      if (a.get_den() == 1) os << a.get_num().get_str();
      else os << "\\tfrac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
    }
    os << vars;
  }
  return os.str();
}

}  // namespace

std::string RatFunc::to_json() const {
  nlohmann::json j;
  nlohmann::json vars = nlohmann::json::array();
  for (int v = 0; v < ctx().nvars(); ++v) vars.push_back(ctx().name(v));
  j["vars"] = vars;
  j["num"] = poly_to_json(num_);
  j["den"] = poly_to_json(den_);
  return j.dump();
}

RatFunc RatFunc::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int nvars = static_cast<int>(j.at("vars").size());
  VarCtx ctx{nvars - 2};
  // Terms are stored normalized; rebuild without re-normalizing.
  RatFunc out(ctx);
  out.num_ = poly_from_json(j.at("num"), ctx);
  out.den_ = poly_from_json(j.at("den"), ctx);
  if (out.den_.is_zero()) throw std::domain_error("RatFunc::from_json: zero denominator");
  return out;
}

std::string RatFunc::to_latex() const {
  bool den_one = den_.is_constant() && !den_.is_zero() && den_.terms().begin()->second == 1;
  if (den_one) return latex_poly(num_);
  return "\\frac{" + latex_poly(num_) + "}{" + latex_poly(den_) + "}";
}

RatFunc specialize_doubled(const RatFunc& f, int r) {
  VarCtx src = f.ctx();
  if (src.rank != 2 * r)
    throw std::invalid_argument("specialize_doubled: context rank must be 2r");
  VarCtx target{0};
  std::vector<Monomial> images;
  images.reserve(src.nvars());
  auto mono = [&](int tpow, int ypow) {
    ExpVec e(target.nvars(), 0);
    e[target.t()] = tpow;
    e[target.y()] = ypow;
    return Monomial{Rational(1), e};
  };
  images.push_back(mono(1, 0));  // t -> t
  for (int i = 1; i <= 2 * r; ++i) images.push_back(mono(2 * (r - i) + 1, -1));
  images.push_back(mono(0, 1));  // Y -> Y
  return f.substitute(images, target);
}

}  // namespace repcheck
