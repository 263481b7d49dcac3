#include "kubert/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace kubert {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const Rational& c) {
  MultiPoly p(vars);
  p.add_term(Exponents(vars.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
  MultiPoly p(vars);
  Exponents e(vars.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_univariate(const std::vector<std::string>& vars, const std::string& name, const QPoly& f) {
  MultiPoly p(vars);
  const std::size_t i = p.index_of(name);
  for (int k = 0; k <= f.degree(); ++k) {
    Exponents e(vars.size(), 0);
    e[i] = k;
    p.add_term(e, f.coeffs()[k]);
  }
  return p;
}

std::size_t MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: variable lists differ");
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::degree_in(const std::string& name) const {
  const std::size_t i = index_of(name);
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  MultiPoly r(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, Rational(ca * cb));
    }
  }
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  MultiPoly r(a.vars_);
  for (const auto& [e, c] : a.terms_) r.add_term(e, Rational(s * c));
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = constant(vars_, Rational(1)), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
  require_same_vars(value);
  const std::size_t i = index_of(name);
  // group terms by the exponent of `name`, then Horner in `value`
  std::map<int, MultiPoly> by_power;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[i] = 0;
    auto [it, _] = by_power.try_emplace(e[i], MultiPoly(vars_));
    it->second.add_term(rest, c);
  }
  MultiPoly acc(vars_);
  int prev = by_power.empty() ? 0 : by_power.rbegin()->first;
  for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
    acc = acc * value.pow(static_cast<unsigned>(prev - it->first)) + it->second;
    prev = it->first;
  }
  return acc * value.pow(static_cast<unsigned>(prev));
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("MultiPoly::evaluate: arity mismatch");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= kubert::pow(point[i], static_cast<unsigned>(e[i]));
    sum += t;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = abs(c);
    std::string coef = kubert::to_string(a);
    std::string term = mono.empty() ? coef : (a == 1 ? mono : coef + "*" + mono);
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + term;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out;
}

MultiPoly evaluate_univariate(const std::vector<MultiPoly>& coeffs_low_first, const MultiPoly& value) {
  MultiPoly acc(value.vars());
  for (auto it = coeffs_low_first.rbegin(); it != coeffs_low_first.rend(); ++it) acc = acc * value + *it;
  return acc;
}

bool identity_check(const MultiPoly& lhs, const MultiPoly& rhs, const IdentityOptions& opts) {
  if (lhs.vars() != rhs.vars()) throw std::invalid_argument("identity_check: variable lists differ");
  if (opts.mode == IdentityMode::exact) return lhs == rhs;
  const int trials = std::max(opts.min_trials, 1 + std::max(lhs.total_degree(), rhs.total_degree()));
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> draw(1, 10000);
  std::vector<Rational> point(lhs.vars().size());
  for (int t = 0; t < trials; ++t) {
    for (auto& v : point) v = make_rational(draw(rng), draw(rng));
    if (lhs.evaluate(point) != rhs.evaluate(point)) return false;
  }
  return true;
}

}  // namespace kubert
