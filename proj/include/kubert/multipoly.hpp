#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kubert/ratfunc.hpp"

namespace kubert {

using Exponents = std::vector<int>;

/// Graded lexicographic order over the declared variable order: higher
/// total degree first, ties broken lexicographically.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q with named variables. Two
/// polynomials can only be combined when their variable lists agree.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const std::vector<std::string>& vars, const Rational& c);
  static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
  /// Lifts a univariate polynomial in `name` into the variable set.
  static MultiPoly from_univariate(const std::vector<std::string>& vars, const std::string& name, const QPoly& f);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  int degree_in(const std::string& name) const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const;
  /// Replaces variable `name` by `value` (same variable set).
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string() const;

 private:
  std::size_t index_of(const std::string& name) const;
  void require_same_vars(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

/// Polynomial in `var` with MultiPoly coefficients, i.e. a univariate
/// expression like f(x) = sum a_k x^k evaluated at x = value.
MultiPoly evaluate_univariate(const std::vector<MultiPoly>& coeffs_low_first, const MultiPoly& value);

enum class IdentityMode { exact, sampled };

struct IdentityOptions {
  IdentityMode mode = IdentityMode::exact;
  std::uint64_t seed = 1;
  int min_trials = 0;  // sampled mode uses max(min_trials, 1 + total degree) points
};

/// Canonical-form comparison (exact) or a Schwartz-Zippel pre-check
/// at random rational points with numerators/denominators in [1, 10^4].
bool identity_check(const MultiPoly& lhs, const MultiPoly& rhs, const IdentityOptions& opts = {});

}  // namespace kubert
