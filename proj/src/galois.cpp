#include "kubert/galois.hpp"

#include <algorithm>
#include <set>

#include "kubert/factor.hpp"

namespace kubert {

namespace {

const std::vector<std::string> kSymVars{"x", "a", "b"};

// MultiPoly over the fixed variables (x, a, b) behaving like a ring element,
// so the closed-form templates can be instantiated symbolically.
struct Sym {
  MultiPoly p;
  Sym() : p(kSymVars) {}
  Sym(long v) : p(MultiPoly::constant(kSymVars, Rational(v))) {}
  explicit Sym(MultiPoly q) : p(std::move(q)) {}
  static Sym var(const std::string& name) { return Sym(MultiPoly::variable(kSymVars, name)); }
  Sym operator-() const { return Sym(-p); }
  friend Sym operator+(const Sym& a, const Sym& b) { return Sym(a.p + b.p); }
  friend Sym operator-(const Sym& a, const Sym& b) { return Sym(a.p - b.p); }
  friend Sym operator*(const Sym& a, const Sym& b) { return Sym(a.p * b.p); }
  friend bool operator==(const Sym& a, const Sym& b) { return a.p == b.p; }
};

}  // namespace

template <>
struct ring_traits<Sym> {
  static constexpr bool is_field = false;
  static Sym zero(const Sym& = {}) { return Sym(); }
  static Sym one(const Sym& = {}) { return Sym(1); }
  static Sym from_int(long n, const Sym& = {}) { return Sym(n); }
  static bool is_zero(const Sym& a) { return a.p.is_zero(); }
  static std::string to_string(const Sym& a) { return a.p.to_string(); }
};

namespace {

const Rational& get(const ParamMap& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw DomainError("missing parameter '" + name + "'");
  return it->second;
}

Sym sym_pow(const Sym& a, int e) {
  Sym acc(1);
  for (int i = 0; i < e; ++i) acc = acc * a;
  return acc;
}

using Pattern = std::vector<int>;

bool pattern_in(const Pattern& p, const std::set<Pattern>& allowed) { return allowed.count(p) > 0; }

// x^4 + a x^3 + b x^2 + c x + d over Q, monic.
struct Quartic {
  Rational a, b, c, d;
};

Quartic monic_quartic(const QPoly& f) {
  QPoly m = monic(f);
  return {m.coeff(3), m.coeff(2), m.coeff(1), m.coeff(0)};
}

bool square_in_disc_field(const Rational& q, const Rational& disc) {
  return sgn(q) == 0 || is_rational_square(q) || is_rational_square(Rational(q * disc));
}

void classify_cubic(GaloisReport& rep) {
  rep.group_label = rep.disc_is_square ? "C3" : "S3";
  rep.certainty = Certainty::exact;
}

void classify_quartic(const QPoly& f, GaloisReport& rep) {
  Quartic q = monic_quartic(f);
  QPoly resolvent({Rational(-(q.a * q.a * q.d - 4 * q.b * q.d + q.c * q.c)), Rational(q.a * q.c - 4 * q.d),
                   Rational(-q.b), Rational(1)});
  std::vector<Rational> roots = rational_roots(resolvent);
  rep.certainty = Certainty::exact;
  if (roots.empty()) {
    rep.group_label = rep.disc_is_square ? "A4" : "S4";
    rep.notes.push_back("resolvent cubic irreducible");
    return;
  }
  if (roots.size() == 3) {
    rep.group_label = "V4";
    rep.notes.push_back("resolvent cubic splits");
    return;
  }
  const Rational& r = roots.front();
  Rational d1 = r * r - 4 * q.d;
  Rational d2 = q.a * q.a - 4 * (q.b - r);
  bool cyclic = square_in_disc_field(d1, rep.disc) && square_in_disc_field(d2, rep.disc);
  rep.group_label = cyclic ? "C4" : "D4";
  rep.notes.push_back("resolvent root " + to_string(r) + "; x^2-rx+d and x^2+ax+(b-r) " +
                      (cyclic ? "split" : "do not split") + " over Q(sqrt(disc))");
}

void classify_quintic(const FrobeniusSample& s, GaloisReport& rep) {
  const std::set<Pattern> cyclic{{1, 1, 1, 1, 1}, {5}};
  const std::set<Pattern> f20{{1, 1, 1, 1, 1}, {5}, {1, 2, 2}, {1, 4}};
  auto seen = [&](const Pattern& p) { return s.histogram.count(p) > 0; };
  if (rep.disc_is_square) {
    if (seen({1, 1, 3})) {
      rep.group_label = "A5";
      rep.certainty = Certainty::exact;
      rep.notes.push_back("3-cycle observed");
    } else if (seen({1, 2, 2})) {
      rep.group_label = "D5";
      rep.certainty = Certainty::sampled;
      rep.notes.push_back("(1,2,2) observed and no 3-cycle");
    } else {
      rep.group_label = "C5";
      bool only_cyclic = std::all_of(s.histogram.begin(), s.histogram.end(),
                                     [&](const auto& kv) { return pattern_in(kv.first, cyclic); });
      rep.certainty = rep.construction_backed && only_cyclic ? Certainty::exact : Certainty::sampled;
      if (rep.construction_backed) rep.notes.push_back("cyclicity backed by a certified nontrivial point");
    }
    return;
  }
  bool outside = std::any_of(s.histogram.begin(), s.histogram.end(),
                             [&](const auto& kv) { return !pattern_in(kv.first, f20); });
  rep.group_label = outside ? "S5" : "F20";
  rep.certainty = outside ? Certainty::exact : Certainty::sampled;
  if (outside) rep.notes.push_back("cycle type outside F20 observed");
}

void classify_sextic(const FrobeniusSample& s, GaloisReport& rep) {
  const std::set<Pattern> cyclic{{1, 1, 1, 1, 1, 1}, {2, 2, 2}, {3, 3}, {6}};
  bool only_cyclic = std::all_of(s.histogram.begin(), s.histogram.end(),
                                 [&](const auto& kv) { return pattern_in(kv.first, cyclic); });
  bool six = s.histogram.count({6}) > 0;
  if (rep.construction_backed && only_cyclic && six) {
    rep.group_label = "C6";
    rep.certainty = Certainty::exact;
    rep.notes.push_back("cyclicity backed by a certified nontrivial point");
    return;
  }
  rep.group_label = "other";
  rep.certainty = Certainty::sampled;
  if (rep.construction_backed) rep.notes.push_back("sampled patterns are not all cyclic-regular");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::pncl5: return "pncl5";
    case Family::brumer: return "brumer";
    case Family::darmon: return "darmon";
    case Family::shanks: return "shanks";
    case Family::gras_quartic: return "gras";
    case Family::ptilde_cubic: return "ptilde-cubic";
    case Family::ptilde_quartic: return "ptilde-quartic";
    case Family::fiber: return "fiber";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::pncl5, Family::brumer, Family::darmon, Family::shanks, Family::gras_quartic,
                   Family::ptilde_cubic, Family::ptilde_quartic, Family::fiber})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::vector<std::string> family_parameters(Family f) {
  switch (f) {
    case Family::pncl5: return {"n", "c"};
    case Family::brumer: return {"s", "u"};
    case Family::darmon: return {"S", "T"};
    case Family::shanks:
    case Family::gras_quartic: return {"t"};
    case Family::ptilde_cubic: return {"u", "v", "n"};
    case Family::ptilde_quartic: return {"n", "c"};
    case Family::fiber: return {};
  }
  return {};
}

FamilyPolynomial p_ncl5(const Rational& n, const Rational& c) {
  return {Family::pncl5, {{"n", n}, {"c", c}}, p_ncl5_poly(n, c)};
}
FamilyPolynomial brumer(const Rational& s, const Rational& u) {
  return {Family::brumer, {{"s", s}, {"u", u}}, brumer_poly(s, u)};
}
FamilyPolynomial darmon(const Rational& S, const Rational& T) {
  return {Family::darmon, {{"S", S}, {"T", T}}, darmon_poly(S, T)};
}
FamilyPolynomial shanks_cubic(const Rational& t) { return {Family::shanks, {{"t", t}}, shanks_poly(t)}; }
FamilyPolynomial ptilde_cubic(const Rational& u, const Rational& v, const Rational& n) {
  return {Family::ptilde_cubic, {{"u", u}, {"v", v}, {"n", n}}, ptilde_cubic_poly(u, v, n)};
}
FamilyPolynomial ptilde_quartic(const Rational& n, const Rational& c) {
  return {Family::ptilde_quartic, {{"n", n}, {"c", c}}, ptilde_quartic_poly(n, c)};
}
FamilyPolynomial gras_quartic(const Rational& t) { return {Family::gras_quartic, {{"t", t}}, gras_poly(t)}; }

FamilyPolynomial make_family(Family f, const ParamMap& params) {
  switch (f) {
    case Family::pncl5: return p_ncl5(get(params, "n"), get(params, "c"));
    case Family::brumer: return brumer(get(params, "s"), get(params, "u"));
    case Family::darmon: return darmon(get(params, "S"), get(params, "T"));
    case Family::shanks: return shanks_cubic(get(params, "t"));
    case Family::gras_quartic: return gras_quartic(get(params, "t"));
    case Family::ptilde_cubic: return ptilde_cubic(get(params, "u"), get(params, "v"), get(params, "n"));
    case Family::ptilde_quartic: return ptilde_quartic(get(params, "n"), get(params, "c"));
    case Family::fiber: break;
  }
  throw DomainError("fiber polynomials come from a construction, not from parameters");
}

bool check_brumer_substitution(const Rational& p_offset) {
  const Sym x = Sym::var("x"), s = Sym::var("a"), u = Sym::var("b");
  UniPoly<Sym> p = p_ncl5_poly<Sym>(-u, s);
  MultiPoly lhs(kSymVars), rhs(kSymVars);
  for (int k = 0; k <= 5; ++k) {
    Sym coeff = p.coeff(k);
    if (k == 0) coeff = coeff + Sym(MultiPoly::constant(kSymVars, p_offset));
    lhs += (coeff * sym_pow(s, k) * sym_pow(x, 5 - k)).p;
  }
  UniPoly<Sym> b = brumer_poly<Sym>(s, u);
  for (int k = 0; k <= 5; ++k) rhs += (sym_pow(s, 4) * b.coeff(k) * sym_pow(x, k)).p;
  return identity_check(lhs, rhs, {IdentityMode::exact});
}

bool check_brumer_substitution(const Rational& s, const Rational& u, const Rational& p_offset) {
  if (sgn(s) == 0) throw DomainError("Brumer substitution needs s != 0");
  QPoly p = p_ncl5_poly<Rational>(Rational(-u), s);
  std::vector<Rational> rev(6);
  Rational sk(1);
  for (int k = 0; k <= 5; ++k) {
    Rational a = p.coeff(k);
    if (k == 0) a += p_offset;
    rev[5 - k] = a * sk;
    sk *= s;
  }
  return monic(QPoly(rev)) == brumer_poly(s, u);
}

bool check_darmon_transform() {
  const Sym S = Sym::var("a"), T = Sym::var("b");
  UniPoly<Sym> b = brumer_poly<Sym>(S + Sym(3), T + Sym(2) * S + Sym(5));
  UniPoly<Sym> d = darmon_poly<Sym>(S, T);
  // x -> -x flips odd coefficients; the leading coefficient becomes -1, so negate
  for (int k = 0; k <= 5; ++k) {
    Sym lhs = k % 2 == 0 ? -b.coeff(k) : b.coeff(k);
    if (!identity_check(lhs.p, d.coeff(k).p, {IdentityMode::exact})) return false;
  }
  return true;
}

bool check_darmon_transform(const Rational& S, const Rational& T) {
  QPoly b = brumer_poly<Rational>(Rational(S + 3), Rational(T + 2 * S + 5));
  QPoly flipped = compose(b, QPoly({Rational(0), Rational(-1)}));
  return monic(flipped) == darmon_poly(S, T);
}

bool gras_resultant_identity(const Rational& n_offset) {
  const QFunc t = QFunc::variable();
  return gras_resultant<QFunc>(t, QFunc(n_offset)) == gras_poly<QFunc>(t);
}

bool gras_resultant_identity(const Rational& t, const Rational& n_offset) {
  return gras_resultant<Rational>(t, n_offset) == gras_poly(t);
}

bool check_shanks_reproduction() {
  const QFunc t = QFunc::variable();
  return ptilde_cubic_poly<QFunc>(-t, QFunc(-1), t + QFunc(3)) == shanks_poly<QFunc>(t);
}

bool check_shanks_discriminant() {
  const QFunc t = QFunc::variable();
  QFunc q = t * t + QFunc(3) * t + QFunc(9);
  return discriminant(shanks_poly<QFunc>(t)) == q * q;
}

std::string pattern_label(const Pattern& pattern) {
  std::string out = "(";
  for (std::size_t i = 0; i < pattern.size(); ++i) out += (i ? "," : "") + std::to_string(pattern[i]);
  return out + ")";
}

FrobeniusSample frobenius_patterns(const QPoly& f, int prime_budget) {
  if (f.degree() < 1) throw DomainError("Frobenius patterns need a nonconstant polynomial");
  if (prime_budget < 1) throw DomainError("prime budget must be positive");
  ZPoly F = primitive_integer_part(f).second;
  QPoly model = to_qpoly(F);
  Integer bad = F.lc();
  if (F.degree() >= 2) {
    Rational disc = discriminant(model);
    if (sgn(disc) == 0) throw DomainError("Frobenius patterns need a squarefree polynomial");
    bad *= disc.get_num();
  }
  FrobeniusSample out;
  for (std::uint64_t p = 2; static_cast<int>(out.primes.size()) < prime_budget; ++p) {
    if (!is_prime(p) || mpz_divisible_ui_p(bad.get_mpz_t(), p)) continue;
    Pattern pat = factor_mod_p(model, p).degree_pattern();
    out.primes.push_back(p);
    out.patterns.push_back(pat);
    ++out.histogram[pat];
  }
  return out;
}

GaloisReport galois_group(const QPoly& f, int prime_budget, bool construction_backed) {
  if (f.degree() < 3 || f.degree() > 6) throw DomainError("galois_group handles degrees 3 to 6");
  if (prime_budget < kMinPrimeBudget)
    throw DomainError("prime budget " + std::to_string(prime_budget) + " is below the minimum of " +
                      std::to_string(kMinPrimeBudget));
  if (!is_squarefree(f)) throw DomainError("galois_group needs a squarefree polynomial");
  GaloisReport rep;
  rep.degree = f.degree();
  rep.construction_backed = construction_backed;
  rep.disc = discriminant(f);
  rep.disc_is_square = is_rational_square(rep.disc);
  FrobeniusSample s = frobenius_patterns(f, prime_budget);
  rep.primes_used = static_cast<int>(s.primes.size());
  for (const auto& [pat, count] : s.histogram) rep.pattern_histogram[pattern_label(pat)] = count;

  auto factors = factor_over_q(f);
  rep.irreducible = factors.factors.size() == 1 && factors.factors.front().second == 1;
  if (!rep.irreducible) {
    rep.group_label = "other";
    rep.certainty = Certainty::exact;
    rep.notes.push_back("reducible: factor degrees " + pattern_label(factors.degree_pattern()));
    return rep;
  }
  switch (rep.degree) {
    case 3: classify_cubic(rep); break;
    case 4: classify_quartic(f, rep); break;
    case 5: classify_quintic(s, rep); break;
    case 6: classify_sextic(s, rep); break;
  }
  return rep;
}

CyclicResult cyclic_from_fiber(const ConstructionInput& input, int prime_budget) {
  NontrivialPointCertificate cert = certify(input);
  if (!cert.valid())
    throw DomainError("invalid certificate: " + cert.excluded_reason.value_or("point is not certified nontrivial"));
  ParamMap params = input.params;
  for (const auto& [k, v] : cert.curve_params) params[k] = v;
  FamilyPolynomial poly{Family::fiber, params, monic(cert.fiber)};
  GaloisReport rep = galois_group(poly.poly, prime_budget, true);
  // for composite l a point outside the image can still lift over a proper subfield
  if (!rep.irreducible) rep.notes.push_back("fiber splits although the point is not the image of a rational point");
  return {poly, rep, cert};
}

FiberMatch match_p_ncl5(const QPoly& fiber, const Rational& c) {
  if (fiber.degree() != 5) throw DomainError("expected a quintic fiber");
  QPoly m = monic(fiber);
  Rational n = -m.coeff(4);
  if (m == p_ncl5_poly(n, c)) return {true, n, Rational(0)};
  // retry under x -> x + r, r a rational root of the first nonzero coefficient difference
  const QFunc r = QFunc::variable();
  UniPoly<QFunc> lifted;
  for (int k = m.degree(); k >= 0; --k)
    lifted = lifted * UniPoly<QFunc>({r, QFunc(1)}) + UniPoly<QFunc>::constant(QFunc(m.coeff(k)));
  QFunc nr = -lifted.coeff(4);
  UniPoly<QFunc> diff = lifted - p_ncl5_poly<QFunc>(nr, QFunc(c));
  for (const QFunc& d : diff.coeffs()) {
    if (d.is_zero()) continue;
    for (const Rational& root : rational_roots(d.num())) {
      QPoly shifted = compose(m, QPoly({root, Rational(1)}));
      Rational ns = -shifted.coeff(4);
      if (shifted == p_ncl5_poly(ns, c)) return {true, ns, root};
    }
    break;
  }
  return {false, n, Rational(0)};
}

}  // namespace kubert
