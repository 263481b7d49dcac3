#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kubert/unipoly.hpp"

namespace kubert {

/// unit * prod factor^multiplicity, factors monic and irreducible.
template <class F>
struct FactorList {
  F unit;
  std::vector<std::pair<UniPoly<F>, int>> factors;

  UniPoly<F> product() const {
    UniPoly<F> acc = UniPoly<F>::constant(unit);
    for (const auto& [g, m] : factors) acc = acc * pow(g, static_cast<unsigned>(m));
    return acc;
  }
  /// Sorted multiset of factor degrees (each repeated by multiplicity).
  std::vector<int> degree_pattern() const;
};

/// f = content * F with F in Z[x] primitive and lc(F) > 0.
std::pair<Rational, ZPoly> primitive_integer_part(const QPoly& f);
QPoly to_qpoly(const ZPoly& f);
FpPoly reduce_mod(const QPoly& f, std::uint64_t p);

/// Yun's algorithm: f = lc * prod s_i^i, s_i monic squarefree, pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);
bool is_squarefree(const QPoly& f);

/// Complete factorization over F_p: squarefree decomposition, distinct-degree,
/// then equal-degree splitting. Throws when p is not prime.
FactorList<Fp> factor_mod_p(const FpPoly& f);
FactorList<Fp> factor_mod_p(const QPoly& f, std::uint64_t p);

/// Zassenhaus: squarefree decomposition, factorization modulo a good prime,
/// Hensel lifting beyond the coefficient bound, subset recombination.
FactorList<Rational> factor_over_q(const QPoly& f);
bool is_irreducible(const QPoly& f);

/// All rational roots with multiplicity, in increasing order.
std::vector<Rational> rational_roots(const QPoly& f);

}  // namespace kubert
