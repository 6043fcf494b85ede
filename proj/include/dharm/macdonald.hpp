#pragma once

#include <map>

#include "dharm/qstats.hpp"
#include "dharm/symfun.hpp"

namespace dharm {

/// The combinatorial Macdonald basis at one degree: Schur expansions of
/// H~_mu, coefficients polynomials in q,t with nonnegative integer entries.
struct MacdonaldBasis {
  int degree = 0;
  std::map<Partition, SymFun<MPoly>, PartitionOrder> h;

  const SymFun<MPoly>& at(const Partition& mu) const { return h.at(mu); }

  std::string serialize() const;
  static MacdonaldBasis deserialize(const std::string& text);
};

/// Solves the triangularity characterization per mu:
///   <s_la, H~_mu[(1-q)z]> = 0 unless la >= mu (dominance),
///   <s_la, H~_mu[(1-t)z]> = 0 unless la >= mu',
///   <s_n, H~_mu> = 1.
/// Memoized per degree; persisted through CacheStore::global() when enabled.
const MacdonaldBasis& macdonald_basis(int n);

/// Expansion of f (degree-n homogeneous) in the H~ basis.
std::map<Partition, RatFun, PartitionOrder> macdonald_expand(const SymFun<RatFun>& f);

/// Eigenoperators: nabla scales H~_mu by T_mu; Delta_{e_k} by e_k[B_mu];
/// the primed variant by e_k[B_mu - 1]. Results in the Schur basis.
SymFun<RatFun> nabla(const SymFun<RatFun>& f);
SymFun<RatFun> delta_e(int k, const SymFun<RatFun>& f, bool primed);

/// nabla(e_n) with coefficients reduced to polynomials in q,t.
const SymFun<MPoly>& nabla_e(int n);
/// Delta'_{e_k}(e_n) (or Delta_{e_k}(e_n)), polynomial coefficients.
SymFun<MPoly> delta_e_n(int k, int n, bool primed = true);

/// H~_mu(t,q) = H~_{mu'}(q,t) and H~_mu = T_mu * omega H~_mu(1/q,1/t).
bool macdonald_symmetries_check(int n);

/// Right-hand side of the (q,1/q) specialization, parametrized by the sum's
/// upper limit k (which pairs with e_{n-1-k}^perp on the left):
///   sum_{i=0}^{k} (-1)^{k-i} e_i[[n]_q]/q^{i(n-1)} * e_n[[i+1]_q z]/[i+1]_q,
/// returned in the Schur basis over Q(q).
SymFun<RatFun> qt_inverse_special(int k, int n);

/// Reduce a RatFun-coefficient Schur expansion to polynomial coefficients;
/// throws std::logic_error when some coefficient is not polynomial.
SymFun<MPoly> to_poly_coeffs(const SymFun<RatFun>& f);

}  // namespace dharm
