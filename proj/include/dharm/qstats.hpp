#pragma once

#include "dharm/mpoly.hpp"
#include "dharm/partition.hpp"

namespace dharm {

/// T_mu = q^{eta(mu')} t^{eta(mu)} = prod of q^i t^j over the cells (i,j).
MPoly t_mu(const Partition& mu);

/// B_mu = sum of q^i t^j over cells (i,j) of mu.
MPoly b_mu(const Partition& mu);

/// Gaussian binomial [n choose k]_q; zero when k < 0 or k > n.
MPoly gaussian_binomial(int n, int k);

/// q-integer [n]_q = 1 + q + ... + q^{n-1}.
MPoly q_int(int n);

/// s_mu(1^k) by the content/hook formula, exact for any integer k.
Rat schur_dim_eval(const Partition& mu, long k);

/// The same product left symbolic in the named variable (polynomial in k
/// with rational coefficients).
MPoly schur_dim_poly(const Partition& mu, const std::string& kname = "k");

/// e_k evaluated at the multiset of monomials of b (a sum of monomials with
/// nonnegative integer coefficients), via prod (1 + z m_i).
MPoly e_k_of_monomials(int k, const MPoly& b);

}  // namespace dharm
