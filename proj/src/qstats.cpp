#include "dharm/qstats.hpp"

#include <stdexcept>

namespace dharm {

MPoly t_mu(const Partition& mu) {
  return MPoly::var("q", static_cast<int>(mu.conjugate().eta())) *
         MPoly::var("t", static_cast<int>(mu.eta()));
}

MPoly b_mu(const Partition& mu) {
  MPoly out(0L);
  for (auto [i, j] : mu.cells()) out += MPoly::var("q", i) * MPoly::var("t", j);
  return out;
}

MPoly q_int(int n) {
  MPoly out(0L);
  for (int i = 0; i < n; ++i) out += MPoly::var("q", i);
  return out;
}

MPoly gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return MPoly(0L);
  MPoly num(1L), den(1L);
  for (int i = 0; i < k; ++i) {
    num *= q_int(n - i);
    den *= q_int(i + 1);
  }
  auto q = num.divide_exact(den);
  if (!q) throw std::logic_error("gaussian_binomial: division not exact");
  return *q;
}

Rat schur_dim_eval(const Partition& mu, long k) {
  Rat out(1);
  auto cells = mu.cells();
  auto hooks = mu.hook_lengths();
  for (size_t c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    out *= Rat(k + (i - j)) / Rat(hooks[c]);
  }
  return out;
}

MPoly schur_dim_poly(const Partition& mu, const std::string& kname) {
  MPoly out(1L);
  auto cells = mu.cells();
  auto hooks = mu.hook_lengths();
  for (size_t c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    out *= (MPoly::var(kname) + MPoly(static_cast<long>(i - j))) * Rat(1, hooks[c]);
  }
  return out;
}

MPoly e_k_of_monomials(int k, const MPoly& b) {
  if (k < 0) return MPoly(0L);
  // coefficients of z^k in prod over monomials (1 + z*m); track e_0..e_k
  std::vector<MPoly> e(static_cast<size_t>(k) + 1, MPoly(0L));
  e[0] = MPoly(1L);
  for (const auto& [mono, c] : b.terms()) {
    if (c.get_den() != 1 || c < 0)
      throw std::invalid_argument("e_k_of_monomials: need nonnegative integer multiplicities");
    long mult = c.get_num().get_si();
    MPoly m(0L);
    m.set_term(mono, Rat(1));
    for (long r = 0; r < mult; ++r)
      for (int d = k; d >= 1; --d) e[d] += e[d - 1] * m;
  }
  return e[static_cast<size_t>(k)];
}

}  // namespace dharm
