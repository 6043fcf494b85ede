#include "dharm/macdonald.hpp"

#include <functional>
#include <mutex>
#include <optional>
#include <sstream>

#include "dharm/cache.hpp"
#include "dharm/linsolve.hpp"
#include "dharm/plethysm.hpp"

namespace dharm {

namespace {

constexpr const char* kCacheVersion = "v1";

// twist[nu][la] = <s_la, s_nu[(1-v)z]> for v = q or t:
// s_nu[(1-v)z] = sum_rho chi^nu(rho)/z_rho prod_i (1 - v^{rho_i}) p_rho.
std::vector<std::vector<MPoly>> twisted_schur_matrix(int n, const std::string& vname) {
  const auto& parts = partitions_of(n);
  size_t m = parts.size();
  std::vector<std::vector<MPoly>> out(m, std::vector<MPoly>(m, MPoly(0L)));
  for (size_t r = 0; r < m; ++r) {
    const Partition& rho = parts[r];
    MPoly scale(1L);
    for (int part : rho.parts()) scale *= MPoly(1L) - MPoly::var(vname, part);
    Rat z(rho.z());
    for (size_t nu = 0; nu < m; ++nu) {
      Int chi_nu = mn_character(parts[nu], rho);
      if (chi_nu == 0) continue;
      for (size_t la = 0; la < m; ++la) {
        Int chi_la = mn_character(parts[la], rho);
        if (chi_la == 0) continue;
        out[nu][la] += scale * (Rat(chi_nu * chi_la) / z);
      }
    }
  }
  return out;
}

MacdonaldBasis compute_basis(int n) {
  const auto& parts = partitions_of(n);
  size_t m = parts.size();
  auto aq = twisted_schur_matrix(n, "q");
  auto at = twisted_schur_matrix(n, "t");
  MacdonaldBasis basis;
  basis.degree = n;
  for (const Partition& mu : parts) {
    Partition muc = mu.conjugate();
    std::vector<std::vector<MPoly>> rows;
    std::vector<MPoly> rhs;
    for (size_t la = 0; la < m; ++la) {
      if (!parts[la].dominates(mu)) {
        std::vector<MPoly> row(m);
        for (size_t nu = 0; nu < m; ++nu) row[nu] = aq[nu][la];
        rows.push_back(std::move(row));
        rhs.emplace_back(0L);
      }
      if (!parts[la].dominates(muc)) {
        std::vector<MPoly> row(m);
        for (size_t nu = 0; nu < m; ++nu) row[nu] = at[nu][la];
        rows.push_back(std::move(row));
        rhs.emplace_back(0L);
      }
    }
    // normalization <s_n, H~_mu> = 1; index 0 is (n) in canonical order
    {
      std::vector<MPoly> row(m, MPoly(0L));
      row[0] = MPoly(1L);
      rows.push_back(std::move(row));
      rhs.emplace_back(1L);
    }
    std::vector<RatFun> x = solve_poly(std::move(rows), std::move(rhs));
    SymFun<MPoly> hmu(Basis::s);
    for (size_t la = 0; la < m; ++la) {
      auto p = x[la].to_poly();
      if (!p) throw std::logic_error("macdonald_basis: non-polynomial Schur coefficient");
      hmu.add_term(parts[la], *p);
    }
    basis.h.emplace(mu, std::move(hmu));
  }
  return basis;
}

std::map<int, MacdonaldBasis>& basis_memo() {
  static std::map<int, MacdonaldBasis> memo;
  return memo;
}
std::mutex& basis_mutex() {
  static std::mutex mu;
  return mu;
}

SymFun<RatFun> lift(const SymFun<MPoly>& f) {
  return map_coeffs<MPoly, RatFun>(f, [](const MPoly& c) { return RatFun(c); });
}

}  // namespace

std::string MacdonaldBasis::serialize() const {
  std::ostringstream out;
  out << "degree=" << degree << "\n";
  for (const auto& [mu, hmu] : h)
    for (const auto& [la, c] : hmu.terms())
      out << "mu=[" << mu.str() << "] lambda=[" << la.str() << "] coeff=" << c.str() << "\n";
  return out.str();
}

MacdonaldBasis MacdonaldBasis::deserialize(const std::string& text) {
  MacdonaldBasis basis;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("degree=", 0) == 0) {
      basis.degree = std::stoi(line.substr(7));
      continue;
    }
    auto grab = [&](const std::string& tag) {
      size_t at = line.find(tag + "=[");
      if (at == std::string::npos) throw std::invalid_argument("macdonald cache: bad line: " + line);
      size_t start = at + tag.size() + 2;
      size_t end = line.find(']', start);
      return line.substr(start, end - start);
    };
    size_t cpos = line.find("coeff=");
    if (cpos == std::string::npos) throw std::invalid_argument("macdonald cache: bad line: " + line);
    Partition mu = Partition::parse(grab("mu"));
    Partition la = Partition::parse(grab("lambda"));
    MPoly c = MPoly::parse(line.substr(cpos + 6));
    basis.h[mu].add_term(la, c);
  }
  return basis;
}

const MacdonaldBasis& macdonald_basis(int n) {
  std::lock_guard<std::mutex> lock(basis_mutex());
  auto it = basis_memo().find(n);
  if (it != basis_memo().end()) return it->second;
  std::string key = std::string(kCacheVersion) + "/macdonald_" + std::to_string(n) + ".txt";
  if (auto cached = CacheStore::global().get(key)) {
    MacdonaldBasis b = MacdonaldBasis::deserialize(*cached);
    if (b.degree == n && b.h.size() == partitions_of(n).size())
      return basis_memo().emplace(n, std::move(b)).first->second;
  }
  MacdonaldBasis b = compute_basis(n);
  CacheStore::global().put(key, b.serialize());
  return basis_memo().emplace(n, std::move(b)).first->second;
}

std::map<Partition, RatFun, PartitionOrder> macdonald_expand(const SymFun<RatFun>& f) {
  if (f.is_zero()) return {};
  if (!f.homogeneous()) throw std::invalid_argument("macdonald_expand: f not homogeneous");
  int n = f.max_degree();
  const MacdonaldBasis& basis = macdonald_basis(n);
  const auto& parts = partitions_of(n);
  size_t m = parts.size();
  SymFun<RatFun> fs = convert(f, Basis::s);
  // solve sum_mu y_mu <s_la, H~_mu> = <s_la, f>
  std::vector<std::vector<RatFun>> a(m, std::vector<RatFun>(m, RatFun(0L)));
  std::vector<RatFun> rhs(m, RatFun(0L));
  for (size_t la = 0; la < m; ++la) {
    for (size_t mu = 0; mu < m; ++mu)
      a[la][mu] = RatFun(basis.at(parts[mu]).coeff(parts[la]));
    rhs[la] = fs.coeff(parts[la]);
  }
  std::vector<RatFun> y = ratfun_solve(std::move(a), std::move(rhs));
  std::map<Partition, RatFun, PartitionOrder> out;
  for (size_t mu = 0; mu < m; ++mu)
    if (!y[mu].is_zero()) out.emplace(parts[mu], y[mu]);
  return out;
}

namespace {

using HExpansion = std::map<Partition, RatFun, PartitionOrder>;

SymFun<RatFun> apply_eigenvalues(const HExpansion& expansion, int n,
                                 const std::function<MPoly(const Partition&)>& eig) {
  SymFun<RatFun> out(Basis::s);
  const MacdonaldBasis& basis = macdonald_basis(n);
  for (const auto& [mu, y] : expansion) {
    RatFun w = y * RatFun(eig(mu));
    for (const auto& [la, c] : basis.at(mu).terms()) out.add_term(la, w * RatFun(c));
  }
  return out;
}

SymFun<RatFun> eigen_apply(const SymFun<RatFun>& f,
                           const std::function<MPoly(const Partition&)>& eig) {
  if (f.is_zero()) return SymFun<RatFun>(Basis::s);
  return apply_eigenvalues(macdonald_expand(f), f.max_degree(), eig);
}

std::string serialize_expansion(const HExpansion& x) {
  std::ostringstream out;
  for (const auto& [mu, y] : x)
    out << "mu=[" << mu.str() << "] num=" << y.num().str() << " den=" << y.den().str() << "\n";
  return out.str();
}

std::optional<HExpansion> deserialize_expansion(const std::string& text) {
  HExpansion out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t npos_ = line.find(" num=");
    size_t dpos = line.find(" den=");
    if (line.rfind("mu=[", 0) != 0 || npos_ == std::string::npos || dpos == std::string::npos)
      return std::nullopt;
    Partition mu = Partition::parse(line.substr(4, line.find(']') - 4));
    MPoly num = MPoly::parse(line.substr(npos_ + 5, dpos - npos_ - 5));
    MPoly den = MPoly::parse(line.substr(dpos + 5));
    out.emplace(mu, RatFun(num, den));
  }
  return out;
}

// e_n in the H~ basis, memoized in process and on disk (shared by nabla_e
// and delta_e_n; the linear solve behind it is expensive for n >= 6).
const HExpansion& en_expansion(int n) {
  static std::map<int, HExpansion> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::string key = std::string(kCacheVersion) + "/en_expansion_" + std::to_string(n) + ".txt";
  if (auto cached = CacheStore::global().get(key)) {
    if (auto x = deserialize_expansion(*cached))
      return memo.emplace(n, std::move(*x)).first->second;
  }
  SymFun<RatFun> en = SymFun<RatFun>::unit(Basis::e, Partition::row(n), RatFun(1L));
  HExpansion x = macdonald_expand(en);
  CacheStore::global().put(key, serialize_expansion(x));
  return memo.emplace(n, std::move(x)).first->second;
}

}  // namespace

SymFun<RatFun> nabla(const SymFun<RatFun>& f) {
  return eigen_apply(f, [](const Partition& mu) { return t_mu(mu); });
}

SymFun<RatFun> delta_e(int k, const SymFun<RatFun>& f, bool primed) {
  return eigen_apply(f, [k, primed](const Partition& mu) {
    MPoly b = b_mu(mu);
    if (primed) b -= MPoly(1L);
    return e_k_of_monomials(k, b);
  });
}

SymFun<MPoly> to_poly_coeffs(const SymFun<RatFun>& f) {
  return map_coeffs<RatFun, MPoly>(f, [](const RatFun& c) {
    auto p = c.to_poly();
    if (!p) throw std::logic_error("to_poly_coeffs: coefficient not polynomial: " + c.str());
    return *p;
  });
}

const SymFun<MPoly>& nabla_e(int n) {
  static std::map<int, SymFun<MPoly>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  SymFun<RatFun> v =
      apply_eigenvalues(en_expansion(n), n, [](const Partition& mu) { return t_mu(mu); });
  return memo.emplace(n, to_poly_coeffs(v)).first->second;
}

SymFun<MPoly> delta_e_n(int k, int n, bool primed) {
  SymFun<RatFun> v = apply_eigenvalues(en_expansion(n), n, [k, primed](const Partition& mu) {
    MPoly b = b_mu(mu);
    if (primed) b -= MPoly(1L);
    return e_k_of_monomials(k, b);
  });
  return to_poly_coeffs(v);
}

bool macdonald_symmetries_check(int n) {
  const MacdonaldBasis& basis = macdonald_basis(n);
  int q = Vars::id("q"), t = Vars::id("t");
  std::map<int, MPoly> swap_qt{{q, MPoly::var("t")}, {t, MPoly::var("q")}};
  std::map<int, RatFun> invert{{q, RatFun(MPoly(1L), MPoly::var("q"))},
                               {t, RatFun(MPoly(1L), MPoly::var("t"))}};
  for (const Partition& mu : partitions_of(n)) {
    const SymFun<MPoly>& hmu = basis.at(mu);
    // H~_mu(t,q) = H~_{mu'}(q,t)
    const SymFun<MPoly>& hconj = basis.at(mu.conjugate());
    for (const Partition& la : partitions_of(n))
      if (hmu.coeff(la).substituted(swap_qt) != hconj.coeff(la)) return false;
    // H~_mu(q,t;z) = T_mu * omega H~_mu(1/q,1/t;z)
    MPoly tm = t_mu(mu);
    for (const Partition& la : partitions_of(n)) {
      RatFun rhs = RatFun(hmu.coeff(la.conjugate())).substituted(invert) * RatFun(tm);
      if (RatFun(hmu.coeff(la)) != rhs) return false;
    }
  }
  return true;
}

SymFun<RatFun> qt_inverse_special(int k, int n) {
  // q-integer alphabet [m]_q * Z as an alphabet expression
  auto qint_alphabet = [](int m) {
    Alphabet sum = Alphabet::constant(Rat(0));
    Alphabet q = Alphabet::var("q");
    Alphabet qpow = Alphabet::constant(Rat(1));
    for (int i = 0; i < m; ++i) {
      sum = sum + qpow * Alphabet::main();
      qpow = qpow * q;
    }
    return sum;
  };
  SymFun<RatFun> out(Basis::s);
  SymFun<MPoly> en(Basis::e);
  en.add_term(Partition::row(n), MPoly(1L));
  for (int i = 0; i <= k; ++i) {
    MPoly ei = e_k_of_monomials(i, q_int(n));
    RatFun scale(ei, MPoly::var("q", i * (n - 1)));
    if ((k - i) % 2 == 1) scale = -scale;
    scale = scale / RatFun(q_int(i + 1));
    SymFun<RatFun> term = convert(pleth(en, qint_alphabet(i + 1)), Basis::s);
    out += term.scaled(scale);
  }
  return out;
}

}  // namespace dharm
