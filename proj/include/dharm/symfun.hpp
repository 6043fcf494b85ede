#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dharm/linsolve.hpp"
#include "dharm/mpoly.hpp"
#include "dharm/partition.hpp"
#include "dharm/ratfun.hpp"

namespace dharm {

enum class Basis { m, e, h, p, s, f };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// ---- coefficient-ring glue -------------------------------------------------

inline bool coef_is_zero(const Rat& c) { return c == 0; }
inline bool coef_is_zero(const MPoly& c) { return c.is_zero(); }
inline bool coef_is_zero(const RatFun& c) { return c.is_zero(); }

inline Rat coef_scale(const Rat& c, const Rat& r) { return c * r; }
inline MPoly coef_scale(const MPoly& c, const Rat& r) { return c * r; }
inline RatFun coef_scale(const RatFun& c, const Rat& r) { return c * RatFun(r); }

inline std::string coef_str(const Rat& c) { return c.get_str(); }
inline std::string coef_str(const MPoly& c) { return c.str(); }
inline std::string coef_str(const RatFun& c) { return c.str(); }

// ---- combinatorial kernels (implemented in symfun.cpp) ----------------------

/// Shapes obtained from la by adding a horizontal / vertical strip of k cells.
std::vector<Partition> add_horizontal_strips(const Partition& la, int k);
std::vector<Partition> add_vertical_strips(const Partition& la, int k);
/// Shapes obtained by removing a vertical strip of k cells (dual Pieri).
std::vector<Partition> remove_vertical_strips(const Partition& la, int k);

/// Irreducible character chi^la(mu) by Murnaghan-Nakayama, memoized.
Int mn_character(const Partition& la, const Partition& mu);

/// Transition matrices at fixed degree, rows/cols indexed by partitions_of(d)
/// order: to_s[b][j][i] = coefficient of s_{P_i} in b_{P_j}, and conversely.
const QMatrix& to_s_matrix(Basis b, int degree);
const QMatrix& from_s_matrix(Basis b, int degree);

/// p-expansion of a single Schur function: la -> { mu -> chi^la(mu)/z_mu }.
std::map<Partition, Rat, PartitionOrder> schur_to_p(const Partition& la);

// ---- SymFun -----------------------------------------------------------------

/// Finite formal sum of basis-indexed partitions with exact coefficients.
/// Inhomogeneous elements are allowed (terms of mixed degree).
template <class C>
class SymFun {
 public:
  using Terms = std::map<Partition, C, PartitionOrder>;

  explicit SymFun(Basis b = Basis::s) : basis_(b) {}
  static SymFun unit(Basis b, const Partition& mu, C coeff = C(1)) {
    SymFun f(b);
    f.add_term(mu, std::move(coeff));
    return f;
  }
  static SymFun one(Basis b = Basis::s) { return unit(b, Partition()); }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Partition& mu, C c) {
    if (coef_is_zero(c)) return;
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
      terms_.emplace(mu, std::move(c));
    } else {
      it->second = it->second + c;
      if (coef_is_zero(it->second)) terms_.erase(it);
    }
  }

  SymFun& operator+=(const SymFun& rhs) {
    require_same_basis(rhs);
    for (const auto& [mu, c] : rhs.terms_) accumulate(mu, c);
    return *this;
  }
  SymFun& operator-=(const SymFun& rhs) {
    require_same_basis(rhs);
    for (const auto& [mu, c] : rhs.terms_) accumulate(mu, C(0) - c);
    return *this;
  }
  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }

  SymFun scaled(const C& c) const {
    SymFun out(basis_);
    for (const auto& [mu, v] : terms_) out.add_unchecked(mu, v * c);
    return out;
  }
  SymFun scaled_rat(const Rat& r) const {
    SymFun out(basis_);
    for (const auto& [mu, v] : terms_) out.add_unchecked(mu, coef_scale(v, r));
    return out;
  }

  bool operator==(const SymFun& rhs) const {
    return basis_ == rhs.basis_ && terms_ == rhs.terms_;
  }
  bool operator!=(const SymFun& rhs) const { return !(*this == rhs); }

  int max_degree() const {
    int d = 0;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
    return d;
  }
  bool homogeneous() const {
    int d = -1;
    for (const auto& [mu, c] : terms_) {
      if (d < 0) d = mu.size();
      if (mu.size() != d) return false;
    }
    return true;
  }
  SymFun homogeneous_part(int d) const {
    SymFun out(basis_);
    for (const auto& [mu, c] : terms_)
      if (mu.size() == d) out.add_unchecked(mu, c);
    return out;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [mu, c] : terms_)
      if (out.empty() || out.back() != mu.size()) out.push_back(mu.size());
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      std::string cs = coef_str(c);
      if (cs != "1") {
        bool atom = cs.find_first_of("+- ") == std::string::npos;
        out << (atom ? cs : "(" + cs + ")") << "*";
      }
      out << basis_letter(basis_) << "[" << mu.str() << "]";
    }
    return out.str();
  }

 private:
  void require_same_basis(const SymFun& rhs) const {
    if (basis_ != rhs.basis_) throw std::invalid_argument("SymFun basis mismatch");
  }
  void accumulate(const Partition& mu, const C& c) {
    if (coef_is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(mu, c);
    if (!fresh) {
      it->second = it->second + c;
      if (coef_is_zero(it->second)) terms_.erase(it);
    }
  }
  void add_unchecked(const Partition& mu, C c) {
    if (!coef_is_zero(c)) terms_.emplace(mu, std::move(c));
  }

  Basis basis_;
  Terms terms_;
};

template <class C, class C2, class Fn>
SymFun<C2> map_coeffs(const SymFun<C>& f, Fn fn) {
  SymFun<C2> out(f.basis());
  for (const auto& [mu, c] : f.terms()) out.add_term(mu, fn(c));
  return out;
}

// ---- ring / Hall-module operations ------------------------------------------

template <class C>
SymFun<C> convert(const SymFun<C>& f, Basis target) {
  if (f.basis() == target) return f;
  SymFun<C> out(target);
  // degree by degree through the Schur pivot
  for (const auto& [mu, c] : f.terms()) {
    int d = mu.size();
    const auto& parts = partitions_of(d);
    const QMatrix* to_s = f.basis() == Basis::s ? nullptr : &to_s_matrix(f.basis(), d);
    const QMatrix* from_s = target == Basis::s ? nullptr : &from_s_matrix(target, d);
    // index of mu
    size_t j = 0;
    while (parts[j] != mu) ++j;
    std::vector<Rat> svec(parts.size(), Rat(0));
    if (to_s)
      svec = (*to_s)[j];
    else
      svec[j] = 1;
    if (!from_s) {
      for (size_t i = 0; i < parts.size(); ++i)
        if (svec[i] != 0) out.add_term(parts[i], coef_scale(c, svec[i]));
    } else {
      for (size_t k = 0; k < parts.size(); ++k) {
        if (svec[k] == 0) continue;
        for (size_t i = 0; i < parts.size(); ++i) {
          Rat w = svec[k] * (*from_s)[k][i];
          if (w != 0) out.add_term(parts[i], coef_scale(c, w));
        }
      }
    }
  }
  return out;
}

/// Graded product; computed in the power-sum basis where it is monomial-wise.
template <class C>
SymFun<C> mul(const SymFun<C>& a, const SymFun<C>& b) {
  SymFun<C> pa = convert(a, Basis::p);
  SymFun<C> pb = convert(b, Basis::p);
  SymFun<C> out(Basis::p);
  for (const auto& [la, ca] : pa.terms())
    for (const auto& [mu, cb] : pb.terms()) out.add_term(la.merged(mu), ca * cb);
  return convert(out, a.basis());
}

/// Hall scalar product <p_la, p_mu> = z_mu delta.
template <class C>
C hall(const SymFun<C>& a, const SymFun<C>& b) {
  SymFun<C> pa = convert(a, Basis::p);
  SymFun<C> pb = convert(b, Basis::p);
  C out(0);
  for (const auto& [mu, ca] : pa.terms()) {
    auto it = pb.terms().find(mu);
    if (it != pb.terms().end()) out = out + coef_scale(ca * it->second, Rat(mu.z()));
  }
  return out;
}

/// Adjoint of multiplication: f^perp g, via p_k^perp = k d/dp_k.
template <class C>
SymFun<C> perp(const SymFun<C>& f, const SymFun<C>& g) {
  SymFun<C> pf = convert(f, Basis::p);
  SymFun<C> pg = convert(g, Basis::p);
  SymFun<C> out(Basis::p);
  for (const auto& [la, cf] : pf.terms()) {
    for (const auto& [mu, cg] : pg.terms()) {
      // remove the parts of la from mu one by one
      std::vector<int> rest = mu.parts();
      Rat factor = 1;
      bool ok = true;
      for (int part : la.parts()) {
        int count = 0;
        auto hit = rest.end();
        for (auto it = rest.begin(); it != rest.end(); ++it)
          if (*it == part) {
            ++count;
            hit = it;
          }
        if (count == 0) {
          ok = false;
          break;
        }
        factor *= Rat(part) * count;
        rest.erase(hit);
      }
      if (ok) out.add_term(Partition(rest), coef_scale(cf * cg, factor));
    }
  }
  return convert(out, g.basis());
}

/// omega: s_la -> s_la', p_k -> (-1)^{k-1} p_k, e <-> h, m <-> f.
template <class C>
SymFun<C> omega(const SymFun<C>& f) {
  switch (f.basis()) {
    case Basis::e: {
      SymFun<C> out(Basis::h);
      for (const auto& [mu, c] : f.terms()) out.add_term(mu, c);
      return out;
    }
    case Basis::h: {
      SymFun<C> out(Basis::e);
      for (const auto& [mu, c] : f.terms()) out.add_term(mu, c);
      return out;
    }
    case Basis::m: {
      SymFun<C> out(Basis::f);
      for (const auto& [mu, c] : f.terms()) out.add_term(mu, c);
      return out;
    }
    case Basis::f: {
      SymFun<C> out(Basis::m);
      for (const auto& [mu, c] : f.terms()) out.add_term(mu, c);
      return out;
    }
    case Basis::s: {
      SymFun<C> out(Basis::s);
      for (const auto& [mu, c] : f.terms()) out.add_term(mu.conjugate(), c);
      return out;
    }
    case Basis::p: {
      SymFun<C> out(Basis::p);
      for (const auto& [mu, c] : f.terms()) {
        int sign = ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
        out.add_term(mu, coef_scale(c, Rat(sign)));
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

/// e_k^perp on the Schur basis by the dual Pieri rule.
template <class C>
SymFun<C> ek_perp(int k, const SymFun<C>& f) {
  if (k == 0) return convert(f, Basis::s);
  SymFun<C> fs = convert(f, Basis::s);
  SymFun<C> out(Basis::s);
  for (const auto& [la, c] : fs.terms())
    for (const Partition& nu : remove_vertical_strips(la, k)) out.add_term(nu, c);
  return out;
}

/// Maximal number of parts over nonzero Schur terms; 0 for constants.
template <class C>
int sym_length(const SymFun<C>& f) {
  SymFun<C> fs = convert(f, Basis::s);
  int len = 0;
  for (const auto& [la, c] : fs.terms()) len = std::max(len, la.length());
  return len;
}

/// Schur positivity: all Schur coefficients are polynomials with
/// nonnegative integer coefficients.
bool schur_positive(const SymFun<MPoly>& f);
bool schur_positive(const SymFun<Rat>& f);

/// Rewrites a q,t-symmetric polynomial as an integer combination of
/// two-row Schur polynomials s_{(a,b)}(q,t) by peeling dominance-leading
/// terms; throws std::invalid_argument if the input is not symmetric.
std::map<Partition, Rat, PartitionOrder> schur_expand_two_params(const MPoly& p);

/// s_{(a,b)}(q,t) as an MPoly in named variables.
MPoly schur_two_rows(int a, int b, const std::string& qname, const std::string& tname);

/// Evaluation at the single-variable alphabet {v}: s_la -> v^{|la|} for
/// one-row la, 0 otherwise.
MPoly eval_single_var(const SymFun<MPoly>& f, const std::string& var);

}  // namespace dharm
