#include "dharm/tensor.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "dharm/qstats.hpp"

namespace dharm {

namespace {

MPoly mpoly_pow(const MPoly& base, int e) {
  MPoly out(1L);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

// s_la(q_1..q_k) through the power-sum expansion of s_la.
MPoly schur_at_params(const Partition& la, const std::vector<MPoly>& params) {
  if (la.length() > static_cast<int>(params.size())) return MPoly(0L);
  if (la.length() == 0) return MPoly(1L);
  MPoly out(0L);
  for (const auto& [rho, c] : schur_to_p(la)) {
    MPoly prod(1L);
    for (int r : rho.parts()) {
      MPoly pr(0L);
      for (const MPoly& x : params) pr += mpoly_pow(x, r);
      prod = prod * pr;
    }
    out += prod * c;
  }
  return out;
}

}  // namespace

void TensorExp::add_term(const Partition& la, const Partition& mu, const Int& mult) {
  if (mu.size() != n_)
    throw std::invalid_argument("TensorExp: right factor " + mu.str() +
                                " does not have degree " + std::to_string(n_));
  if (mult == 0) return;
  auto key = std::make_pair(la, mu);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Int TensorExp::mult(const Partition& la, const Partition& mu) const {
  auto it = terms_.find(std::make_pair(la, mu));
  return it == terms_.end() ? Int(0) : it->second;
}

TensorExp& TensorExp::operator+=(const TensorExp& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("TensorExp: degree mismatch");
  for (const auto& [key, m] : rhs.terms_) add_term(key.first, key.second, m);
  return *this;
}

std::vector<Partition> TensorExp::right_support() const {
  std::map<Partition, int, PartitionOrder> seen;
  for (const auto& [key, m] : terms_) seen.emplace(key.second, 0);
  std::vector<Partition> out;
  out.reserve(seen.size());
  for (const auto& [mu, unused] : seen) out.push_back(mu);
  return out;
}

std::string TensorExp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first_mu = true;
  for (const Partition& mu : right_support()) {
    // Collect the left factor in canonical partition order.
    std::map<Partition, Int, PartitionOrder> left;
    for (const auto& [key, m] : terms_)
      if (key.second == mu) left.emplace(key.first, m);
    std::ostringstream ls;
    bool first_la = true;
    for (const auto& [la, m] : left) {
      std::string ms = m.get_str();
      if (!first_la && ms[0] != '-') ls << "+";
      first_la = false;
      if (la.length() == 0) {
        ls << ms;
      } else {
        if (ms == "-1")
          ls << "-";
        else if (ms != "1")
          ls << ms << "*";
        ls << "s[" << la.str() << "]";
      }
    }
    if (!first_mu) out << " + ";
    first_mu = false;
    std::string lhs = ls.str();
    out << (left.size() > 1 ? "(" + lhs + ")" : lhs);
    out << " (x) s[" << mu.str() << "]";
  }
  return out.str();
}

std::string TensorExp::to_json() const {
  nlohmann::json j;
  j["right_degree"] = n_;
  j["terms"] = nlohmann::json::array();
  for (const auto& [key, m] : terms_) {
    nlohmann::json term;
    term["lambda"] = key.first.parts();
    term["mu"] = key.second.parts();
    term["mult"] = m.get_si();
    j["terms"].push_back(std::move(term));
  }
  return j.dump(2);
}

GLCoefficient coefficient_of(const TensorExp& t, const Partition& mu) {
  if (mu.size() != t.right_degree())
    throw std::invalid_argument("coefficient_of: degree mismatch");
  GLCoefficient out(Basis::s);
  for (const auto& [key, m] : t.terms())
    if (key.second == mu) out.add_term(key.first, Rat(m));
  return out;
}

SymFun<MPoly> evaluate_params(const TensorExp& t, const std::vector<MPoly>& params) {
  SymFun<MPoly> out(Basis::s);
  std::map<Partition, MPoly, PartitionOrder> cache;
  for (const auto& [key, m] : t.terms()) {
    auto it = cache.find(key.first);
    if (it == cache.end()) it = cache.emplace(key.first, schur_at_params(key.first, params)).first;
    if (it->second.is_zero()) continue;
    out.add_term(key.second, it->second * Rat(m));
  }
  return out;
}

SymFun<MPoly> evaluate_qt(const TensorExp& t) {
  return evaluate_params(t, {MPoly::var("q"), MPoly::var("t")});
}

SymFun<Rat> evaluate_ones(const TensorExp& t, long k) {
  SymFun<Rat> out(Basis::s);
  for (const auto& [key, m] : t.terms()) {
    Rat d = schur_dim_eval(key.first, k);
    if (d != 0) out.add_term(key.second, d * Rat(m));
  }
  return out;
}

SymFun<MPoly> evaluate_ones_poly(const TensorExp& t, const std::string& kname) {
  SymFun<MPoly> out(Basis::s);
  std::map<Partition, MPoly, PartitionOrder> cache;
  for (const auto& [key, m] : t.terms()) {
    auto it = cache.find(key.first);
    if (it == cache.end()) it = cache.emplace(key.first, schur_dim_poly(key.first, kname)).first;
    out.add_term(key.second, it->second * Rat(m));
  }
  return out;
}

TensorExp skew_left(const TensorExp& t, const SymFun<Rat>& g) {
  TensorExp out(t.right_degree());
  std::map<Partition, SymFun<Rat>, PartitionOrder> cache;
  for (const auto& [key, m] : t.terms()) {
    auto it = cache.find(key.first);
    if (it == cache.end()) {
      SymFun<Rat> unit = SymFun<Rat>::unit(Basis::s, key.first);
      it = cache.emplace(key.first, perp(g, unit)).first;
    }
    for (const auto& [la, c] : it->second.terms()) {
      Rat w = c * Rat(m);
      if (w.get_den() != 1)
        throw std::invalid_argument("skew_left: non-integer multiplicity");
      out.add_term(la, key.second, w.get_num());
    }
  }
  return out;
}

TensorExp length_component(const TensorExp& t, int d) {
  if (d < 0) throw std::invalid_argument("length_component: d < 0");
  TensorExp out(t.right_degree());
  for (const auto& [key, m] : t.terms())
    if (key.first.length() == d) out.add_term(key.first, key.second, m);
  return out;
}

TensorExp reduced_length(const TensorExp& t, int k) {
  SymFun<Rat> ek = SymFun<Rat>::unit(Basis::e, Partition::row(k));
  return skew_left(length_component(t, k), ek);
}

std::map<Partition, GLCoefficient, PartitionOrder> to_e_format(const TensorExp& t) {
  std::map<Partition, GLCoefficient, PartitionOrder> out;
  for (const Partition& mu : t.right_support()) {
    GLCoefficient cmu = coefficient_of(t, mu);
    SymFun<Rat> smu_in_e = convert(SymFun<Rat>::unit(Basis::s, mu), Basis::e);
    for (const auto& [nu, w] : smu_in_e.terms()) {
      auto it = out.find(nu);
      if (it == out.end()) it = out.emplace(nu, GLCoefficient(Basis::s)).first;
      it->second += cmu.scaled_rat(w);
    }
  }
  return out;
}

}  // namespace dharm
