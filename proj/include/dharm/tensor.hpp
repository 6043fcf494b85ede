#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dharm/mpoly.hpp"
#include "dharm/partition.hpp"
#include "dharm/symfun.hpp"

namespace dharm {

/// GL_infinity character: c_mu = sum_lambda c_{lambda,mu} s_lambda in the
/// q-alphabet, Schur basis.
using GLCoefficient = SymFun<Rat>;

/// A sum  sum c_{lambda,mu} s_lambda (x) s_mu  where every right factor mu
/// is a partition of the same degree n.  Multiplicities are integers.
class TensorExp {
 public:
  using TermMap = std::map<std::pair<Partition, Partition>, Int, PartitionPairOrder>;

  explicit TensorExp(int right_degree) : n_(right_degree) {}

  int right_degree() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds mult * s_lambda (x) s_mu; requires |mu| == right_degree.
  void add_term(const Partition& la, const Partition& mu, const Int& mult);

  Int mult(const Partition& la, const Partition& mu) const;

  TensorExp& operator+=(const TensorExp& rhs);
  friend TensorExp operator+(TensorExp a, const TensorExp& b) { return a += b; }
  bool operator==(const TensorExp& rhs) const {
    return n_ == rhs.n_ && terms_ == rhs.terms_;
  }

  /// Right factors present, in canonical partition order.
  std::vector<Partition> right_support() const;

  /// Canonical text, e.g. "1 (x) s[4] + (s[1]+s[2]) (x) s[3,1]".
  std::string str() const;
  /// JSON object {"right_degree": n, "terms": [{"lambda": [...], "mu": [...],
  /// "mult": m}, ...]}.
  std::string to_json() const;

 private:
  int n_;
  TermMap terms_;
};

/// Extracts c_mu = sum_lambda c_{lambda,mu} s_lambda.
GLCoefficient coefficient_of(const TensorExp& t, const Partition& mu);

/// Evaluates the left factors at the finite alphabet params = q_1..q_k:
/// sum_mu c_mu(q_1..q_k) s_mu(z).  Left factors with more than k parts
/// vanish.
SymFun<MPoly> evaluate_params(const TensorExp& t, const std::vector<MPoly>& params);

/// evaluate_params at the two-letter alphabet (q, t).
SymFun<MPoly> evaluate_qt(const TensorExp& t);

/// Left factors evaluated at 1^k (k equal parameters set to 1), numeric k.
SymFun<Rat> evaluate_ones(const TensorExp& t, long k);

/// Left factors evaluated at 1^k with k a polynomial indeterminate.
SymFun<MPoly> evaluate_ones_poly(const TensorExp& t, const std::string& kname = "k");

/// Applies g-perp to every left factor; g must have integer Schur expansion
/// effect on the support (the result's multiplicities stay integers).
TensorExp skew_left(const TensorExp& t, const SymFun<Rat>& g);

/// Terms whose left factor has exactly d parts.
TensorExp length_component(const TensorExp& t, int d);

/// e_k-perp applied to the left of the length-k component.
TensorExp reduced_length(const TensorExp& t, int k);

/// Rewrites the right factors in the elementary basis:
/// t = sum_nu d_nu (x) e_nu; returns nu -> d_nu.
std::map<Partition, GLCoefficient, PartitionOrder> to_e_format(const TensorExp& t);

}  // namespace dharm
