#pragma once

#include <memory>
#include <string>

#include "dharm/symfun.hpp"

namespace dharm {

/// Formal alphabet for plethystic substitution. Leaves are named variables,
/// rational constants, the sign eps (p_k[eps] = (-1)^k), and the main
/// symmetric-function alphabet (spelled Z or Q in text form); internal nodes
/// are sums, differences, products, quotients.
class Alphabet {
 public:
  static Alphabet var(const std::string& name);
  static Alphabet constant(const Rat& c);
  static Alphabet eps();
  static Alphabet main();  // the formal alphabet the result lives over

  friend Alphabet operator+(const Alphabet& a, const Alphabet& b);
  friend Alphabet operator-(const Alphabet& a, const Alphabet& b);
  friend Alphabet operator*(const Alphabet& a, const Alphabet& b);
  friend Alphabet operator/(const Alphabet& a, const Alphabet& b);

  /// "q - eps*u", "1 + Q", "Z/(1-q)", "(5)*Z", "3*Z".
  static Alphabet parse(const std::string& text);

  /// p_k of this alphabet: constant part plus a p-basis polynomial in the
  /// main alphabet. Throws std::domain_error on a quotient whose
  /// denominator's p_k is zero, std::invalid_argument when a denominator
  /// involves the main alphabet.
  SymFun<RatFun> p_image(int k) const;

  std::string str() const;

 private:
  struct Node;
  explicit Alphabet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Plethysm f[a]: expand f in the power sums and substitute p_k -> p_k[a].
/// The result is in the p basis over the main alphabet; its coefficient of
/// the empty partition carries any purely scalar part.
SymFun<RatFun> pleth(const SymFun<RatFun>& f, const Alphabet& a);
SymFun<RatFun> pleth(const SymFun<MPoly>& f, const Alphabet& a);
SymFun<RatFun> pleth(const SymFun<Rat>& f, const Alphabet& a);

/// For homogeneous f of degree n: f[q - eps*u]/(q + u)
///   = sum_{a+b=n-1} <f, s_{(a|b)}> q^a u^b.
/// Throws std::logic_error if the division is not exact.
MPoly hook_content_eval(const SymFun<MPoly>& f);
MPoly hook_content_eval(const SymFun<Rat>& f);

/// sum_k u^k (e_k^perp f)(q) == f[q - eps*u], both sides exact.
bool skew_generating_check(const SymFun<MPoly>& f, const std::string& qname = "q",
                           const std::string& uname = "u");

enum class ScalarMode { cZ, Z_over_1mq, one_plus_Q };

/// Common scalar-alphabet evaluations: c*Z, Z/(1-q), 1+Q.
SymFun<RatFun> scalar_alphabet_eval(const SymFun<MPoly>& f, const Rat& c, ScalarMode mode);

}  // namespace dharm
