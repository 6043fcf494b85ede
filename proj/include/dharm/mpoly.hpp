#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dharm/partition.hpp"

namespace dharm {

/// Global indeterminate registry with a fixed order: q < t < u < k, then
/// further names in registration order. Exponent vectors are indexed by id.
class Vars {
 public:
  static int id(const std::string& name);
  static const std::string& name(int id);
};

/// Exponent vector indexed by variable id; trailing zeros trimmed.
using Mono = std::vector<int>;

/// Graded lexicographic, higher monomial first (canonical print order).
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const;
};

/// Exact sparse multivariate polynomial over Q.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c);                // NOLINT: implicit scalars are convenient
  MPoly(const Rat& c);          // NOLINT
  MPoly(const Int& c);          // NOLINT
  static MPoly var(const std::string& name, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the whole value when is_constant()).
  Rat constant() const;

  int total_degree() const;   // -1 for zero
  int degree_in(int var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& rhs) { return *this = *this * rhs; }
  MPoly pow(int e) const;

  bool operator==(const MPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const MPoly& rhs) const { return !(*this == rhs); }
  /// Total order for use as map key (term-wise on the canonical form).
  bool less_than(const MPoly& rhs) const;

  /// Exact division; returns nullopt when d does not divide exactly.
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  MPoly derivative(int var) const;

  /// Substitution homomorphism; vars absent from bindings stay formal.
  MPoly substituted(const std::map<int, MPoly>& bindings) const;

  /// gcd of coefficients carrying the sign of the leading coefficient;
  /// Rat(0) for the zero polynomial.
  Rat content() const;
  /// Componentwise-min exponent vector over all terms.
  Mono monomial_content() const;
  MPoly divided_by_monomial(const Mono& m) const;

  const std::map<Mono, Rat, MonoOrder>& terms() const { return terms_; }
  void set_term(const Mono& m, const Rat& c);
  Rat coefficient(const Mono& m) const;
  /// Coefficient of var^e, as a polynomial in the remaining variables.
  MPoly coefficient_of(int var, int e) const;

  /// All coefficients nonnegative (integrality not required).
  bool nonneg_coefficients() const;
  bool integer_coefficients() const;

  std::string str() const;
  static MPoly parse(const std::string& text);

 private:
  std::map<Mono, Rat, MonoOrder> terms_;
};

inline MPoly operator*(const MPoly& a, const Rat& c) { return a * MPoly(c); }
inline MPoly operator*(const Rat& c, const MPoly& a) { return a * MPoly(c); }
inline MPoly operator*(const MPoly& a, long c) { return a * MPoly(c); }
inline MPoly operator*(long c, const MPoly& a) { return a * MPoly(c); }

}  // namespace dharm
