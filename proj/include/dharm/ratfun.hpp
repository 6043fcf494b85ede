#pragma once

#include <map>
#include <optional>
#include <string>

#include "dharm/mpoly.hpp"

namespace dharm {

/// Element of the fraction field of Q[q,t,u,...]. Reduced by rational
/// content, monomial gcd, and exact polynomial division when it succeeds;
/// full multivariate gcd is not attempted, equality is by cross product.
class RatFun {
 public:
  RatFun() : num_(), den_(1L) {}
  RatFun(long c) : num_(c), den_(1L) {}           // NOLINT
  RatFun(const Rat& c) : num_(c), den_(1L) {}     // NOLINT
  RatFun(const MPoly& p) : num_(p), den_(1L) {}   // NOLINT
  RatFun(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The value as a polynomial, also trying exact division.
  std::optional<MPoly> to_poly() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& rhs);
  RatFun& operator-=(const RatFun& rhs);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator*=(const RatFun& rhs) { return *this = *this * rhs; }
  RatFun& operator/=(const RatFun& rhs) { return *this = *this / rhs; }

  bool operator==(const RatFun& rhs) const;
  bool operator!=(const RatFun& rhs) const { return !(*this == rhs); }
  bool less_than(const RatFun& rhs) const;

  /// Substitution; throws std::domain_error if the denominator vanishes.
  RatFun substituted(const std::map<int, RatFun>& bindings) const;

  std::string str() const;  // "num" or "(num)/(den)"
  static RatFun parse(const std::string& text);

 private:
  void normalize();
  MPoly num_, den_;
};

}  // namespace dharm
