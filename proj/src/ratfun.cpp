#include "dharm/ratfun.hpp"

#include <stdexcept>

namespace dharm {

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1L);
    return;
  }
  if (!den_.is_constant()) {
    Mono mg = num_.monomial_content();
    Mono dg = den_.monomial_content();
    Mono common(std::min(mg.size(), dg.size()), 0);
    bool any = false;
    for (size_t i = 0; i < common.size(); ++i) {
      common[i] = std::min(mg[i], dg[i]);
      any |= common[i] > 0;
    }
    if (any) {
      num_ = num_.divided_by_monomial(common);
      den_ = den_.divided_by_monomial(common);
    }
    if (auto q = num_.divide_exact(den_)) {
      num_ = *q;
      den_ = MPoly(1L);
    }
  }
  Rat dc = den_.content();
  if (dc != 1) {
    MPoly scale(Rat(1) / dc);
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

std::optional<MPoly> RatFun::to_poly() const {
  if (den_.is_constant()) {
    Rat d = den_.constant();
    return d == 1 ? num_ : num_ * MPoly(Rat(1) / d);
  }
  return num_.divide_exact(den_);
}

RatFun RatFun::operator-() const {
  RatFun out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    normalize();
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
    normalize();
    return *this;
  }
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool RatFun::operator==(const RatFun& rhs) const {
  if (num_ == rhs.num_ && den_ == rhs.den_) return true;
  return num_ * rhs.den_ == rhs.num_ * den_;
}

bool RatFun::less_than(const RatFun& rhs) const {
  if (num_.less_than(rhs.num_)) return true;
  if (rhs.num_.less_than(num_)) return false;
  return den_.less_than(rhs.den_);
}

RatFun RatFun::substituted(const std::map<int, RatFun>& bindings) const {
  // Substitute monomial by monomial to keep everything exact.
  auto subst_poly = [&bindings](const MPoly& p) {
    RatFun out(0L);
    for (const auto& [m, c] : p.terms()) {
      RatFun term((Rat(c)));
      Mono rest;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        auto it = bindings.find(static_cast<int>(i));
        if (it == bindings.end()) {
          MPoly v = MPoly::var(Vars::name(static_cast<int>(i)), m[i]);
          term *= RatFun(v);
        } else {
          RatFun b = it->second;
          for (int e = 0; e < m[i]; ++e) term *= b;
        }
      }
      out += term;
    }
    return out;
  };
  RatFun d = subst_poly(den_);
  if (d.is_zero()) throw std::domain_error("RatFun: pole under substitution");
  return subst_poly(num_) / d;
}

std::string RatFun::str() const {
  if (den_ == MPoly(1L)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun RatFun::parse(const std::string& text) {
  auto sep = text.find(")/(");
  if (!text.empty() && text.front() == '(' && sep != std::string::npos && text.back() == ')') {
    MPoly num = MPoly::parse(text.substr(1, sep - 1));
    MPoly den = MPoly::parse(text.substr(sep + 3, text.size() - sep - 4));
    return RatFun(std::move(num), std::move(den));
  }
  return RatFun(MPoly::parse(text));
}

}  // namespace dharm
