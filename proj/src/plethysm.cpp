#include "dharm/plethysm.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dharm {

namespace {
enum class Kind { kVar, kConst, kEps, kMain, kSum, kDiff, kProd, kQuot };
}

struct Alphabet::Node {
  Kind kind;
  std::string name;  // kVar
  Rat value;         // kConst
  std::shared_ptr<const Node> lhs, rhs;
};

Alphabet Alphabet::var(const std::string& name) {
  return Alphabet(std::make_shared<Node>(Node{Kind::kVar, name, Rat(0), nullptr, nullptr}));
}
Alphabet Alphabet::constant(const Rat& c) {
  return Alphabet(std::make_shared<Node>(Node{Kind::kConst, "", c, nullptr, nullptr}));
}
Alphabet Alphabet::eps() {
  return Alphabet(std::make_shared<Node>(Node{Kind::kEps, "", Rat(0), nullptr, nullptr}));
}
Alphabet Alphabet::main() {
  return Alphabet(std::make_shared<Node>(Node{Kind::kMain, "", Rat(0), nullptr, nullptr}));
}

Alphabet operator+(const Alphabet& a, const Alphabet& b) {
  return Alphabet(std::make_shared<Alphabet::Node>(
      Alphabet::Node{Kind::kSum, "", Rat(0), a.node_, b.node_}));
}
Alphabet operator-(const Alphabet& a, const Alphabet& b) {
  return Alphabet(std::make_shared<Alphabet::Node>(
      Alphabet::Node{Kind::kDiff, "", Rat(0), a.node_, b.node_}));
}
Alphabet operator*(const Alphabet& a, const Alphabet& b) {
  return Alphabet(std::make_shared<Alphabet::Node>(
      Alphabet::Node{Kind::kProd, "", Rat(0), a.node_, b.node_}));
}
Alphabet operator/(const Alphabet& a, const Alphabet& b) {
  return Alphabet(std::make_shared<Alphabet::Node>(
      Alphabet::Node{Kind::kQuot, "", Rat(0), a.node_, b.node_}));
}

namespace {

// product of two p-basis expressions over the same alphabet (multiplicative)
SymFun<RatFun> p_mul(const SymFun<RatFun>& a, const SymFun<RatFun>& b) {
  SymFun<RatFun> out(Basis::p);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [mu, cb] : b.terms()) out.add_term(la.merged(mu), ca * cb);
  return out;
}

}  // namespace

SymFun<RatFun> Alphabet::p_image(int k) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kVar:
      return SymFun<RatFun>::unit(Basis::p, Partition(), RatFun(MPoly::var(n.name, k)));
    case Kind::kConst:
      return SymFun<RatFun>::unit(Basis::p, Partition(), RatFun(n.value));
    case Kind::kEps:
      return SymFun<RatFun>::unit(Basis::p, Partition(), RatFun(Rat(k % 2 == 0 ? 1 : -1)));
    case Kind::kMain:
      return SymFun<RatFun>::unit(Basis::p, Partition({k}), RatFun(1L));
    case Kind::kSum:
      return Alphabet(n.lhs).p_image(k) + Alphabet(n.rhs).p_image(k);
    case Kind::kDiff:
      return Alphabet(n.lhs).p_image(k) - Alphabet(n.rhs).p_image(k);
    case Kind::kProd:
      return p_mul(Alphabet(n.lhs).p_image(k), Alphabet(n.rhs).p_image(k));
    case Kind::kQuot: {
      SymFun<RatFun> den = Alphabet(n.rhs).p_image(k);
      for (const auto& [mu, c] : den.terms())
        if (!mu.empty())
          throw std::invalid_argument("alphabet quotient: denominator involves the main alphabet");
      RatFun d = den.coeff(Partition());
      if (d.is_zero()) throw std::domain_error("alphabet quotient: p_k of denominator is zero");
      SymFun<RatFun> num = Alphabet(n.lhs).p_image(k);
      SymFun<RatFun> out(Basis::p);
      for (const auto& [mu, c] : num.terms()) out.add_term(mu, c / d);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::string Alphabet::str() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kVar: return n.name;
    case Kind::kConst: return n.value.get_str();
    case Kind::kEps: return "eps";
    case Kind::kMain: return "Z";
    case Kind::kSum: return "(" + Alphabet(n.lhs).str() + " + " + Alphabet(n.rhs).str() + ")";
    case Kind::kDiff: return "(" + Alphabet(n.lhs).str() + " - " + Alphabet(n.rhs).str() + ")";
    case Kind::kProd: return Alphabet(n.lhs).str() + "*" + Alphabet(n.rhs).str();
    case Kind::kQuot: return Alphabet(n.lhs).str() + "/" + Alphabet(n.rhs).str();
  }
  throw std::logic_error("unreachable");
}

// ---- text form ---------------------------------------------------------------

namespace {

struct AlphaParser {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Alphabet expr() {
    Alphabet out = term();
    for (;;) {
      if (eat('+'))
        out = out + term();
      else if (eat('-'))
        out = out - term();
      else
        return out;
    }
  }
  Alphabet term() {
    Alphabet out = atom();
    for (;;) {
      if (eat('*'))
        out = out * atom();
      else if (eat('/'))
        out = out / atom();
      else
        return out;
    }
  }
  Alphabet atom() {
    skip();
    if (pos >= s.size()) throw std::invalid_argument("alphabet: unexpected end of input");
    if (eat('(')) {
      Alphabet out = expr();
      if (!eat(')')) throw std::invalid_argument("alphabet: missing ')'");
      return out;
    }
    if (eat('-')) return Alphabet::constant(Rat(0)) - atom();
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      // a fraction only when '/' is immediately followed by a digit
      if (pos + 1 < s.size() && s[pos] == '/' &&
          std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      }
      Rat c(s.substr(start, pos - start));
      c.canonicalize();
      return Alphabet::constant(c);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string word = s.substr(start, pos - start);
      if (word == "eps") return Alphabet::eps();
      if (word == "Z" || word == "Q") return Alphabet::main();
      return Alphabet::var(word);
    }
    throw std::invalid_argument(std::string("alphabet: unexpected character '") + c + "'");
  }
};

}  // namespace

Alphabet Alphabet::parse(const std::string& text) {
  AlphaParser p{text};
  Alphabet out = p.expr();
  p.skip();
  if (p.pos != text.size()) throw std::invalid_argument("alphabet: trailing input");
  return out;
}

// ---- pleth --------------------------------------------------------------------

SymFun<RatFun> pleth(const SymFun<RatFun>& f, const Alphabet& a) {
  // through the power sums; Schur terms go via characters so that high
  // degrees avoid full transition matrices
  SymFun<RatFun> fp(Basis::p);
  if (f.basis() == Basis::p) {
    fp = f;
  } else if (f.basis() == Basis::s) {
    for (const auto& [la, c] : f.terms())
      for (const auto& [mu, w] : schur_to_p(la)) fp.add_term(mu, coef_scale(c, w));
  } else {
    fp = convert(f, Basis::p);
  }
  // cache p_k images
  std::map<int, SymFun<RatFun>> images;
  SymFun<RatFun> out(Basis::p);
  for (const auto& [mu, c] : fp.terms()) {
    SymFun<RatFun> prod = SymFun<RatFun>::unit(Basis::p, Partition(), RatFun(1L));
    for (int k : mu.parts()) {
      auto it = images.find(k);
      if (it == images.end()) it = images.emplace(k, a.p_image(k)).first;
      // multiplicative product in the p basis
      SymFun<RatFun> next(Basis::p);
      for (const auto& [la, ca] : prod.terms())
        for (const auto& [nu, cb] : it->second.terms()) next.add_term(la.merged(nu), ca * cb);
      prod = std::move(next);
    }
    out += prod.scaled(c);
  }
  return out;
}

SymFun<RatFun> pleth(const SymFun<MPoly>& f, const Alphabet& a) {
  return pleth(map_coeffs<MPoly, RatFun>(f, [](const MPoly& c) { return RatFun(c); }), a);
}
SymFun<RatFun> pleth(const SymFun<Rat>& f, const Alphabet& a) {
  return pleth(map_coeffs<Rat, RatFun>(f, [](const Rat& c) { return RatFun(c); }), a);
}

namespace {

MPoly scalar_poly(const SymFun<RatFun>& g, const char* who) {
  MPoly out(0L);
  for (const auto& [mu, c] : g.terms()) {
    if (!mu.empty()) throw std::logic_error(std::string(who) + ": result not scalar");
    auto p = c.to_poly();
    if (!p) throw std::logic_error(std::string(who) + ": result not polynomial");
    out += *p;
  }
  return out;
}

MPoly hook_content_eval_impl(const SymFun<RatFun>& f) {
  Alphabet a = Alphabet::var("q") - Alphabet::eps() * Alphabet::var("u");
  MPoly val = scalar_poly(pleth(f, a), "hook_content_eval");
  auto divided = val.divide_exact(MPoly::var("q") + MPoly::var("u"));
  if (!divided)
    throw std::logic_error("hook_content_eval: f[q - eps*u] not divisible by q + u");
  return *divided;
}

}  // namespace

MPoly hook_content_eval(const SymFun<MPoly>& f) {
  return hook_content_eval_impl(map_coeffs<MPoly, RatFun>(f, [](const MPoly& c) { return RatFun(c); }));
}
MPoly hook_content_eval(const SymFun<Rat>& f) {
  return hook_content_eval_impl(map_coeffs<Rat, RatFun>(f, [](const Rat& c) { return RatFun(c); }));
}

bool skew_generating_check(const SymFun<MPoly>& f, const std::string& qname,
                           const std::string& uname) {
  Alphabet a = Alphabet::var(qname) - Alphabet::eps() * Alphabet::var(uname);
  MPoly rhs = scalar_poly(pleth(f, a), "skew_generating_check");
  MPoly lhs(0L);
  for (int k = 0; k <= f.max_degree(); ++k)
    lhs += MPoly::var(uname, k) * eval_single_var(ek_perp(k, f), qname);
  return lhs == rhs;
}

SymFun<RatFun> scalar_alphabet_eval(const SymFun<MPoly>& f, const Rat& c, ScalarMode mode) {
  switch (mode) {
    case ScalarMode::cZ:
      return pleth(f, Alphabet::constant(c) * Alphabet::main());
    case ScalarMode::Z_over_1mq:
      return pleth(f, Alphabet::main() / (Alphabet::constant(Rat(1)) - Alphabet::var("q")));
    case ScalarMode::one_plus_Q:
      return pleth(f, Alphabet::constant(Rat(1)) + Alphabet::main());
  }
  throw std::logic_error("unreachable");
}

}  // namespace dharm
