#include "dharm/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dharm {

namespace {

struct VarTable {
  std::vector<std::string> names{"q", "t", "u", "k"};
  std::map<std::string, int> ids{{"q", 0}, {"t", 1}, {"u", 2}, {"k", 3}};
  std::mutex mu;
};

VarTable& table() {
  static VarTable t;
  return t;
}

void trim(Mono& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

int mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace

int Vars::id(const std::string& name) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  int id = static_cast<int>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return id;
}

const std::string& Vars::name(int id) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names.at(static_cast<size_t>(id));
}

bool MonoOrder::operator()(const Mono& a, const Mono& b) const {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int ea = i < a.size() ? a[i] : 0;
    int eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace(Mono{}, Rat(c));
}

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

MPoly::MPoly(const Int& c) {
  if (c != 0) terms_.emplace(Mono{}, Rat(c));
}

MPoly MPoly::var(const std::string& name, int exp) {
  MPoly p;
  if (exp == 0) return MPoly(1L);
  Mono m(static_cast<size_t>(Vars::id(name)) + 1, 0);
  m.back() = exp;
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat MPoly::constant() const {
  Mono empty;
  auto it = terms_.find(empty);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.begin()->first);  // grlex: first term has max degree
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    if (static_cast<size_t>(var) < m.size()) d = std::max(d, m[static_cast<size_t>(var)]);
  return d;
}

MPoly MPoly::operator-() const {
  MPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, fresh] = terms_.emplace(m, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Mono m(std::max(ma.size(), mb.size()), 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      Rat c = ca * cb;
      auto [it, fresh] = out.terms_.emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MPoly MPoly::pow(int e) const {
  MPoly out(1L);
  MPoly base = *this;
  for (int n = e; n > 0; n >>= 1) {
    if (n & 1) out *= base;
    if (n > 1) base *= base;
  }
  return out;
}

bool MPoly::less_than(const MPoly& rhs) const {
  auto a = terms_.begin(), b = rhs.terms_.begin();
  MonoOrder lt;
  for (; a != terms_.end() && b != rhs.terms_.end(); ++a, ++b) {
    if (lt(a->first, b->first)) return true;
    if (lt(b->first, a->first)) return false;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == terms_.end() && b != rhs.terms_.end();
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  MPoly rem = *this;
  MPoly quot;
  const auto& [dm, dc] = *d.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    Mono qm(std::max(rm.size(), dm.size()), 0);
    for (size_t i = 0; i < qm.size(); ++i) {
      int e = (i < rm.size() ? rm[i] : 0) - (i < dm.size() ? dm[i] : 0);
      if (e < 0) return std::nullopt;  // leading monomial not divisible
      qm[i] = e;
    }
    trim(qm);
    MPoly t;
    t.terms_.emplace(std::move(qm), rc / dc);
    quot += t;
    rem -= t * d;  // cancels the leading term, so this terminates
  }
  return quot;
}

MPoly MPoly::derivative(int var) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    if (static_cast<size_t>(var) >= m.size() || m[static_cast<size_t>(var)] == 0) continue;
    Mono d = m;
    int e = d[static_cast<size_t>(var)]--;
    trim(d);
    out.terms_.emplace(std::move(d), c * e);
  }
  return out;
}

MPoly MPoly::substituted(const std::map<int, MPoly>& bindings) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    MPoly term(c);
    Mono rest;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = bindings.find(static_cast<int>(i));
      if (it == bindings.end()) {
        if (rest.size() <= i) rest.resize(i + 1, 0);
        rest[i] = m[i];
      } else {
        term *= it->second.pow(m[i]);
      }
    }
    trim(rest);
    if (!rest.empty()) {
      MPoly mono;
      mono.terms_.emplace(std::move(rest), Rat(1));
      term *= mono;
    }
    out += term;
  }
  return out;
}

Rat MPoly::content() const {
  if (terms_.empty()) return Rat(0);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat g(num_gcd, den_lcm);
  g.canonicalize();
  if (terms_.begin()->second < 0) g = -g;
  return g;
}

Mono MPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Mono out = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < out.size(); ++i)
      out[i] = std::min(out[i], i < m.size() ? m[i] : 0);
    if (m.size() < out.size()) out.resize(m.size());
  }
  trim(out);
  return out;
}

MPoly MPoly::divided_by_monomial(const Mono& m) const {
  if (m.empty()) return *this;
  MPoly out;
  for (const auto& [mm, c] : terms_) {
    Mono d = mm;
    for (size_t i = 0; i < m.size(); ++i) d[i] -= m[i];
    trim(d);
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

void MPoly::set_term(const Mono& m, const Rat& c) {
  Mono mm = m;
  trim(mm);
  if (c == 0)
    terms_.erase(mm);
  else
    terms_[mm] = c;
}

Rat MPoly::coefficient(const Mono& m) const {
  Mono mm = m;
  trim(mm);
  auto it = terms_.find(mm);
  return it == terms_.end() ? Rat(0) : it->second;
}

MPoly MPoly::coefficient_of(int var, int e) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    int got = static_cast<size_t>(var) < m.size() ? m[static_cast<size_t>(var)] : 0;
    if (got != e) continue;
    Mono rest = m;
    if (static_cast<size_t>(var) < rest.size()) rest[static_cast<size_t>(var)] = 0;
    trim(rest);
    out.terms_.emplace(std::move(rest), c);
  }
  return out;
}

bool MPoly::nonneg_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool MPoly::integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = !m.empty();
    if (!has_vars || a != 1) {
      out << a.get_str();
      if (has_vars) out << "*";
    }
    bool firstv = true;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!firstv) out << "*";
      firstv = false;
      out << Vars::name(static_cast<int>(i));
      if (m[i] != 1) out << "^" << m[i];
    }
  }
  return out.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (pos < s.size()) ++pos;
    return c;
  }
};

MPoly parse_factor(Lexer& lx) {
  char c = lx.peek();
  if (c == '(') {
    lx.take();
    // sub-expression: re-enter term/sum parsing
    std::string inner;
    int depth = 1;
    while (lx.pos < lx.s.size() && depth > 0) {
      char ch = lx.s[lx.pos++];
      if (ch == '(') ++depth;
      if (ch == ')') {
        --depth;
        if (depth == 0) break;
      }
      inner += ch;
    }
    MPoly p = MPoly::parse(inner);
    if (lx.peek() == '^') {
      lx.take();
      std::string num;
      while (std::isdigit(static_cast<unsigned char>(lx.peek()))) num += lx.take();
      p = p.pow(std::stoi(num));
    }
    return p;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string num;
    while (std::isdigit(static_cast<unsigned char>(lx.peek())) || lx.peek() == '/')
      num += lx.take();
    return MPoly(Rat(num));
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(lx.peek())) || lx.peek() == '_')
      name += lx.take();
    int e = 1;
    if (lx.peek() == '^') {
      lx.take();
      std::string num;
      if (lx.peek() == '-') num += lx.take();
      while (std::isdigit(static_cast<unsigned char>(lx.peek()))) num += lx.take();
      e = std::stoi(num);
    }
    return MPoly::var(name, e);
  }
  throw std::invalid_argument("MPoly::parse: unexpected character '" + std::string(1, c) + "'");
}

MPoly parse_term(Lexer& lx) {
  MPoly p = parse_factor(lx);
  while (lx.peek() == '*') {
    lx.take();
    p *= parse_factor(lx);
  }
  return p;
}

}  // namespace

MPoly MPoly::parse(const std::string& text) {
  Lexer lx{text};
  MPoly out;
  bool neg = false;
  if (lx.peek() == '-') {
    lx.take();
    neg = true;
  } else if (lx.peek() == '+') {
    lx.take();
  }
  while (lx.peek() != '\0') {
    MPoly term = parse_term(lx);
    out += neg ? -term : term;
    char c = lx.peek();
    if (c == '\0') break;
    if (c == '+') {
      neg = false;
      lx.take();
    } else if (c == '-') {
      neg = true;
      lx.take();
    } else {
      throw std::invalid_argument("MPoly::parse: expected +/- at '" + std::string(1, c) + "'");
    }
  }
  return out;
}

}  // namespace dharm
