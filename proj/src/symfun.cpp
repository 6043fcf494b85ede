#include "dharm/symfun.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace dharm {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::e: return 'e';
    case Basis::h: return 'h';
    case Basis::p: return 'p';
    case Basis::s: return 's';
    case Basis::f: return 'f';
  }
  throw std::logic_error("unreachable");
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'm': return Basis::m;
    case 'e': return Basis::e;
    case 'h': return Basis::h;
    case 'p': return Basis::p;
    case 's': return Basis::s;
    case 'f': return Basis::f;
  }
  throw std::invalid_argument(std::string("unknown basis letter: ") + c);
}

std::vector<Partition> add_horizontal_strips(const Partition& la, int k) {
  // mu/la a horizontal strip of size k: la_i <= mu_i <= la_{i-1} row-wise.
  std::vector<Partition> out;
  int rows = la.length() + 1;
  std::vector<int> inc(rows, 0);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == rows) {
      if (left != 0) return;
      std::vector<int> parts;
      for (int i = 0; i < rows; ++i)
        if (la.part(i) + inc[i] > 0) parts.push_back(la.part(i) + inc[i]);
      out.emplace_back(parts);
      return;
    }
    int cap = row == 0 ? left : std::min(left, la.part(row - 1) - la.part(row));
    for (int c = 0; c <= cap; ++c) {
      inc[row] = c;
      rec(row + 1, left - c);
    }
    inc[row] = 0;
  };
  rec(0, k);
  return out;
}

std::vector<Partition> add_vertical_strips(const Partition& la, int k) {
  std::vector<Partition> out;
  for (const Partition& mu : add_horizontal_strips(la.conjugate(), k))
    out.push_back(mu.conjugate());
  return out;
}

std::vector<Partition> remove_vertical_strips(const Partition& la, int k) {
  // nu with la/nu a vertical strip: la_i - 1 <= nu_i <= la_i, columns distinct,
  // i.e. at most one cell removed per row and nu stays a partition.
  std::vector<Partition> out;
  int rows = la.length();
  if (k > rows) return out;
  // enumerate subsets of rows of size k such that the result is a partition
  std::vector<int> chosen;
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (left == 0) {
      std::vector<int> nu(la.parts());
      for (int r : chosen) nu[r] -= 1;
      for (int i = 0; i + 1 < rows; ++i)
        if (nu[i] < nu[i + 1]) return;
      std::vector<int> parts;
      for (int v : nu)
        if (v > 0) parts.push_back(v);
      out.emplace_back(parts);
      return;
    }
    if (rows - row < left) return;
    chosen.push_back(row);
    rec(row + 1, left - 1);
    chosen.pop_back();
    rec(row + 1, left);
  };
  rec(0, k);
  return out;
}

namespace {

std::map<std::pair<Partition, Partition>, Int, PartitionPairOrder>& mn_memo() {
  static std::map<std::pair<Partition, Partition>, Int, PartitionPairOrder> memo;
  return memo;
}
std::mutex& mn_mutex() {
  static std::mutex mu;
  return mu;
}

Int mn_character_rec(const Partition& la, const Partition& mu) {
  if (mu.length() == 0) return la.length() == 0 ? Int(1) : Int(0);
  {
    std::lock_guard<std::mutex> lock(mn_mutex());
    auto it = mn_memo().find({la, mu});
    if (it != mn_memo().end()) return it->second;
  }
  int r = mu.part(0);
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  // beta set of la: distinct values la_i + (L-1-i), i = 0..L-1
  int L = la.length();
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = la.part(i) + (L - 1 - i);
  Int total = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[i] - r;
    if (b < 0) continue;
    bool clash = false;
    int jumped = 0;
    for (int j = 0; j < L; ++j) {
      if (j == i) continue;
      if (beta[j] == b) {
        clash = true;
        break;
      }
      if (beta[j] < beta[i] && beta[j] > b) ++jumped;
    }
    if (clash) continue;
    std::vector<int> nb(beta);
    nb[i] = b;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> parts;
    for (int j = 0; j < L; ++j) {
      int v = nb[j] - (L - 1 - j);
      if (v > 0) parts.push_back(v);
    }
    Int term = mn_character_rec(Partition(parts), rest);
    if (jumped % 2 == 1) term = -term;
    total += term;
  }
  std::lock_guard<std::mutex> lock(mn_mutex());
  mn_memo().emplace(std::make_pair(la, mu), total);
  return total;
}

}  // namespace

Int mn_character(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size()) throw std::invalid_argument("mn_character: |la| != |mu|");
  return mn_character_rec(la, mu);
}

std::map<Partition, Rat, PartitionOrder> schur_to_p(const Partition& la) {
  std::map<Partition, Rat, PartitionOrder> out;
  for (const Partition& mu : partitions_of(la.size())) {
    Int chi = mn_character(la, mu);
    if (chi != 0) out.emplace(mu, Rat(chi) / Rat(mu.z()));
  }
  return out;
}

namespace {

struct DegreeTables {
  std::map<Basis, QMatrix> to_s;
  std::map<Basis, QMatrix> from_s;
};

std::map<int, DegreeTables>& tables() {
  static std::map<int, DegreeTables> t;
  return t;
}
std::mutex& tables_mutex() {
  static std::mutex mu;
  return mu;
}

size_t index_of(const std::vector<Partition>& parts, const Partition& p) {
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i] == p) return i;
  throw std::logic_error("partition not found in degree list");
}

// Expand a multiplicative basis element into Schur functions by iterating a
// one-part expansion step.
using SparseRow = std::map<Partition, Rat, PartitionOrder>;

QMatrix multiplicative_to_s(int degree, bool vertical) {
  const auto& parts = partitions_of(degree);
  QMatrix out(parts.size(), std::vector<Rat>(parts.size(), Rat(0)));
  for (size_t j = 0; j < parts.size(); ++j) {
    SparseRow cur;
    cur.emplace(Partition(), Rat(1));
    for (int k : parts[j].parts()) {
      SparseRow next;
      for (const auto& [la, c] : cur) {
        auto strips = vertical ? add_vertical_strips(la, k) : add_horizontal_strips(la, k);
        for (const Partition& mu : strips) next[mu] += c;
      }
      cur = std::move(next);
    }
    for (const auto& [la, c] : cur) out[j][index_of(parts, la)] = c;
  }
  return out;
}

QMatrix power_to_s(int degree) {
  const auto& parts = partitions_of(degree);
  QMatrix out(parts.size(), std::vector<Rat>(parts.size(), Rat(0)));
  for (size_t j = 0; j < parts.size(); ++j)
    for (size_t i = 0; i < parts.size(); ++i) out[j][i] = Rat(mn_character(parts[i], parts[j]));
  return out;
}

QMatrix power_from_s(int degree) {
  const auto& parts = partitions_of(degree);
  QMatrix out(parts.size(), std::vector<Rat>(parts.size(), Rat(0)));
  for (size_t i = 0; i < parts.size(); ++i) {
    Rat z(parts[i].z());
    for (size_t j = 0; j < parts.size(); ++j)
      out[j][i] = Rat(mn_character(parts[j], parts[i])) / z;
  }
  return out;
}

QMatrix transpose(const QMatrix& a) {
  QMatrix out(a.empty() ? 0 : a[0].size(), std::vector<Rat>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

const QMatrix& lookup(Basis b, int degree, bool to_schur);

void build(Basis b, int degree, DegreeTables& dt) {
  switch (b) {
    case Basis::s:
      throw std::logic_error("no tables needed for s");
    case Basis::h:
      dt.to_s.emplace(b, multiplicative_to_s(degree, /*vertical=*/false));
      dt.from_s.emplace(b, q_invert(dt.to_s.at(b)));
      break;
    case Basis::e:
      dt.to_s.emplace(b, multiplicative_to_s(degree, /*vertical=*/true));
      dt.from_s.emplace(b, q_invert(dt.to_s.at(b)));
      break;
    case Basis::p:
      dt.to_s.emplace(b, power_to_s(degree));
      dt.from_s.emplace(b, power_from_s(degree));
      break;
    case Basis::m: {
      // s_la = sum_mu K_{la,mu} m_mu with K the Kostka matrix from h -> s.
      if (!dt.to_s.count(Basis::h)) build(Basis::h, degree, dt);
      QMatrix s2m = transpose(dt.to_s.at(Basis::h));
      dt.from_s.emplace(b, s2m);
      dt.to_s.emplace(b, q_invert(s2m));
      break;
    }
    case Basis::f: {
      // f_mu = omega(m_mu): conjugate the Schur indices of m_mu.
      if (!dt.to_s.count(Basis::m)) build(Basis::m, degree, dt);
      const auto& parts = partitions_of(degree);
      std::vector<size_t> conj(parts.size());
      for (size_t i = 0; i < parts.size(); ++i) conj[i] = index_of(parts, parts[i].conjugate());
      const QMatrix& mt = dt.to_s.at(Basis::m);
      const QMatrix& mf = dt.from_s.at(Basis::m);
      QMatrix ft(parts.size(), std::vector<Rat>(parts.size(), Rat(0)));
      QMatrix ff(parts.size(), std::vector<Rat>(parts.size(), Rat(0)));
      for (size_t j = 0; j < parts.size(); ++j)
        for (size_t i = 0; i < parts.size(); ++i) {
          ft[j][conj[i]] = mt[j][i];
          ff[conj[j]][i] = mf[j][i];
        }
      dt.to_s.emplace(b, std::move(ft));
      dt.from_s.emplace(b, std::move(ff));
      break;
    }
  }
}

const QMatrix& lookup(Basis b, int degree, bool to_schur) {
  if (b == Basis::s) throw std::logic_error("identity table requested");
  std::lock_guard<std::mutex> lock(tables_mutex());
  DegreeTables& dt = tables()[degree];
  auto& side = to_schur ? dt.to_s : dt.from_s;
  if (!side.count(b)) build(b, degree, dt);
  return side.at(b);
}

}  // namespace

const QMatrix& to_s_matrix(Basis b, int degree) { return lookup(b, degree, true); }
const QMatrix& from_s_matrix(Basis b, int degree) { return lookup(b, degree, false); }

bool schur_positive(const SymFun<MPoly>& f) {
  SymFun<MPoly> fs = convert(f, Basis::s);
  for (const auto& [la, c] : fs.terms())
    if (!c.integer_coefficients() || !c.nonneg_coefficients()) return false;
  return true;
}

bool schur_positive(const SymFun<Rat>& f) {
  SymFun<Rat> fs = convert(f, Basis::s);
  for (const auto& [la, c] : fs.terms())
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

MPoly schur_two_rows(int a, int b, const std::string& qname, const std::string& tname) {
  if (a < b || b < 0) throw std::invalid_argument("schur_two_rows: need a >= b >= 0");
  MPoly out(0L);
  for (int i = b; i <= a; ++i)
    out += MPoly::var(qname, i) * MPoly::var(tname, a + b - i);
  return out;
}

std::map<Partition, Rat, PartitionOrder> schur_expand_two_params(const MPoly& p) {
  int q = Vars::id("q"), t = Vars::id("t");
  std::map<Partition, Rat, PartitionOrder> out;
  MPoly rest = p;
  while (!rest.is_zero()) {
    Mono mono = rest.terms().begin()->first;
    Rat c = rest.terms().begin()->second;
    int a = 0, b = 0;
    for (size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if ((int)v == q)
        a = mono[v];
      else if ((int)v == t)
        b = mono[v];
      else
        throw std::invalid_argument("schur_expand_two_params: variable other than q,t");
    }
    if (a < b) throw std::invalid_argument("schur_expand_two_params: not q,t-symmetric");
    Partition la = b == 0 ? (a == 0 ? Partition() : Partition({a})) : Partition({a, b});
    rest -= schur_two_rows(a, b, "q", "t") * c;
    out[la] += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

MPoly eval_single_var(const SymFun<MPoly>& f, const std::string& var) {
  SymFun<MPoly> fs = convert(f, Basis::s);
  MPoly out(0L);
  for (const auto& [la, c] : fs.terms()) {
    if (la.length() > 1) continue;
    out += c * MPoly::var(var, la.size());
  }
  return out;
}

}  // namespace dharm
