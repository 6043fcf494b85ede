#include "dharm/partition.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dharm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

Partition Partition::hook(int arm, int leg) {
  std::vector<int> parts{arm + 1};
  parts.insert(parts.end(), static_cast<size_t>(leg), 1);
  return Partition(std::move(parts));
}

Partition Partition::row(int n) {
  return n == 0 ? Partition() : Partition({n});
}

Partition Partition::column(int n) {
  return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int i = 0; i < p; ++i) ++conj[static_cast<size_t>(i)];
  return Partition(std::move(conj));
}

std::vector<std::pair<int, int>> Partition::cells() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(size_));
  for (int row = 0; row < length(); ++row)
    for (int col = 0; col < parts_[static_cast<size_t>(row)]; ++col)
      out.emplace_back(col, row);
  return out;
}

std::vector<int> Partition::hook_lengths() const {
  Partition conj = conjugate();
  std::vector<int> out;
  out.reserve(static_cast<size_t>(size_));
  for (auto [col, row] : cells())
    out.push_back(part(row) + conj.part(col) - col - row - 1);
  return out;
}

long Partition::eta() const {
  long s = 0;
  for (int k = 0; k < length(); ++k) s += static_cast<long>(k) * parts_[static_cast<size_t>(k)];
  return s;
}

Int Partition::z() const {
  Int z = 1;
  int run = 0;
  for (int i = 0; i < length(); ++i) {
    ++run;
    Int p = parts_[static_cast<size_t>(i)];
    z *= p;
    if (i + 1 == length() || parts_[static_cast<size_t>(i + 1)] != parts_[static_cast<size_t>(i)]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return z;
}

std::vector<int> Partition::descents() const {
  std::vector<int> out;
  for (int i = 1; i <= length(); ++i)
    if (part(i - 1) > part(i)) out.push_back(i);
  return out;
}

bool Partition::is_hook() const {
  return !parts_.empty() && (length() < 2 || parts_[1] == 1);
}

std::pair<int, int> Partition::frobenius() const {
  return {parts_.empty() ? -1 : parts_[0] - 1, length() - 1};
}

bool Partition::dominates(const Partition& rhs) const {
  if (size_ != rhs.size_) return false;
  int a = 0, b = 0;
  int n = std::max(length(), rhs.length());
  for (int i = 0; i < n; ++i) {
    a += part(i);
    b += rhs.part(i);
    if (a < b) return false;
  }
  return true;
}

Partition Partition::merged(const Partition& rhs) const {
  std::vector<int> parts;
  parts.reserve(parts_.size() + rhs.parts_.size());
  std::merge(parts_.begin(), parts_.end(), rhs.parts_.begin(), rhs.parts_.end(),
             std::back_inserter(parts), std::greater<int>());
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                      b.parts().begin(), b.parts().end(),
                                      std::greater<int>());
}

bool PartitionPairOrder::operator()(const std::pair<Partition, Partition>& a,
                                    const std::pair<Partition, Partition>& b) const {
  PartitionOrder lt;
  if (lt(a.first, b.first)) return true;
  if (lt(b.first, a.first)) return false;
  return lt(a.second, b.second);
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    gen_partitions(remaining - p, p, stack, out);
    stack.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_partitions(n, n, stack, out);
  return cache.emplace(n, std::move(out)).first->second;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial(long n, int k) {
  if (k < 0) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= Int(n - i);
    den *= Int(i + 1);
  }
  return num / den;
}

Int catalan(int n) {
  return binomial(2L * n, n) / Int(n + 1);
}

}  // namespace dharm
