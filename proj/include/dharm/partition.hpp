#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dharm {

using Int = mpz_class;
using Rat = mpq_class;

/// Integer partition: weakly decreasing positive parts. Immutable value type.
/// Cells use French (Cartesian) convention, coordinates (col, row), 0-based.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "4,2,1"; the empty string is the empty partition.
  static Partition parse(const std::string& text);
  /// Frobenius hook (a|b) = (a+1, 1^b).
  static Partition hook(int arm, int leg);
  static Partition row(int n);     // (n), or empty for n=0
  static Partition column(int n);  // (1^n)

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }        // |mu|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {                   // 0-based, 0 beyond the last part
    return i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// All cells (col, row).
  std::vector<std::pair<int, int>> cells() const;
  /// One hook length per cell, in cells() order.
  std::vector<int> hook_lengths() const;
  /// eta(mu) = sum_k (k-1) mu_k.
  long eta() const;
  /// z_mu = prod k^{m_k} m_k!.
  Int z() const;
  /// des(mu) = { i : mu_i > mu_{i+1} } (1-based i, the last part always descends).
  std::vector<int> descents() const;

  bool is_hook() const;
  /// (arm, leg); only valid when is_hook().
  std::pair<int, int> frobenius() const;

  /// Dominance: same size and all prefix sums of *this >= those of rhs.
  bool dominates(const Partition& rhs) const;

  /// Result of appending/merging parts (used for multiplicative bases).
  Partition merged(const Partition& rhs) const;

  std::string str() const;  // "4,2,1"

  bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
  bool operator!=(const Partition& rhs) const { return !(*this == rhs); }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical total order: by size, then lexicographically decreasing parts
/// (so (n) comes first among partitions of n and (1^n) last). On each size
/// this refines dominance: if la strictly dominates mu then la < mu here.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

struct PartitionPairOrder {
  bool operator()(const std::pair<Partition, Partition>& a,
                  const std::pair<Partition, Partition>& b) const;
};

/// Partitions of n in PartitionOrder (largest-lex first).
const std::vector<Partition>& partitions_of(int n);

Int factorial(int n);
Int binomial(long n, int k);
Int catalan(int n);

}  // namespace dharm
