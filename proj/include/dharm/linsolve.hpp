#pragma once

#include <stdexcept>
#include <vector>

#include "dharm/ratfun.hpp"

namespace dharm {

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

/// Fraction-free (Bareiss) elimination solve of A x = b with polynomial
/// entries. A may have more rows than columns; the system must be
/// consistent with full column rank, otherwise SingularSystem is thrown
/// naming the failing pivot column or row.
std::vector<RatFun> solve_poly(std::vector<std::vector<MPoly>> a, std::vector<MPoly> b);

/// Same, entries in Q(q,t,...): rows are cleared of denominators first.
std::vector<RatFun> ratfun_solve(std::vector<std::vector<RatFun>> a, std::vector<RatFun> b);

using QMatrix = std::vector<std::vector<Rat>>;

QMatrix q_identity(size_t n);
/// Gauss-Jordan inverse; throws SingularSystem when not invertible.
QMatrix q_invert(QMatrix m);

enum class SolveStatus { kUnique, kUnderdetermined, kInconsistent };

struct QSolveResult {
  SolveStatus status;
  std::vector<Rat> x;  // valid iff status == kUnique
};

/// Exact rational solve of a (possibly overdetermined) system.
QSolveResult q_solve(QMatrix a, std::vector<Rat> b);

}  // namespace dharm
