#pragma once

#include <string>
#include <vector>

#include "dharm/symfun.hpp"
#include "dharm/tensor.hpp"

namespace dharm {

enum class CheckStatus { kPass, kFail, kSkipped };

/// Outcome of one verification check. `witness` holds the first failing
/// datum for a refuted check, or a short note for a passing/skipped one.
struct CheckResult {
  std::string id;
  std::string scope;
  CheckStatus status = CheckStatus::kSkipped;
  std::string witness;
  double seconds = 0.0;
};

/// Left plethystic substitution q -> 1 + q on every GL coefficient:
/// s_la[1 + X] = sum of s_mu over mu interleaved with la (la/mu a
/// horizontal strip of any size).
TensorExp left_one_plus_q(const TensorExp& t);

/// Reconstructs A_n from partial data: the top layer s_{1^{n-1}}, the
/// layers forced by e_{n-2}-perp and e_{n-3}-perp skewing targets, and the
/// length <= 2 part read off nabla(e_n). Each forced layer is obtained by
/// an exact linear solve; an underdetermined or inconsistent solve throws.
/// `log`, when non-null, receives one line per reconstruction step.
GLCoefficient reconstruct_alternant(int n, std::string* log = nullptr);

/// Frobenius characteristic of the diagonal harmonics of k rows of n
/// variables, from first principles: the span of the Vandermonde
/// determinant closed under partial derivatives and higher polarization
/// operators, graded by multidegree (variables q, t). Supports k <= 2.
SymFun<MPoly> brute_force_harmonics(int n, int k);

// Individual checks; each covers the given degree n.
CheckResult check_hook_components(int n);     // e_k-perp A_n = c-hooks; q-binomial form
CheckResult check_hook_product(int n);        // A_n[q - eps u] = prod (q^i + u)
CheckResult check_hook_generating(int n);     // c_(a|b) hook generating polynomial
CheckResult check_delta_by_skewing(int n);    // Delta'_{e_b} e_n vs e_a-perp E_n at (q,t)
CheckResult check_length(int n);              // lengths, degrees, (n-1,1) and (n-2,2) coefficients
CheckResult check_reconstruction(int n);      // reconstruct_alternant matches the tables
CheckResult check_reduced_length(int n);      // closed forms for eps_n^(j)
CheckResult check_two_column(int n);          // mu_1 = 2 columns and Delta_{e_1} formula
CheckResult check_e_positivity(int n);        // F_n tables, Schur positivity, d-hooks
CheckResult check_specializations(int n);     // E_n(k) at k = 0,1,2,3,-1,-2 and dimensions
CheckResult check_qt_inverse(int n);          // (e_j-perp E_n)(q, 1/q) closed form
CheckResult check_catalan_refinement(int n);  // E_n[-q - 1/q] Catalan refinement
CheckResult check_macdonald_sanity(int n);    // H~ normalizations, symmetries, positivity
CheckResult check_harmonics_oracle(int n, int k);  // brute force vs operator results

/// Runs every check up to max_n (corpus-backed checks stop at the bundled
/// tables), optionally on several threads. Results come back in a fixed
/// order regardless of jobs.
/// Runs the checks up to max_n with the given parallelism.  suite selects a
/// single check id, the "hooks" group, or "all".
std::vector<CheckResult> run_suite(int max_n, int jobs = 1,
                                   const std::string& suite = "all");

std::string status_word(CheckStatus s);  // verified-at-scale / refuted-with-witness / skipped
std::string render_text(const std::vector<CheckResult>& results);
std::string render_json(const std::vector<CheckResult>& results);

}  // namespace dharm
