#pragma once

#include <map>
#include <optional>
#include <string>

#include "dharm/partition.hpp"
#include "dharm/symfun.hpp"
#include "dharm/tensor.hpp"

namespace dharm {

/// A bundled table: exactly one of the three payloads is set.
///   - tensor: the E_n Schur-(x)-Schur expansions ("E0".."E6", "E6_delta");
///   - e_table: the F_n e-expansions as nu -> d_nu ("F1".."F6");
///   - gl: the A_7 length components ("A7_len1".."A7_len6").
struct CorpusTable {
  std::string id;
  std::string provenance;  // data file the payload was read from
  std::optional<TensorExp> tensor;
  std::optional<std::map<Partition, GLCoefficient, PartitionOrder>> e_table;
  std::optional<GLCoefficient> gl;
};

/// Directory holding the bundled tables; DHARMONIC_DATA overrides the
/// compiled-in default (the repository's data/ directory).
std::string data_dir();

/// Loads and materializes a table by id.  "E6" is stored as a delta
/// relative to nabla(e_6) and is materialized by adding the computed
/// nabla(e_6); "F2".."F6" contain symbolic alternant entries which are
/// expanded via alternant().  Unknown ids and malformed files throw
/// std::runtime_error (parse errors carry file:line:column).
CorpusTable load_table(const std::string& id);

/// The alternating part c_{1^n} of E_n: extracted from the bundled E_n for
/// n <= 6, assembled from the A_7 length components for n = 7 (their
/// length-0 part is zero).  n > 7 is unsupported.
GLCoefficient alternant(int n);

}  // namespace dharm
