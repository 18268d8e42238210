#pragma once

#include <optional>
#include <string>

#include "sma/providers.hpp"
#include "sma/types.hpp"

namespace sma::oracle {

enum class Outcome {
  found,         // a grid exists (returned for search_one)
  none,          // exhaustive: no grid exists
  inconclusive,  // budget or cell cap hit before exhaustion
};

std::string to_string(Outcome o);

struct Result {
  Outcome outcome = Outcome::inconclusive;
  std::optional<SignedGrid> grid;
  long long nodes = 0;
  std::string note;
};

struct CountResult {
  bool complete = false;
  long long count = 0;
  long long nodes = 0;
  std::string note;
};

/// Exhaustive backtracking over all signed magic arrays for the spec:
/// fill patterns are enumerated lexicographically row by row, values in
/// canonical order, with zero-sum pruning and sign-symmetry breaking.
/// The first solution in canonical order is returned; a clean exhaustion
/// is a definitive nonexistence certificate.
Result search_one(const ArraySpec& spec,
                  const providers::SearchLimits& limits = {});

/// Counts all completed solutions exactly (when `complete`).
CountResult count_all(const ArraySpec& spec,
                      const providers::SearchLimits& limits = {});

}  // namespace sma::oracle
