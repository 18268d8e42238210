#pragma once

#include <string>

#include "sma/catalog.hpp"

namespace sma {

/// Outcome of an existence question. `method` carries the construction tag
/// the dispatchers consume when the answer is Exists; `reason` a short tag
/// when it is NotExists. Unknown is reserved for the open m x 2m cells.
struct Decision {
  enum class Verdict { Exists, NotExists, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::string method;
  std::string reason;

  bool exists() const { return verdict == Verdict::Exists; }
};

std::string to_string(Decision::Verdict v);

/// Tight m x n arrays: exists iff m = n = 1, or m = 2 with n ≡ 0,3 (mod 4),
/// or n = 2 with m ≡ 0,3 (mod 4), or m, n > 2.
Decision decide_tight(int m, int n);

/// Squares with t filled cells per line: exists iff n = t = 1 or
/// n >= t > 2 (NotExists when t > n).
Decision decide_square(int n, int t);

/// m x 2m rectangles with t per column. Exists via the Heffter route when
/// mt ≡ 0,3 (mod 4), via the shiftable route when t is even and a shiftable
/// square base is constructible; Unknown exactly on the open cells. When
/// both routes apply, a catalog hit for H(m; t) selects the Heffter route.
Decision decide_double_rectangle(int m, int t,
                                 const Catalog* catalog = nullptr);

}  // namespace sma
