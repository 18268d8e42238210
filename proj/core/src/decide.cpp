#include "sma/decide.hpp"

#include "sma/providers.hpp"

namespace sma {

namespace {

Decision exists(std::string method) {
  return Decision{Decision::Verdict::Exists, std::move(method), ""};
}

Decision not_exists(std::string reason) {
  return Decision{Decision::Verdict::NotExists, "", std::move(reason)};
}

}  // namespace

std::string to_string(Decision::Verdict v) {
  switch (v) {
    case Decision::Verdict::Exists:
      return "Exists";
    case Decision::Verdict::NotExists:
      return "NotExists";
    default:
      return "Unknown";
  }
}

Decision decide_tight(int m, int n) {
  if (m < 1 || n < 1) throw argument_error("dimensions must be positive");
  if (m == 1 || n == 1) {
    if (m == 1 && n == 1) return exists("trivial_1x1");
    return not_exists("one_line_needs_n_1");
  }
  if (m == 2 || n == 2) {
    const int other = m == 2 ? n : m;
    if (other % 4 == 0 || other % 4 == 3) {
      return exists(m == 2 ? "two_by_n" : "two_by_n_transpose");
    }
    return not_exists("two_by_n_residue");
  }
  // m, n > 2
  if (m % 2 == 0 && n % 2 == 0) return exists("even_even");
  if (m % 2 == 1 && n % 2 == 1) return exists("odd_odd");
  return exists(m % 2 == 1 ? "odd_even" : "even_odd");
}

Decision decide_square(int n, int t) {
  if (n < 1 || t < 1) throw argument_error("parameters must be positive");
  if (t > n) return not_exists("t_exceeds_n");
  if (n == 1) return exists("trivial_1x1");
  if (t < 3) return not_exists("t_below_3");
  if (n == 2) return not_exists("t_below_3");  // t <= n = 2 anyway
  if (t == n) return exists("tight");
  if (n % 2 == 1 && t % 2 == 1) return exists("odd_odd");
  if (n % 2 == 1) return exists("even_t_odd_n");
  if (t % 2 == 0) return exists("even_even");
  return exists("odd_t_even_n");
}

Decision decide_double_rectangle(int m, int t, const Catalog* catalog) {
  if (t < 3 || m < t) {
    throw argument_error(
        "m x 2m rectangles are characterized for m >= t >= 3 only");
  }
  const bool heffter_ok = (m * t) % 4 == 0 || (m * t) % 4 == 3;
  // A shiftable square base exists for even t >= 4 except when
  // t ≡ 2 (mod 4) with m ≡ 0 (mod 4) and t < m.
  const bool shiftable_ok =
      t % 2 == 0 &&
      (t == m || t % 4 == 0 || m % 2 == 1 || m % 4 == 2);
  if (!heffter_ok && !shiftable_ok) {
    return Decision{Decision::Verdict::Unknown, "", "open_case"};
  }
  if (heffter_ok && shiftable_ok) {
    const std::string key = providers::square_heffter_lookup_key(m, t);
    if (catalog && catalog->has(key)) return exists("heffter");
    return exists("shiftable");
  }
  return exists(heffter_ok ? "heffter" : "shiftable");
}

}  // namespace sma
