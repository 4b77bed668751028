#pragma once

// Exhaustive ground truth for small circles.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "balanced/admissibility.hpp"
#include "balanced/euclid_smith.hpp"
#include "balanced/words.hpp"

namespace balanced {

struct OracleOptions {
  std::uint64_t max_n = 20;
  // Test only the least rotation of each necklace.
  bool reduce_rotations = false;
};

struct OracleResult {
  bool exists = false;
  std::optional<Configuration> witness;
  std::uint64_t instances_checked = 0;
};

namespace detail {

// Reads every window straight off the periodic word, no sliding.
inline bool every_window_has(const Word& spots, std::size_t s, std::uint64_t t) {
  const PeriodicWord circle(spots);
  for (std::size_t start = 0; start < spots.size(); ++start)
    if (weight(factor(circle, start, s)) < t) return false;
  return true;
}

}  // namespace detail

// Enumerates all weight-k words of length n in lexicographic order (A < B)
// and stops at the first t-admissible one.
inline OracleResult brute_force_exists(const AdmissibilityQuery& q, const OracleOptions& options = {}) {
  if (q.n() > options.max_n)
    throw std::invalid_argument("oracle cap exceeded: n = " + std::to_string(q.n()) + " > " +
                                std::to_string(options.max_n));
  const auto by_rank = [](Letter a, Letter b) { return rank(a) < rank(b); };
  std::vector<Letter> letters(q.n(), Letter::B);
  std::fill_n(letters.begin(), q.k(), Letter::A);

  OracleResult result;
  do {
    Word candidate(letters);
    if (options.reduce_rotations && canonical_rotation(candidate).shift != 0) continue;
    ++result.instances_checked;
    if (detail::every_window_has(candidate, q.s(), q.t())) {
      result.exists = true;
      result.witness = Configuration(std::move(candidate));
      return result;
    }
  } while (std::next_permutation(letters.begin(), letters.end(), by_rank));
  return result;
}

// A lightest s-window. Averaging over the n windows, each spot counted s
// times, forces its weight <= floor(ks/n).
inline WindowReport pigeonhole_witness(const Configuration& c, std::size_t s) {
  if (s == 0 || s >= c.n()) throw std::out_of_range("pigeonhole_witness needs 1 <= s < n");
  const WindowReport lightest = min_window(window_weight_profile(c, s));
  if (lightest.weight * c.n() > c.k() * s)
    throw std::logic_error("pigeonhole bound violated: window weight " +
                           std::to_string(lightest.weight) + " exceeds floor(ks/n)");
  return lightest;
}

}  // namespace balanced
