#pragma once

// Exhaustive sweeps over small parameter ranges. Each returns the number of
// cases examined and the first counterexample found, if any.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>

#include "balanced/admissibility.hpp"
#include "balanced/euclid_smith.hpp"
#include "balanced/oracle.hpp"
#include "balanced/words.hpp"

namespace balanced {

struct SweepResult {
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

// Coprime 1 <= k < n <= n_max: arrange, Smith on [u1 - 1, ...] and the
// mechanical word share a rotation class, and smith_to_mechanical matches the
// mechanical word exactly.
inline SweepResult equivalence_sweep(std::uint64_t n_max) {
  SweepResult result;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    for (std::uint64_t k = 1; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      ++result.cases;
      const Word mechanical = mechanical_word(Slope(k, n));
      const Word euclid = arrange(n, k).spots();
      const auto decremented = cf_expansion(n, k).with_first_decremented();
      const Word smith = smith_word(std::span<const std::uint64_t>(decremented));
      const std::string where = "(n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")";
      if (!rotation_equivalent(euclid, mechanical) || !rotation_equivalent(smith, mechanical) ||
          !rotation_equivalent(euclid, smith)) {
        result.counterexample = "rotation classes differ at " + where + ": euclid " +
                                euclid.str() + ", smith " + smith.str() + ", mechanical " +
                                mechanical.str();
        return result;
      }
      if (smith_to_mechanical(n, k) != mechanical) {
        result.counterexample = "smith_to_mechanical differs at " + where + ": " +
                                smith_to_mechanical(n, k).str() + " vs " + mechanical.str();
        return result;
      }
    }
  }
  return result;
}

// Full grid 2 <= n <= n_max, 1 <= k < n, 1 <= s < n, 0 <= t <= min(k, s):
// brute force agrees with n t <= k s.
inline SweepResult oracle_grid_sweep(std::uint64_t n_max) {
  SweepResult result;
  for (std::uint64_t n = 2; n <= n_max; ++n)
    for (std::uint64_t k = 1; k < n; ++k)
      for (std::uint64_t s = 1; s < n; ++s)
        for (std::uint64_t t = 0; t <= std::min(k, s); ++t) {
          ++result.cases;
          const AdmissibilityQuery q(n, k, s, t);
          const bool predicted = criterion(q);
          const OracleResult found = brute_force_exists(q);
          if (predicted != found.exists) {
            result.counterexample = "criterion " + std::string(predicted ? "true" : "false") +
                                    " but oracle " + (found.exists ? "true" : "false") +
                                    " at (n, k, s, t) = (" + std::to_string(n) + ", " +
                                    std::to_string(k) + ", " + std::to_string(s) + ", " +
                                    std::to_string(t) + ")";
            return result;
          }
        }
  return result;
}

// 1 <= k <= n <= n_max, 1 <= m <= 2n: mechanical words satisfy the balance bounds.
inline SweepResult balance_sweep(std::uint64_t n_max) {
  SweepResult result;
  for (std::uint64_t n = 1; n <= n_max; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const Word w = mechanical_word(Slope(k, n));
      for (std::uint64_t m = 1; m <= 2 * n; ++m) {
        ++result.cases;
        const BalanceReport report = check_balance(w, m);
        if (!report.balanced()) {
          result.counterexample = "slope " + std::to_string(k) + "/" + std::to_string(n) +
                                  ", m = " + std::to_string(m) + ": factor at " +
                                  std::to_string(report.violation->start) + " has weight " +
                                  std::to_string(report.violation->weight);
          return result;
        }
      }
    }
  return result;
}

}  // namespace balanced
