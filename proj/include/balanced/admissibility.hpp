#pragma once

// Circular configurations, window weights, and the t-admissibility criterion.
//
// An (n, k, s)-configuration is a circle of n spots, k of them marked A. It is
// t-admissible when every window of s consecutive spots holds at least t
// letters A. Such a configuration exists iff n*t <= k*s; the mechanical word of
// slope k/n is one.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "balanced/words.hpp"

namespace balanced {

class Configuration {
 public:
  explicit Configuration(Word spots) : spots_(std::move(spots)), k_(weight(spots_)) {
    if (spots_.empty()) throw std::invalid_argument("configuration needs at least one spot");
  }

  const Word& spots() const { return spots_; }
  std::size_t n() const { return spots_.size(); }
  std::size_t k() const { return k_; }
  Letter at(std::size_t i) const { return spots_[i % spots_.size()]; }

  Configuration rotated(std::size_t shift) const { return Configuration(spots_.rotated(shift)); }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.spots_ == b.spots_;
  }

 private:
  Word spots_;
  std::size_t k_;
};

struct WindowReport {
  std::size_t start;
  std::size_t length;
  std::size_t weight;
  friend bool operator==(const WindowReport&, const WindowReport&) = default;
};

// (n, k, s, t) with 0 < k < n and 0 < s < n. t may exceed k or s; such
// queries are legal and simply fail the criterion.
class AdmissibilityQuery {
 public:
  AdmissibilityQuery(std::uint64_t n, std::uint64_t k, std::uint64_t s, std::uint64_t t)
      : n_(n), k_(k), s_(s), t_(t) {
    if (n == 0 || k == 0 || s == 0)
      throw std::invalid_argument("n, k and s must be positive integers");
    if (k >= n)
      throw std::invalid_argument("k must be smaller than n (got k = " + std::to_string(k) +
                                  ", n = " + std::to_string(n) + ")");
    if (s >= n)
      throw std::invalid_argument("s must be smaller than n (got s = " + std::to_string(s) +
                                  ", n = " + std::to_string(n) + ")");
  }

  std::uint64_t n() const { return n_; }
  std::uint64_t k() const { return k_; }
  std::uint64_t s() const { return s_; }
  std::uint64_t t() const { return t_; }

 private:
  std::uint64_t n_, k_, s_, t_;
};

// Weights of all n circular windows of length m, by sliding.
inline std::vector<WindowReport> window_weight_profile(const Configuration& c, std::size_t m) {
  const std::size_t n = c.n();
  if (m == 0 || m > n)
    throw std::out_of_range("window length " + std::to_string(m) + " outside [1, " +
                            std::to_string(n) + "]");
  std::vector<WindowReport> profile;
  profile.reserve(n);
  std::size_t w = 0;
  for (std::size_t i = 0; i < m; ++i) w += c.at(i) == Letter::A;
  for (std::size_t start = 0; start < n; ++start) {
    profile.push_back({start, m, w});
    w -= c.at(start) == Letter::A;
    w += c.at(start + m) == Letter::A;
  }
  return profile;
}

// Lightest window; ties go to the smallest start.
inline WindowReport min_window(const std::vector<WindowReport>& profile) {
  WindowReport best = profile.front();
  for (const auto& w : profile)
    if (w.weight < best.weight) best = w;
  return best;
}

struct AdmissibilityVerdict {
  bool admissible;
  WindowReport min_window;

  std::optional<WindowReport> witness() const {
    if (admissible) return std::nullopt;
    return min_window;
  }
};

inline AdmissibilityVerdict is_admissible(const Configuration& c, std::size_t s, std::uint64_t t) {
  const WindowReport lightest = min_window(window_weight_profile(c, s));
  return {lightest.weight >= t, lightest};
}

inline bool criterion(const AdmissibilityQuery& q) { return q.n() * q.t() <= q.k() * q.s(); }

inline std::optional<Configuration> construct_admissible(const AdmissibilityQuery& q) {
  if (!criterion(q)) return std::nullopt;
  return Configuration(mechanical_word(Slope(q.k(), q.n())));
}

// Every window of the n - s spots outside the court holds at most k - t letters A.
inline bool complement_check(const Configuration& c, std::size_t s, std::uint64_t t) {
  const std::size_t n = c.n();
  if (s == 0 || s >= n)
    throw std::out_of_range("complement_check needs 1 <= s < n");
  if (t > c.k()) return false;
  const std::uint64_t cap = c.k() - t;
  for (const auto& w : window_weight_profile(c, n - s))
    if (w.weight > cap) return false;
  return true;
}

// max over windows S of length m of |chi(S)| with chi(A) = +1, chi(B) = -1.
inline std::size_t discrepancy(const Configuration& c, std::size_t m) {
  std::size_t worst = 0;
  for (const auto& w : window_weight_profile(c, m)) {
    const auto value = static_cast<std::int64_t>(2 * w.weight) - static_cast<std::int64_t>(m);
    worst = std::max(worst, static_cast<std::size_t>(std::llabs(value)));
  }
  return worst;
}

// m - 2 floor(m k / n). Meaningful as an upper bound only for k <= n/2; it can
// be negative above that.
inline std::int64_t discrepancy_bound(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  return static_cast<std::int64_t>(m) - 2 * static_cast<std::int64_t>((m * k) / n);
}

inline bool discrepancy_bound_applies(std::uint64_t n, std::uint64_t k) { return 2 * k <= n; }

}  // namespace balanced
