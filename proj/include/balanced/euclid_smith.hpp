#pragma once

// Continued-fraction constructions of balanced circular words.
//
// arrange() follows the Euclid ladder of (n, k) bottom-up, growing a circular
// sequence of + and - symbols, then expands each symbol into a block of the
// form A B...B. smith_word() builds the same circle (up to rotation) from the
// recursion S_1 = B^u1 A, S_2 = S_1^u2 B, S_j = S_{j-1}^uj S_{j-2}.
//
// Euclid indexing: r_{-3} = n, r_{-2} = k and r_{j-2} = q_j r_{j-1} + r_j for
// j = -1, 0, ..., i+1 with r_{i+1} = 0, so r_i = gcd(n, k).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "balanced/admissibility.hpp"
#include "balanced/words.hpp"

namespace balanced {

struct EuclidStep {
  int index;  // j
  std::uint64_t quotient;  // q_j
  std::uint64_t remainder;  // r_j
};

class EuclidTrace {
 public:
  EuclidTrace(std::uint64_t n, std::uint64_t k, std::vector<EuclidStep> steps)
      : n_(n), k_(k), steps_(std::move(steps)) {}

  std::uint64_t n() const { return n_; }
  std::uint64_t k() const { return k_; }
  const std::vector<EuclidStep>& steps() const { return steps_; }

  // i, the index with r_{i+1} = 0. Equals -2 when k divides n.
  int terminal_index() const { return steps_.back().index - 1; }

  std::uint64_t quotient(int j) const { return steps_.at(static_cast<std::size_t>(j + 1)).quotient; }

  std::uint64_t remainder(int j) const {
    if (j == -3) return n_;
    if (j == -2) return k_;
    return steps_.at(static_cast<std::size_t>(j + 1)).remainder;
  }

  std::uint64_t gcd() const { return remainder(terminal_index()); }

  std::vector<std::uint64_t> quotients() const {
    std::vector<std::uint64_t> out;
    out.reserve(steps_.size());
    for (const auto& s : steps_) out.push_back(s.quotient);
    return out;
  }

  std::vector<std::uint64_t> remainders() const {
    std::vector<std::uint64_t> out;
    out.reserve(steps_.size());
    for (const auto& s : steps_) out.push_back(s.remainder);
    return out;
  }

 private:
  std::uint64_t n_;
  std::uint64_t k_;
  std::vector<EuclidStep> steps_;
};

inline void require_proper_pair(std::uint64_t n, std::uint64_t k) {
  if (k == 0 || k >= n)
    throw std::invalid_argument("need 1 <= k < n (got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
}

inline EuclidTrace euclid_trace(std::uint64_t n, std::uint64_t k) {
  require_proper_pair(n, k);
  std::vector<EuclidStep> steps;
  std::uint64_t dividend = n;
  std::uint64_t divisor = k;
  for (int j = -1;; ++j) {
    const std::uint64_t q = dividend / divisor;
    const std::uint64_t r = dividend % divisor;
    steps.push_back({j, q, r});
    if (r == 0) break;
    dividend = divisor;
    divisor = r;
  }
  return EuclidTrace(n, k, std::move(steps));
}

enum class Symbol : std::uint8_t { minus, plus };

class SymbolSequence {
 public:
  SymbolSequence() = default;
  explicit SymbolSequence(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const { return symbols_.size(); }
  std::size_t plus_count() const {
    std::size_t c = 0;
    for (Symbol s : symbols_) c += s == Symbol::plus;
    return c;
  }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  std::string str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(s == Symbol::plus ? '+' : '-');
    return out;
  }

  friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;

 private:
  std::vector<Symbol> symbols_;
};

struct ArrangeStage {
  std::string label;  // "seed", "promote" or "spread", tagged with the quotient index
  SymbolSequence symbols;
};

struct Arrangement {
  EuclidTrace trace;
  std::vector<ArrangeStage> stages;
  Configuration configuration;
};

namespace detail {

inline void check_stage(const SymbolSequence& seq, std::uint64_t size, std::uint64_t pluses,
                        const char* stage) {
  if (seq.size() != size || seq.plus_count() != pluses)
    throw std::logic_error(std::string("arrange: stage ") + stage + " produced " +
                           std::to_string(seq.size()) + " symbols with " +
                           std::to_string(seq.plus_count()) + " pluses, expected " +
                           std::to_string(size) + " with " + std::to_string(pluses));
}

// Every old symbol becomes a plus; each old plus is followed by a new minus.
inline SymbolSequence promote(const SymbolSequence& seq) {
  std::vector<Symbol> out;
  out.reserve(seq.size() + seq.plus_count());
  for (Symbol s : seq) {
    out.push_back(Symbol::plus);
    if (s == Symbol::plus) out.push_back(Symbol::minus);
  }
  return SymbolSequence(std::move(out));
}

// Inserts `gap` minuses right after every plus.
inline SymbolSequence spread(const SymbolSequence& seq, std::uint64_t gap) {
  std::vector<Symbol> out;
  out.reserve(seq.size() + seq.plus_count() * gap);
  for (Symbol s : seq) {
    out.push_back(s);
    if (s == Symbol::plus) out.insert(out.end(), gap, Symbol::minus);
  }
  return SymbolSequence(std::move(out));
}

}  // namespace detail

// Full run of the Euclid-based arrangement, keeping every intermediate stage.
inline Arrangement arrange_traced(std::uint64_t n, std::uint64_t k) {
  EuclidTrace trace = euclid_trace(n, k);
  const int i = trace.terminal_index();
  const std::uint64_t lead = trace.quotient(-1);
  std::vector<ArrangeStage> stages;

  if (i == -2) {
    // k divides n: one A every lead - 1 letters B.
    Word block = concat(Word{Letter::A}, power(Word{Letter::B}, lead - 1));
    return {std::move(trace), std::move(stages), Configuration(power(block, k))};
  }

  // Seed: r_i pluses, each followed by q_{i+1} - 1 minuses.
  std::vector<Symbol> seed;
  for (std::uint64_t p = 0; p < trace.remainder(i); ++p) {
    seed.push_back(Symbol::plus);
    seed.insert(seed.end(), trace.quotient(i + 1) - 1, Symbol::minus);
  }
  SymbolSequence seq(std::move(seed));
  detail::check_stage(seq, trace.remainder(i - 1), trace.remainder(i), "seed");
  stages.push_back({"seed q" + std::to_string(i + 1), seq});

  for (int j = i; j >= 0; --j) {
    seq = detail::promote(seq);
    detail::check_stage(seq, trace.remainder(j) + trace.remainder(j - 1), trace.remainder(j - 1),
                        "promote");
    stages.push_back({"promote", seq});
    seq = detail::spread(seq, trace.quotient(j) - 1);
    detail::check_stage(seq, trace.remainder(j - 2), trace.remainder(j - 1), "spread");
    stages.push_back({"spread q" + std::to_string(j), seq});
  }

  // Each symbol becomes A followed by lead - 1 letters B, plus one more B after a plus.
  std::vector<Letter> letters;
  letters.reserve(n);
  for (Symbol s : seq) {
    letters.push_back(Letter::A);
    letters.insert(letters.end(), lead - 1, Letter::B);
    if (s == Symbol::plus) letters.push_back(Letter::B);
  }
  if (letters.size() != n) throw std::logic_error("arrange: final length mismatch");
  return {std::move(trace), std::move(stages), Configuration(Word(std::move(letters)))};
}

inline Configuration arrange(std::uint64_t n, std::uint64_t k) {
  return arrange_traced(n, k).configuration;
}

// Simple continued fraction of p/q > 1 from the Euclid quotients. The last
// quotient is not normalized, so [.., x, 1] forms can appear only for q = 1.
class CfExpansion {
 public:
  explicit CfExpansion(std::vector<std::uint64_t> quotients) : quotients_(std::move(quotients)) {
    if (quotients_.empty()) throw std::invalid_argument("continued fraction needs a quotient");
    for (auto q : quotients_)
      if (q == 0) throw std::invalid_argument("continued fraction quotients must be >= 1");
  }

  const std::vector<std::uint64_t>& quotients() const { return quotients_; }

  // The represented rational as a reduced pair (p, q).
  std::pair<std::uint64_t, std::uint64_t> evaluate() const {
    std::uint64_t num = quotients_.back();
    std::uint64_t den = 1;
    for (auto it = quotients_.rbegin() + 1; it != quotients_.rend(); ++it) {
      const std::uint64_t next = *it * num + den;
      den = num;
      num = next;
    }
    return {num, den};
  }

  // [u1 - 1, u2, ..., ut]
  std::vector<std::uint64_t> with_first_decremented() const {
    std::vector<std::uint64_t> out = quotients_;
    out.front() -= 1;
    return out;
  }

 private:
  std::vector<std::uint64_t> quotients_;
};

inline CfExpansion cf_expansion(std::uint64_t p, std::uint64_t q) {
  if (q == 0 || p <= q)
    throw std::invalid_argument("cf_expansion needs p > q >= 1 (got " + std::to_string(p) + "/" +
                                std::to_string(q) + ")");
  if (const auto g = std::gcd(p, q); g != 1)
    throw std::invalid_argument("n and k not coprime (gcd " + std::to_string(g) + ")");
  return CfExpansion(euclid_trace(p, q).quotients());
}

// S_1 .. S_t. The first quotient may be 0 (S_1 = A).
inline std::vector<Word> smith_ladder(std::span<const std::uint64_t> quotients) {
  if (quotients.empty()) throw std::invalid_argument("smith_word needs a non-empty expansion");
  for (std::size_t j = 1; j < quotients.size(); ++j)
    if (quotients[j] == 0) throw std::invalid_argument("smith_word: quotients after the first must be >= 1");
  std::vector<Word> ladder;
  ladder.reserve(quotients.size());
  ladder.push_back(concat(power(Word{Letter::B}, quotients[0]), Word{Letter::A}));
  if (quotients.size() > 1) ladder.push_back(concat(power(ladder[0], quotients[1]), Word{Letter::B}));
  for (std::size_t j = 2; j < quotients.size(); ++j)
    ladder.push_back(concat(power(ladder[j - 1], quotients[j]), ladder[j - 2]));
  return ladder;
}

inline Word smith_word(std::span<const std::uint64_t> quotients) {
  return smith_ladder(quotients).back();
}

inline Word smith_word(const CfExpansion& e) { return smith_word(std::span(e.quotients())); }

struct CanonicalRotation {
  Word word;
  std::size_t shift;  // word == input.rotated(shift)
};

// Lexicographically least rotation (A < B), smallest shift among equal ones.
// Two-pointer scan, linear time.
inline CanonicalRotation canonical_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("canonical_rotation needs a non-empty word");
  std::size_t i = 0, j = 1, len = 0;
  while (i < n && j < n && len < n) {
    const int a = rank(w[(i + len) % n]);
    const int b = rank(w[(j + len) % n]);
    if (a == b) {
      ++len;
      continue;
    }
    if (a > b)
      i += len + 1;
    else
      j += len + 1;
    if (i == j) ++j;
    len = 0;
  }
  const std::size_t shift = std::min(i, j);
  return {w.rotated(shift), shift};
}

inline bool rotation_equivalent(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return canonical_rotation(a).word == canonical_rotation(b).word;
}

// A, then S_t without its last two letters, then B: one period of the
// mechanical word of slope k/n, where S_t is built on [u1 - 1, u2, ..., ut].
inline Word smith_to_mechanical(std::uint64_t n, std::uint64_t k) {
  require_proper_pair(n, k);
  const auto decremented = cf_expansion(n, k).with_first_decremented();
  const Word s = smith_word(std::span<const std::uint64_t>(decremented));
  Word out{Letter::A};
  out.append(s.prefix(s.size() - 2));
  out.push_back(Letter::B);
  return out;
}

// Rebuilds (n, k) from the quotients of a coprime Euclid ladder by running it
// bottom-up: r_{i+1} = 0, r_i = 1, r_{j-2} = q_j r_{j-1} + r_j.
inline std::pair<std::uint64_t, std::uint64_t> recurrence_reconstruct(
    std::span<const std::uint64_t> quotients) {
  if (quotients.empty()) throw std::invalid_argument("recurrence_reconstruct needs quotients");
  std::uint64_t lower = 0;  // r_{j}
  std::uint64_t upper = 1;  // r_{j-1}
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
    const std::uint64_t next = *it * upper + lower;
    lower = upper;
    upper = next;
  }
  return {upper, lower};
}

}  // namespace balanced
