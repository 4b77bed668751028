#pragma once

// Two-letter words, periodic words, and mechanical words of rational slope.
//
// Letters are 1 (rendered A) and 0 (rendered B). A periodic word is stored by
// one period; index i of the infinite word reads period[i mod length].

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace balanced {

enum class Letter : std::uint8_t { B = 0, A = 1 };

enum class Alphabet { AB, ZeroOne };

inline char render(Letter l, Alphabet alphabet = Alphabet::AB) {
  if (alphabet == Alphabet::ZeroOne) return l == Letter::A ? '1' : '0';
  return l == Letter::A ? 'A' : 'B';
}

// Rank used for lexicographic comparisons: A sorts before B.
constexpr int rank(Letter l) { return l == Letter::A ? 0 : 1; }

// Exact ceiling of a/b for non-negative a and positive b.
constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  // Accepts exactly the characters of the chosen alphabet.
  static Word parse(std::string_view text, Alphabet alphabet = Alphabet::AB) {
    const char one = alphabet == Alphabet::AB ? 'A' : '1';
    const char zero = alphabet == Alphabet::AB ? 'B' : '0';
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == one) {
        letters.push_back(Letter::A);
      } else if (text[i] == zero) {
        letters.push_back(Letter::B);
      } else {
        throw std::invalid_argument("invalid letter '" + std::string(1, text[i]) +
                                    "' at position " + std::to_string(i) +
                                    " (expected " + one + " or " + zero + ")");
      }
    }
    return Word(std::move(letters));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }

  // Left rotation: the result starts at letter `shift` of this word.
  Word rotated(std::size_t shift) const {
    if (letters_.empty()) return *this;
    std::vector<Letter> out(letters_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
                out.end());
    return Word(std::move(out));
  }

  Word prefix(std::size_t length) const {
    length = std::min(length, letters_.size());
    return Word(std::vector<Letter>(letters_.begin(),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(length)));
  }

  std::string str(Alphabet alphabet = Alphabet::AB) const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out.push_back(render(l, alphabet));
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

inline Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.append(y);
  return out;
}

inline Word power(const Word& x, std::size_t e) {
  std::vector<Letter> letters;
  letters.reserve(x.size() * e);
  for (std::size_t i = 0; i < e; ++i)
    letters.insert(letters.end(), x.begin(), x.end());
  return Word(std::move(letters));
}

inline std::size_t weight(const Word& u) {
  return static_cast<std::size_t>(std::count(u.begin(), u.end(), Letter::A));
}

// The infinite word period * period * period * ...
class PeriodicWord {
 public:
  explicit PeriodicWord(Word period) : period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("periodic word needs a non-empty period");
  }

  const Word& period() const { return period_; }
  std::size_t period_length() const { return period_.size(); }
  Letter at(std::size_t i) const { return period_[i % period_.size()]; }

 private:
  Word period_;
};

inline Word factor(const PeriodicWord& w, std::size_t start, std::size_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) letters.push_back(w.at(start + i));
  return Word(std::move(letters));
}

// Exact rational k/n with 0 < k <= n.
class Slope {
 public:
  Slope(std::uint64_t numerator, std::uint64_t denominator)
      : numerator_(numerator), denominator_(denominator) {
    if (denominator_ == 0) throw std::invalid_argument("slope denominator must be positive");
    if (numerator_ == 0) throw std::invalid_argument("slope numerator must be positive");
    if (numerator_ > denominator_)
      throw std::invalid_argument("slope must satisfy k <= n (got " + std::to_string(numerator_) +
                                  "/" + std::to_string(denominator_) + ")");
  }

  std::uint64_t numerator() const { return numerator_; }
  std::uint64_t denominator() const { return denominator_; }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  std::uint64_t numerator_;
  std::uint64_t denominator_;
};

// One period (length n) of the mechanical word w(i) = ceil(k(i+1)/n) - ceil(ki/n).
inline Word mechanical_word(const Slope& slope) {
  const std::uint64_t k = slope.numerator();
  const std::uint64_t n = slope.denominator();
  std::vector<Letter> letters;
  letters.reserve(n);
  std::uint64_t previous = 0;  // ceil(k*0/n)
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t current = ceil_div(k * (i + 1), n);
    letters.push_back(current - previous == 1 ? Letter::A : Letter::B);
    previous = current;
  }
  return Word(std::move(letters));
}

struct BalanceViolation {
  std::size_t start;
  std::size_t weight;
  friend bool operator==(const BalanceViolation&, const BalanceViolation&) = default;
};

struct BalanceReport {
  std::size_t lower;  // floor(m * alpha)
  std::size_t upper;  // ceil(m * alpha)
  std::optional<BalanceViolation> violation;

  bool balanced() const { return !violation.has_value(); }
};

// Checks floor(m*alpha) <= h(u) <= ceil(m*alpha) for every length-m factor u of
// the periodic word, alpha = weight(period)/length(period). By periodicity the
// n start positions cover every factor.
inline BalanceReport check_balance(const Word& period, std::size_t m) {
  if (period.empty()) throw std::invalid_argument("check_balance needs a non-empty period");
  if (m == 0) throw std::invalid_argument("check_balance needs m >= 1");
  const std::size_t n = period.size();
  const std::size_t k = weight(period);

  BalanceReport report{static_cast<std::size_t>((static_cast<std::uint64_t>(m) * k) / n),
                       static_cast<std::size_t>(ceil_div(static_cast<std::uint64_t>(m) * k, n)),
                       std::nullopt};

  // A factor of length m = c*n + r holds c full periods plus a length-r window.
  const std::size_t full = (m / n) * k;
  const std::size_t r = m % n;
  std::size_t window = 0;
  for (std::size_t i = 0; i < r; ++i) window += period[i] == Letter::A;
  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t h = full + window;
    if (h < report.lower || h > report.upper) {
      report.violation = BalanceViolation{start, h};
      return report;
    }
    if (r > 0) {
      window -= period[start] == Letter::A;
      window += period[(start + r) % n] == Letter::A;
    }
  }
  return report;
}

}  // namespace balanced
