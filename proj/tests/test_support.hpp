#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "balanced/words.hpp"

namespace balanced::testing {

inline Word word_from_bits(std::uint64_t bits, std::size_t length) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i)
    letters.push_back((bits >> i) & 1u ? Letter::A : Letter::B);
  return Word(std::move(letters));
}

// All 2^length words of the given length.
inline std::vector<Word> all_words(std::size_t length) {
  std::vector<Word> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits)
    out.push_back(word_from_bits(bits, length));
  return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i) letters.push_back(coin(rng) ? Letter::A : Letter::B);
  return Word(std::move(letters));
}

// Least rotation by trying every shift; A < B.
inline std::pair<Word, std::size_t> least_rotation_brute(const Word& w) {
  Word best = w;
  std::size_t best_shift = 0;
  for (std::size_t shift = 1; shift < w.size(); ++shift) {
    const Word r = w.rotated(shift);
    const bool smaller = std::lexicographical_compare(
        r.begin(), r.end(), best.begin(), best.end(),
        [](Letter a, Letter b) { return rank(a) < rank(b); });
    if (smaller) {
      best = r;
      best_shift = shift;
    }
  }
  return {best, best_shift};
}

// Window weight read letter by letter.
inline std::size_t window_weight_naive(const Word& w, std::size_t start, std::size_t length) {
  std::size_t h = 0;
  for (std::size_t i = 0; i < length; ++i) h += w[(start + i) % w.size()] == Letter::A;
  return h;
}

}  // namespace balanced::testing
