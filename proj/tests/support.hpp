// Shared fixtures and brute-force oracles for the unit tests.

#ifndef CONSTSUB_TESTS_SUPPORT_HPP_
#define CONSTSUB_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "constsub/parse.hpp"
#include "constsub/substitution.hpp"

namespace fixtures {

inline constexpr char const* kMorse = "0 -> 01\n1 -> 10\n";
inline constexpr char const* kPeriodDoubling = "0 -> 01\n1 -> 00\n";
inline constexpr char const* kCountableLY = "0 -> 010\n1 -> 100\n";
inline constexpr char const* kAba = "a -> aba\nb -> bca\nc -> cca\n";
inline constexpr char const* kBaacd =
    "a -> baacd\nb -> bbbcd\nc -> bcaba\nd -> bdabd\n";
inline constexpr char const* kFourLetter =
    "0 -> 0123\n1 -> 1032\n2 -> 1023\n3 -> 0132\n";
inline constexpr char const* kCollapsing = "0 -> 01\n1 -> 01\n";
inline constexpr char const* kPeriodTwo = "0 -> 010\n1 -> 101\n";

inline constsub::Substitution sub(char const* text) {
  return constsub::parse_substitution(text);
}

}  // namespace fixtures

namespace oracle {

using constsub::Letter;
using constsub::Substitution;
using constsub::Word;
using constsub::WordSet;

/// Length-n factors of tau^k(a) over all letters, with k raised until every
/// tau^k(a) has length >= min_len. For primitive tau this is the language
/// once min_len is large relative to the recurrence of n-words.
inline WordSet brute_language(Substitution const& s, std::size_t n,
                              std::size_t min_len = 4096) {
  WordSet out;
  for (Letter a = 0; a < s.size(); ++a) {
    Word w{a};
    while (w.size() < min_len) {
      Word next;
      for (Letter b : w) {
        next.insert(next.end(), s.image(b).begin(), s.image(b).end());
      }
      w = std::move(next);
    }
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      out.insert(Word(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + n)));
    }
  }
  return out;
}

inline Word naive_iterate(Substitution const& s, Word w, std::size_t m) {
  for (std::size_t k = 0; k < m; ++k) {
    Word next;
    for (Letter b : w) next.insert(next.end(), s.image(b).begin(), s.image(b).end());
    w = std::move(next);
  }
  return w;
}

/// Random constant-length substitution; not necessarily primitive.
inline Substitution random_substitution(std::mt19937& rng, std::size_t n, std::size_t p) {
  std::vector<std::string> alphabet;
  std::vector<Word> images;
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(n - 1));
  for (std::size_t a = 0; a < n; ++a) {
    alphabet.push_back(std::to_string(a));
    Word w(p);
    for (auto& b : w) b = letter(rng);
    images.push_back(std::move(w));
  }
  return Substitution(std::move(alphabet), std::move(images));
}

}  // namespace oracle

#endif  // CONSTSUB_TESTS_SUPPORT_HPP_
