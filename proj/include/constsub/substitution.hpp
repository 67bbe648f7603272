// Substitutions over a finite alphabet and their elementary combinatorics.
//
// Letters are external unicode tokens but are stored as contiguous indices in
// declaration order; every ordering produced by this library (sets of words,
// report listings, tie-breaks) follows that order.

#ifndef CONSTSUB_SUBSTITUTION_HPP_
#define CONSTSUB_SUBSTITUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace constsub {

using Letter = std::uint32_t;
using Word   = std::vector<Letter>;

/// Default cap on the number of symbols any single expansion may produce.
inline constexpr std::size_t kDefaultWordBudget = std::size_t{1} << 24;

class Substitution {
 public:
  Substitution() = default;

  /// Validates: nonempty alphabet without duplicates, every image nonempty and
  /// over the alphabet. Throws ParseError otherwise.
  Substitution(std::vector<std::string> alphabet, std::vector<Word> images);

  [[nodiscard]] std::size_t size() const noexcept { return alphabet_.size(); }
  [[nodiscard]] std::vector<std::string> const& alphabet() const noexcept {
    return alphabet_;
  }
  [[nodiscard]] std::string const& token(Letter a) const { return alphabet_.at(a); }
  [[nodiscard]] Word const& image(Letter a) const { return images_.at(a); }
  [[nodiscard]] std::vector<Word> const& images() const noexcept { return images_; }

  /// Common image length, or nullopt for variable-length substitutions.
  [[nodiscard]] std::optional<std::size_t> constant_length() const noexcept {
    return constant_length_;
  }
  [[nodiscard]] bool is_constant_length() const noexcept {
    return constant_length_.has_value();
  }
  /// Image length p; throws PreconditionError unless constant length p >= 2.
  [[nodiscard]] std::size_t length() const;

  [[nodiscard]] std::optional<Letter> find(std::string_view token) const;
  [[nodiscard]] Letter letter(std::string_view token) const;

  /// Distinct letters have distinct images.
  [[nodiscard]] bool is_one_to_one() const;

  [[nodiscard]] Letter first_of_image(Letter a) const { return images_.at(a).front(); }
  [[nodiscard]] Letter last_of_image(Letter a) const { return images_.at(a).back(); }

  /// Renders a word with the external tokens; multi-character tokens are
  /// backtick-quoted so that `parse_word` inverts it.
  [[nodiscard]] std::string render(Word const& w) const;
  [[nodiscard]] std::string render(Letter a) const;
  /// Tokenizes text into a word over this alphabet (whitespace ignored).
  [[nodiscard]] Word parse_word(std::string_view text) const;

  friend bool operator==(Substitution const&, Substitution const&) = default;

 private:
  std::vector<std::string>   alphabet_;
  std::vector<Word>          images_;
  std::optional<std::size_t> constant_length_;
};

/// One application of the substitution to a word.
[[nodiscard]] Word apply(Substitution const& s, Word const& w,
                         std::size_t max_word = kDefaultWordBudget);

/// tau^m(w). Throws BudgetError when the result would exceed `max_word`.
[[nodiscard]] Word iterate(Substitution const& s, Word const& w, std::size_t m,
                           std::size_t max_word = kDefaultWordBudget);

/// The first `len` symbols (or all, if shorter) of tau^m(w), computed without
/// materializing the full power.
[[nodiscard]] Word power_prefix(Substitution const& s, Word const& w, std::size_t m,
                                std::size_t len);
/// The last `len` symbols of tau^m(w).
[[nodiscard]] Word power_suffix(Substitution const& s, Word const& w, std::size_t m,
                                std::size_t len);

/// tau^m as a substitution in its own right (same alphabet).
[[nodiscard]] Substitution power(Substitution const& s, std::size_t m,
                                 std::size_t max_word = kDefaultWordBudget);

/// Square matrix; entry (a, b) counts occurrences of a in tau(b).
struct IncidenceMatrix {
  std::size_t                 n = 0;
  std::vector<std::uint64_t>  entries;  // row-major

  [[nodiscard]] std::uint64_t operator()(std::size_t row, std::size_t col) const {
    return entries[row * n + col];
  }
  [[nodiscard]] std::uint64_t& operator()(std::size_t row, std::size_t col) {
    return entries[row * n + col];
  }
  [[nodiscard]] IncidenceMatrix operator*(IncidenceMatrix const& rhs) const;
  friend bool operator==(IncidenceMatrix const&, IncidenceMatrix const&) = default;
};

[[nodiscard]] IncidenceMatrix incidence_matrix(Substitution const& s);

/// Wielandt exponent bound (n-1)^2 + 1 for an n x n primitive matrix.
[[nodiscard]] std::size_t wielandt_bound(std::size_t n) noexcept;

/// Some power of the incidence matrix, up to the Wielandt bound, is positive.
[[nodiscard]] bool is_primitive(Substitution const& s);

using WordSet = std::set<Word>;

/// Length-n words of the subshift X_tau. Requires a primitive substitution.
[[nodiscard]] WordSet language(Substitution const& s, std::size_t n,
                               std::size_t max_word = kDefaultWordBudget);

/// [p(1), ..., p(n_max)], p(n) = |language(s, n)|.
[[nodiscard]] std::vector<std::size_t> complexity(Substitution const& s,
                                                  std::size_t n_max);

/// Letter-pair alphabet A x A encoded as a * |A| + b.
[[nodiscard]] inline Letter pair_letter(Letter a, Letter b, std::size_t n) noexcept {
  return static_cast<Letter>(a * n + b);
}
[[nodiscard]] inline std::pair<Letter, Letter> unpair(Letter q, std::size_t n) noexcept {
  return {static_cast<Letter>(q / n), static_cast<Letter>(q % n)};
}

using PairWord = std::vector<std::pair<Letter, Letter>>;

/// Zips two words of equal length into a word over A x A.
[[nodiscard]] PairWord zip(Word const& u, Word const& v);

/// The substitution on letter-pairs: (a,b) maps to the zip of tau(a), tau(b).
/// Tokens are rendered "(a,b)". Requires constant length.
[[nodiscard]] Substitution pair_substitution(Substitution const& s);

}  // namespace constsub

#endif  // CONSTSUB_SUBSTITUTION_HPP_
