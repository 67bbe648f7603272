// One-to-one reduction and the finiteness decision for X_tau.

#ifndef CONSTSUB_REDUCTION_HPP_
#define CONSTSUB_REDUCTION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "constsub/substitution.hpp"

namespace constsub {

/// phi: A -> B stored as indices into the reduced alphabet.
using LetterMap = std::vector<Letter>;

struct ReductionStep {
  Substitution substitution;  // result of this merge round
  LetterMap    map;           // from the previous round's alphabet
};

struct ReductionResult {
  Substitution               reduced;
  LetterMap                  letter_map;  // original alphabet -> reduced
  std::vector<ReductionStep> chain;

  [[nodiscard]] bool is_identity() const noexcept { return chain.empty(); }
};

/// Merges letters with equal images, keeping the earliest representative,
/// until all images are distinct.
[[nodiscard]] ReductionResult one_to_one_reduction(Substitution const& s);

/// Applies a letter map symbol by symbol.
[[nodiscard]] Word map_word(LetterMap const& phi, Word const& w);

/// tau = g o f with |B| < |A|.
struct Simplification {
  std::size_t       target_size = 0;  // |B|
  std::vector<Word> f;                // f(a), words over B
  std::vector<Word> g;                // g(b), words over A
};

inline constexpr std::size_t kDefaultSimplificationBudget = 1'000'000;

/// Exhaustive search for a factorization through a smaller alphabet. Returns
/// nullopt when tau is elementary; throws BudgetError when the search cannot
/// finish within `node_budget` search nodes.
[[nodiscard]] std::optional<Simplification> is_simplifiable(
    Substitution const& s, std::size_t node_budget = kDefaultSimplificationBudget);

/// gamma = f o g over the smaller alphabet B (tokens "b0", "b1", ...).
[[nodiscard]] Substitution compose_fg(Simplification const& simp);

/// Letter a with ab and ac in the language for some b != c.
[[nodiscard]] bool has_biprolongeable_letter(Substitution const& s);

struct FinitenessStep {
  std::size_t                   alphabet_size = 0;
  std::optional<Simplification> simplification;  // empty: elementary here
  std::optional<bool>           biprolongeable;  // set on the elementary step
};

struct FinitenessDecision {
  bool                        infinite = false;
  std::vector<FinitenessStep> trace;
};

/// Decides whether X_tau is infinite. Requires a primitive substitution.
[[nodiscard]] FinitenessDecision decide_infinite_traced(
    Substitution const& s, std::size_t node_budget = kDefaultSimplificationBudget);

[[nodiscard]] bool decide_infinite(Substitution const& s,
                                   std::size_t node_budget = kDefaultSimplificationBudget);

enum class ComplexityEvidence { Finite, InfiniteEvidence, Inconclusive };

[[nodiscard]] std::string to_string(ComplexityEvidence e);

/// Independent cross-check of decide_infinite from the factor complexity:
/// Finite when p(n+1) = p(n) for some n <= n_max, InfiniteEvidence when
/// p(n) >= n + 1 throughout, otherwise Inconclusive.
[[nodiscard]] ComplexityEvidence oracle_infinite_via_complexity(Substitution const& s,
                                                                std::size_t n_max);

}  // namespace constsub

#endif  // CONSTSUB_REDUCTION_HPP_
