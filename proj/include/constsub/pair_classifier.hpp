// Li-Yorke pairs of constant-length substitution subshifts.
//
// Decisions run a flagged fixpoint over the pair substitution tau_2 on A x A.
// A state (r, fc, fd, again) records an occurrence of the pair letter r in
// tau_2^m(q) together with: a diagonal letter after it (fc), an off-diagonal
// letter after it (fd), another occurrence of r after it (again).  Lifting
// one level only ORs flags, and the whole level state is finite, so the
// sequence of levels is eventually periodic and is run until it repeats.

#ifndef CONSTSUB_PAIR_CLASSIFIER_HPP_
#define CONSTSUB_PAIR_CLASSIFIER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "constsub/desubstitution.hpp"
#include "constsub/orbit_sim.hpp"

namespace constsub {

enum class CoincidenceKind { NoCoincidence, Partial, Overall };

[[nodiscard]] std::string to_string(CoincidenceKind k);

struct CoincidenceWitness {
  Letter                   a = 0;
  Letter                   b = 0;
  std::vector<std::size_t> coincidences;
  std::vector<std::size_t> differences;
};

struct CoincidenceClass {
  CoincidenceKind                 kind = CoincidenceKind::NoCoincidence;
  /// Unordered pairs a < b in alphabet order.
  std::vector<CoincidenceWitness> table;
};

[[nodiscard]] CoincidenceClass coincidence_class(Substitution const& s);

/// Throws PreconditionError unless s is one-to-one, primitive, of constant
/// length and X_tau is infinite.
void require_ly_preconditions(Substitution const& s);

/// Realized flag states of one target pair at one level.
struct TargetFlags {
  Letter a = 0;
  Letter b = 0;
  /// Bit f = fc | fd << 1 | again << 2 is set when some occurrence of (a,b)
  /// in tau_2^m(a,b) carries those flags.
  unsigned states = 0;
};

struct FixpointRun {
  /// levels[m-1][k]: target pairs a != b in row-major order at level m.
  std::vector<std::vector<TargetFlags>> levels;
  /// The level state at `levels.size() + 1` equals the one at `cycle_start`.
  std::size_t                           cycle_start = 0;
  std::optional<std::size_t>            first_ly_level;
  std::optional<std::size_t>            first_uncountable_level;
};

/// Runs the fixpoint without checking preconditions. Throws BudgetError when
/// more than `max_levels` levels pass without a repeated state.
[[nodiscard]] FixpointRun run_flagged_fixpoint(Substitution const& s,
                                               std::size_t max_levels = 1u << 16);

[[nodiscard]] bool has_ly_pairs(Substitution const& s);
[[nodiscard]] bool has_uncountable_ly(Substitution const& s);
/// Strong Li-Yorke pairs exist iff uncountably many Li-Yorke pairs do.
[[nodiscard]] bool has_strong_ly(Substitution const& s);

/// tau^m(a) = u a v, tau^m(b) = u2 b v2, |u| = |u2|, v != v2 with a coincidence.
struct LyCertificate {
  std::size_t m = 0;
  Letter      a = 0;
  Letter      b = 0;
  Word        u, v, u2, v2;
};

/// tau^m(a) = u a v a w, tau^m(b) = u2 b v2 b w2 with aligned occurrences at
/// `first` < `second` and a coincidence after `first`.
struct UncountableCertificate {
  std::size_t m = 0;
  Letter      a = 0;
  Letter      b = 0;
  std::size_t first = 0;
  std::size_t second = 0;
};

[[nodiscard]] std::optional<LyCertificate> ly_certificate(
    Substitution const& s, std::size_t max_word = kDefaultWordBudget);
[[nodiscard]] std::optional<UncountableCertificate> uncountable_certificate(
    Substitution const& s, std::size_t max_word = kDefaultWordBudget);

/// Direct scan of (tau^m(a), tau^m(b)) for all m >= 1 with p^m <= bound.
struct BruteForceScan {
  std::size_t                max_level = 0;
  std::optional<std::size_t> first_ly_level;
  std::optional<std::size_t> first_uncountable_level;
};

[[nodiscard]] BruteForceScan brute_force_ly_scan(Substitution const& s,
                                                 std::size_t bound = 1000000);

enum class PairClass { Distal, Asymptotic, LiYorke, ProximalNotClassified, Unresolved };

[[nodiscard]] std::string to_string(PairClass c);

struct PairVerdict {
  PairClass                     cls = PairClass::Unresolved;
  std::string                   rule;
  std::optional<bool>           strong;
  std::optional<EvidenceReport> evidence;
};

/// Exact where a criterion applies; Unresolved with evidence otherwise.
[[nodiscard]] PairVerdict classify_pair(RepresentedPoint const& x, RepresentedPoint const& y);

/// The two-letter criteria taken on their own, for |A| = 2.
[[nodiscard]] PairVerdict classify_pair_two_letter(RepresentedPoint const& x,
                                                   RepresentedPoint const& y);

/// Whether simulated evidence contradicts a verdict. Asymptotic compares the
/// last difference at `horizon` and at twice the horizon; Li-Yorke doubles
/// the horizon until three events of each kind appear or the budget ends.
struct EvidenceCheck {
  bool           consistent = true;
  /// The horizon could not be raised far enough; not a refutation.
  bool           budget_exhausted = false;
  std::string    reason;
  EvidenceReport report;
};

[[nodiscard]] EvidenceCheck check_evidence(PairVerdict const& v, RepresentedPoint const& x,
                                           RepresentedPoint const& y, std::size_t horizon,
                                           std::size_t W = kDefaultWindow,
                                           std::size_t max_word = kDefaultWordBudget);

using PointPair = std::pair<RepresentedPoint, RepresentedPoint>;

[[nodiscard]] PointPair construct_ly_pair(SubstitutionPtr s);

struct RecurrentPair {
  PointPair         points;
  RecurrenceWitness witness;
};

[[nodiscard]] RecurrentPair construct_recurrent_ly_pair(SubstitutionPtr s,
                                                        std::size_t max_word = kDefaultWordBudget);

struct OrbitEnumeration {
  std::vector<PointPair> pairs;
  std::size_t            period_bound = 0;
  std::size_t            radius = 0;
  /// Distinct pairs were told apart by windows of `radius`.
  bool                   separated = true;
};

/// Li-Yorke pairs with purely periodic data of period <= period_bound, one
/// per orbit of T x T. Refused (PreconditionError) when the Li-Yorke pairs
/// are uncountable, unless require_countable is false.
[[nodiscard]] OrbitEnumeration enumerate_ly_orbits(SubstitutionPtr s,
                                                   std::optional<std::size_t> period_bound = {},
                                                   bool require_countable = true,
                                                   std::size_t max_word = kDefaultWordBudget);

struct ScrambledSet {
  SubstitutionPtr               substitution;
  std::vector<RepresentedPoint> points;
};

/// tau(a) = 0 a a (a+1) 0 over {0..n} and the points x(a), a in {0..n}.
[[nodiscard]] ScrambledSet build_scrambled_set(std::size_t n);

}  // namespace constsub

#endif  // CONSTSUB_PAIR_CLASSIFIER_HPP_
