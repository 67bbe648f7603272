// Finite-horizon observation of a pair of points under the shift.
//
// The metric observable is the agreement radius: the least |i| with
// x_{n+i} != y_{n+i}, capped at W, so that rho(T^n x, T^n y) = 2^{-radius}.
// Everything here is evidence at a stated horizon, never an exact claim.

#ifndef CONSTSUB_ORBIT_SIM_HPP_
#define CONSTSUB_ORBIT_SIM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "constsub/desubstitution.hpp"

namespace constsub {

inline constexpr std::size_t kDefaultWindow = 16;
inline constexpr std::size_t kHorizonCap = 1000000;

struct EvidenceReport {
  std::size_t horizon = 0;
  std::size_t window = 0;
  /// Times n <= horizon with agreement radius >= window.
  std::vector<std::size_t> proximality_events;
  /// Times n <= horizon with x_n != y_n.
  std::vector<std::size_t> separation_events;
  /// Largest n <= horizon with x_n != y_n.
  std::optional<std::size_t> max_last_difference;
  double min_distance = 1.0;
  double max_distance = 0.0;
};

/// p^10 capped at kHorizonCap.
[[nodiscard]] std::size_t default_horizon(Substitution const& s);

/// Throws ValidationError unless both windows cover n-W .. n+W.
[[nodiscard]] std::size_t agreement_radius(CenteredWord const& x, CenteredWord const& y, long n,
                                           std::size_t W);

/// Agreement radius at every n = 0 .. horizon.
[[nodiscard]] std::vector<std::size_t> agreement_profile(RepresentedPoint const& x,
                                                         RepresentedPoint const& y,
                                                         std::size_t horizon, std::size_t W,
                                                         std::size_t max_word = kDefaultWordBudget);

[[nodiscard]] EvidenceReport empirical_class(RepresentedPoint const& x, RepresentedPoint const& y,
                                             std::size_t horizon, std::size_t W = kDefaultWindow,
                                             std::size_t max_word = kDefaultWordBudget);

/// The letters a, b and the power M of the construction the pair came from.
struct RecurrenceWitness {
  std::size_t power = 1;
  Letter      a = 0;
  Letter      b = 0;
};

/// For every n <= depth looks for m <= depth such that the pair window
/// (x(-n..n), y(-n..n)) occurs in (sigma^{2m}(a), sigma^{2m}(b)), sigma = tau^M.
[[nodiscard]] bool recurrence_check(RepresentedPoint const& x, RepresentedPoint const& y,
                                    RecurrenceWitness const& w, std::size_t depth,
                                    std::size_t max_word = kDefaultWordBudget);

/// For every n <= depth looks for a time 1 <= t <= horizon with
/// (x, y)(t-n .. t+n) = (x, y)(-n .. n): a return of the pair in its own
/// forward orbit.
[[nodiscard]] bool forward_recurrence_check(RepresentedPoint const& x, RepresentedPoint const& y,
                                            std::size_t depth, std::size_t horizon,
                                            std::size_t max_word = kDefaultWordBudget);

/// Whether the aligned pair (u, v) occurs in (big_u, big_v).
[[nodiscard]] bool pair_occurs(Word const& u, Word const& v, Word const& big_u,
                               Word const& big_v);

}  // namespace constsub

#endif  // CONSTSUB_ORBIT_SIM_HPP_
