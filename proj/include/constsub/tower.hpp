// The inverse-limit tower: tau_n over A_n = {0..n} with tau_n(a) = a 0 (a+1)
// for a != n and tau_n(n) = n 0 n, and the factor maps rho_n: A_{n+1} -> A_n
// merging n+1 into n.  The inverse limit is never built; claims about it are
// checked one level at a time on finite windows.

#ifndef CONSTSUB_TOWER_HPP_
#define CONSTSUB_TOWER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "constsub/desubstitution.hpp"
#include "constsub/pair_classifier.hpp"

namespace constsub {

struct TowerLevel {
  std::size_t     n = 0;
  SubstitutionPtr substitution;
};

/// Throws PreconditionError for n = 0 and ValidationError if the level is
/// not primitive or X_n is finite.
[[nodiscard]] TowerLevel tower_substitution(std::size_t n);

/// rho_n on a word over A_{n+1}; throws PreconditionError on a letter > n+1.
[[nodiscard]] Word rho(std::size_t n, Word const& w);

/// x(n) = lim tau_n^k(n) . n 0 n tau_n(0n) tau_n^2(0n) ...
[[nodiscard]] RepresentedPoint tower_point_x(std::size_t n);

/// y(m,n) = lim tau_m^k(m) . (n-1) 0 n tau_m(0n) ..., for m >= n >= 1.
[[nodiscard]] RepresentedPoint tower_point_y(std::size_t m, std::size_t n);

/// Whether some choice of letters, one from each options[i], is a word of
/// the language of s. Exact: recurses through the cuttings of tau.
[[nodiscard]] bool admits_word(Substitution const& s,
                               std::vector<std::vector<Letter>> const& options);

struct PreimageSearch {
  std::size_t        radius = 0;
  std::size_t        core_radius = 0;
  /// Distinct core windows of language-consistent lifts of the full window.
  std::vector<Word>  candidates;
};

/// Lifts of the window w = x(-radius .. radius) of a point of X_n through
/// rho_n, restricted to the core x(-core_radius .. core_radius).
[[nodiscard]] PreimageSearch rho_preimage_windows(std::size_t n, CenteredWord const& w,
                                                  std::size_t core_radius);

/// One element of S per index k >= 1: level j carries x(j) for j < k and
/// y(j, k) for j >= k.
enum class SPattern { Equal, Asymptotic, LiYorke };

[[nodiscard]] std::string to_string(SPattern p);

struct SCell {
  std::size_t   first = 0;   // element indices k
  std::size_t   second = 0;
  std::size_t   level = 0;
  SPattern      expected = SPattern::Equal;
  PairVerdict   exact;
  EvidenceCheck evidence;
  bool          agrees = true;
};

struct ScrambledSReport {
  std::size_t        depth = 0;
  std::size_t        horizon = 0;
  std::vector<SCell> cells;
  std::size_t        distal_entries = 0;
  bool               matches_pattern = true;
};

/// Elements k = 1 .. depth, levels 1 .. depth+2.
[[nodiscard]] ScrambledSReport verify_scrambled_S(std::size_t depth, std::size_t horizon,
                                                  std::size_t W = kDefaultWindow);

}  // namespace constsub

#endif  // CONSTSUB_TOWER_HPP_
