// Points of X_tau given by their desubstitution data.
//
// A point x is described by entries (p_i, a_i, s_i), i >= 0, with
// tau(a_{i+1}) = p_i a_i s_i, where a_i = x^(i)_0 and delta_i = |p_i|.  The
// entries are eventually periodic.  When every prefix in the period is empty
// the left half of x is not reached by the prefix words and is supplied by a
// left seed c at the start of the period: the left-infinite limit of
// tau^{kr}(c).  Symmetrically for suffixes and a right seed.

#ifndef CONSTSUB_DESUBSTITUTION_HPP_
#define CONSTSUB_DESUBSTITUTION_HPP_

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "constsub/odometer.hpp"
#include "constsub/substitution.hpp"

namespace constsub {

struct StreamEntry {
  Word   prefix;
  Letter center = 0;
  Word   suffix;

  [[nodiscard]] Digit digit() const noexcept { return static_cast<Digit>(prefix.size()); }

  friend bool operator==(StreamEntry const&, StreamEntry const&) = default;
};

using SubstitutionPtr = std::shared_ptr<Substitution const>;

[[nodiscard]] inline SubstitutionPtr share(Substitution s) {
  return std::make_shared<Substitution const>(std::move(s));
}

/// Validated, canonical desubstitution data. The canonical form has minimal
/// period and then minimal preperiod; seeds sit at the first periodic level.
class DesubstitutionStream {
 public:
  /// Throws ValidationError on a broken chain (reporting the level), on a
  /// missing or forbidden seed, or on an inadmissible seed.
  DesubstitutionStream(SubstitutionPtr s, std::vector<StreamEntry> preperiod,
                       std::vector<StreamEntry> period,
                       std::optional<Letter> left_seed = std::nullopt,
                       std::optional<Letter> right_seed = std::nullopt);

  [[nodiscard]] Substitution const& substitution() const noexcept { return *s_; }
  [[nodiscard]] SubstitutionPtr const& substitution_ptr() const noexcept { return s_; }
  [[nodiscard]] std::vector<StreamEntry> const& preperiod() const noexcept { return pre_; }
  [[nodiscard]] std::vector<StreamEntry> const& period() const noexcept { return per_; }
  [[nodiscard]] std::optional<Letter> left_seed() const noexcept { return left_; }
  [[nodiscard]] std::optional<Letter> right_seed() const noexcept { return right_; }

  [[nodiscard]] StreamEntry const& entry(std::size_t i) const;
  [[nodiscard]] OdometerDigits digits() const;

  /// I+ finite: all suffixes in the period are empty.
  [[nodiscard]] bool right_finite() const noexcept { return right_.has_value(); }
  [[nodiscard]] bool left_finite() const noexcept { return left_.has_value(); }

  friend bool operator==(DesubstitutionStream const& a, DesubstitutionStream const& b) {
    return *a.s_ == *b.s_ && a.pre_ == b.pre_ && a.per_ == b.per_ && a.left_ == b.left_ &&
           a.right_ == b.right_;
  }
  friend bool operator<(DesubstitutionStream const& a, DesubstitutionStream const& b);

 private:
  SubstitutionPtr          s_;
  std::vector<StreamEntry> pre_;
  std::vector<StreamEntry> per_;
  std::optional<Letter>    left_;
  std::optional<Letter>    right_;
};

/// x(-radius .. radius); symbols[radius] is x_0.
struct CenteredWord {
  std::size_t radius = 0;
  Word        symbols;

  [[nodiscard]] Letter at(long i) const {
    return symbols.at(static_cast<std::size_t>(static_cast<long>(radius) + i));
  }
  friend bool operator==(CenteredWord const&, CenteredWord const&) = default;
};

/// Left half, '.', then x_0 and the right half.
[[nodiscard]] std::string render(Substitution const& s, CenteredWord const& w);

class RepresentedPoint {
 public:
  explicit RepresentedPoint(DesubstitutionStream stream);

  [[nodiscard]] DesubstitutionStream const& stream() const noexcept { return stream_; }
  [[nodiscard]] Substitution const& substitution() const noexcept {
    return stream_.substitution();
  }

  /// The window x(-n .. n). Memoized; safe to call concurrently.
  [[nodiscard]] CenteredWord expand(std::size_t n,
                                    std::size_t max_word = kDefaultWordBudget) const;
  /// x(0 .. len-1) and x(-len .. -1).
  [[nodiscard]] Word right_word(std::size_t len, std::size_t max_word = kDefaultWordBudget) const;
  [[nodiscard]] Word left_word(std::size_t len, std::size_t max_word = kDefaultWordBudget) const;

  friend bool operator==(RepresentedPoint const& a, RepresentedPoint const& b) {
    return a.stream_ == b.stream_;
  }

 private:
  struct Cache {
    std::mutex mutex;
    Word       left;   // x(-k .. -1)
    Word       right;  // x(0 .. k-1)
  };

  DesubstitutionStream   stream_;
  std::shared_ptr<Cache> cache_;
};

/// Checks a stream against the definition and builds the point.
[[nodiscard]] RepresentedPoint stream_from_entries(SubstitutionPtr s,
                                                   std::vector<StreamEntry> preperiod,
                                                   std::vector<StreamEntry> period,
                                                   std::optional<Letter> left_seed,
                                                   std::optional<Letter> right_seed);

/// lim tau^{kr}(left) . lim tau^{kr}(right). Throws ValidationError when
/// left.right is not in the language or a seed is not fixed by any tau^r,
/// r <= |A|.
[[nodiscard]] RepresentedPoint stream_from_fixed_point(SubstitutionPtr s, Letter left,
                                                       Letter right);

/// Converts data for sigma = tau^m (entries over sigma, seeds for sigma)
/// into the stream for tau of the same point.
[[nodiscard]] RepresentedPoint refine_power_stream(SubstitutionPtr tau, std::size_t m,
                                                   std::vector<StreamEntry> preperiod,
                                                   std::vector<StreamEntry> period,
                                                   std::optional<Letter> left_seed,
                                                   std::optional<Letter> right_seed);

[[nodiscard]] std::vector<Digit> pi_digits(RepresentedPoint const& x, std::size_t k);

/// T x. The digits follow the odometer successor.
[[nodiscard]] RepresentedPoint shift(RepresentedPoint const& x);

/// T^k x for k >= 0.
[[nodiscard]] RepresentedPoint shift(RepresentedPoint const& x, std::size_t k);

/// For x with a right seed: (T^k x, k) where k = 1 + sum_{i<P} |s_i| p^i
/// is the first k for which T^k x has every digit zero.
[[nodiscard]] std::pair<RepresentedPoint, std::size_t> jump_to_right_cut(
    RepresentedPoint const& x);

/// |language(s, 3)|, the bound on the size of a fiber of pi.
[[nodiscard]] std::size_t fiber_bound(Substitution const& s);

struct FiberResult {
  std::vector<RepresentedPoint> points;
  std::size_t                   radius = 0;
  /// Some distinct streams could not be told apart at `radius`.
  bool                          lower_bound = false;
};

/// All points x with pi(x) = delta, in a deterministic order.
[[nodiscard]] FiberResult enumerate_fiber(SubstitutionPtr s, OdometerDigits const& delta,
                                          std::size_t search_radius = 64);

/// Cycle of `c` under the letter map, starting at c; empty if c is transient.
[[nodiscard]] std::vector<Letter> letter_cycle(std::vector<Letter> const& map, Letter c);

/// a -> first letter of tau(a), and a -> last letter of tau(a).
[[nodiscard]] std::vector<Letter> first_letter_map(Substitution const& s);
[[nodiscard]] std::vector<Letter> last_letter_map(Substitution const& s);

}  // namespace constsub

#endif  // CONSTSUB_DESUBSTITUTION_HPP_
