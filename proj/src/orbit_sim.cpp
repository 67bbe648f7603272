#include "constsub/orbit_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "constsub/error.hpp"

namespace constsub {

std::size_t default_horizon(Substitution const& s) {
  std::size_t const p = s.length();
  std::size_t h = 1;
  for (int i = 0; i < 10; ++i) {
    if (h > kHorizonCap / p) return kHorizonCap;
    h *= p;
  }
  return std::min(h, kHorizonCap);
}

std::size_t agreement_radius(CenteredWord const& x, CenteredWord const& y, long n,
                             std::size_t W) {
  long const w = static_cast<long>(W);
  for (CenteredWord const* c : {&x, &y}) {
    long const r = static_cast<long>(c->radius);
    if (n - w < -r || n + w > r) {
      throw ValidationError("window does not cover coordinates " + std::to_string(n - w) +
                            " .. " + std::to_string(n + w));
    }
  }
  for (long i = 0; i < w; ++i) {
    if (x.at(n + i) != y.at(n + i) || x.at(n - i) != y.at(n - i)) {
      return static_cast<std::size_t>(i);
    }
  }
  return W;
}

std::vector<std::size_t> agreement_profile(RepresentedPoint const& x, RepresentedPoint const& y,
                                           std::size_t horizon, std::size_t W,
                                           std::size_t max_word) {
  std::size_t const R = horizon + W;
  CenteredWord const wx = x.expand(R, max_word);
  CenteredWord const wy = y.expand(R, max_word);

  // Differences at coordinates -W .. horizon + W, stored at offset W.
  std::size_t const span = horizon + 2 * W + 1;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> prev(span, kNone), next(span, kNone);
  auto differs = [&](std::size_t k) {
    long const i = static_cast<long>(k) - static_cast<long>(W);
    return wx.at(i) != wy.at(i);
  };
  for (std::size_t k = 0; k < span; ++k) {
    if (differs(k)) prev[k] = k;
    else if (k > 0) prev[k] = prev[k - 1];
  }
  for (std::size_t k = span; k-- > 0;) {
    if (differs(k)) next[k] = k;
    else if (k + 1 < span) next[k] = next[k + 1];
  }

  std::vector<std::size_t> out(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    std::size_t const k = n + W;
    std::size_t r = W;
    if (prev[k] != kNone) r = std::min(r, k - prev[k]);
    if (next[k] != kNone) r = std::min(r, next[k] - k);
    out[n] = r;
  }
  return out;
}

EvidenceReport empirical_class(RepresentedPoint const& x, RepresentedPoint const& y,
                               std::size_t horizon, std::size_t W, std::size_t max_word) {
  auto const profile = agreement_profile(x, y, horizon, W, max_word);
  EvidenceReport rep;
  rep.horizon = horizon;
  rep.window = W;
  std::size_t rmin = W, rmax = 0;
  for (std::size_t n = 0; n <= horizon; ++n) {
    std::size_t const r = profile[n];
    if (r >= W) rep.proximality_events.push_back(n);
    if (r == 0) {
      rep.separation_events.push_back(n);
      rep.max_last_difference = n;
    }
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  rep.min_distance = std::ldexp(1.0, -static_cast<int>(rmax));
  rep.max_distance = std::ldexp(1.0, -static_cast<int>(rmin));
  return rep;
}

bool pair_occurs(Word const& u, Word const& v, Word const& big_u, Word const& big_v) {
  if (u.size() != v.size() || big_u.size() != big_v.size()) {
    throw ValidationError("pair words must have equal lengths");
  }
  if (u.size() > big_u.size()) return false;
  for (std::size_t i = 0; i + u.size() <= big_u.size(); ++i) {
    if (std::equal(u.begin(), u.end(), big_u.begin() + static_cast<std::ptrdiff_t>(i)) &&
        std::equal(v.begin(), v.end(), big_v.begin() + static_cast<std::ptrdiff_t>(i))) {
      return true;
    }
  }
  return false;
}

bool recurrence_check(RepresentedPoint const& x, RepresentedPoint const& y,
                      RecurrenceWitness const& w, std::size_t depth, std::size_t max_word) {
  if (x == y) return true;
  Substitution const& s = x.substitution();
  std::map<std::size_t, std::pair<Word, Word>> images;
  auto image = [&](std::size_t m) -> std::pair<Word, Word> const& {
    auto it = images.find(m);
    if (it == images.end()) {
      std::size_t const k = 2 * m * w.power;
      it = images.emplace(m, std::pair{iterate(s, {w.a}, k, max_word),
                                       iterate(s, {w.b}, k, max_word)})
               .first;
    }
    return it->second;
  };
  for (std::size_t n = 0; n <= depth; ++n) {
    auto const wx = x.expand(n, max_word).symbols;
    auto const wy = y.expand(n, max_word).symbols;
    bool found = false;
    for (std::size_t m = 1; m <= depth && !found; ++m) {
      auto const& [big_a, big_b] = image(m);
      found = pair_occurs(wx, wy, big_a, big_b);
    }
    if (!found) return false;
  }
  return true;
}

bool forward_recurrence_check(RepresentedPoint const& x, RepresentedPoint const& y,
                              std::size_t depth, std::size_t horizon, std::size_t max_word) {
  std::size_t const R = horizon + depth;
  CenteredWord const wx = x.expand(R, max_word);
  CenteredWord const wy = y.expand(R, max_word);
  long const d = static_cast<long>(depth);
  // Longest n for which the window around t matches the one around 0.
  auto match = [&](long t) {
    long n = 0;
    while (n <= d && wx.at(t + n) == wx.at(n) && wx.at(t - n) == wx.at(-n) &&
           wy.at(t + n) == wy.at(n) && wy.at(t - n) == wy.at(-n)) {
      ++n;
    }
    return n - 1;
  };
  long best = -1;
  for (long t = 1; t <= static_cast<long>(horizon) && best < d; ++t) best = std::max(best, match(t));
  return best >= d;
}

}  // namespace constsub
