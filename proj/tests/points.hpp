// A small corpus of represented points and an independent window oracle.
//
// The oracle builds x(-n..n) top-down: start from the center letter at a deep
// level K (with seed words attached on seeded sides), apply tau K times by
// plain concatenation and track where x_0 lands.

#ifndef CONSTSUB_TESTS_POINTS_HPP_
#define CONSTSUB_TESTS_POINTS_HPP_

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "constsub/desubstitution.hpp"
#include "support.hpp"

namespace points {

using namespace constsub;

struct OracleWindow {
  Word        word;
  std::size_t center = 0;

  [[nodiscard]] CenteredWord centered(std::size_t n) const {
    CenteredWord w;
    w.radius = n;
    w.symbols.assign(word.begin() + static_cast<long>(center - n),
                     word.begin() + static_cast<long>(center + n + 1));
    return w;
  }
  [[nodiscard]] Word right(std::size_t len) const {
    return Word(word.begin() + static_cast<long>(center),
                word.begin() + static_cast<long>(center + len));
  }
};

inline std::size_t cycle_length(std::vector<Letter> const& map, Letter c) {
  Letter cur = map[c];
  std::size_t r = 1;
  while (cur != c) {
    cur = map[cur];
    ++r;
  }
  return r;
}

/// The last `len` letters of the left-infinite limit of tau^{kr}(c).
inline Word tail_suffix(Substitution const& s, Letter c, std::size_t len) {
  std::vector<Letter> last(s.size());
  for (Letter a = 0; a < s.size(); ++a) last[a] = s.image(a).back();
  std::size_t const r = cycle_length(last, c);
  Word w{c};
  while (w.size() < len) w = oracle::naive_iterate(s, w, r);
  return Word(w.end() - static_cast<long>(len), w.end());
}

inline OracleWindow oracle_window(RepresentedPoint const& x, std::size_t n) {
  auto const& st = x.stream();
  auto const& s = st.substitution();
  std::size_t const p = s.length();
  std::size_t const P = st.preperiod().size();
  std::size_t step = st.period().size();
  std::vector<Letter> first(s.size()), last(s.size());
  for (Letter a = 0; a < s.size(); ++a) {
    first[a] = s.image(a).front();
    last[a] = s.image(a).back();
  }
  if (st.left_seed()) step = std::lcm(step, cycle_length(last, *st.left_seed()));
  if (st.right_seed()) step = std::lcm(step, cycle_length(first, *st.right_seed()));
  for (std::size_t K = P;; K += step) {
    OracleWindow w;
    if (st.left_seed()) {
      w.word = tail_suffix(s, *st.left_seed(), 2);
    }
    w.center = w.word.size();
    w.word.push_back(st.entry(K).center);
    if (st.right_seed()) {
      std::size_t const r = cycle_length(first, *st.right_seed());
      Word const seed = oracle::naive_iterate(s, Word{*st.right_seed()}, r);
      w.word.insert(w.word.end(), seed.begin(), seed.end());
    }
    for (std::size_t i = K; i-- > 0;) {
      w.word = oracle::naive_iterate(s, w.word, 1);
      w.center = w.center * p + st.entry(i).digit();
    }
    if (w.center >= n && w.word.size() - w.center > n + 1) return w;
  }
}

/// (T x)(-n..n) read off the window x(-n-1..n+1).
inline CenteredWord shifted_window(RepresentedPoint const& x, std::size_t n) {
  auto const big = x.expand(n + 1);
  CenteredWord w;
  w.radius = n;
  w.symbols.assign(big.symbols.begin() + 2, big.symbols.end());
  return w;
}

inline std::vector<std::pair<std::string, RepresentedPoint>> corpus() {
  std::vector<std::pair<std::string, RepresentedPoint>> out;
  auto const morse = share(fixtures::sub(fixtures::kMorse));
  auto const pd = share(fixtures::sub(fixtures::kPeriodDoubling));
  auto const ly = share(fixtures::sub(fixtures::kCountableLY));
  auto const aba = share(fixtures::sub(fixtures::kAba));
  auto const baacd = share(fixtures::sub(fixtures::kBaacd));
  out.emplace_back("morse 1.0", stream_from_fixed_point(morse, 1, 0));
  out.emplace_back("morse 0.1", stream_from_fixed_point(morse, 0, 1));
  out.emplace_back("morse 1.1", stream_from_fixed_point(morse, 1, 1));
  out.emplace_back("morse -1",
                   stream_from_entries(morse, {},
                                       {StreamEntry{{0}, 1, {}}, StreamEntry{{1}, 0, {}}},
                                       std::nullopt, 0));
  out.emplace_back("morse (01)",
                   enumerate_fiber(morse, OdometerDigits(2, {}, {0, 1})).points.front());
  out.emplace_back("morse 1(10)",
                   enumerate_fiber(morse, OdometerDigits(2, {1}, {1, 0})).points.back());
  out.emplace_back("period doubling 0.0", stream_from_fixed_point(pd, 0, 0));
  out.emplace_back("period doubling -1",
                   enumerate_fiber(pd, OdometerDigits::minus_one(2)).points.front());
  out.emplace_back("010/100 ly",
                   stream_from_entries(ly, {}, {StreamEntry{{}, 0, {1, 0}}}, 0, std::nullopt));
  out.emplace_back("010/100 (12)",
                   enumerate_fiber(ly, OdometerDigits(3, {2}, {1, 2})).points.front());
  out.emplace_back("aba (021)", enumerate_fiber(aba, OdometerDigits(3, {}, {0, 2, 1})).points.back());
  out.emplace_back("aba 2", enumerate_fiber(aba, OdometerDigits(3, {1}, {2})).points.front());
  out.emplace_back("baacd 0", enumerate_fiber(baacd, OdometerDigits(5, {3}, {0})).points.front());
  out.emplace_back("baacd (14)",
                   enumerate_fiber(baacd, OdometerDigits(5, {}, {1, 4})).points.back());
  return out;
}

}  // namespace points

#endif  // CONSTSUB_TESTS_POINTS_HPP_
