#include <doctest.h>

#include <map>

#include "constsub/error.hpp"
#include "constsub/reduction.hpp"
#include "support.hpp"

using namespace constsub;
using fixtures::sub;

namespace {

void check_commutes(Substitution const& s, ReductionResult const& r) {
  for (Letter a = 0; a < s.size(); ++a) {
    CHECK(r.reduced.image(r.letter_map[a]) == map_word(r.letter_map, s.image(a)));
  }
}

// Simplification invariant g(f(a)) = tau(a).
void check_simplification(Substitution const& s, Simplification const& simp) {
  CHECK(simp.target_size < s.size());
  for (Letter a = 0; a < s.size(); ++a) {
    Word gf;
    for (Letter b : simp.f[a]) gf.insert(gf.end(), simp.g[b].begin(), simp.g[b].end());
    CHECK(gf == s.image(a));
  }
}

}  // namespace

TEST_CASE("one-to-one reduction") {
  auto const s = sub(fixtures::kCollapsing);
  auto const r = one_to_one_reduction(s);
  CHECK(r.reduced.size() == 1);
  CHECK(r.reduced.token(0) == "0");
  CHECK(r.reduced.image(0) == Word{0, 0});
  CHECK(r.letter_map == LetterMap{0, 0});
  check_commutes(s, r);

  auto const morse = sub(fixtures::kMorse);
  auto const rm = one_to_one_reduction(morse);
  CHECK(rm.is_identity());
  CHECK(rm.reduced == morse);

  auto const two = one_to_one_reduction(sub(fixtures::kPeriodTwo));
  CHECK(two.reduced.size() == 2);
}

TEST_CASE("reduction chains compose to the letter map") {
  // 2 and 3 merge first; afterwards 0 and 1 have equal images
  auto const s = sub("0 -> 02\n1 -> 03\n2 -> 10\n3 -> 10\n");
  auto const r = one_to_one_reduction(s);
  CHECK(r.chain.size() == 2);
  LetterMap composed(s.size());
  for (Letter a = 0; a < s.size(); ++a) {
    Letter b = a;
    for (auto const& step : r.chain) b = step.map[b];
    composed[a] = b;
  }
  CHECK(composed == r.letter_map);
  CHECK(r.reduced.is_one_to_one());
  check_commutes(s, r);
}

TEST_CASE("property: reduction is idempotent and commutes") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto const s = oracle::random_substitution(rng, 2 + trial % 4, 2 + trial % 3);
    auto const r = one_to_one_reduction(s);
    CHECK(r.reduced.is_one_to_one());
    CHECK(one_to_one_reduction(r.reduced).is_identity());
    check_commutes(s, r);
  }
}

TEST_CASE("simplifiability") {
  auto const s = sub("0 -> 0101\n1 -> 01\n");
  auto const simp = is_simplifiable(s);
  REQUIRE(simp);
  CHECK(simp->target_size == 1);
  CHECK(simp->g[0] == Word{0, 1});
  CHECK(simp->f[0] == Word{0, 0});
  CHECK(simp->f[1] == Word{0});
  check_simplification(s, *simp);

  CHECK_FALSE(is_simplifiable(sub(fixtures::kMorse)));
  CHECK_FALSE(is_simplifiable(sub("a -> aa")));

  auto const collapse = is_simplifiable(sub(fixtures::kCollapsing));
  REQUIRE(collapse);
  check_simplification(sub(fixtures::kCollapsing), *collapse);
}

TEST_CASE("simplifiability budget is reported") {
  CHECK_THROWS_AS((void)is_simplifiable(sub(fixtures::kBaacd), 10), BudgetError);
}

TEST_CASE("finiteness decision") {
  CHECK_FALSE(decide_infinite(sub(fixtures::kCollapsing)));
  CHECK_FALSE(decide_infinite(sub(fixtures::kPeriodTwo)));
  CHECK(decide_infinite(sub(fixtures::kMorse)));
  CHECK(decide_infinite(sub(fixtures::kPeriodDoubling)));
  CHECK(decide_infinite(sub(fixtures::kAba)));
  CHECK(decide_infinite(sub(fixtures::kBaacd)));
  CHECK(decide_infinite(sub(fixtures::kFourLetter)));
  CHECK_THROWS_AS((void)decide_infinite(sub("0 -> 00\n1 -> 11")), PreconditionError);

  auto const trace = decide_infinite_traced(sub(fixtures::kPeriodTwo)).trace;
  REQUIRE_FALSE(trace.empty());
  // 010 and 101 are not powers of one word: elementary, no biprolongeable letter
  CHECK(trace.back().alphabet_size == 2);
  CHECK(trace.back().biprolongeable == false);
}

TEST_CASE("biprolongeable letters") {
  CHECK(has_biprolongeable_letter(sub(fixtures::kMorse)));
  CHECK_FALSE(has_biprolongeable_letter(sub(fixtures::kPeriodTwo)));
}

TEST_CASE("complexity oracle") {
  CHECK(oracle_infinite_via_complexity(sub(fixtures::kCollapsing), 8) ==
        ComplexityEvidence::Finite);
  CHECK(oracle_infinite_via_complexity(sub(fixtures::kMorse), 8) ==
        ComplexityEvidence::InfiniteEvidence);
  CHECK(oracle_infinite_via_complexity(sub(fixtures::kMorse), 0) ==
        ComplexityEvidence::Inconclusive);
}

TEST_CASE("property: decision agrees with the complexity oracle") {
  std::vector<Substitution> cases;
  for (char const* text :
       {fixtures::kMorse, fixtures::kPeriodDoubling, fixtures::kCountableLY, fixtures::kAba,
        fixtures::kBaacd, fixtures::kFourLetter, fixtures::kCollapsing, fixtures::kPeriodTwo}) {
    cases.push_back(sub(text));
  }
  std::mt19937 rng(2024);
  while (cases.size() < 208) {
    std::size_t const n = 1 + rng() % 4;
    std::size_t const p = 2 + rng() % 3;
    auto s = oracle::random_substitution(rng, n, p);
    if (is_primitive(s)) cases.push_back(std::move(s));
  }
  std::size_t compared = 0;
  for (auto const& s : cases) {
    auto const evidence = oracle_infinite_via_complexity(s, 10);
    if (evidence == ComplexityEvidence::Inconclusive) continue;
    ++compared;
    CHECK(decide_infinite(s) == (evidence == ComplexityEvidence::InfiniteEvidence));
  }
  CHECK(compared > 150);
}

TEST_CASE("property: simplification steps are genuine factorizations") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto const s = oracle::random_substitution(rng, 2 + trial % 3, 2 + trial % 3);
    if (!is_primitive(s)) continue;
    auto const decision = decide_infinite_traced(s);
    Substitution cur = s;
    for (auto const& step : decision.trace) {
      CHECK(step.alphabet_size == cur.size());
      if (step.simplification) {
        check_simplification(cur, *step.simplification);
        cur = compose_fg(*step.simplification);
      }
    }
  }
}

TEST_CASE("property: reduction is a conjugacy on infinite fixtures") {
  // phi maps a fixed point of tau onto one of the reduced substitution, and
  // the central letter of x is a function of the phi-image of a window.
  auto const s = sub("0 -> 012\n1 -> 120\n2 -> 012\n");
  REQUIRE(is_primitive(s));
  REQUIRE(decide_infinite(s));
  auto const r = one_to_one_reduction(s);
  CHECK(r.reduced.size() == 2);
  Word const x = iterate(s, Word{0}, 7);
  Word const y = iterate(r.reduced, Word{r.letter_map[0]}, 7);
  CHECK(map_word(r.letter_map, x) == y);
  std::map<Word, Letter> centers;
  for (std::size_t i = 0; i + 9 <= x.size(); ++i) {
    Word const win(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(i + 9));
    auto [it, inserted] = centers.emplace(map_word(r.letter_map, win), win[4]);
    if (!inserted) CHECK(it->second == win[4]);
  }
}
