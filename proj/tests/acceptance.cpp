// Acceptance run: one PASS/FAIL line per criterion on stdout, the individual
// checks behind each line on stderr. Exits nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "constsub/error.hpp"
#include "constsub/orbit_sim.hpp"
#include "constsub/pair_classifier.hpp"
#include "constsub/parse.hpp"
#include "constsub/reduction.hpp"
#include "constsub/tower.hpp"
#include "points.hpp"
#include "support.hpp"

using namespace constsub;
using fixtures::sub;

namespace {

class Criterion {
 public:
  explicit Criterion(int id) : id_(id) {}

  void check(bool ok, std::string const& what) {
    std::cerr << "  [" << id_ << "] " << (ok ? "ok   " : "FAIL ") << what << '\n';
    if (!ok) failed_.push_back(what);
    ++checks_;
  }

  bool report(std::string const& title) const {
    std::cout << "criterion " << id_ << ' ' << (failed_.empty() ? "PASS" : "FAIL") << ": " << title
              << " (" << checks_ - failed_.size() << '/' << checks_ << " checks)";
    if (!failed_.empty()) std::cout << "; failed: " << failed_.front();
    std::cout << std::endl;
    return failed_.empty();
  }

 private:
  int                      id_;
  std::size_t              checks_ = 0;
  std::vector<std::string> failed_;
};

// Runs fn and records any library error as a failed check.
void guarded(Criterion& c, std::string const& what, std::function<void()> const& fn) {
  try {
    fn();
  } catch (std::exception const& e) {
    c.check(false, what + " threw: " + e.what());
  }
}

struct Fixture {
  char const* name;
  char const* text;
};

std::vector<Fixture> infinite_fixtures() {
  return {{"Morse", fixtures::kMorse},         {"period doubling", fixtures::kPeriodDoubling},
          {"010/100", fixtures::kCountableLY}, {"aba", fixtures::kAba},
          {"baacd", fixtures::kBaacd},         {"four-letter", fixtures::kFourLetter}};
}

bool criterion1() {
  Criterion c(1);
  guarded(c, "Morse", [&] {
    auto const s = sub(fixtures::kMorse);
    c.check(is_primitive(s) && decide_infinite(s), "Morse primitive and infinite");
    c.check(coincidence_class(s).kind == CoincidenceKind::NoCoincidence, "Morse NoCoincidence");
    c.check(!has_ly_pairs(s), "Morse has_li_yorke=false");
  });
  guarded(c, "period doubling", [&] {
    auto const s = sub(fixtures::kPeriodDoubling);
    c.check(coincidence_class(s).kind == CoincidenceKind::Overall, "0->01,1->00 Overall");
    c.check(!has_ly_pairs(s), "0->01,1->00 has_li_yorke=false");
  });
  guarded(c, "010/100", [&] {
    c.check(has_ly_pairs(sub(fixtures::kCountableLY)), "0->010,1->100 has_li_yorke=true");
  });
  guarded(c, "aba", [&] {
    auto const s = sub(fixtures::kAba);
    c.check(has_ly_pairs(s), "aba has_li_yorke=true");
    c.check(!has_uncountable_ly(s), "aba uncountable=false");
    c.check(!has_strong_ly(s), "aba strong=false");
    auto const orbits = enumerate_ly_orbits(share(s));
    c.check(!orbits.pairs.empty(), "aba orbit list nonempty (" +
                                       std::to_string(orbits.pairs.size()) + " orbits, bound " +
                                       std::to_string(orbits.period_bound) + ")");
  });
  guarded(c, "baacd", [&] {
    auto const s = share(sub(fixtures::kBaacd));
    c.check(has_uncountable_ly(*s), "baacd uncountable=true");
    c.check(has_strong_ly(*s), "baacd strong=true");
    auto const rec = construct_recurrent_ly_pair(s);
    c.check(recurrence_check(rec.points.first, rec.points.second, rec.witness, 4),
            "baacd recurrent pair passes recurrence_check depth 4");
    Letter const b = s->letter("b"), cc = s->letter("c"), d = s->letter("d");
    auto const x = stream_from_entries(s, {}, {StreamEntry{{b}, cc, s->parse_word("aba")}},
                                       std::nullopt, std::nullopt);
    auto const y = stream_from_entries(s, {}, {StreamEntry{{b}, d, s->parse_word("abd")}},
                                       std::nullopt, std::nullopt);
    bool const passes = recurrence_check(x, y, RecurrenceWitness{1, cc, d}, 4);
    std::size_t present = 0, total = 0;
    for (std::size_t m = 2; m <= 6; ++m) {
      Word const bc = iterate(*s, {cc}, m), bd = iterate(*s, {d}, m);
      for (std::size_t i = 1; i < m; ++i, ++total) {
        present += pair_occurs(iterate(*s, {cc}, i), iterate(*s, {d}, i), bc, bd) ? 1 : 0;
      }
    }
    c.check(!passes, std::string("baacd non-recurrent pair fails recurrence_check depth 4 (it ") +
                         (passes ? "passes" : "fails") + ")");
    c.check(present == 0, "(tau^i(c),tau^i(d)) absent from (tau^m(c),tau^m(d)) for i<m<=6 (" +
                              std::to_string(present) + " of " + std::to_string(total) +
                              " present)");
    bool const returns = forward_recurrence_check(x, y, 0, 200000);
    std::cerr << "      non-recurrent pair returns in its forward orbit within 200000 steps: "
              << (returns ? "yes" : "no") << '\n';
  });
  guarded(c, "four-letter", [&] {
    auto const s = sub(fixtures::kFourLetter);
    bool shape = true;
    for (std::size_t m = 1; m <= 4; ++m) {
      Word const u = iterate(s, {1}, m), v = iterate(s, {2}, m);
      std::size_t same = 0;
      for (std::size_t i = 0; i < u.size(); ++i) same += u[i] == v[i] ? 1 : 0;
      shape = shape && same >= 1 && u.size() - same >= 2;
    }
    c.check(shape, "tau^m(1), tau^m(2) have a coincidence and >= 2 non-coincidences, m <= 4");
    c.check(!has_ly_pairs(s), "four-letter has_li_yorke=false");
  });
  guarded(c, "finite", [&] {
    c.check(!decide_infinite(sub(fixtures::kCollapsing)), "tau(0)=tau(1)=01 finite");
    auto const d = decide_infinite_traced(sub(fixtures::kPeriodTwo));
    c.check(!d.infinite && d.trace.back().alphabet_size == 2,
            "0->010,1->101 finite with 2-letter reduction");
  });
  return c.report("fixture decisions");
}

bool criterion2() {
  Criterion c(2);
  std::vector<Substitution> cases;
  for (auto const& f : infinite_fixtures()) cases.push_back(sub(f.text));
  std::mt19937 rng(2024);
  std::size_t random = 0;
  while (random < 200) {
    std::size_t const n = 2 + rng() % 3, p = 2 + rng() % 3;
    auto s = oracle::random_substitution(rng, n, p);
    if (!s.is_one_to_one() || !is_primitive(s) || !decide_infinite(s)) continue;
    cases.push_back(std::move(s));
    ++random;
  }
  std::size_t agree = 0;
  for (auto const& s : cases) {
    guarded(c, to_text(s), [&] {
      auto const scan = brute_force_ly_scan(s, 1000000);
      bool const ok = has_ly_pairs(s) == scan.first_ly_level.has_value() &&
                      has_uncountable_ly(s) == scan.first_uncountable_level.has_value();
      if (ok) ++agree;
      else c.check(false, "disagreement on " + to_text(s));
    });
  }
  c.check(agree == cases.size(), std::to_string(agree) + "/" + std::to_string(cases.size()) +
                                     " substitutions agree");
  return c.report("fixpoint agrees with brute-force scans");
}

bool criterion3() {
  Criterion c(3);
  for (auto const& [name, x] : points::corpus()) {
    guarded(c, name, [&] {
      std::size_t const p = x.substitution().length();
      auto const tx = shift(x);
      c.check(pi_digits(tx, 32) == odometer_successor(pi_digits(x, 32), p),
              name + ": digits of Tx are the successor");
      bool windows = true;
      auto const big = x.expand(1025);
      for (std::size_t N = 1; N <= 1024; N *= 2) {
        auto const w = tx.expand(N);
        for (long i = -static_cast<long>(N); i <= static_cast<long>(N); ++i) {
          windows = windows && w.at(i) == big.at(i + 1);
        }
      }
      c.check(windows, name + ": expand(Tx, N) is the left shift of expand(x, N+1), N <= 1024");
    });
  }
  return c.report("factor map commutes with the shift");
}

bool criterion4() {
  Criterion c(4);
  std::mt19937 rng(4);
  for (auto const& f : infinite_fixtures()) {
    guarded(c, f.name, [&] {
      auto const s = share(sub(f.text));
      std::size_t const p = s->length(), K = fiber_bound(*s);
      std::size_t worst = 0;
      bool ok = true;
      for (int t = 0; t < 20; ++t) {
        std::vector<Digit> pre(rng() % 4), per(1 + rng() % 3);
        for (auto& d : pre) d = static_cast<Digit>(rng() % p);
        for (auto& d : per) d = static_cast<Digit>(rng() % p);
        auto const fiber = enumerate_fiber(s, OdometerDigits(p, pre, per));
        worst = std::max(worst, fiber.points.size());
        ok = ok && !fiber.points.empty() && fiber.points.size() <= K;
      }
      c.check(ok, std::string(f.name) + ": fibers of 20 digit sequences have size <= " +
                      std::to_string(K) + " (largest " + std::to_string(worst) + ")");
    });
  }
  return c.report("fiber bound");
}

// Distal/Asymptotic/LiYorke evidence with the criterion's thresholds.
bool evidence_agrees(PairVerdict const& v, RepresentedPoint const& x, RepresentedPoint const& y,
                     std::size_t H, std::string& why) {
  auto const check = check_evidence(v, x, y, H, 16);
  auto const& r = check.report;
  why = check.reason;
  if (!check.consistent || check.budget_exhausted) return false;
  switch (v.cls) {
    case PairClass::Distal: return r.proximality_events.empty();
    case PairClass::LiYorke:
      return r.proximality_events.size() >= 3 && r.separation_events.size() >= 3;
    default: return true;
  }
}

// Digits of both points and the largest agreement radius over 4H with a
// generous window, to tell a bounded approach from a proximal one.
std::string describe(RepresentedPoint const& x, RepresentedPoint const& y, std::size_t H) {
  std::ostringstream out;
  out << " (digits ";
  for (Digit d : pi_digits(x, 6)) out << d;
  out << " vs ";
  for (Digit d : pi_digits(y, 6)) out << d;
  auto const profile = agreement_profile(x, y, 4 * H, 64);
  out << ", largest radius over " << 4 * H << " steps with W=64: "
      << *std::max_element(profile.begin(), profile.end()) << ")";
  return out.str();
}

bool criterion5() {
  Criterion c(5);
  std::size_t const H = 59049;
  std::mt19937 rng(5);
  std::array<std::size_t, 5> counts{};
  for (auto const& f : infinite_fixtures()) {
    guarded(c, f.name, [&] {
      auto const s = share(sub(f.text));
      std::size_t const p = s->length();
      std::vector<PointPair> pairs;
      std::vector<RepresentedPoint> reps;
      std::vector<OdometerDigits> digits = {OdometerDigits::zero(p), OdometerDigits::minus_one(p)};
      for (int t = 0; t < 3; ++t) {
        std::vector<Digit> pre(rng() % 3), per(1 + rng() % 3);
        for (auto& d : pre) d = static_cast<Digit>(rng() % p);
        for (auto& d : per) d = static_cast<Digit>(rng() % p);
        digits.emplace_back(p, pre, per);
      }
      for (auto const& d : digits) {
        auto const fiber = enumerate_fiber(s, d).points;
        for (std::size_t i = 0; i < fiber.size(); ++i) {
          for (std::size_t j = i + 1; j < fiber.size(); ++j) pairs.emplace_back(fiber[i], fiber[j]);
        }
        reps.push_back(fiber.front());
      }
      for (std::size_t i = 0; i + 1 < reps.size(); ++i) pairs.emplace_back(reps[i], reps[i + 1]);
      pairs.emplace_back(reps.front(), shift(reps.front()));
      if (has_ly_pairs(*s)) pairs.push_back(construct_ly_pair(s));
      if (has_uncountable_ly(*s)) pairs.push_back(construct_recurrent_ly_pair(s).points);
      if (has_ly_pairs(*s) && !has_uncountable_ly(*s)) {
        for (auto const& pr : enumerate_ly_orbits(s).pairs) pairs.push_back(pr);
      }
      std::size_t classified = 0, ok = 0;
      for (auto const& [x, y] : pairs) {
        auto const v = classify_pair(x, y);
        if (v.cls == PairClass::Unresolved || v.cls == PairClass::ProximalNotClassified) continue;
        ++classified;
        ++counts[static_cast<std::size_t>(v.cls)];
        std::string why;
        if (evidence_agrees(v, x, y, H, why)) ++ok;
        else c.check(false, std::string(f.name) + ": " + to_string(v.cls) + " pair contradicted: " +
                                why + describe(x, y, H));
      }
      c.check(ok == classified, std::string(f.name) + ": " + std::to_string(ok) + "/" +
                                    std::to_string(classified) + " classified pairs consistent");
    });
  }
  std::cerr << "      distal " << counts[0] << ", asymptotic " << counts[1] << ", li-yorke "
            << counts[2] << '\n';
  return c.report("verdicts agree with simulation at horizon 3^10");
}

bool criterion6() {
  Criterion c(6);
  for (std::size_t n = 1; n <= 3; ++n) {
    guarded(c, "n=" + std::to_string(n), [&] {
      auto const set = build_scrambled_set(n);
      std::size_t ly = 0, ok = 0, total = 0;
      for (std::size_t i = 0; i < set.points.size(); ++i) {
        for (std::size_t j = i + 1; j < set.points.size(); ++j, ++total) {
          auto const v = classify_pair(set.points[i], set.points[j]);
          std::string why;
          if (v.cls == PairClass::LiYorke) ++ly;
          if (evidence_agrees(v, set.points[i], set.points[j], 59049, why)) ++ok;
        }
      }
      c.check(total == (n + 1) * n / 2 && ly == total && ok == total,
              "n=" + std::to_string(n) + ": " + std::to_string(ly) + "/" + std::to_string(total) +
                  " pairs Li-Yorke, " + std::to_string(ok) + " consistent");
    });
  }
  return c.report("scrambled set builder");
}

bool criterion7() {
  Criterion c(7);
  guarded(c, "levels", [&] {
    bool ok = true;
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const t = tower_substitution(n);
      ok = ok && is_primitive(*t.substitution) && decide_infinite(*t.substitution);
    }
    c.check(ok, "levels 1..5 primitive and infinite");
  });
  guarded(c, "rho", [&] {
    bool ok = true;
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const lo = tower_substitution(n), hi = tower_substitution(n + 1);
      for (Letter a = 0; a <= n + 1; ++a) {
        ok = ok && rho(n, hi.substitution->image(a)) == constsub::apply(*lo.substitution, rho(n, {a}));
        ok = ok && rho(n, iterate(*hi.substitution, {a}, 6)) ==
                       iterate(*lo.substitution, rho(n, {a}), 6);
      }
    }
    c.check(ok, "rho_n o tau_{n+1} = tau_n o rho_n, n <= 5");
  });
  guarded(c, "S", [&] {
    auto const rep = verify_scrambled_S(4, 19683);
    std::size_t agree = 0;
    for (auto const& cell : rep.cells) agree += cell.agrees ? 1 : 0;
    c.check(rep.matches_pattern && rep.distal_entries == 0,
            "S matrix depth 4, horizon 3^9: " + std::to_string(agree) + "/" +
                std::to_string(rep.cells.size()) + " cells match, " +
                std::to_string(rep.distal_entries) + " distal");
  });
  std::mt19937 rng(7);
  std::size_t const R = 729, core = 9;
  for (std::size_t n = 1; n <= 3; ++n) {
    guarded(c, "preimages", [&] {
      auto const level = tower_substitution(n);
      Word const big = iterate(*level.substitution, {0}, 9);
      std::vector<CenteredWord> windows = {tower_point_x(n).expand(R), tower_point_y(n, n).expand(R)};
      while (windows.size() < 10) {
        std::size_t const at = R + rng() % (big.size() - 2 * R);
        windows.push_back(CenteredWord{R, Word(big.begin() + static_cast<long>(at - R),
                                               big.begin() + static_cast<long>(at + R + 1))});
      }
      std::size_t most = 0, least = 99;
      for (auto const& w : windows) {
        std::size_t const k = rho_preimage_windows(n, w, core).candidates.size();
        most = std::max(most, k);
        least = std::min(least, k);
      }
      c.check(most <= 2 && least >= 1,
              "level " + std::to_string(n) + ": 10 windows of radius 3^6 have " +
                  std::to_string(least) + ".." + std::to_string(most) + " lift candidates");
    });
  }
  return c.report("tower and the scrambled set S");
}

std::string run_cli(std::string const& args, int& status) {
  std::string const cmd = std::string(CONSTSUB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

bool criterion8() {
  Criterion c(8);
  for (char const* name : {"morse.txt", "period_doubling.txt", "countable_ly.txt", "aba.txt",
                           "baacd.txt", "four_letter.txt", "collapsing.txt", "period_two.txt",
                           "countable_ly.json"}) {
    guarded(c, name, [&] {
      std::string const args = std::string("analyze --json ") + CONSTSUB_FIXTURES + "/" + name;
      int s1 = 0, s2 = 0;
      auto const a = run_cli(args, s1);
      auto const b = run_cli(args, s2);
      c.check(s1 == 0 && s2 == 0 && !a.empty() && a == b,
              std::string(name) + ": two analyze --json runs byte-identical (" +
                  std::to_string(a.size()) + " bytes)");
    });
  }
  return c.report("deterministic analyze output");
}

}  // namespace

int main() {
  std::array<std::function<bool()>, 8> const all = {criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8};
  bool ok = true;
  for (auto const& run : all) ok = run() && ok;
  return ok ? 0 : 1;
}
