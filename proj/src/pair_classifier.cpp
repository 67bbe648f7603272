#include "constsub/pair_classifier.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "constsub/error.hpp"
#include "constsub/reduction.hpp"

namespace constsub {

namespace {

constexpr unsigned kFc = 1;
constexpr unsigned kFd = 2;
constexpr unsigned kAgain = 4;
constexpr std::size_t kFlagStates = 8;

bool is_ly_state(unsigned f) { return (f & (kFc | kFd)) == (kFc | kFd); }
bool is_uncountable_state(unsigned f) { return (f & (kFc | kAgain)) == (kFc | kAgain); }

// Flags of every position j of the aligned pair (X, Y): what lies after j.
struct PositionFlags {
  std::vector<unsigned char> coin_after, diff_after, again_after;
};

PositionFlags scan_after(Word const& X, Word const& Y, Letter a, Letter b) {
  std::size_t const len = X.size();
  PositionFlags f;
  f.coin_after.assign(len, 0);
  f.diff_after.assign(len, 0);
  f.again_after.assign(len, 0);
  bool coin = false, diff = false, again = false;
  for (std::size_t j = len; j-- > 0;) {
    f.coin_after[j] = coin;
    f.diff_after[j] = diff;
    f.again_after[j] = again;
    coin = coin || X[j] == Y[j];
    diff = diff || X[j] != Y[j];
    again = again || (X[j] == a && Y[j] == b);
  }
  return f;
}

Word slice(Word const& w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
              w.begin() + static_cast<std::ptrdiff_t>(to));
}

StreamEntry split_at(Word const& w, std::size_t j) {
  return StreamEntry{slice(w, 0, j), w.at(j), slice(w, j + 1, w.size())};
}

std::size_t power_or_cap(std::size_t p, std::size_t m, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (v > cap / p) return cap + 1;
    v *= p;
  }
  return v;
}

// Images tau^m(a) for every letter a.
std::vector<Word> level_images(Substitution const& s, std::size_t m, std::size_t max_word) {
  std::vector<Word> out(s.size());
  for (Letter a = 0; a < s.size(); ++a) out[a] = iterate(s, {a}, m, max_word);
  return out;
}

bool suffixes_agree_eventually(DesubstitutionStream const& x, DesubstitutionStream const& y) {
  std::size_t const P = std::max(x.preperiod().size(), y.preperiod().size());
  std::size_t const L = std::lcm(x.period().size(), y.period().size());
  for (std::size_t i = P; i < P + L; ++i) {
    if (x.entry(i).suffix != y.entry(i).suffix) return false;
  }
  return true;
}

void require_same_substitution(RepresentedPoint const& x, RepresentedPoint const& y) {
  if (!(x.substitution() == y.substitution())) {
    throw PreconditionError("points belong to different substitutions");
  }
  if (!x.substitution().is_one_to_one()) {
    throw PreconditionError("classification requires a one-to-one substitution");
  }
}

// Both points moved past the right end of their finite I+ when it is finite.
std::pair<RepresentedPoint, RepresentedPoint> past_right_cut(RepresentedPoint const& x,
                                                             RepresentedPoint const& y) {
  if (!x.stream().right_finite()) return {x, y};
  return {jump_to_right_cut(x).first, jump_to_right_cut(y).first};
}

// Shared body of classify_pair; `uncountable` is the fixpoint answer.
PairVerdict classify_with(RepresentedPoint const& x, RepresentedPoint const& y,
                          CoincidenceKind kind, bool uncountable, bool attach_evidence) {
  PairVerdict v;
  if (!(x.stream().digits() == y.stream().digits())) {
    v.cls = PairClass::Distal;
    v.rule = "odometer-separation";
    return v;
  }
  if (x == y) {
    v.cls = PairClass::Asymptotic;
    v.rule = "identical-points";
    return v;
  }
  auto const [xx, yy] = past_right_cut(x, y);
  if (suffixes_agree_eventually(xx.stream(), yy.stream())) {
    v.cls = PairClass::Asymptotic;
    v.rule = "eventual-suffix-agreement";
    return v;
  }
  switch (kind) {
    case CoincidenceKind::Overall:
      v.cls = PairClass::LiYorke;
      v.rule = "overall-coincidence-criterion";
      if (!uncountable) v.strong = false;
      return v;
    case CoincidenceKind::NoCoincidence:
      v.cls = PairClass::Distal;
      v.rule = "no-coincidence-criterion";
      return v;
    case CoincidenceKind::Partial:
      break;
  }
  v.cls = PairClass::Unresolved;
  v.rule = "partial-coincidence";
  if (attach_evidence) {
    v.evidence = empirical_class(x, y, default_horizon(x.substitution()));
  }
  return v;
}

}  // namespace

std::string to_string(CoincidenceKind k) {
  switch (k) {
    case CoincidenceKind::NoCoincidence: return "NoCoincidence";
    case CoincidenceKind::Partial: return "Partial";
    case CoincidenceKind::Overall: return "Overall";
  }
  return "?";
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::Distal: return "Distal";
    case PairClass::Asymptotic: return "Asymptotic";
    case PairClass::LiYorke: return "LiYorke";
    case PairClass::ProximalNotClassified: return "ProximalNotClassified";
    case PairClass::Unresolved: return "Unresolved";
  }
  return "?";
}

CoincidenceClass coincidence_class(Substitution const& s) {
  std::size_t const p = s.length();
  CoincidenceClass out;
  std::size_t with = 0;
  for (Letter a = 0; a < s.size(); ++a) {
    for (Letter b = a + 1; b < s.size(); ++b) {
      CoincidenceWitness w{a, b, {}, {}};
      for (std::size_t i = 0; i < p; ++i) {
        (s.image(a)[i] == s.image(b)[i] ? w.coincidences : w.differences).push_back(i);
      }
      if (!w.coincidences.empty()) ++with;
      out.table.push_back(std::move(w));
    }
  }
  if (with == 0) out.kind = CoincidenceKind::NoCoincidence;
  else if (with == out.table.size()) out.kind = CoincidenceKind::Overall;
  else out.kind = CoincidenceKind::Partial;
  return out;
}

void require_ly_preconditions(Substitution const& s) {
  if (!s.is_constant_length()) throw PreconditionError("substitution is not of constant length");
  if (!s.is_one_to_one()) {
    throw PreconditionError("substitution is not one-to-one; reduce it first");
  }
  if (!is_primitive(s)) throw PreconditionError("substitution is not primitive");
  if (!decide_infinite(s)) throw PreconditionError("X_tau is finite");
}

FixpointRun run_flagged_fixpoint(Substitution const& s, std::size_t max_levels) {
  std::size_t const n = s.size();
  std::size_t const p = s.length();
  std::size_t const Q = n * n;

  // Level state: G[(q * Q + r) * 8 + f] plus coin, diff and occ[q * Q + r].
  struct Level {
    std::vector<bool> g, coin, diff, occ;
    bool operator<(Level const& o) const {
      return std::tie(g, coin, diff, occ) < std::tie(o.g, o.coin, o.diff, o.occ);
    }
  };

  std::vector<std::vector<Letter>> img(Q, std::vector<Letter>(p));
  for (Letter a = 0; a < n; ++a) {
    for (Letter b = 0; b < n; ++b) {
      for (std::size_t l = 0; l < p; ++l) {
        img[pair_letter(a, b, n)][l] = pair_letter(s.image(a)[l], s.image(b)[l], n);
      }
    }
  }

  Level cur{std::vector<bool>(Q * Q * kFlagStates), std::vector<bool>(Q), std::vector<bool>(Q),
            std::vector<bool>(Q * Q)};
  for (Letter q = 0; q < Q; ++q) {
    auto const [a, b] = unpair(q, n);
    cur.g[(q * Q + q) * kFlagStates] = true;
    cur.coin[q] = a == b;
    cur.diff[q] = a != b;
    cur.occ[q * Q + q] = true;
  }

  FixpointRun run;
  std::map<Level, std::size_t> seen;
  seen.emplace(cur, 0);
  for (std::size_t m = 1;; ++m) {
    if (m > max_levels) throw BudgetError("flagged fixpoint did not repeat within the level cap");
    Level next{std::vector<bool>(Q * Q * kFlagStates), std::vector<bool>(Q),
               std::vector<bool>(Q), std::vector<bool>(Q * Q)};
    for (Letter q = 0; q < Q; ++q) {
      bool coin_after = false, diff_after = false;
      std::vector<bool> occ_after(Q);
      for (std::size_t l = p; l-- > 0;) {
        Letter const ql = img[q][l];
        unsigned const base = (coin_after ? kFc : 0u) | (diff_after ? kFd : 0u);
        for (Letter r = 0; r < Q; ++r) {
          for (unsigned f = 0; f < kFlagStates; ++f) {
            if (!cur.g[(ql * Q + r) * kFlagStates + f]) continue;
            unsigned const nf = f | base | (occ_after[r] ? kAgain : 0u);
            next.g[(q * Q + r) * kFlagStates + nf] = true;
          }
        }
        coin_after = coin_after || cur.coin[ql];
        diff_after = diff_after || cur.diff[ql];
        for (Letter r = 0; r < Q; ++r) {
          if (cur.occ[ql * Q + r]) {
            occ_after[r] = true;
            next.occ[q * Q + r] = true;
          }
        }
      }
      next.coin[q] = coin_after;
      next.diff[q] = diff_after;
    }

    auto const [it, inserted] = seen.emplace(next, m);
    if (!inserted) {
      run.cycle_start = it->second;
      return run;
    }
    std::vector<TargetFlags> targets;
    for (Letter a = 0; a < n; ++a) {
      for (Letter b = 0; b < n; ++b) {
        if (a == b) continue;
        Letter const q = pair_letter(a, b, n);
        TargetFlags t{a, b, 0};
        for (unsigned f = 0; f < kFlagStates; ++f) {
          if (!next.g[(q * Q + q) * kFlagStates + f]) continue;
          t.states |= 1u << f;
          if (is_ly_state(f) && !run.first_ly_level) run.first_ly_level = m;
          if (is_uncountable_state(f) && !run.first_uncountable_level) {
            run.first_uncountable_level = m;
          }
        }
        targets.push_back(t);
      }
    }
    run.levels.push_back(std::move(targets));
    cur = std::move(next);
  }
}

bool has_ly_pairs(Substitution const& s) {
  require_ly_preconditions(s);
  return run_flagged_fixpoint(s).first_ly_level.has_value();
}

bool has_uncountable_ly(Substitution const& s) {
  require_ly_preconditions(s);
  return run_flagged_fixpoint(s).first_uncountable_level.has_value();
}

bool has_strong_ly(Substitution const& s) { return has_uncountable_ly(s); }

std::optional<LyCertificate> ly_certificate(Substitution const& s, std::size_t max_word) {
  auto const run = run_flagged_fixpoint(s);
  if (!run.first_ly_level) return std::nullopt;
  std::size_t const m = *run.first_ly_level;
  auto const im = level_images(s, m, max_word);
  for (Letter a = 0; a < s.size(); ++a) {
    for (Letter b = a + 1; b < s.size(); ++b) {
      Word const& X = im[a];
      Word const& Y = im[b];
      auto const f = scan_after(X, Y, a, b);
      for (std::size_t j = 0; j < X.size(); ++j) {
        if (X[j] == a && Y[j] == b && f.coin_after[j] && f.diff_after[j]) {
          return LyCertificate{m,
                               a,
                               b,
                               slice(X, 0, j),
                               slice(X, j + 1, X.size()),
                               slice(Y, 0, j),
                               slice(Y, j + 1, Y.size())};
        }
      }
    }
  }
  throw ValidationError("fixpoint level has no direct witness");
}

std::optional<UncountableCertificate> uncountable_certificate(Substitution const& s,
                                                              std::size_t max_word) {
  auto const run = run_flagged_fixpoint(s);
  if (!run.first_uncountable_level) return std::nullopt;
  std::size_t const m = *run.first_uncountable_level;
  auto const im = level_images(s, m, max_word);
  for (Letter a = 0; a < s.size(); ++a) {
    for (Letter b = a + 1; b < s.size(); ++b) {
      Word const& X = im[a];
      Word const& Y = im[b];
      auto const f = scan_after(X, Y, a, b);
      for (std::size_t j = 0; j < X.size(); ++j) {
        if (X[j] == a && Y[j] == b && f.coin_after[j] && f.again_after[j]) {
          std::size_t k = j + 1;
          while (!(X[k] == a && Y[k] == b)) ++k;
          return UncountableCertificate{m, a, b, j, k};
        }
      }
    }
  }
  throw ValidationError("fixpoint level has no direct witness");
}

BruteForceScan brute_force_ly_scan(Substitution const& s, std::size_t bound) {
  std::size_t const p = s.length();
  BruteForceScan out;
  std::vector<Word> im(s.size());
  for (Letter a = 0; a < s.size(); ++a) im[a] = Word{a};
  for (std::size_t m = 1; power_or_cap(p, m, bound) <= bound; ++m) {
    for (auto& w : im) w = constsub::apply(s, w);
    out.max_level = m;
    for (Letter a = 0; a < s.size(); ++a) {
      for (Letter b = a + 1; b < s.size(); ++b) {
        auto const f = scan_after(im[a], im[b], a, b);
        for (std::size_t j = 0; j < im[a].size(); ++j) {
          if (im[a][j] != a || im[b][j] != b) continue;
          if (f.coin_after[j] && f.diff_after[j] && !out.first_ly_level) out.first_ly_level = m;
          if (f.coin_after[j] && f.again_after[j] && !out.first_uncountable_level) {
            out.first_uncountable_level = m;
          }
        }
      }
    }
  }
  return out;
}

PairVerdict classify_pair(RepresentedPoint const& x, RepresentedPoint const& y) {
  require_same_substitution(x, y);
  Substitution const& s = x.substitution();
  bool const uncountable = run_flagged_fixpoint(s).first_uncountable_level.has_value();
  return classify_with(x, y, coincidence_class(s).kind, uncountable, true);
}

PairVerdict classify_pair_two_letter(RepresentedPoint const& x, RepresentedPoint const& y) {
  require_same_substitution(x, y);
  Substitution const& s = x.substitution();
  if (s.size() != 2) throw PreconditionError("two-letter criteria need |A| = 2");
  PairVerdict v;
  if (!(x.stream().digits() == y.stream().digits())) {
    v.cls = PairClass::Distal;
    v.rule = "odometer-separation";
    return v;
  }
  if (x == y) {
    v.cls = PairClass::Asymptotic;
    v.rule = "identical-points";
    return v;
  }
  auto const cc = coincidence_class(s).table.front();
  std::size_t const p = s.length();

  if (cc.coincidences.empty()) {
    // Distal iff x_i != y_i for some i at which I+ of the shifted point is
    // infinite, i.e. some i >= k+ (any i >= 0 when I+ is infinite). Without
    // coincidences a center difference at level j shows up within p^{j+1}.
    auto const [xx, yy] = past_right_cut(x, y);
    std::size_t const levels = std::max(xx.stream().preperiod().size(),
                                        yy.stream().preperiod().size()) +
                               std::lcm(xx.stream().period().size(),
                                        yy.stream().period().size());
    std::size_t const len = power_or_cap(p, levels + 1, kDefaultWordBudget);
    bool const differ = xx.right_word(len) != yy.right_word(len);
    v.cls = differ ? PairClass::Distal : PairClass::Asymptotic;
    v.rule = "two-letter-no-coincidence";
    return v;
  }
  if (cc.differences.size() == 1) {
    v.cls = PairClass::Asymptotic;
    v.rule = "two-letter-unique-difference";
    return v;
  }
  if (x.stream().right_finite() && s.image(0).front() == s.image(1).front()) {
    v.cls = PairClass::Asymptotic;
    v.rule = "two-letter-common-first-letter";
    return v;
  }
  auto const [xx, yy] = past_right_cut(x, y);
  if (suffixes_agree_eventually(xx.stream(), yy.stream())) {
    v.cls = PairClass::Asymptotic;
  } else {
    v.cls = PairClass::LiYorke;
    if (!run_flagged_fixpoint(s).first_uncountable_level) v.strong = false;
  }
  v.rule = "two-letter-suffix-criterion";
  return v;
}

EvidenceCheck check_evidence(PairVerdict const& v, RepresentedPoint const& x,
                             RepresentedPoint const& y, std::size_t horizon, std::size_t W,
                             std::size_t max_word) {
  auto fits = [&](std::size_t h) { return 2 * (h + W) + 1 <= max_word; };
  EvidenceCheck c;
  c.report = empirical_class(x, y, horizon, W, max_word);
  switch (v.cls) {
    case PairClass::Distal:
      if (!c.report.proximality_events.empty()) {
        c.consistent = false;
        c.reason = "proximality event for a distal pair";
      }
      break;
    case PairClass::Asymptotic: {
      if (!fits(2 * horizon)) {
        c.budget_exhausted = true;
        c.reason = "no room to double the horizon";
        break;
      }
      auto const doubled = empirical_class(x, y, 2 * horizon, W, max_word);
      if (doubled.max_last_difference != c.report.max_last_difference) {
        c.consistent = false;
        c.reason = "separation past the last difference at the first horizon";
      }
      break;
    }
    case PairClass::LiYorke: {
      std::size_t h = horizon;
      while (c.report.proximality_events.size() < 3 || c.report.separation_events.size() < 3) {
        if (!fits(2 * h)) {
          c.budget_exhausted = true;
          c.reason = "budget reached before three events of each kind";
          break;
        }
        h *= 2;
        c.report = empirical_class(x, y, h, W, max_word);
      }
      break;
    }
    case PairClass::ProximalNotClassified:
    case PairClass::Unresolved:
      break;
  }
  return c;
}

PointPair construct_ly_pair(SubstitutionPtr s) {
  require_ly_preconditions(*s);
  auto const cert = ly_certificate(*s);
  if (!cert) throw PreconditionError("substitution has no Li-Yorke pairs");
  auto const lambda = last_letter_map(*s);

  auto build = [&](Word const& u, Letter a, Word const& v) {
    StreamEntry const e{u, a, v};
    if (!u.empty()) return refine_power_stream(s, cert->m, {}, {e}, std::nullopt, std::nullopt);
    for (Letter c = 0; c < s->size(); ++c) {
      if (letter_cycle(lambda, c).empty()) continue;
      try {
        return refine_power_stream(s, cert->m, {}, {e}, c, std::nullopt);
      } catch (ValidationError const&) {
      }
    }
    throw ValidationError("no admissible left seed");
  };
  return {build(cert->u, cert->a, cert->v), build(cert->u2, cert->b, cert->v2)};
}

RecurrentPair construct_recurrent_ly_pair(SubstitutionPtr s, std::size_t max_word) {
  require_ly_preconditions(*s);
  if (!run_flagged_fixpoint(*s).first_uncountable_level) {
    throw PreconditionError("Li-Yorke pairs are countable; no recurrent construction");
  }
  std::size_t const p = s->length();
  for (std::size_t M = 1; power_or_cap(p, M, max_word) <= max_word; ++M) {
    auto const im = level_images(*s, M, max_word);
    for (Letter a = 0; a < s->size(); ++a) {
      for (Letter b = a + 1; b < s->size(); ++b) {
        Word const& X = im[a];
        Word const& Y = im[b];
        auto const f = scan_after(X, Y, a, b);
        for (std::size_t j = 1; j < X.size(); ++j) {
          if (X[j] != a || Y[j] != b || !f.coin_after[j]) continue;
          for (std::size_t k = j + 1; k + 1 < X.size(); ++k) {
            if (X[k] != a || Y[k] != b) continue;
            auto x = refine_power_stream(s, M, {}, {split_at(X, j), split_at(X, k)}, std::nullopt,
                                         std::nullopt);
            auto y = refine_power_stream(s, M, {}, {split_at(Y, j), split_at(Y, k)}, std::nullopt,
                                         std::nullopt);
            return RecurrentPair{{std::move(x), std::move(y)}, RecurrenceWitness{M, a, b}};
          }
        }
      }
    }
  }
  throw BudgetError("no power with nonempty u and w within the word budget");
}

OrbitEnumeration enumerate_ly_orbits(SubstitutionPtr s, std::optional<std::size_t> period_bound,
                                     bool require_countable, std::size_t max_word) {
  Substitution const& t = *s;
  require_ly_preconditions(t);
  auto const run = run_flagged_fixpoint(t);
  if (!run.first_ly_level) throw PreconditionError("substitution has no Li-Yorke pairs");
  bool const uncountable = run.first_uncountable_level.has_value();
  if (require_countable && uncountable) {
    throw PreconditionError("Li-Yorke pairs are uncountable; enumeration refused");
  }
  std::size_t const n = t.size();
  std::size_t const p = t.length();
  std::size_t const bound = period_bound.value_or(n * n + 1);
  if (bound == 0) throw PreconditionError("period bound must be positive");

  constexpr std::size_t kWalkBudget = std::size_t{1} << 26;
  std::size_t walks = 0;
  for (std::size_t L = 1; L <= bound; ++L) {
    walks += power_or_cap(p, L, kWalkBudget) * n * n;
    if (walks > kWalkBudget) throw BudgetError("orbit enumeration exceeds the walk budget");
  }

  auto const kind = coincidence_class(t).kind;
  auto const lambda = last_letter_map(t);
  auto const phi = first_letter_map(t);
  std::set<std::pair<DesubstitutionStream, DesubstitutionStream>> found;

  auto consider = [&](RepresentedPoint x, RepresentedPoint y) {
    if (x.stream().digits().is_eventually_max()) {
      x = shift(x);
      y = shift(y);
    }
    if (classify_with(x, y, kind, uncountable, false).cls != PairClass::LiYorke) return;
    if (y.stream() < x.stream()) std::swap(x, y);
    found.emplace(x.stream(), y.stream());
  };

  auto seeds = [&](std::vector<Letter> const& map) {
    std::vector<Letter> out;
    for (Letter c = 0; c < n; ++c) {
      if (!letter_cycle(map, c).empty()) out.push_back(c);
    }
    return out;
  };
  auto const left_seeds = seeds(lambda);
  auto const right_seeds = seeds(phi);

  for (std::size_t L = 1; L <= bound; ++L) {
    std::vector<Digit> d(L, 0);
    for (;;) {
      bool const zero = std::all_of(d.begin(), d.end(), [](Digit v) { return v == 0; });
      bool const max = std::all_of(d.begin(), d.end(), [&](Digit v) { return v + 1 == p; });
      for (Letter a = 0; a < n; ++a) {
        for (Letter b = 0; b < n; ++b) {
          if (a == b) continue;
          std::vector<StreamEntry> ex(L), ey(L);
          Letter ca = a, cb = b;
          for (std::size_t i = L; i-- > 0;) {
            ex[i] = split_at(t.image(ca), d[i]);
            ey[i] = split_at(t.image(cb), d[i]);
            ca = ex[i].center;
            cb = ey[i].center;
          }
          if (ca != a || cb != b) continue;
          auto try_pair = [&](std::optional<Letter> lx, std::optional<Letter> ly,
                              std::optional<Letter> rx, std::optional<Letter> ry) {
            try {
              consider(stream_from_entries(s, {}, ex, lx, rx), stream_from_entries(s, {}, ey, ly, ry));
            } catch (ValidationError const&) {
            }
          };
          if (zero) {
            for (Letter lx : left_seeds) {
              for (Letter ly : left_seeds) try_pair(lx, ly, std::nullopt, std::nullopt);
            }
          } else if (max) {
            for (Letter rx : right_seeds) {
              for (Letter ry : right_seeds) try_pair(std::nullopt, std::nullopt, rx, ry);
            }
          } else {
            try_pair(std::nullopt, std::nullopt, std::nullopt, std::nullopt);
          }
        }
      }
      std::size_t i = 0;
      while (i < L && ++d[i] == p) d[i++] = 0;
      if (i == L) break;
    }
  }

  OrbitEnumeration out;
  out.period_bound = bound;
  std::size_t const want = 2 * power_or_cap(p, bound, max_word);
  out.radius = std::min(want, (max_word - 1) / 2);
  std::set<std::uint64_t> windows;
  for (auto const& [sx, sy] : found) {
    // Fresh points so that the long windows are not kept in the results.
    RepresentedPoint const wx(sx), wy(sy);
    std::uint64_t h = 1469598103934665603ull;
    for (auto const* w : {&wx, &wy}) {
      for (Letter c : w->expand(out.radius, max_word).symbols) h = (h ^ c) * 1099511628211ull;
    }
    if (!windows.insert(h).second) {
      out.separated = false;
    }
    out.pairs.emplace_back(RepresentedPoint(sx), RepresentedPoint(sy));
  }
  return out;
}

ScrambledSet build_scrambled_set(std::size_t n) {
  if (n < 1) throw PreconditionError("scrambled set size parameter must be at least 1");
  std::vector<std::string> alphabet;
  std::vector<Word> images;
  for (Letter a = 0; a <= n; ++a) {
    alphabet.push_back(std::to_string(a));
    Letter const next = static_cast<Letter>((a + 1) % (n + 1));
    images.push_back(Word{0, a, a, next, 0});
  }
  ScrambledSet out;
  out.substitution = share(Substitution(std::move(alphabet), std::move(images)));
  for (Letter a = 0; a <= n; ++a) {
    Letter const next = static_cast<Letter>((a + 1) % (n + 1));
    out.points.push_back(stream_from_entries(out.substitution, {},
                                             {StreamEntry{{0}, a, {a, next, 0}}}, std::nullopt,
                                             std::nullopt));
  }
  return out;
}

}  // namespace constsub
