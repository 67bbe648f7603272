#include "constsub/tower.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "constsub/error.hpp"
#include "constsub/reduction.hpp"

namespace constsub {

namespace {

using Mask = std::uint64_t;

Letter as_letter(std::size_t n) { return static_cast<Letter>(n); }

Word letters(std::initializer_list<std::size_t> xs) {
  Word w;
  for (std::size_t x : xs) w.push_back(as_letter(x));
  return w;
}

// Exact membership test for a word with a set of allowed letters at each
// position. Short words are looked up; longer ones are cut into blocks tau(b)
// at every offset and the set-word of admissible b is tested recursively.
class LanguageOracle {
 public:
  explicit LanguageOracle(Substitution const& s) : s_(s), p_(s.length()) {
    if (s.size() > 64) throw PreconditionError("alphabet too large for set search");
    for (std::size_t len = 1; len <= kBase; ++len) base_.push_back(language(s, len));
  }

  bool admits(std::vector<Mask> const& masks) const {
    std::size_t const L = masks.size();
    if (L == 0) return true;
    if (L <= kBase) {
      for (Word const& w : base_[L - 1]) {
        bool ok = true;
        for (std::size_t i = 0; i < L && ok; ++i) ok = (masks[i] >> w[i]) & 1U;
        if (ok) return true;
      }
      return false;
    }
    for (std::size_t o = 0; o < p_; ++o) {
      std::size_t const blocks = (o + L + p_ - 1) / p_;
      std::vector<Mask> up(blocks, 0);
      bool ok = true;
      for (std::size_t t = 0; t < blocks && ok; ++t) {
        for (Letter b = 0; b < s_.size(); ++b) {
          Word const& img = s_.image(b);
          bool fits = true;
          for (std::size_t k = 0; k < p_ && fits; ++k) {
            std::size_t const pos = t * p_ + k;
            if (pos < o || pos - o >= L) continue;
            fits = (masks[pos - o] >> img[k]) & 1U;
          }
          if (fits) up[t] |= Mask{1} << b;
        }
        ok = up[t] != 0;
      }
      if (ok && admits(up)) return true;
    }
    return false;
  }

 private:
  static constexpr std::size_t kBase = 3;
  Substitution const&  s_;
  std::size_t          p_;
  std::vector<WordSet> base_;
};

void collect_lifts(LanguageOracle const& oracle, std::vector<Mask>& masks,
                   std::vector<std::size_t> const& ambiguous, std::size_t k, Letter high,
                   std::size_t core_lo, std::size_t core_hi, std::set<Word>& out) {
  if (!oracle.admits(masks)) return;
  if (k == ambiguous.size()) {
    Word core;
    for (std::size_t i = core_lo; i <= core_hi; ++i) {
      core.push_back(static_cast<Letter>(std::countr_zero(masks[i])));
    }
    out.insert(std::move(core));
    return;
  }
  std::size_t const i = ambiguous[k];
  Mask const saved = masks[i];
  for (Letter a : {high - 1, high}) {
    masks[i] = Mask{1} << a;
    collect_lifts(oracle, masks, ambiguous, k + 1, high, core_lo, core_hi, out);
  }
  masks[i] = saved;
}

}  // namespace

TowerLevel tower_substitution(std::size_t n) {
  if (n == 0) throw PreconditionError("tower level must be at least 1");
  std::vector<std::string> alphabet;
  std::vector<Word> images;
  for (std::size_t a = 0; a <= n; ++a) {
    alphabet.push_back(std::to_string(a));
    images.push_back(a == n ? letters({n, 0, n}) : letters({a, 0, a + 1}));
  }
  Substitution s(std::move(alphabet), std::move(images));
  if (!is_primitive(s)) {
    throw ValidationError("tower level " + std::to_string(n) + " is not primitive");
  }
  if (!decide_infinite(s)) {
    throw ValidationError("tower level " + std::to_string(n) + " is finite");
  }
  return TowerLevel{n, share(std::move(s))};
}

Word rho(std::size_t n, Word const& w) {
  Word out;
  out.reserve(w.size());
  for (Letter a : w) {
    if (a > n + 1) {
      throw PreconditionError("letter " + std::to_string(a) + " is outside A_" +
                              std::to_string(n + 1));
    }
    out.push_back(a == n + 1 ? as_letter(n) : a);
  }
  return out;
}

RepresentedPoint tower_point_x(std::size_t n) {
  auto const level = tower_substitution(n);
  return stream_from_entries(level.substitution, {},
                             {StreamEntry{{}, as_letter(n), letters({0, n})}}, as_letter(n),
                             std::nullopt);
}

RepresentedPoint tower_point_y(std::size_t m, std::size_t n) {
  if (n == 0 || m < n) {
    throw PreconditionError("y(m,n) needs m >= n >= 1, got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
  }
  auto const level = tower_substitution(m);
  return stream_from_entries(level.substitution, {},
                             {StreamEntry{{}, as_letter(n - 1), letters({0, n})}},
                             as_letter(m), std::nullopt);
}

bool admits_word(Substitution const& s, std::vector<std::vector<Letter>> const& options) {
  LanguageOracle const oracle(s);
  std::vector<Mask> masks;
  for (auto const& opts : options) {
    Mask m = 0;
    for (Letter a : opts) {
      if (a >= s.size()) throw PreconditionError("letter outside the alphabet");
      m |= Mask{1} << a;
    }
    masks.push_back(m);
  }
  return oracle.admits(masks);
}

PreimageSearch rho_preimage_windows(std::size_t n, CenteredWord const& w,
                                    std::size_t core_radius) {
  if (core_radius > w.radius) throw PreconditionError("core radius exceeds the window");
  auto const upper = tower_substitution(n + 1);
  LanguageOracle const oracle(*upper.substitution);
  std::vector<Mask> masks;
  std::vector<std::size_t> ambiguous;
  std::size_t const lo = w.radius - core_radius, hi = w.radius + core_radius;
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    Letter const a = w.symbols[i];
    if (a > n) throw PreconditionError("window is not over A_" + std::to_string(n));
    if (a == n) {
      masks.push_back((Mask{1} << n) | (Mask{1} << (n + 1)));
      if (i >= lo && i <= hi) ambiguous.push_back(i);
    } else {
      masks.push_back(Mask{1} << a);
    }
  }
  std::set<Word> found;
  collect_lifts(oracle, masks, ambiguous, 0, as_letter(n + 1), lo, hi, found);
  return PreimageSearch{w.radius, core_radius, {found.begin(), found.end()}};
}

std::string to_string(SPattern p) {
  switch (p) {
    case SPattern::Equal: return "equal";
    case SPattern::Asymptotic: return "asymptotic";
    case SPattern::LiYorke: return "li-yorke";
  }
  return "unknown";
}

ScrambledSReport verify_scrambled_S(std::size_t depth, std::size_t horizon, std::size_t W) {
  if (depth < 2) throw PreconditionError("depth must be at least 2");
  ScrambledSReport rep;
  rep.depth = depth;
  rep.horizon = horizon;
  std::size_t const first = 1, last = depth, levels = depth + 2;
  auto coordinate = [](std::size_t k, std::size_t j) {
    return j < k ? tower_point_x(j) : tower_point_y(j, k);
  };
  for (std::size_t a = first; a <= last; ++a) {
    for (std::size_t b = a + 1; b <= last; ++b) {
      for (std::size_t j = 1; j <= levels; ++j) {
        SCell cell;
        cell.first = a;
        cell.second = b;
        cell.level = j;
        if (j < a) cell.expected = SPattern::Equal;
        else if (j == a) cell.expected = SPattern::Asymptotic;
        else cell.expected = SPattern::LiYorke;
        auto const x = coordinate(a, j);
        auto const y = coordinate(b, j);
        cell.exact = classify_pair(x, y);
        cell.evidence = check_evidence(cell.exact, x, y, horizon, W);
        switch (cell.expected) {
          case SPattern::Equal:
            cell.agrees = x == y;
            break;
          case SPattern::Asymptotic:
            cell.agrees = !(x == y) && cell.exact.cls == PairClass::Asymptotic;
            break;
          case SPattern::LiYorke:
            cell.agrees = cell.exact.cls == PairClass::LiYorke;
            break;
        }
        cell.agrees = cell.agrees && cell.evidence.consistent;
        if (cell.exact.cls == PairClass::Distal) ++rep.distal_entries;
        rep.matches_pattern = rep.matches_pattern && cell.agrees;
        rep.cells.push_back(std::move(cell));
      }
    }
  }
  rep.matches_pattern = rep.matches_pattern && rep.distal_entries == 0;
  return rep;
}

}  // namespace constsub
