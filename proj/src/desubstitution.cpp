#include "constsub/desubstitution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "constsub/error.hpp"

namespace constsub {

namespace {

// Entry with center at position `d` of the image word w.
StreamEntry split_image(Word const& w, std::size_t d) {
  StreamEntry e;
  e.prefix.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
  e.center = w.at(d);
  e.suffix.assign(w.begin() + static_cast<std::ptrdiff_t>(d) + 1, w.end());
  return e;
}

Word entry_word(StreamEntry const& e) {
  Word w = e.prefix;
  w.push_back(e.center);
  w.insert(w.end(), e.suffix.begin(), e.suffix.end());
  return w;
}

// The letter e on the cycle of `c` with map^j(e) = c.
Letter cycle_preimage(std::vector<Letter> const& map, Letter c, std::size_t j) {
  auto const cyc = letter_cycle(map, c);
  std::size_t const r = cyc.size();
  return cyc[(r - j % r) % r];
}

bool entry_less(StreamEntry const& a, StreamEntry const& b) {
  return std::tie(a.prefix, a.center, a.suffix) < std::tie(b.prefix, b.center, b.suffix);
}

// p^m, saturating at `cap`.
std::size_t saturating_power(std::size_t p, std::size_t m, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (v > cap / p) return cap;
    v *= p;
  }
  return v;
}

}  // namespace

std::vector<Letter> letter_cycle(std::vector<Letter> const& map, Letter c) {
  std::vector<Letter> cyc{c};
  Letter cur = map.at(c);
  while (cyc.size() <= map.size()) {
    if (cur == c) return cyc;
    cyc.push_back(cur);
    cur = map[cur];
  }
  return {};
}

std::vector<Letter> first_letter_map(Substitution const& s) {
  std::vector<Letter> m(s.size());
  for (Letter a = 0; a < s.size(); ++a) m[a] = s.first_of_image(a);
  return m;
}

std::vector<Letter> last_letter_map(Substitution const& s) {
  std::vector<Letter> m(s.size());
  for (Letter a = 0; a < s.size(); ++a) m[a] = s.last_of_image(a);
  return m;
}

DesubstitutionStream::DesubstitutionStream(SubstitutionPtr s, std::vector<StreamEntry> preperiod,
                                           std::vector<StreamEntry> period,
                                           std::optional<Letter> left_seed,
                                           std::optional<Letter> right_seed)
    : s_(std::move(s)),
      pre_(std::move(preperiod)),
      per_(std::move(period)),
      left_(left_seed),
      right_(right_seed) {
  if (!s_) throw PreconditionError("stream needs a substitution");
  std::size_t const p = s_->length();
  if (per_.empty()) throw ValidationError("stream period must be nonempty");

  std::size_t const total = pre_.size() + per_.size();
  for (std::size_t i = 0; i < total; ++i) {
    StreamEntry const& e = entry(i);
    if (e.center >= s_->size()) {
      throw ValidationError("letter out of range at level " + std::to_string(i));
    }
    if (e.prefix.size() + 1 + e.suffix.size() != p) {
      throw ValidationError("entry length differs from p at level " + std::to_string(i));
    }
    Letter const upper = entry(i + 1).center;
    if (upper >= s_->size() || s_->image(upper) != entry_word(e)) {
      throw ValidationError("tau(a_{i+1}) != p_i a_i s_i at level " + std::to_string(i));
    }
  }

  bool const prefixes_empty =
      std::all_of(per_.begin(), per_.end(), [](auto const& e) { return e.prefix.empty(); });
  bool const suffixes_empty =
      std::all_of(per_.begin(), per_.end(), [](auto const& e) { return e.suffix.empty(); });
  if (prefixes_empty != left_.has_value()) {
    throw ValidationError(prefixes_empty ? "left seed required: periodic prefixes are empty"
                                         : "left seed given but periodic prefixes are nonempty");
  }
  if (suffixes_empty != right_.has_value()) {
    throw ValidationError(suffixes_empty ? "right seed required: periodic suffixes are empty"
                                         : "right seed given but periodic suffixes are nonempty");
  }

  if (left_ || right_) {
    WordSet const l2 = language(*s_, 2);
    Letter const a = per_.front().center;
    if (left_) {
      if (*left_ >= s_->size() || letter_cycle(last_letter_map(*s_), *left_).empty()) {
        throw ValidationError("left seed is not fixed by any power of tau");
      }
      if (!l2.count(Word{*left_, a})) {
        throw ValidationError("left seed and center do not form a word of the language");
      }
    }
    if (right_) {
      if (*right_ >= s_->size() || letter_cycle(first_letter_map(*s_), *right_).empty()) {
        throw ValidationError("right seed is not fixed by any power of tau");
      }
      if (!l2.count(Word{a, *right_})) {
        throw ValidationError("center and right seed do not form a word of the language");
      }
    }
  }

  // canonical form: minimal period, then minimal preperiod
  std::size_t const n = per_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = per_[i] == per_[i - d];
    if (ok) {
      per_.resize(d);
      break;
    }
  }
  auto const lambda = last_letter_map(*s_);
  auto const phi = first_letter_map(*s_);
  while (!pre_.empty() && pre_.back() == per_.back()) {
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    pre_.pop_back();
    if (left_) left_ = lambda[*left_];
    if (right_) right_ = phi[*right_];
  }
}

StreamEntry const& DesubstitutionStream::entry(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

OdometerDigits DesubstitutionStream::digits() const {
  std::vector<Digit> pre, per;
  for (auto const& e : pre_) pre.push_back(e.digit());
  for (auto const& e : per_) per.push_back(e.digit());
  return {s_->length(), std::move(pre), std::move(per)};
}

bool operator<(DesubstitutionStream const& a, DesubstitutionStream const& b) {
  auto cmp = [](std::vector<StreamEntry> const& x, std::vector<StreamEntry> const& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), entry_less);
  };
  if (a.pre_.size() != b.pre_.size()) return a.pre_.size() < b.pre_.size();
  if (a.per_.size() != b.per_.size()) return a.per_.size() < b.per_.size();
  if (a.pre_ != b.pre_) return cmp(a.pre_, b.pre_);
  if (a.per_ != b.per_) return cmp(a.per_, b.per_);
  return std::tie(a.left_, a.right_) < std::tie(b.left_, b.right_);
}

std::string render(Substitution const& s, CenteredWord const& w) {
  Word const left(w.symbols.begin(), w.symbols.begin() + static_cast<std::ptrdiff_t>(w.radius));
  Word const right(w.symbols.begin() + static_cast<std::ptrdiff_t>(w.radius), w.symbols.end());
  return s.render(left) + "." + s.render(right);
}

RepresentedPoint::RepresentedPoint(DesubstitutionStream stream)
    : stream_(std::move(stream)), cache_(std::make_shared<Cache>()) {}

Word RepresentedPoint::right_word(std::size_t len, std::size_t max_word) const {
  if (len > max_word) {
    throw BudgetError("expansion of " + std::to_string(len) + " symbols exceeds the word budget");
  }
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->right.size() >= len) {
      return Word(cache_->right.begin(), cache_->right.begin() + static_cast<std::ptrdiff_t>(len));
    }
  }
  Substitution const& s = substitution();
  std::size_t const p = s.length();
  std::size_t const P = stream_.preperiod().size();
  Word out;
  if (len > 0) out.push_back(stream_.entry(0).center);
  for (std::size_t i = 0; out.size() < len; ++i) {
    std::size_t const need = len - out.size();
    if (stream_.right_seed() && i == P) {
      // tau^P of lim tau^{kr}(d); tau^r(d) starts with d
      Letter const d = *stream_.right_seed();
      std::size_t const r = letter_cycle(first_letter_map(s), d).size();
      std::size_t const letters = need / saturating_power(p, P, need + 1) + 1;
      Word seed{d};
      while (seed.size() < letters) seed = iterate(s, seed, r, max_word);
      Word const tail = power_prefix(s, seed, P, need);
      out.insert(out.end(), tail.begin(), tail.end());
      break;
    }
    Word const& suf = stream_.entry(i).suffix;
    if (!suf.empty()) {
      Word const piece = power_prefix(s, suf, i, need);
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  out.resize(len);
  std::lock_guard lock(cache_->mutex);
  if (cache_->right.size() < out.size()) cache_->right = out;
  return out;
}

Word RepresentedPoint::left_word(std::size_t len, std::size_t max_word) const {
  if (len > max_word) {
    throw BudgetError("expansion of " + std::to_string(len) + " symbols exceeds the word budget");
  }
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->left.size() >= len) {
      return Word(cache_->left.end() - static_cast<std::ptrdiff_t>(len), cache_->left.end());
    }
  }
  Substitution const& s = substitution();
  std::size_t const p = s.length();
  std::size_t const P = stream_.preperiod().size();
  std::vector<Word> pieces;  // nearest first
  std::size_t have = 0;
  for (std::size_t i = 0; have < len; ++i) {
    std::size_t const need = len - have;
    if (stream_.left_seed() && i == P) {
      Letter const c = *stream_.left_seed();
      std::size_t const r = letter_cycle(last_letter_map(s), c).size();
      std::size_t const letters = need / saturating_power(p, P, need + 1) + 1;
      Word seed{c};
      while (seed.size() < letters) seed = iterate(s, seed, r, max_word);
      pieces.push_back(power_suffix(s, seed, P, need));
      have += pieces.back().size();
      break;
    }
    Word const& pre = stream_.entry(i).prefix;
    if (!pre.empty()) {
      pieces.push_back(power_suffix(s, pre, i, need));
      have += pieces.back().size();
    }
  }
  Word out;
  out.reserve(have);
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  out.erase(out.begin(), out.end() - static_cast<std::ptrdiff_t>(len));
  std::lock_guard lock(cache_->mutex);
  if (cache_->left.size() < out.size()) cache_->left = out;
  return out;
}

CenteredWord RepresentedPoint::expand(std::size_t n, std::size_t max_word) const {
  if (2 * n + 1 > max_word) {
    throw BudgetError("window of radius " + std::to_string(n) + " exceeds the word budget");
  }
  CenteredWord w;
  w.radius = n;
  w.symbols = left_word(n, max_word);
  Word const right = right_word(n + 1, max_word);
  w.symbols.insert(w.symbols.end(), right.begin(), right.end());
  return w;
}

RepresentedPoint stream_from_entries(SubstitutionPtr s, std::vector<StreamEntry> preperiod,
                                     std::vector<StreamEntry> period,
                                     std::optional<Letter> left_seed,
                                     std::optional<Letter> right_seed) {
  return RepresentedPoint(DesubstitutionStream(std::move(s), std::move(preperiod),
                                               std::move(period), left_seed, right_seed));
}

RepresentedPoint stream_from_fixed_point(SubstitutionPtr s, Letter left, Letter right) {
  Substitution const& t = *s;
  if (left >= t.size() || right >= t.size()) {
    throw ValidationError("seed letter out of range");
  }
  if (!language(t, 2).count(Word{left, right})) {
    throw ValidationError("seed pair " + t.render(Word{left, right}) +
                          " is not a word of the language");
  }
  auto const phi = first_letter_map(t);
  auto const cyc = letter_cycle(phi, right);
  if (cyc.empty()) {
    throw ValidationError("no power tau^r, r <= |A|, begins tau^r(" + t.render(right) +
                          ") with " + t.render(right));
  }
  if (letter_cycle(last_letter_map(t), left).empty()) {
    throw ValidationError("no power tau^r, r <= |A|, ends tau^r(" + t.render(left) +
                          ") with " + t.render(left));
  }
  std::size_t const r = cyc.size();
  std::vector<Letter> centers(r + 1);
  for (std::size_t j = 0; j <= r; ++j) centers[j] = cycle_preimage(phi, right, j);
  std::vector<StreamEntry> period;
  for (std::size_t j = 0; j < r; ++j) {
    period.push_back(split_image(t.image(centers[j + 1]), 0));
  }
  return stream_from_entries(std::move(s), {}, std::move(period), left, std::nullopt);
}

RepresentedPoint refine_power_stream(SubstitutionPtr tau, std::size_t m,
                                     std::vector<StreamEntry> preperiod,
                                     std::vector<StreamEntry> period,
                                     std::optional<Letter> left_seed,
                                     std::optional<Letter> right_seed) {
  if (m == 0) throw PreconditionError("power must be at least 1");
  if (period.empty()) throw ValidationError("stream period must be nonempty");
  Substitution const& t = *tau;
  std::size_t const p = t.length();
  std::size_t const span = saturating_power(p, m, kDefaultWordBudget + 1);
  if (span > kDefaultWordBudget) throw BudgetError("power too large to refine");

  std::size_t const P = preperiod.size();
  std::size_t const total = P + period.size();
  auto sigma_entry = [&](std::size_t i) -> StreamEntry const& {
    return i < P ? preperiod[i] : period[(i - P) % period.size()];
  };

  std::vector<StreamEntry> out(total * m);
  for (std::size_t i = 0; i < total; ++i) {
    StreamEntry const& e = sigma_entry(i);
    if (e.prefix.size() + 1 + e.suffix.size() != span) {
      throw ValidationError("entry length differs from p^m at level " + std::to_string(i));
    }
    Letter upper = sigma_entry(i + 1).center;
    if (upper >= t.size() || iterate(t, Word{upper}, m) != entry_word(e)) {
      throw ValidationError("sigma(a_{i+1}) != p_i a_i s_i at level " + std::to_string(i));
    }
    std::size_t pos = e.prefix.size();
    std::vector<std::size_t> digits(m);
    for (std::size_t k = 0; k < m; ++k) {
      digits[k] = pos % p;
      pos /= p;
    }
    for (std::size_t k = m; k-- > 0;) {
      StreamEntry sub = split_image(t.image(upper), digits[k]);
      upper = sub.center;
      out[i * m + k] = std::move(sub);
    }
    if (upper != e.center) {
      throw ValidationError("power entry inconsistent with its image at level " +
                            std::to_string(i));
    }
  }
  std::vector<StreamEntry> pre(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(P * m));
  std::vector<StreamEntry> per(out.begin() + static_cast<std::ptrdiff_t>(P * m), out.end());
  return stream_from_entries(std::move(tau), std::move(pre), std::move(per), left_seed,
                             right_seed);
}

std::vector<Digit> pi_digits(RepresentedPoint const& x, std::size_t k) {
  std::vector<Digit> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = x.stream().entry(i).digit();
  return out;
}

RepresentedPoint shift(RepresentedPoint const& x) {
  DesubstitutionStream const& st = x.stream();
  Substitution const& s = st.substitution();
  std::size_t const p = s.length();
  std::size_t const P = st.preperiod().size();
  std::size_t const L = st.period().size();
  auto const lambda = last_letter_map(s);
  auto const phi = first_letter_map(s);

  std::optional<std::size_t> istar;
  for (std::size_t i = 0; i < P + L; ++i) {
    if (st.entry(i).digit() + 1 != p) {
      istar = i;
      break;
    }
  }

  if (istar) {
    std::size_t const Q = std::max(*istar + 1, P);
    std::vector<StreamEntry> e(Q + L);
    for (std::size_t i = 0; i < Q + L; ++i) e[i] = st.entry(i);
    e[*istar] = split_image(s.image(st.entry(*istar + 1).center), e[*istar].digit() + 1);
    for (std::size_t i = *istar; i-- > 0;) e[i] = split_image(s.image(e[i + 1].center), 0);
    std::optional<Letter> left, right;
    if (st.left_seed()) left = cycle_preimage(lambda, *st.left_seed(), Q - P);
    if (st.right_seed()) right = cycle_preimage(phi, *st.right_seed(), Q - P);
    std::vector<StreamEntry> pre(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(Q));
    std::vector<StreamEntry> per(e.begin() + static_cast<std::ptrdiff_t>(Q), e.end());
    return stream_from_entries(st.substitution_ptr(), std::move(pre), std::move(per), left,
                               right);
  }

  // Every digit is p-1: the carry leaves the representation.
  return jump_to_right_cut(x).first;
}

std::pair<RepresentedPoint, std::size_t> jump_to_right_cut(RepresentedPoint const& x) {
  // The right half of x past the level-P block is tau^P of the right seed
  // tail. T^k x starts there with all digits zero; its left half ends with
  // the level-P block, whose tail is the fixed tail of tau^r at a_P.
  DesubstitutionStream const& st = x.stream();
  if (!st.right_seed()) {
    throw ValidationError("carry to infinity without a right seed");
  }
  Substitution const& s = st.substitution();
  std::size_t const p = s.length();
  std::size_t const P = st.preperiod().size();
  auto const phi = first_letter_map(s);
  Letter const d = *st.right_seed();
  std::size_t const r = letter_cycle(phi, d).size();
  std::vector<Letter> centers(P + r + 1);
  for (std::size_t j = 0; j <= r; ++j) centers[P + j] = cycle_preimage(phi, d, j);
  for (std::size_t i = P; i-- > 0;) centers[i] = phi[centers[i + 1]];
  std::vector<StreamEntry> pre, per;
  for (std::size_t i = 0; i < P; ++i) pre.push_back(split_image(s.image(centers[i + 1]), 0));
  for (std::size_t i = P; i < P + r; ++i) {
    per.push_back(split_image(s.image(centers[i + 1]), 0));
  }
  std::size_t k = 1;
  std::size_t scale = 1;
  for (std::size_t i = 0; i < P; ++i) {
    k += st.entry(i).suffix.size() * scale;
    scale *= p;
  }
  return {stream_from_entries(st.substitution_ptr(), std::move(pre), std::move(per),
                              st.entry(P).center, std::nullopt),
          k};
}

RepresentedPoint shift(RepresentedPoint const& x, std::size_t k) {
  RepresentedPoint y = x;
  for (std::size_t i = 0; i < k; ++i) y = shift(y);
  return y;
}

std::size_t fiber_bound(Substitution const& s) { return language(s, 3).size(); }

FiberResult enumerate_fiber(SubstitutionPtr s, OdometerDigits const& delta,
                            std::size_t search_radius) {
  Substitution const& t = *s;
  std::size_t const p = t.length();
  if (delta.base() != p) {
    throw PreconditionError("digit base differs from the substitution length");
  }
  std::size_t const P = delta.preperiod().size();
  std::size_t const L = delta.period().size();
  std::size_t const n = t.size();

  // F = f_{delta_P} o ... o f_{delta_{P+L-1}}, f_d(a) = tau(a)[d]
  std::vector<Letter> F(n);
  for (Letter a = 0; a < n; ++a) {
    Letter c = a;
    for (std::size_t i = P + L; i-- > P;) c = t.image(c)[delta.digit(i)];
    F[a] = c;
  }

  WordSet const l2 = language(t, 2);
  auto const lambda = last_letter_map(t);
  auto const phi = first_letter_map(t);
  std::set<DesubstitutionStream> streams;

  for (Letter c = 0; c < n; ++c) {
    auto const cyc = letter_cycle(F, c);
    if (cyc.empty()) continue;
    std::size_t const levels = P + L * cyc.size();
    std::vector<Letter> centers(levels + 1);
    centers[levels] = c;
    std::vector<StreamEntry> entries(levels);
    for (std::size_t i = levels; i-- > 0;) {
      entries[i] = split_image(t.image(centers[i + 1]), delta.digit(i));
      centers[i] = entries[i].center;
    }
    std::vector<StreamEntry> pre(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(P));
    std::vector<StreamEntry> per(entries.begin() + static_cast<std::ptrdiff_t>(P), entries.end());
    if (delta.is_eventually_zero()) {
      for (Letter e = 0; e < n; ++e) {
        if (!letter_cycle(lambda, e).empty() && l2.count(Word{e, c})) {
          streams.insert(DesubstitutionStream(s, pre, per, e, std::nullopt));
        }
      }
    } else if (delta.is_eventually_max()) {
      for (Letter e = 0; e < n; ++e) {
        if (!letter_cycle(phi, e).empty() && l2.count(Word{c, e})) {
          streams.insert(DesubstitutionStream(s, pre, per, std::nullopt, e));
        }
      }
    } else {
      streams.insert(DesubstitutionStream(s, pre, per));
    }
  }

  FiberResult result;
  result.radius = search_radius;
  std::set<Word> seen;
  for (auto const& st : streams) {
    RepresentedPoint x(st);
    if (seen.insert(x.expand(search_radius).symbols).second) {
      result.points.push_back(std::move(x));
    } else {
      result.lower_bound = true;
    }
  }
  return result;
}

}  // namespace constsub
