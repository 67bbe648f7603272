#include "constsub/substitution.hpp"

#include <algorithm>
#include <limits>

#include "constsub/error.hpp"
#include "constsub/parse.hpp"

namespace constsub {

namespace {

bool needs_quotes(std::string const& token) {
  auto tokens = split_tokens(token);
  return tokens.size() != 1 || tokens.front().text != token;
}

// ceil(len / p^m) with saturation; the number of letters of w whose images
// under tau^m cover the first `len` symbols.
std::size_t letters_needed(std::size_t len, std::size_t p, std::size_t m) {
  std::size_t block = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (block > len / p) {
      return len == 0 ? 0 : 1;
    }
    block *= p;
  }
  return (len + block - 1) / block;
}

}  // namespace

Substitution::Substitution(std::vector<std::string> alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (alphabet_.empty()) {
    throw ParseError("alphabet must contain at least one letter");
  }
  if (images_.size() != alphabet_.size()) {
    throw ParseError("every letter needs exactly one image");
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i].empty()) {
      throw ParseError("empty letter token");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (alphabet_[i] == alphabet_[j]) {
        throw ParseError("duplicate letter definition '" + alphabet_[i] + "'");
      }
    }
  }
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty()) {
      throw ParseError("empty image for letter '" + alphabet_[a] + "'");
    }
    for (Letter b : images_[a]) {
      if (b >= alphabet_.size()) {
        throw ParseError("unknown letter in image of '" + alphabet_[a] + "'");
      }
    }
  }
  std::size_t const len = images_.front().size();
  bool const constant = std::all_of(images_.begin(), images_.end(),
                                    [len](Word const& w) { return w.size() == len; });
  if (constant) {
    constant_length_ = len;
  }
}

std::size_t Substitution::length() const {
  if (!constant_length_ || *constant_length_ < 2) {
    throw PreconditionError("operation requires a constant-length substitution with p >= 2");
  }
  return *constant_length_;
}

std::optional<Letter> Substitution::find(std::string_view token) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == token) {
      return static_cast<Letter>(i);
    }
  }
  return std::nullopt;
}

Letter Substitution::letter(std::string_view token) const {
  auto a = find(token);
  if (!a) {
    throw ParseError("unknown letter '" + std::string(token) + "'");
  }
  return *a;
}

bool Substitution::is_one_to_one() const {
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] == images_[b]) {
        return false;
      }
    }
  }
  return true;
}

std::string Substitution::render(Letter a) const {
  std::string const& t = alphabet_.at(a);
  return needs_quotes(t) ? "`" + t + "`" : t;
}

std::string Substitution::render(Word const& w) const {
  std::string out;
  for (Letter a : w) {
    out += render(a);
  }
  return out;
}

Word Substitution::parse_word(std::string_view text) const {
  Word w;
  for (Token const& t : split_tokens(text)) {
    auto a = find(t.text);
    if (!a) {
      throw ParseError("unknown letter '" + t.text + "'", 0, t.column);
    }
    w.push_back(*a);
  }
  return w;
}

Word apply(Substitution const& s, Word const& w, std::size_t max_word) {
  std::size_t total = 0;
  for (Letter a : w) {
    total += s.image(a).size();
  }
  if (total > max_word) {
    throw BudgetError("word of length " + std::to_string(total) +
                      " exceeds the word budget of " + std::to_string(max_word));
  }
  Word out;
  out.reserve(total);
  for (Letter a : w) {
    auto const& img = s.image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word iterate(Substitution const& s, Word const& w, std::size_t m, std::size_t max_word) {
  Word cur = w;
  for (std::size_t i = 0; i < m; ++i) {
    cur = apply(s, cur, max_word);
  }
  return cur;
}

Word power_prefix(Substitution const& s, Word const& w, std::size_t m, std::size_t len) {
  std::size_t const p = s.length();
  Word cur(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(
                                      std::min(w.size(), letters_needed(len, p, m))));
  for (std::size_t t = 1; t <= m; ++t) {
    Word next;
    std::size_t const keep = letters_needed(len, p, m - t);
    next.reserve(std::min(keep, cur.size() * p));
    for (Letter a : cur) {
      for (Letter b : s.image(a)) {
        if (next.size() == keep) {
          break;
        }
        next.push_back(b);
      }
    }
    cur = std::move(next);
  }
  if (cur.size() > len) {
    cur.resize(len);
  }
  return cur;
}

Word power_suffix(Substitution const& s, Word const& w, std::size_t m, std::size_t len) {
  std::size_t const p = s.length();
  std::size_t const need = std::min(w.size(), letters_needed(len, p, m));
  Word cur(w.end() - static_cast<std::ptrdiff_t>(need), w.end());
  for (std::size_t t = 1; t <= m; ++t) {
    std::size_t const keep = letters_needed(len, p, m - t);
    // build reversed, then flip
    Word rev;
    rev.reserve(std::min(keep, cur.size() * p));
    for (auto it = cur.rbegin(); it != cur.rend() && rev.size() < keep; ++it) {
      auto const& img = s.image(*it);
      for (auto jt = img.rbegin(); jt != img.rend() && rev.size() < keep; ++jt) {
        rev.push_back(*jt);
      }
    }
    cur.assign(rev.rbegin(), rev.rend());
  }
  if (cur.size() > len) {
    cur.erase(cur.begin(), cur.end() - static_cast<std::ptrdiff_t>(len));
  }
  return cur;
}

Substitution power(Substitution const& s, std::size_t m, std::size_t max_word) {
  std::vector<Word> images;
  images.reserve(s.size());
  for (Letter a = 0; a < s.size(); ++a) {
    images.push_back(iterate(s, Word{a}, m, max_word));
  }
  return Substitution(s.alphabet(), std::move(images));
}

IncidenceMatrix IncidenceMatrix::operator*(IncidenceMatrix const& rhs) const {
  IncidenceMatrix out{n, std::vector<std::uint64_t>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t const lhs = (*this)(i, k);
      if (lhs == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += lhs * rhs(k, j);
      }
    }
  }
  return out;
}

IncidenceMatrix incidence_matrix(Substitution const& s) {
  std::size_t const n = s.size();
  IncidenceMatrix m{n, std::vector<std::uint64_t>(n * n, 0)};
  for (Letter b = 0; b < n; ++b) {
    for (Letter a : s.image(b)) {
      ++m(a, b);
    }
  }
  return m;
}

std::size_t wielandt_bound(std::size_t n) noexcept {
  return n == 0 ? 0 : (n - 1) * (n - 1) + 1;
}

bool is_primitive(Substitution const& s) {
  // Boolean powers; counts would overflow long before the bound for big p.
  std::size_t const n = s.size();
  std::vector<char> base(n * n, 0);
  for (Letter b = 0; b < n; ++b) {
    for (Letter a : s.image(b)) {
      base[a * n + b] = 1;
    }
  }
  std::vector<char> cur = base;
  auto positive = [](std::vector<char> const& m) {
    return std::all_of(m.begin(), m.end(), [](char c) { return c != 0; });
  };
  for (std::size_t k = 1; k <= wielandt_bound(n); ++k) {
    if (positive(cur)) {
      return true;
    }
    std::vector<char> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          if (cur[i * n + l] && base[l * n + j]) {
            next[i * n + j] = 1;
            break;
          }
        }
      }
    }
    cur = std::move(next);
  }
  return false;
}

namespace {

void add_factors(Word const& w, std::size_t n, WordSet& out, std::vector<Word>* fresh) {
  if (w.size() < n) {
    return;
  }
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    Word f(w.begin() + static_cast<std::ptrdiff_t>(i),
           w.begin() + static_cast<std::ptrdiff_t>(i + n));
    auto [it, inserted] = out.insert(std::move(f));
    if (inserted && fresh != nullptr) {
      fresh->push_back(*it);
    }
  }
}

}  // namespace

WordSet language(Substitution const& s, std::size_t n, std::size_t max_word) {
  if (n == 0) {
    return WordSet{Word{}};
  }
  if (!is_primitive(s)) {
    throw PreconditionError("language() requires a primitive substitution");
  }
  WordSet out;
  std::vector<Word> frontier;
  // Seed with tau^k(a), k minimal such that the image is long enough.
  for (Letter a = 0; a < s.size(); ++a) {
    Word w{a};
    std::size_t steps = 0;
    while (w.size() < n) {
      Word next = apply(s, w, max_word);
      if (next.size() == w.size() && ++steps > s.size()) {
        break;  // letter never grows: only possible for |A| = 1, tau(a) = a
      }
      w = std::move(next);
    }
    add_factors(w, n, out, &frontier);
  }
  if (out.empty()) {
    // tau(a) = a over a single letter: X_tau is the constant sequence.
    out.insert(Word(n, 0));
    return out;
  }
  // Close under "length-n factors of tau(w)"; monotone and bounded by |A|^n.
  while (!frontier.empty()) {
    std::vector<Word> next_frontier;
    for (Word const& w : frontier) {
      add_factors(apply(s, w, max_word), n, out, &next_frontier);
    }
    frontier = std::move(next_frontier);
  }
  return out;
}

std::vector<std::size_t> complexity(Substitution const& s, std::size_t n_max) {
  std::vector<std::size_t> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    out.push_back(language(s, n).size());
  }
  return out;
}

PairWord zip(Word const& u, Word const& v) {
  if (u.size() != v.size()) {
    throw PreconditionError("zip: words of different lengths");
  }
  PairWord out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out.emplace_back(u[i], v[i]);
  }
  return out;
}

Substitution pair_substitution(Substitution const& s) {
  if (!s.is_constant_length()) {
    throw PreconditionError("pair_substitution requires a constant-length substitution");
  }
  std::size_t const n = s.size();
  std::vector<std::string> alphabet;
  std::vector<Word> images;
  alphabet.reserve(n * n);
  images.reserve(n * n);
  for (Letter a = 0; a < n; ++a) {
    for (Letter b = 0; b < n; ++b) {
      alphabet.push_back("(" + s.token(a) + "," + s.token(b) + ")");
      Word img;
      for (std::size_t i = 0; i < s.image(a).size(); ++i) {
        img.push_back(pair_letter(s.image(a)[i], s.image(b)[i], n));
      }
      images.push_back(std::move(img));
    }
  }
  return Substitution(std::move(alphabet), std::move(images));
}

}  // namespace constsub
