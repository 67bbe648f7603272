#include "constsub/reduction.hpp"

#include <algorithm>

#include "constsub/error.hpp"

namespace constsub {

Word map_word(LetterMap const& phi, Word const& w) {
  Word out;
  out.reserve(w.size());
  for (Letter a : w) {
    out.push_back(phi.at(a));
  }
  return out;
}

ReductionResult one_to_one_reduction(Substitution const& s) {
  ReductionResult result;
  result.reduced = s;
  result.letter_map.resize(s.size());
  for (Letter a = 0; a < s.size(); ++a) {
    result.letter_map[a] = a;
  }
  while (!result.reduced.is_one_to_one()) {
    Substitution const& cur = result.reduced;
    std::vector<Letter> reps;  // representative letters, in alphabet order
    LetterMap phi(cur.size());
    for (Letter a = 0; a < cur.size(); ++a) {
      bool merged = false;
      for (std::size_t j = 0; j < reps.size(); ++j) {
        if (cur.image(reps[j]) == cur.image(a)) {
          phi[a] = static_cast<Letter>(j);
          merged = true;
          break;
        }
      }
      if (!merged) {
        phi[a] = static_cast<Letter>(reps.size());
        reps.push_back(a);
      }
    }
    std::vector<std::string> alphabet;
    std::vector<Word> images;
    for (Letter r : reps) {
      alphabet.push_back(cur.token(r));
      images.push_back(map_word(phi, cur.image(r)));
    }
    Substitution next(std::move(alphabet), std::move(images));
    for (auto& b : result.letter_map) {
      b = phi[b];
    }
    result.chain.push_back({next, phi});
    result.reduced = std::move(next);
  }
  return result;
}

namespace {

class SimplificationSearch {
 public:
  SimplificationSearch(Substitution const& s, std::size_t max_words, std::size_t budget)
      : s_(s), max_words_(max_words), budget_(budget), f_(s.size()) {}

  bool run() { return visit(0, 0); }

  Simplification result() const { return {g_.size(), f_, g_}; }
  std::size_t nodes() const { return nodes_; }

 private:
  bool visit(std::size_t letter, std::size_t pos) {
    if (++nodes_ > budget_) {
      throw BudgetError("simplifiability search exceeded " + std::to_string(budget_) +
                        " nodes");
    }
    if (letter == s_.size()) {
      return true;
    }
    Word const& img = s_.image(static_cast<Letter>(letter));
    if (pos == img.size()) {
      return visit(letter + 1, 0);
    }
    for (std::size_t j = 0; j < g_.size(); ++j) {
      Word const& gj = g_[j];
      if (pos + gj.size() <= img.size() &&
          std::equal(gj.begin(), gj.end(), img.begin() + static_cast<std::ptrdiff_t>(pos))) {
        f_[letter].push_back(static_cast<Letter>(j));
        if (visit(letter, pos + gj.size())) return true;
        f_[letter].pop_back();
      }
    }
    if (g_.size() < max_words_) {
      for (std::size_t len = 1; pos + len <= img.size(); ++len) {
        Word candidate(img.begin() + static_cast<std::ptrdiff_t>(pos),
                       img.begin() + static_cast<std::ptrdiff_t>(pos + len));
        if (std::find(g_.begin(), g_.end(), candidate) != g_.end()) {
          continue;  // already tried as an existing word
        }
        f_[letter].push_back(static_cast<Letter>(g_.size()));
        g_.push_back(std::move(candidate));
        if (visit(letter, pos + len)) return true;
        g_.pop_back();
        f_[letter].pop_back();
      }
    }
    return false;
  }

  Substitution const& s_;
  std::size_t         max_words_;
  std::size_t         budget_;
  std::size_t         nodes_ = 0;
  std::vector<Word>   f_;
  std::vector<Word>   g_;
};

}  // namespace

std::optional<Simplification> is_simplifiable(Substitution const& s,
                                              std::size_t node_budget) {
  std::size_t used = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    SimplificationSearch search(s, k, node_budget - used);
    bool const found = search.run();
    used += search.nodes();
    if (found) {
      return search.result();
    }
  }
  return std::nullopt;
}

Substitution compose_fg(Simplification const& simp) {
  std::vector<std::string> alphabet;
  std::vector<Word> images;
  for (std::size_t b = 0; b < simp.target_size; ++b) {
    alphabet.push_back("b" + std::to_string(b));
    Word img;
    for (Letter a : simp.g[b]) {
      img.insert(img.end(), simp.f[a].begin(), simp.f[a].end());
    }
    images.push_back(std::move(img));
  }
  return Substitution(std::move(alphabet), std::move(images));
}

bool has_biprolongeable_letter(Substitution const& s) {
  std::vector<std::size_t> successors(s.size(), 0);
  for (Word const& w : language(s, 2)) {
    if (++successors[w[0]] >= 2) {
      return true;
    }
  }
  return false;
}

FinitenessDecision decide_infinite_traced(Substitution const& s, std::size_t node_budget) {
  if (!is_primitive(s)) {
    throw PreconditionError("decide_infinite requires a primitive substitution");
  }
  FinitenessDecision decision;
  Substitution cur = s;
  while (true) {
    FinitenessStep step;
    step.alphabet_size = cur.size();
    if (cur.size() == 1) {
      decision.trace.push_back(step);
      decision.infinite = false;
      return decision;
    }
    auto simp = is_simplifiable(cur, node_budget);
    if (simp) {
      step.simplification = simp;
      decision.trace.push_back(step);
      cur = compose_fg(*simp);
      continue;
    }
    step.biprolongeable = has_biprolongeable_letter(cur);
    decision.trace.push_back(step);
    decision.infinite = *step.biprolongeable;
    return decision;
  }
}

bool decide_infinite(Substitution const& s, std::size_t node_budget) {
  return decide_infinite_traced(s, node_budget).infinite;
}

std::string to_string(ComplexityEvidence e) {
  switch (e) {
    case ComplexityEvidence::Finite: return "Finite";
    case ComplexityEvidence::InfiniteEvidence: return "InfiniteEvidence";
    case ComplexityEvidence::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ComplexityEvidence oracle_infinite_via_complexity(Substitution const& s,
                                                  std::size_t n_max) {
  if (n_max == 0) {
    return ComplexityEvidence::Inconclusive;
  }
  auto const p = complexity(s, n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (p[n] <= p[n - 1]) {
      return ComplexityEvidence::Finite;
    }
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (p[n - 1] < n + 1) {
      return ComplexityEvidence::Inconclusive;
    }
  }
  return ComplexityEvidence::InfiniteEvidence;
}

}  // namespace constsub
