#include "mstar/free_star.hpp"

#include <set>

#include "mstar/error.hpp"

namespace mstar {

FreeStarPresentation::FreeStarPresentation(FinCategory X, std::vector<MorId> marked) : X_(std::move(X)) {
  marked_.assign(X_.num_morphisms(), false);
  inverse_.assign(X_.num_morphisms(), kNone);
  for (ObjId a = 0; a < X_.num_objects(); ++a) marked.push_back(X_.identity(a));
  for (MorId m : marked) {
    auto inv = inverse_of(X_, m);
    if (!inv) {
      throw Error(ErrorKind::invalid_marking, "marked generator is not invertible",
                  {{"morphism", X_.morphism_name(m)}});
    }
    marked_.at(m) = true;
    inverse_[m] = *inv;
  }
  for (MorId m : marked) {
    if (!marked_[inverse_[m]]) {
      throw Error(ErrorKind::invalid_marking, "marked generators are not closed under inverses",
                  {{"morphism", X_.morphism_name(m)}});
    }
  }
}

bool FreeStarPresentation::well_typed(const Word& w) const {
  ObjId at = w.start;
  for (const Letter& l : w.letters) {
    if (l.mor >= X_.num_morphisms() || src(l) != at) return false;
    at = tgt(l);
  }
  return true;
}

Word FreeStarPresentation::letter(MorId m, bool starred) const {
  Letter l{m, starred};
  return reduce({src(l), {l}});
}

Word FreeStarPresentation::reduce(Word w) const {
  if (!well_typed(w)) throw Error(ErrorKind::invalid_argument, "word is not composable");
  auto& ls = w.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (X_.is_identity(ls[i].mor)) {
        ls.erase(ls.begin() + std::ptrdiff_t(i));
        changed = true;
        break;
      }
      if (ls[i].starred && marked_[ls[i].mor]) {
        ls[i] = {inverse_[ls[i].mor], false};
        changed = true;
        break;
      }
      if (i + 1 < ls.size() && ls[i].starred == ls[i + 1].starred) {
        // Plain: l[i+1]∘l[i]. Starred: l[i+1]*∘l[i]* = (l[i]∘l[i+1])*.
        MorId merged = ls[i].starred ? X_.compose(ls[i].mor, ls[i + 1].mor) : X_.compose(ls[i + 1].mor, ls[i].mor);
        ls[i] = {merged, ls[i].starred};
        ls.erase(ls.begin() + std::ptrdiff_t(i) + 1);
        changed = true;
        break;
      }
    }
  }
  return w;
}

Word FreeStarPresentation::compose(const Word& g, const Word& f) const {
  if (tgt(f) != src(g)) throw Error(ErrorKind::invalid_argument, "words are not composable");
  Word w = f;
  w.letters.insert(w.letters.end(), g.letters.begin(), g.letters.end());
  return reduce(std::move(w));
}

Word FreeStarPresentation::star(const Word& w) const {
  Word s{tgt(w), {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) s.letters.push_back({it->mor, !it->starred});
  return reduce(std::move(s));
}

std::vector<Word> FreeStarPresentation::words_up_to(std::size_t length) const {
  std::vector<Letter> alphabet;
  for (MorId m = 0; m < X_.num_morphisms(); ++m) {
    if (X_.is_identity(m)) continue;
    alphabet.push_back({m, false});
    if (!marked_[m]) alphabet.push_back({m, true});
  }
  std::set<Word> seen;
  std::vector<Word> frontier;
  for (ObjId a = 0; a < X_.num_objects(); ++a) {
    seen.insert(identity(a));
    frontier.push_back(identity(a));
  }
  for (std::size_t len = 1; len <= length; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Letter& l : alphabet) {
        if (src(l) != tgt(w)) continue;
        Word ext = w;
        ext.letters.push_back(l);
        next.push_back(ext);
        seen.insert(reduce(std::move(ext)));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

FreeStarPresentation morphism_classifier() { return FreeStarPresentation(walking_arrow()); }

FreeStarEvaluation::FreeStarEvaluation(const FreeStarPresentation& P, const StarCategory& B, Functor assignment)
    : P_(&P), B_(&B), assignment_(std::move(assignment)) {
  if (auto v = functor_violation(P.generators(), B.base(), assignment_)) {
    throw Error(ErrorKind::ill_typed_assignment, "assignment is not a functor into the target", *v);
  }
  for (MorId m = 0; m < P.generators().num_morphisms(); ++m) {
    if (P.is_marked(m) && !B.is_marked(assignment_.on_morphisms[m])) {
      throw Error(ErrorKind::ill_typed_assignment, "marked generator sent to an unmarked morphism",
                  {{"generator", P.generators().morphism_name(m)}});
    }
  }
}

MorId FreeStarEvaluation::evaluate(const Word& w) const {
  const FinCategory& c = B_->base();
  MorId v = c.identity(assignment_.on_objects.at(w.start));
  for (const Letter& l : w.letters) {
    MorId img = assignment_.on_morphisms.at(l.mor);
    if (l.starred) img = B_->star(img);
    v = c.compose(img, v);
  }
  return v;
}

Verdict FreeStarEvaluation::check(std::size_t length) const {
  const FinCategory& c = B_->base();
  std::vector<Word> words = P_->words_up_to(length);
  for (const Word& w : words) {
    if (evaluate(w) == kNone) return {false, {{"reason", "undefined value"}}};
    if (evaluate(P_->star(w)) != B_->star(evaluate(w))) return {false, {{"reason", "star not preserved"}}};
  }
  for (const Word& f : words) {
    for (const Word& g : words) {
      if (P_->tgt(f) != P_->src(g)) continue;
      if (evaluate(P_->compose(g, f)) != c.compose(evaluate(g), evaluate(f))) {
        return {false, {{"reason", "composition not preserved"}}};
      }
    }
  }
  for (ObjId a = 0; a < P_->generators().num_objects(); ++a) {
    if (evaluate(P_->identity(a)) != c.identity(evaluate_object(a))) {
      return {false, {{"reason", "identity not preserved"}, {"object", a}}};
    }
  }
  return {true, {}};
}

std::vector<Functor> free_star_homs(const FreeStarPresentation& P, const StarCategory& B, std::uint64_t bound) {
  SearchConstraints c;
  c.dom_marked = &P.marked_mask();
  c.cod_marked = &B.marked_mask();
  return enumerate_functors(P.generators(), B.base(), c, bound);
}

}  // namespace mstar
