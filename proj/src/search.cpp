#include "mstar/search.hpp"

#include <cmath>

#include "mstar/error.hpp"

namespace mstar {

void SearchBudget::tick() {
  if (++used_ > limit_) {
    throw Error(ErrorKind::bound_exceeded, "search budget exhausted", {{"bound", limit_}});
  }
}

namespace {

class Engine {
 public:
  Engine(const FinCategory& A, const FinCategory& B, const SearchConstraints& c, SearchBudget& budget,
         const std::function<bool(const Functor&)>& visit)
      : A_(A), B_(B), c_(c), budget_(budget), visit_(visit) {
    obj_.assign(A.num_objects(), kNone);
    mor_.assign(A.num_morphisms(), kNone);
    obj_used_.assign(B.num_objects(), 0);
    mor_used_.assign(B.num_morphisms(), false);
  }

  std::uint64_t run() {
    if (c_.precheck) precheck();
    if (c_.bijective_homs &&
        (A_.num_objects() != B_.num_objects() || A_.num_morphisms() != B_.num_morphisms())) {
      return 0;
    }
    for (ObjId x = 0; x < c_.fixed_objects.size(); ++x) {
      if (c_.fixed_objects[x] != kNone && !assign_obj(x, c_.fixed_objects[x])) return 0;
    }
    search_objects(0);
    return found_;
  }

 private:
  void precheck() const {
    std::size_t free = 0;
    for (ObjId x = 0; x < A_.num_objects(); ++x) {
      if (c_.fixed_objects.empty() || c_.fixed_objects[x] == kNone) ++free;
    }
    double size = std::pow(double(B_.num_objects()), double(free));
    if (size > double(budget_.limit())) {
      throw Error(ErrorKind::bound_exceeded, "object assignment space too large",
                  {{"search_size", size}, {"bound", budget_.limit()}});
    }
  }

  bool obj_ok(ObjId x, ObjId d) const {
    if (c_.allow_object && !c_.allow_object(x, d)) return false;
    if (c_.injective_objects && obj_used_[d]) return false;
    if (c_.bijective_homs && A_.hom(x, x).size() != B_.hom(d, d).size()) return false;
    for (ObjId y : obj_trail_) {
      ObjId e = obj_[y];
      if (c_.bijective_homs) {
        if (A_.hom(x, y).size() != B_.hom(d, e).size() || A_.hom(y, x).size() != B_.hom(e, d).size()) {
          return false;
        }
      } else {
        if (!A_.hom(x, y).empty() && B_.hom(d, e).empty()) return false;
        if (!A_.hom(y, x).empty() && B_.hom(e, d).empty()) return false;
      }
    }
    return true;
  }

  bool assign_obj(ObjId x, ObjId d) {
    std::vector<std::pair<ObjId, ObjId>> work{{x, d}};
    while (!work.empty()) {
      auto [y, e] = work.back();
      work.pop_back();
      if (obj_[y] != kNone) {
        if (obj_[y] != e) return false;
        continue;
      }
      if (!obj_ok(y, e)) return false;
      obj_[y] = e;
      ++obj_used_[e];
      obj_trail_.push_back(y);
      for (const auto& eq : c_.equivariance) {
        work.emplace_back(eq.on_domain.on_objects[y], eq.on_codomain.on_objects[e]);
      }
    }
    return true;
  }

  void undo_obj(std::size_t mark) {
    while (obj_trail_.size() > mark) {
      ObjId y = obj_trail_.back();
      obj_trail_.pop_back();
      --obj_used_[obj_[y]];
      obj_[y] = kNone;
    }
  }

  bool mor_ok(MorId f, MorId g) const {
    if (B_.src(g) != obj_[A_.src(f)] || B_.tgt(g) != obj_[A_.tgt(f)]) return false;
    if (c_.dom_marked && c_.cod_marked && (*c_.dom_marked)[f] && !(*c_.cod_marked)[g]) return false;
    if (c_.bijective_homs && mor_used_[g]) return false;
    if (c_.allow_morphism && !c_.allow_morphism(f, g)) return false;
    return true;
  }

  bool assign_mor(MorId f0, MorId g0) {
    std::vector<std::pair<MorId, MorId>> work{{f0, g0}};
    while (!work.empty()) {
      auto [f, g] = work.back();
      work.pop_back();
      if (mor_[f] != kNone) {
        if (mor_[f] != g) return false;
        continue;
      }
      if (!mor_ok(f, g)) return false;
      mor_[f] = g;
      mor_used_[g] = true;
      mor_trail_.push_back(f);
      if (c_.dom_star && c_.cod_star) work.emplace_back((*c_.dom_star)[f], (*c_.cod_star)[g]);
      for (const auto& eq : c_.equivariance) {
        work.emplace_back(eq.on_domain.on_morphisms[f], eq.on_codomain.on_morphisms[g]);
      }
      for (MorId h : A_.out(A_.tgt(f))) {
        if (mor_[h] != kNone) work.emplace_back(A_.compose(h, f), B_.compose(mor_[h], g));
      }
      for (MorId e : A_.in(A_.src(f))) {
        if (mor_[e] != kNone) work.emplace_back(A_.compose(f, e), B_.compose(g, mor_[e]));
      }
    }
    return true;
  }

  void undo_mor(std::size_t mark) {
    while (mor_trail_.size() > mark) {
      MorId f = mor_trail_.back();
      mor_trail_.pop_back();
      mor_used_[mor_[f]] = false;
      mor_[f] = kNone;
    }
  }

  void search_objects(ObjId start) {
    ObjId x = start;
    while (x < A_.num_objects() && obj_[x] != kNone) ++x;
    if (x == A_.num_objects()) {
      start_morphisms();
      return;
    }
    for (ObjId d = 0; d < B_.num_objects() && !stop_; ++d) {
      budget_.tick();
      std::size_t mark = obj_trail_.size();
      if (assign_obj(x, d)) search_objects(x + 1);
      undo_obj(mark);
    }
  }

  void start_morphisms() {
    std::size_t mark = mor_trail_.size();
    bool ok = true;
    for (ObjId x = 0; x < A_.num_objects() && ok; ++x) ok = assign_mor(A_.identity(x), B_.identity(obj_[x]));
    for (MorId f = 0; f < c_.fixed_morphisms.size() && ok; ++f) {
      if (c_.fixed_morphisms[f] != kNone) ok = assign_mor(f, c_.fixed_morphisms[f]);
    }
    if (ok) search_morphisms(0);
    undo_mor(mark);
  }

  void search_morphisms(MorId start) {
    MorId f = start;
    while (f < A_.num_morphisms() && mor_[f] != kNone) ++f;
    if (f == A_.num_morphisms()) {
      ++found_;
      if (!visit_(Functor{obj_, mor_})) stop_ = true;
      return;
    }
    for (MorId g : B_.hom(obj_[A_.src(f)], obj_[A_.tgt(f)])) {
      if (stop_) return;
      budget_.tick();
      std::size_t mark = mor_trail_.size();
      if (assign_mor(f, g)) search_morphisms(f + 1);
      undo_mor(mark);
    }
  }

  const FinCategory& A_;
  const FinCategory& B_;
  const SearchConstraints& c_;
  SearchBudget& budget_;
  const std::function<bool(const Functor&)>& visit_;
  std::vector<ObjId> obj_;
  std::vector<MorId> mor_;
  std::vector<ObjId> obj_trail_;
  std::vector<MorId> mor_trail_;
  std::vector<std::uint32_t> obj_used_;
  std::vector<bool> mor_used_;
  std::uint64_t found_ = 0;
  bool stop_ = false;
};

}  // namespace

std::uint64_t for_each_functor(const FinCategory& A, const FinCategory& B, const SearchConstraints& constraints,
                               SearchBudget& budget, const std::function<bool(const Functor&)>& visit) {
  return Engine(A, B, constraints, budget, visit).run();
}

std::vector<Functor> enumerate_functors(const FinCategory& A, const FinCategory& B,
                                        const SearchConstraints& constraints, std::uint64_t bound) {
  SearchBudget budget(bound);
  std::vector<Functor> out;
  for_each_functor(A, B, constraints, budget, [&](const Functor& F) {
    out.push_back(F);
    return true;
  });
  return out;
}

std::optional<Functor> find_functor(const FinCategory& A, const FinCategory& B,
                                    const SearchConstraints& constraints, std::uint64_t bound) {
  SearchBudget budget(bound);
  std::optional<Functor> out;
  for_each_functor(A, B, constraints, budget, [&](const Functor& F) {
    out = F;
    return false;
  });
  return out;
}

std::uint64_t count_functors(const FinCategory& A, const FinCategory& B, const SearchConstraints& constraints,
                             std::uint64_t bound) {
  SearchBudget budget(bound);
  return for_each_functor(A, B, constraints, budget, [](const Functor&) { return true; });
}

namespace {

struct TransformationSearch {
  const FinCategory& A;
  const FinCategory& B;
  const Functor& F;
  const Functor& G;
  const std::function<bool(MorId)>& allow;
  SearchBudget& budget;
  const std::function<bool(const NatTransformation&)>& visit;
  NatTransformation t;
  std::uint64_t found = 0;
  bool stop = false;

  bool square_ok(MorId f) const {
    return B.compose(G.on_morphisms[f], t.components[A.src(f)]) ==
           B.compose(t.components[A.tgt(f)], F.on_morphisms[f]);
  }

  void run(ObjId x) {
    if (x == A.num_objects()) {
      ++found;
      if (!visit(t)) stop = true;
      return;
    }
    for (MorId c : B.hom(F.on_objects[x], G.on_objects[x])) {
      if (stop) return;
      budget.tick();
      if (allow && !allow(c)) continue;
      t.components[x] = c;
      bool ok = true;
      for (MorId f : A.out(x)) {
        if (A.tgt(f) <= x && !square_ok(f)) {
          ok = false;
          break;
        }
      }
      for (MorId f : A.in(x)) {
        if (!ok) break;
        if (A.src(f) < x && !square_ok(f)) ok = false;
      }
      if (ok) run(x + 1);
    }
    t.components[x] = kNone;
  }
};

}  // namespace

std::uint64_t for_each_transformation(const FinCategory& A, const FinCategory& B, const Functor& F,
                                      const Functor& G, const std::function<bool(MorId)>& allow,
                                      SearchBudget& budget,
                                      const std::function<bool(const NatTransformation&)>& visit) {
  TransformationSearch s{A, B, F, G, allow, budget, visit, {}, 0, false};
  s.t.components.assign(A.num_objects(), kNone);
  s.run(0);
  return s.found;
}

std::optional<NatTransformation> find_transformation(const FinCategory& A, const FinCategory& B, const Functor& F,
                                                     const Functor& G, const std::function<bool(MorId)>& allow,
                                                     std::uint64_t bound) {
  SearchBudget budget(bound);
  std::optional<NatTransformation> out;
  for_each_transformation(A, B, F, G, allow, budget, [&](const NatTransformation& t) {
    out = t;
    return false;
  });
  return out;
}

std::vector<NatTransformation> enumerate_transformations(const FinCategory& A, const FinCategory& B,
                                                         const Functor& F, const Functor& G,
                                                         const std::function<bool(MorId)>& allow,
                                                         std::uint64_t bound) {
  SearchBudget budget(bound);
  std::vector<NatTransformation> out;
  for_each_transformation(A, B, F, G, allow, budget, [&](const NatTransformation& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<Functor> find_isomorphism(const FinCategory& A, const FinCategory& B, SearchConstraints constraints,
                                        std::uint64_t bound) {
  if (A.num_objects() != B.num_objects() || A.num_morphisms() != B.num_morphisms()) return std::nullopt;
  constraints.injective_objects = true;
  constraints.bijective_homs = true;
  constraints.precheck = false;
  return find_functor(A, B, constraints, bound);
}

}  // namespace mstar
