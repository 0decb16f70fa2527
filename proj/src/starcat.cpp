#include "mstar/starcat.hpp"

#include "mstar/error.hpp"

namespace mstar {

using nlohmann::json;

namespace {

void validate_star(const FinCategory& c, const std::vector<MorId>& star) {
  if (star.size() != c.num_morphisms()) {
    throw Error(ErrorKind::invalid_star, "star table has the wrong size");
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    MorId s = star[f];
    if (s >= c.num_morphisms() || c.src(s) != c.tgt(f) || c.tgt(s) != c.src(f)) {
      throw Error(ErrorKind::invalid_star, "star does not reverse the morphism", {{"morphism", c.morphism_name(f)}});
    }
    if (star[s] != f) {
      throw Error(ErrorKind::invalid_star, "star is not an involution", {{"morphism", c.morphism_name(f)}});
    }
  }
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    if (star[c.identity(a)] != c.identity(a)) {
      throw Error(ErrorKind::invalid_star, "star moves an identity", {{"object", c.object_name(a)}});
    }
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (MorId g : c.out(c.tgt(f))) {
      if (star[c.compose(g, f)] != c.compose(star[f], star[g])) {
        throw Error(ErrorKind::invalid_star, "star is not contravariant",
                    {{"g", c.morphism_name(g)}, {"f", c.morphism_name(f)}});
      }
    }
  }
}

bool unitary(const FinCategory& c, const std::vector<MorId>& star, MorId f) {
  return c.compose(star[f], f) == c.identity(c.src(f)) && c.compose(f, star[f]) == c.identity(c.tgt(f));
}

}  // namespace

StarCategory StarCategory::make(FinCategory base, std::vector<MorId> star, std::vector<bool> marked, Flavor flavor) {
  validate_star(base, star);
  const FinCategory& c = base;
  if (flavor == Flavor::unmarked) {
    marked.assign(c.num_morphisms(), false);
    for (MorId f = 0; f < c.num_morphisms(); ++f) marked[f] = unitary(c, star, f);
  } else {
    if (marked.size() != c.num_morphisms()) throw Error(ErrorKind::invalid_marking, "marking has the wrong size");
    for (ObjId a = 0; a < c.num_objects(); ++a) {
      if (!marked[c.identity(a)]) {
        throw Error(ErrorKind::invalid_marking, "identity is not marked", {{"object", c.object_name(a)}});
      }
    }
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (!marked[f]) continue;
      if (!unitary(c, star, f)) {
        throw Error(ErrorKind::invalid_marking, "marked morphism is not unitary", {{"morphism", c.morphism_name(f)}});
      }
      if (!marked[star[f]]) {
        throw Error(ErrorKind::invalid_marking, "marking not closed under star", {{"morphism", c.morphism_name(f)}});
      }
      for (MorId g : c.out(c.tgt(f))) {
        if (marked[g] && !marked[c.compose(g, f)]) {
          throw Error(ErrorKind::invalid_marking, "marking not closed under composition",
                      {{"g", c.morphism_name(g)}, {"f", c.morphism_name(f)}});
        }
      }
    }
  }
  StarCategory s;
  s.base_ = std::move(base);
  s.star_ = std::move(star);
  s.marked_ = std::move(marked);
  s.flavor_ = flavor;
  return s;
}

StarCategory StarCategory::make_marked(FinCategory base, std::vector<MorId> star, const std::vector<MorId>& marked) {
  std::vector<bool> mask(base.num_morphisms(), false);
  for (MorId f : marked) mask.at(f) = true;
  return make(std::move(base), std::move(star), std::move(mask), Flavor::marked);
}

StarCategory StarCategory::make_unmarked(FinCategory base, std::vector<MorId> star) {
  return make(std::move(base), std::move(star), {}, Flavor::unmarked);
}

bool StarCategory::is_unitary(MorId f) const { return unitary(base_, star_, f); }

std::vector<MorId> StarCategory::unitaries() const {
  std::vector<MorId> out;
  for (MorId f = 0; f < num_morphisms(); ++f) {
    if (is_unitary(f)) out.push_back(f);
  }
  return out;
}

std::vector<MorId> StarCategory::marked_list() const {
  std::vector<MorId> out;
  for (MorId f = 0; f < num_morphisms(); ++f) {
    if (marked_[f]) out.push_back(f);
  }
  return out;
}

StarCategory star_groupoid(const FinCategory& groupoid, Flavor flavor) {
  std::vector<MorId> inv = groupoid_inverses(groupoid);
  return StarCategory::make(groupoid, inv, std::vector<bool>(groupoid.num_morphisms(), true), flavor);
}

StarCategory mi(const StarCategory& A) {
  std::vector<bool> mask(A.num_morphisms(), false);
  for (ObjId a = 0; a < A.num_objects(); ++a) mask[A.base().identity(a)] = true;
  return StarCategory::make(A.base(), A.star_table(), mask, Flavor::marked);
}

StarCategory ma(const StarCategory& A) {
  std::vector<bool> mask(A.num_morphisms(), false);
  for (MorId f : A.unitaries()) mask[f] = true;
  return StarCategory::make(A.base(), A.star_table(), mask, Flavor::marked);
}

StarCategory forget_marking(const StarCategory& A) { return StarCategory::make_unmarked(A.base(), A.star_table()); }

StarCategory with_marking(const StarCategory& A, const std::vector<MorId>& marked) {
  return StarCategory::make_marked(A.base(), A.star_table(), marked);
}

MarkedSubcategory marked_subcategory(const StarCategory& A) {
  const FinCategory& c = A.base();
  MarkedSubcategory r;
  r.from_ambient.assign(c.num_morphisms(), kNone);
  CategoryBuilder b;
  for (ObjId a = 0; a < c.num_objects(); ++a) b.add_object(c.object_name(a));
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (!A.is_marked(f)) continue;
    r.from_ambient[f] = b.add_morphism(c.src(f), c.tgt(f), c.morphism_name(f));
    r.to_ambient.push_back(f);
  }
  for (ObjId a = 0; a < c.num_objects(); ++a) b.set_identity(a, r.from_ambient[c.identity(a)]);
  b.fill_compose([&](MorId g, MorId f) { return r.from_ambient[c.compose(r.to_ambient[g], r.to_ambient[f])]; });
  r.groupoid = b.build();
  return r;
}

Functor restrict_to_marked(const MarkedSubcategory& a, const MarkedSubcategory& b, const Functor& F) {
  Functor R;
  R.on_objects = F.on_objects;
  for (MorId f : a.to_ambient) {
    MorId g = b.from_ambient.at(F.on_morphisms.at(f));
    if (g == kNone) throw Error(ErrorKind::invalid_functor, "marked morphism sent to an unmarked one", {{"morphism", f}});
    R.on_morphisms.push_back(g);
  }
  return R;
}

std::optional<json> star_functor_violation(const StarCategory& A, const StarCategory& B, const Functor& F) {
  if (auto v = functor_violation(A.base(), B.base(), F)) return v;
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    if (F.on_morphisms[A.star(f)] != B.star(F.on_morphisms[f])) {
      return json{{"reason", "star not preserved"}, {"morphism", A.base().morphism_name(f)}};
    }
    if (A.is_marked(f) && !B.is_marked(F.on_morphisms[f])) {
      return json{{"reason", "marking not preserved"}, {"morphism", A.base().morphism_name(f)}};
    }
  }
  return std::nullopt;
}

SearchConstraints star_constraints(const StarCategory& A, const StarCategory& B) {
  SearchConstraints c;
  c.dom_star = &A.star_table();
  c.cod_star = &B.star_table();
  c.dom_marked = &A.marked_mask();
  c.cod_marked = &B.marked_mask();
  return c;
}

std::vector<Functor> enumerate_star_functors(const StarCategory& A, const StarCategory& B, std::uint64_t bound) {
  return enumerate_functors(A.base(), B.base(), star_constraints(A, B), bound);
}

std::uint64_t count_star_functors(const StarCategory& A, const StarCategory& B, std::uint64_t bound) {
  return count_functors(A.base(), B.base(), star_constraints(A, B), bound);
}

namespace {

// Two objects 0, 1 with morphisms id_0, id_1, u, u* in that id order.
FinCategory unitary_shape() {
  CategoryBuilder b;
  ObjId x = b.add_object("0"), y = b.add_object("1");
  MorId i0 = b.add_identity(x), i1 = b.add_identity(y);
  MorId u = b.add_morphism(x, y, "u");
  b.add_morphism(y, x, "u*");
  b.fill_compose([=](MorId g, MorId f) -> MorId {
    if (g == i0 || g == i1) return f;
    if (f == i0 || f == i1) return g;
    return g == u ? i1 : i0;  // u∘u* = id_1, u*∘u = id_0
  });
  return b.build();
}

}  // namespace

StarCategory classifier(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::object:
      return point(Flavor::marked);
    case ClassifierKind::invertible:
      return star_groupoid(indiscrete_category(2), Flavor::unmarked);
    case ClassifierKind::unitary:
      return StarCategory::make_unmarked(unitary_shape(), {0, 1, 3, 2});
    case ClassifierKind::marked_unitary:
      return StarCategory::make_marked(unitary_shape(), {0, 1, 3, 2}, {0, 1, 2, 3});
  }
  throw Error(ErrorKind::invalid_argument, "unknown classifier");
}

std::vector<std::uint32_t> represented_hom(RepresentedKind kind, const StarCategory& B) {
  std::vector<std::uint32_t> out;
  switch (kind) {
    case RepresentedKind::object:
      for (ObjId a = 0; a < B.num_objects(); ++a) out.push_back(a);
      break;
    case RepresentedKind::morphism:
      for (MorId f = 0; f < B.num_morphisms(); ++f) out.push_back(f);
      break;
    case RepresentedKind::unitary:
      out = B.unitaries();
      break;
    case RepresentedKind::marked:
      out = B.marked_list();
      break;
  }
  return out;
}

StarCategory representing_object(RepresentedKind kind, const StarCategory& B) {
  switch (kind) {
    case RepresentedKind::object:
      return point(B.flavor());
    case RepresentedKind::unitary: {
      StarCategory one = classifier(ClassifierKind::unitary);
      return B.flavor() == Flavor::marked ? mi(one) : one;
    }
    case RepresentedKind::marked:
      return B.flavor() == Flavor::marked ? classifier(ClassifierKind::marked_unitary)
                                          : classifier(ClassifierKind::unitary);
    case RepresentedKind::morphism:
      break;
  }
  throw Error(ErrorKind::invalid_argument, "the morphism classifier is only available as a free presentation");
}

Functor classifying_functor(RepresentedKind kind, const StarCategory& B, std::uint32_t element) {
  const FinCategory& c = B.base();
  if (kind == RepresentedKind::object) return {{element}, {c.identity(element)}};
  if (kind == RepresentedKind::morphism) {
    throw Error(ErrorKind::invalid_argument, "the morphism classifier is only available as a free presentation");
  }
  MorId u = element;
  return {{c.src(u), c.tgt(u)}, {c.identity(c.src(u)), c.identity(c.tgt(u)), u, B.star(u)}};
}

std::uint32_t classified_element(RepresentedKind kind, const StarCategory&, const Functor& F) {
  if (kind == RepresentedKind::object) return F.on_objects.at(0);
  return F.on_morphisms.at(2);
}

Verdict is_weak_equivalence(const StarCategory& A, const StarCategory& B, const Functor& F) {
  Verdict all = is_equivalence(A.base(), B.base(), F);
  if (!all) return {false, {{"part", "underlying"}, {"detail", all.witness}}};
  MarkedSubcategory a = marked_subcategory(A), b = marked_subcategory(B);
  Verdict plus = is_equivalence(a.groupoid, b.groupoid, restrict_to_marked(a, b, F));
  if (!plus) return {false, {{"part", "marked"}, {"detail", plus.witness}}};
  return {true, {}};
}

std::optional<NatTransformation> find_marked_isomorphism(const StarCategory& A, const StarCategory& B,
                                                         const Functor& F, const Functor& G, std::uint64_t bound) {
  return find_transformation(A.base(), B.base(), F, G, [&B](MorId c) { return B.is_marked(c); }, bound);
}

Verdict weak_equivalence_by_search(const StarCategory& A, const StarCategory& B, const Functor& F,
                                   std::uint64_t bound) {
  SearchBudget budget(bound);
  Functor idA = identity_functor(A.base()), idB = identity_functor(B.base());
  std::optional<Functor> inverse;
  for_each_functor(B.base(), A.base(), star_constraints(B, A), budget, [&](const Functor& g) {
    if (!find_marked_isomorphism(B, B, compose(F, g), idB, bound)) return true;
    if (!find_marked_isomorphism(A, A, compose(g, F), idA, bound)) return true;
    inverse = g;
    return false;
  });
  if (!inverse) return {false, {{"reason", "no inverse up to marked isomorphism"}}};
  return {true, {{"inverse_objects", inverse->on_objects}, {"inverse_morphisms", inverse->on_morphisms}}};
}

std::optional<Functor> find_star_isomorphism(const StarCategory& A, const StarCategory& B, std::uint64_t bound) {
  if (A.marked_list().size() != B.marked_list().size()) return std::nullopt;
  return find_isomorphism(A.base(), B.base(), star_constraints(A, B), bound);
}

bool is_star_isomorphism(const StarCategory& A, const StarCategory& B, const Functor& F) {
  return A.marked_list().size() == B.marked_list().size() && is_isomorphism(A.base(), B.base(), F) &&
         is_star_functor(A, B, F);
}

StarCoproduct star_coproduct(const StarCategory& A, const StarCategory& B) {
  if (A.flavor() != B.flavor()) throw Error(ErrorKind::invalid_argument, "coproduct of mixed flavors");
  CoproductResult c = coproduct(A.base(), B.base());
  const auto ma = MorId(A.num_morphisms());
  std::vector<MorId> star;
  std::vector<bool> marked;
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    star.push_back(A.star(f));
    marked.push_back(A.is_marked(f));
  }
  for (MorId f = 0; f < B.num_morphisms(); ++f) {
    star.push_back(ma + B.star(f));
    marked.push_back(B.is_marked(f));
  }
  return {StarCategory::make(std::move(c.category), std::move(star), std::move(marked), A.flavor()),
          std::move(c.left), std::move(c.right)};
}

StarCategory empty_star_category(Flavor flavor) { return StarCategory::make(empty_category(), {}, {}, flavor); }

StarCategory point(Flavor flavor) {
  return StarCategory::make(terminal_category(), {0}, {true}, flavor);
}

}  // namespace mstar
