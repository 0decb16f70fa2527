#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mstar/fincat.hpp"
#include "mstar/scalar.hpp"
#include "mstar/search.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

/// An element of Hom(src, tgt) in coordinates of that hom's basis.
struct LinMor {
  ObjId src = 0, tgt = 0;
  Vec v;
  friend bool operator==(const LinMor&, const LinMor&) = default;
};

/// Q(i)-linear *-category with finite-dimensional homs and a finite marked
/// set. Zero objects have a 0-dimensional endomorphism space whose identity
/// is the empty vector.
class LinearStarCategory {
 public:
  std::size_t num_objects() const { return names_.size(); }
  const std::string& object_name(ObjId a) const { return names_[a]; }
  std::size_t dim(ObjId a, ObjId b) const { return bases_[idx(a, b)].size(); }
  const std::string& basis_name(ObjId a, ObjId b, std::size_t k) const { return bases_[idx(a, b)][k]; }
  const Vec& identity(ObjId a) const { return identity_[a]; }
  LinMor identity_mor(ObjId a) const { return {a, a, identity_[a]}; }
  bool is_zero_object(ObjId a) const { return dim(a, a) == 0; }

  /// Product of basis elements e_g ∈ Hom(b,c), e_f ∈ Hom(a,b).
  const Vec& basis_product(ObjId a, ObjId b, ObjId c, std::size_t g, std::size_t f) const {
    return comp_[idx3(a, b, c)][g * dim(a, b) + f];
  }
  /// g∘f for g ∈ Hom(b,c), f ∈ Hom(a,b).
  Vec compose(ObjId a, ObjId b, ObjId c, const Vec& g, const Vec& f) const;
  LinMor compose(const LinMor& g, const LinMor& f) const;
  /// Star of the k-th basis element of Hom(a,b), in Hom(b,a).
  const Vec& basis_star(ObjId a, ObjId b, std::size_t k) const { return star_[idx(a, b)][k]; }
  Vec star(ObjId a, ObjId b, const Vec& f) const;
  LinMor star(const LinMor& f) const { return {f.tgt, f.src, star(f.src, f.tgt, f.v)}; }

  bool is_unitary(const LinMor& u) const;
  const std::vector<LinMor>& marked() const { return marked_; }
  /// Position of u in the marked list, if marked.
  std::optional<std::size_t> marked_index(const LinMor& u) const;
  bool is_marked(const LinMor& u) const { return marked_index(u).has_value(); }
  /// Every hom is spanned by its marked elements.
  bool is_marked_generated() const;

  friend bool operator==(const LinearStarCategory& a, const LinearStarCategory& b) {
    return a.names_.size() == b.names_.size() && a.bases_.size() == b.bases_.size() && a.identity_ == b.identity_ &&
           a.comp_ == b.comp_ && a.star_ == b.star_ && a.marked_ == b.marked_;
  }

 private:
  friend class LinearBuilder;
  std::size_t idx(ObjId a, ObjId b) const { return std::size_t(a) * num_objects() + b; }
  std::size_t idx3(ObjId a, ObjId b, ObjId c) const { return (idx(a, b)) * num_objects() + c; }

  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> bases_;
  std::vector<Vec> identity_;
  std::vector<std::vector<Vec>> comp_;
  std::vector<std::vector<Vec>> star_;
  std::vector<LinMor> marked_;
  std::unordered_map<std::string, std::size_t> marked_lookup_;
};

class LinearBuilder {
 public:
  ObjId add_object(std::string name = {});
  /// Must be called once all objects exist; homs default to dimension 0.
  void set_basis(ObjId a, ObjId b, std::vector<std::string> names);
  void set_identity(ObjId a, Vec v);
  void set_basis_product(ObjId a, ObjId b, ObjId c, std::size_t g, std::size_t f, Vec v);
  void set_basis_star(ObjId a, ObjId b, std::size_t k, Vec v);
  void add_marked(LinMor m);
  std::size_t dim(ObjId a, ObjId b) const;
  std::size_t num_objects() const { return names_.size(); }

  /// Checks dimensions, identity laws, associativity, star laws and the
  /// marking. Errors: InconsistentLinear, InvalidStar, InvalidMarking.
  LinearStarCategory build() const;

 private:
  void ensure_tables();
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> bases_;
  std::vector<Vec> identity_;
  std::vector<std::vector<Vec>> comp_;
  std::vector<std::vector<Vec>> star_;
  std::vector<LinMor> marked_;
  std::size_t tables_for_ = 0;
};

/// Structure of a linear subcategory cut out of an ambient description: each
/// hom is given by basis vectors in an ambient coordinate space, and the
/// ambient operations are used to compute structure constants exactly.
struct AmbientStructure {
  std::size_t num_objects = 0;
  std::vector<std::string> object_names;
  std::function<std::vector<Vec>(ObjId, ObjId)> basis;  // ambient vectors spanning Hom(a,b)
  std::function<Vec(ObjId, ObjId, ObjId, const Vec&, const Vec&)> compose;
  std::function<Vec(ObjId, ObjId, const Vec&)> star;
  std::function<Vec(ObjId)> identity;
  std::vector<LinMor> marked;  // in ambient coordinates
};

struct SubcategoryResult {
  LinearStarCategory category;
  std::vector<std::vector<Vec>> basis;  // ambient basis per hom, indexed a*n+b
  /// Ambient vector → coordinates in the subcategory basis.
  Vec coordinates(ObjId a, ObjId b, const Vec& ambient) const;
  Vec ambient(ObjId a, ObjId b, const Vec& coords) const;
  std::size_t n = 0;
};

/// Errors: InconsistentLinear when the spans are not closed under the operations.
SubcategoryResult build_linear_subcategory(const AmbientStructure& s);

/// Functor given by object images and the images of hom basis elements.
struct LinearFunctor {
  std::vector<ObjId> on_objects;
  std::vector<std::vector<Vec>> on_basis;  // indexed a*n+b, one Vec per basis element
  friend bool operator==(const LinearFunctor&, const LinearFunctor&) = default;
};

Vec apply(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F, ObjId a, ObjId b,
          const Vec& v);
LinMor apply(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F, const LinMor& f);
/// G∘F for F: A → B and G: B → C.
LinearFunctor compose(const LinearStarCategory& A, const LinearStarCategory& B, const LinearStarCategory& C,
                      const LinearFunctor& G, const LinearFunctor& F);
LinearFunctor identity_functor(const LinearStarCategory& A);

/// Linear *-functor that preserves the marking; nullopt when valid.
std::optional<nlohmann::json> linear_functor_violation(const LinearStarCategory& A, const LinearStarCategory& B,
                                                       const LinearFunctor& F);
inline bool is_linear_functor(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F) {
  return !linear_functor_violation(A, B, F).has_value();
}
bool is_linear_isomorphism(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F);

/// The marked elements as a finite *-groupoid (marked flavor, everything marked).
StarCategory marked_groupoid(const LinearStarCategory& A);
/// The induced functor on marked groupoids.
Functor restrict_to_marked(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F);

/// Calls `visit` on every linear *-functor A → B. The domain must be marked
/// generated, since a functor is then fixed by its values on the finite
/// marked groupoid. `constraints` act on the marked groupoids (fixed ids,
/// equivariance); star and marking are added automatically.
/// Errors: NotMarkedGenerated, BoundExceeded.
std::uint64_t for_each_linear_functor(const LinearStarCategory& A, const LinearStarCategory& B,
                                      SearchConstraints constraints, SearchBudget& budget,
                                      const std::function<bool(const LinearFunctor&)>& visit);
std::vector<LinearFunctor> enumerate_linear_functors(const LinearStarCategory& A, const LinearStarCategory& B,
                                                     std::uint64_t bound = SearchBudget::kDefaultLimit);
/// Extends a functor of marked groupoids linearly, if the result is a linear *-functor.
std::optional<LinearFunctor> extend_from_marked(const LinearStarCategory& A, const LinearStarCategory& B,
                                                const Functor& on_marked);

/// Characterization: f⁺ an equivalence and every hom map bijective.
Verdict is_linear_weak_equivalence(const LinearStarCategory& A, const LinearStarCategory& B, const LinearFunctor& F);
/// Definition route: inverse functor up to marked natural isomorphisms.
Verdict linear_weak_equivalence_by_search(const LinearStarCategory& A, const LinearStarCategory& B,
                                          const LinearFunctor& F, std::uint64_t bound = SearchBudget::kDefaultLimit);

/// Marked natural isomorphism F ⇒ G between linear functors A → B, as marked-list indices.
std::optional<std::vector<std::size_t>> find_marked_linear_isomorphism(const LinearStarCategory& A,
                                                                       const LinearStarCategory& B,
                                                                       const LinearFunctor& F, const LinearFunctor& G);

/// Hom basis = hom-set, star and composition extended (anti)linearly,
/// marked = images of the marked morphisms.
LinearStarCategory linearize(const StarCategory& A);
/// The pt with End = Q(i).
LinearStarCategory linear_point();
/// linearize on a *-functor F: A → B.
LinearFunctor linearize(const StarCategory& A, const StarCategory& B, const Functor& F);

/// Linearization adjunction: a *-functor A → F_C(B) is an object map plus one
/// element of B per morphism of A.
struct UnderlyingFunctor {
  std::vector<ObjId> on_objects;
  std::vector<LinMor> on_morphisms;
  friend bool operator==(const UnderlyingFunctor&, const UnderlyingFunctor&) = default;
};
bool is_underlying_functor(const StarCategory& A, const LinearStarCategory& B, const UnderlyingFunctor& Phi);
/// Φ ↦ Ψ with Ψ(Σ λ_φ φ) = Σ λ_φ Φ(φ).
LinearFunctor linearize_transport(const StarCategory& A, const LinearStarCategory& B, const UnderlyingFunctor& Phi);
UnderlyingFunctor linearize_transport_inverse(const StarCategory& A, const LinearStarCategory& B,
                                              const LinearFunctor& Psi);
/// *-functors A → F_C(B) sending marked to marked. Finite only when every
/// morphism of A is marked; otherwise NotMarkedGenerated.
std::vector<UnderlyingFunctor> enumerate_underlying_functors(const StarCategory& A, const LinearStarCategory& B,
                                                             std::uint64_t bound = SearchBudget::kDefaultLimit);

/// Isomorphism of linear categories by search over marked groupoids
/// (both sides marked generated).
std::optional<LinearFunctor> find_linear_isomorphism(const LinearStarCategory& A, const LinearStarCategory& B,
                                                     std::uint64_t bound = SearchBudget::kDefaultLimit);

}  // namespace mstar
