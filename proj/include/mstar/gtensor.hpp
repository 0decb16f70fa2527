#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "mstar/fincat.hpp"
#include "mstar/linear.hpp"
#include "mstar/search.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

// ---- A♯𝔾 for a finite groupoid 𝔾 ----

/// Objects (a,g) have id a·|Ob 𝔾| + g; morphisms (f,φ) have id f·|Mor 𝔾| + φ.
struct SharpResult {
  StarCategory category;
  FinCategory groupoid;
  std::size_t groupoid_objects = 0;
  std::size_t groupoid_morphisms = 0;
  ObjId object(ObjId a, ObjId g) const { return ObjId(a * groupoid_objects + g); }
  MorId morphism(MorId f, MorId phi) const { return MorId(f * groupoid_morphisms + phi); }
  ObjId base_object(ObjId x) const { return ObjId(x / groupoid_objects); }
  ObjId groupoid_object(ObjId x) const { return ObjId(x % groupoid_objects); }
  MorId base_morphism(MorId m) const { return MorId(m / groupoid_morphisms); }
  MorId groupoid_morphism(MorId m) const { return MorId(m % groupoid_morphisms); }
};

/// (f,φ)* = (f*, φ⁻¹); (f,φ) is marked iff f is. Errors: NotAGroupoid.
SharpResult sharp(const StarCategory& A, const FinCategory& groupoid);
/// F♯H between two sharp products.
Functor sharp_functor(const SharpResult& source, const SharpResult& target, const Functor& F, const Functor& H);
/// a ↦ (a, g), f ↦ (f, id_g).
Functor sharp_inclusion(const StarCategory& A, const SharpResult& S, ObjId g);
/// (f,φ) ↦ f.
Functor sharp_projection(const SharpResult& S);

// ---- Fun^u(𝔾, A) ----

struct FunuResult {
  StarCategory category;
  std::vector<Functor> objects;                // functors 𝔾 → A with every morphism marked
  std::vector<NatTransformation> morphisms;    // all natural transformations
  std::optional<ObjId> find_object(const Functor& F) const;
  std::optional<MorId> find_morphism(ObjId s, ObjId t, const NatTransformation& n) const;

  std::map<Functor, ObjId> object_index;
  std::map<std::tuple<ObjId, ObjId, std::vector<MorId>>, MorId> morphism_index;
};

/// Star and marking are componentwise. Errors: BoundExceeded, NotAGroupoid.
FunuResult funu(const FinCategory& groupoid, const StarCategory& A, std::uint64_t bound = SearchBudget::kDefaultLimit);
/// Evaluation at an object g of 𝔾: Fun^u(𝔾,A) → A.
Functor evaluation(const FunuResult& F, ObjId g);
/// x ↦ constant functor at x.
Functor constant_embedding(const StarCategory& A, const FunuResult& F);

/// Φ: C♯𝔾 → A  ↦  Ψ: C → Fun^u(𝔾,A) with Ψ(c)(g) = Φ(c,g).
Functor exponential_transport(const StarCategory& C, const SharpResult& CG, const FunuResult& F, const Functor& Phi);
/// Ψ ↦ Φ with Φ(f,φ) = Ψ(c')(φ)∘Ψ(f)_g.
Functor exponential_transport_inverse(const StarCategory& C, const SharpResult& CG, const StarCategory& A,
                                      const FunuResult& F, const Functor& Psi);

struct ExponentialReport {
  std::uint64_t left = 0;   // |Hom(C♯𝔾, A)|
  std::uint64_t right = 0;  // |Hom(C, Fun^u(𝔾,A))|
  bool bijective = false;
  nlohmann::json witness;
};
/// Enumerates both hom-sets, transports each element, checks well-typedness
/// and both round trips.
ExponentialReport verify_exponential_law(const StarCategory& C, const FinCategory& groupoid, const StarCategory& A,
                                         std::uint64_t bound = SearchBudget::kDefaultLimit);

// ---- Linear flavor ----

/// Hom((a,g),(a',g')) = ⊕_{φ: g→g'} Hom_A(a,a'), basis (φ, e_i) ordered by
/// the position of φ in the hom, then i.
struct LinearSharpResult {
  LinearStarCategory category;
  FinCategory groupoid;
  std::size_t base_objects = 0;
  ObjId object(ObjId a, ObjId g) const { return ObjId(a * groupoid.num_objects() + g); }
  /// Coordinates of (φ, v).
  Vec element(const LinearStarCategory& A, MorId phi, ObjId a, ObjId b, const Vec& v) const;
};
LinearSharpResult sharp(const LinearStarCategory& A, const FinCategory& groupoid);

struct LinearFunuResult {
  SubcategoryResult sub;                // the category together with its ambient coordinates
  FinCategory groupoid;
  std::vector<Functor> objects;         // functors 𝔾 → marked_groupoid(A)
  std::map<Functor, ObjId> object_index;
  const LinearStarCategory& category() const { return sub.category; }
  /// Offset of the g-block inside the ambient coordinates of Hom(s,t).
  std::size_t block_offset(const LinearStarCategory& A, ObjId s, ObjId t, ObjId g) const;
};

/// Objects: functors into the marked groupoid; homs: natural
/// transformations, computed as a kernel; marked: componentwise marked.
LinearFunuResult funu(const FinCategory& groupoid, const LinearStarCategory& A,
                      std::uint64_t bound = SearchBudget::kDefaultLimit);

LinearFunctor exponential_transport(const LinearStarCategory& C, const LinearSharpResult& CG,
                                    const LinearStarCategory& A, const LinearFunuResult& F, const LinearFunctor& Phi);
LinearFunctor exponential_transport_inverse(const LinearStarCategory& C, const LinearSharpResult& CG,
                                            const LinearStarCategory& A, const LinearFunuResult& F,
                                            const LinearFunctor& Psi);
/// C must be marked generated.
ExponentialReport verify_exponential_law(const LinearStarCategory& C, const FinCategory& groupoid,
                                         const LinearStarCategory& A,
                                         std::uint64_t bound = SearchBudget::kDefaultLimit);

}  // namespace mstar
