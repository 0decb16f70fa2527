#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace mstar {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;
inline constexpr std::uint32_t kNone = UINT32_MAX;

/// A validated finite category. Ids are dense and every composable pair has
/// a stored composite, so lookups never allocate.
class FinCategory {
 public:
  FinCategory() = default;

  std::size_t num_objects() const { return obj_names_.size(); }
  std::size_t num_morphisms() const { return src_.size(); }

  ObjId src(MorId f) const { return src_[f]; }
  ObjId tgt(MorId f) const { return tgt_[f]; }
  MorId identity(ObjId a) const { return ident_[a]; }
  bool is_identity(MorId f) const { return src_[f] == tgt_[f] && ident_[src_[f]] == f; }

  std::span<const MorId> hom(ObjId a, ObjId b) const {
    std::size_t k = std::size_t(a) * num_objects() + b;
    return {hom_data_.data() + hom_offset_[k], hom_data_.data() + hom_offset_[k + 1]};
  }
  /// Index of f inside hom(src f, tgt f).
  std::uint32_t hom_position(MorId f) const { return hom_pos_[f]; }
  /// Morphisms with source a, in id order.
  std::span<const MorId> out(ObjId a) const {
    return {out_data_.data() + out_offset_[a], out_data_.data() + out_offset_[a + 1]};
  }
  std::span<const MorId> in(ObjId a) const {
    return {in_data_.data() + in_offset_[a], in_data_.data() + in_offset_[a + 1]};
  }

  /// g∘f; requires tgt(f) == src(g).
  MorId compose(MorId g, MorId f) const { return table_[row_[f] + out_pos_[g]]; }
  bool composable(MorId g, MorId f) const { return tgt_[f] == src_[g]; }

  const std::string& object_name(ObjId a) const { return obj_names_[a]; }
  const std::string& morphism_name(MorId f) const { return mor_names_[f]; }
  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<MorId> find_morphism(const std::string& name) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.ident_ == b.ident_ && a.table_ == b.table_ &&
           a.obj_names_.size() == b.obj_names_.size();
  }

 private:
  friend class CategoryBuilder;
  std::vector<std::string> obj_names_;
  std::vector<std::string> mor_names_;
  std::vector<ObjId> src_, tgt_;
  std::vector<MorId> ident_;
  std::vector<std::uint32_t> hom_offset_;
  std::vector<MorId> hom_data_;
  std::vector<std::uint32_t> hom_pos_;
  std::vector<std::uint32_t> out_offset_, in_offset_;
  std::vector<MorId> out_data_, in_data_;
  std::vector<std::uint32_t> out_pos_;
  std::vector<std::size_t> row_;
  std::vector<MorId> table_;
};

/// Collects raw tables and validates them into a FinCategory.
class CategoryBuilder {
 public:
  ObjId add_object(std::string name = {});
  MorId add_morphism(ObjId s, ObjId t, std::string name = {});
  /// Adds a fresh morphism a→a and declares it the identity of a.
  MorId add_identity(ObjId a, std::string name = {});
  void set_identity(ObjId a, MorId f);
  void set_compose(MorId g, MorId f, MorId gf);
  /// Defines every composite through `fn(g, f)`; entries set earlier are overwritten.
  void fill_compose(const std::function<MorId(MorId, MorId)>& fn);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  ObjId src(MorId f) const { return morphisms_.at(f).src; }
  ObjId tgt(MorId f) const { return morphisms_.at(f).tgt; }

  /// Validates identity laws, composite typing and associativity.
  /// Errors: MissingIdentity, DanglingComposite, NonAssociative.
  FinCategory build() const;

 private:
  struct Mor {
    ObjId src, tgt;
    std::string name;
  };
  std::vector<std::string> objects_;
  std::vector<Mor> morphisms_;
  std::vector<MorId> identity_;
  std::vector<std::tuple<MorId, MorId, MorId>> compose_;
  std::function<MorId(MorId, MorId)> compose_fn_;
};

struct Functor {
  std::vector<ObjId> on_objects;
  std::vector<MorId> on_morphisms;
  friend bool operator==(const Functor&, const Functor&) = default;
  friend auto operator<=>(const Functor&, const Functor&) = default;
};

Functor identity_functor(const FinCategory& c);
/// g∘f (first f, then g).
Functor compose(const Functor& g, const Functor& f);

/// Nullopt when F is a functor A→B, otherwise the violated condition.
std::optional<nlohmann::json> functor_violation(const FinCategory& A, const FinCategory& B, const Functor& F);
inline bool is_functor(const FinCategory& A, const FinCategory& B, const Functor& F) {
  return !functor_violation(A, B, F).has_value();
}

struct NatTransformation {
  std::vector<MorId> components;
  friend bool operator==(const NatTransformation&, const NatTransformation&) = default;
};

/// First domain morphism whose naturality square fails, or a component of the
/// wrong type (reported as the identity of its object).
std::optional<MorId> naturality_failure(const FinCategory& A, const FinCategory& B, const Functor& F,
                                        const Functor& G, const NatTransformation& t);
inline bool check_natural(const FinCategory& A, const FinCategory& B, const Functor& F, const Functor& G,
                          const NatTransformation& t) {
  return !naturality_failure(A, B, F, G, t).has_value();
}

struct Verdict {
  bool ok = true;
  nlohmann::json witness;
  explicit operator bool() const { return ok; }
};

/// Inverse of f when one exists.
std::optional<MorId> inverse_of(const FinCategory& c, MorId f);
bool is_groupoid(const FinCategory& c);
/// Inverse table of a groupoid. Errors: NotAGroupoid naming the morphism.
std::vector<MorId> groupoid_inverses(const FinCategory& c);

/// Essentially surjective (through isomorphisms) and fully faithful.
Verdict is_equivalence(const FinCategory& A, const FinCategory& B, const Functor& F);
bool is_isomorphism(const FinCategory& A, const FinCategory& B, const Functor& F);
bool is_injective_on_objects(const Functor& F);

// Small shapes used throughout.
FinCategory empty_category();
FinCategory terminal_category();
FinCategory discrete_category(std::size_t n);
/// Exactly one morphism between any two objects.
FinCategory indiscrete_category(std::size_t n);
/// 0 → 1 with no inverse.
FinCategory walking_arrow();

struct CoproductResult {
  FinCategory category;
  Functor left, right;
};
CoproductResult coproduct(const FinCategory& A, const FinCategory& B);

/// The functor constant at object b of B.
Functor constant_functor(const FinCategory& A, const FinCategory& B, ObjId b);

}  // namespace mstar
