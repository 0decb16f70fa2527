#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mstar/fincat.hpp"
#include "mstar/linear.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

using GroupElem = std::uint32_t;

/// Finite group given by its multiplication table; mul(g, h) = gh.
class FinGroup {
 public:
  FinGroup() = default;
  /// Errors: InvalidGroup (no unit, missing inverse, non-associative).
  static FinGroup from_table(std::vector<std::vector<GroupElem>> table, std::vector<std::string> names = {});

  std::size_t order() const { return table_.size(); }
  GroupElem mul(GroupElem g, GroupElem h) const { return table_[g][h]; }
  GroupElem inv(GroupElem g) const { return inv_[g]; }
  GroupElem unit() const { return unit_; }
  const std::string& name(GroupElem g) const { return names_[g]; }
  const std::vector<std::vector<GroupElem>>& table() const { return table_; }
  bool is_subgroup(const std::vector<GroupElem>& elems) const;

  friend bool operator==(const FinGroup& a, const FinGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<GroupElem>> table_;
  std::vector<GroupElem> inv_;
  std::vector<std::string> names_;
  GroupElem unit_ = 0;
};

/// Z/n with elements 0..n-1 named "e", "g", "g2", ...
FinGroup cyclic_group(std::size_t n);
FinGroup trivial_group();
/// The subgroup on `elems` with its own table. Errors: InvalidGroup.
FinGroup subgroup(const FinGroup& G, const std::vector<GroupElem>& elems);

/// One object, morphisms = elements, g∘h = gh, g* = g⁻¹ (marked flavor marks all).
StarCategory delooping(const FinGroup& G, Flavor flavor = Flavor::marked);

/// A strict action on a (marked) *-category: one *-automorphism per element.
struct GAction {
  FinGroup group;
  StarCategory base;
  std::vector<Functor> act;  // act[g]; act[gh] = act[g]∘act[h]
};

/// Errors: InvalidAction naming the failing element(s).
void validate_action(const GAction& a);
GAction trivial_action(const FinGroup& G, const StarCategory& A);

struct LinearGAction {
  FinGroup group;
  LinearStarCategory base;
  std::vector<LinearFunctor> act;
};

void validate_action(const LinearGAction& a);
LinearGAction trivial_action(const FinGroup& G, const LinearStarCategory& A);

}  // namespace mstar
