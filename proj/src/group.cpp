#include "mstar/group.hpp"

#include <algorithm>

#include "mstar/error.hpp"

namespace mstar {

using nlohmann::json;

FinGroup FinGroup::from_table(std::vector<std::vector<GroupElem>> table, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::invalid_group, "a group has at least one element");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::invalid_group, "multiplication table is not square");
    for (GroupElem x : row) {
      if (x >= n) throw Error(ErrorKind::invalid_group, "table entry out of range", {{"entry", x}});
    }
  }
  FinGroup G;
  G.table_ = std::move(table);
  bool found = false;
  for (GroupElem e = 0; e < n && !found; ++e) {
    bool unit = true;
    for (GroupElem g = 0; g < n && unit; ++g) unit = G.table_[e][g] == g && G.table_[g][e] == g;
    if (unit) {
      G.unit_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::invalid_group, "no unit element");
  for (GroupElem g = 0; g < n; ++g) {
    for (GroupElem h = 0; h < n; ++h) {
      for (GroupElem k = 0; k < n; ++k) {
        if (G.table_[G.table_[g][h]][k] != G.table_[g][G.table_[h][k]]) {
          throw Error(ErrorKind::invalid_group, "multiplication is not associative", {{"triple", {g, h, k}}});
        }
      }
    }
  }
  G.inv_.assign(n, 0);
  for (GroupElem g = 0; g < n; ++g) {
    auto it = std::find(G.table_[g].begin(), G.table_[g].end(), G.unit_);
    if (it == G.table_[g].end() || G.table_[GroupElem(it - G.table_[g].begin())][g] != G.unit_) {
      throw Error(ErrorKind::invalid_group, "element has no inverse", {{"element", g}});
    }
    G.inv_[g] = GroupElem(it - G.table_[g].begin());
  }
  if (names.empty()) {
    for (GroupElem g = 0; g < n; ++g) names.push_back(std::to_string(g));
  }
  if (names.size() != n) throw Error(ErrorKind::invalid_group, "wrong number of element names");
  G.names_ = std::move(names);
  return G;
}

bool FinGroup::is_subgroup(const std::vector<GroupElem>& elems) const {
  std::vector<bool> in(order(), false);
  for (GroupElem g : elems) {
    if (g >= order()) return false;
    in[g] = true;
  }
  if (!in[unit_]) return false;
  for (GroupElem g : elems) {
    if (!in[inv_[g]]) return false;
    for (GroupElem h : elems) {
      if (!in[mul(g, h)]) return false;
    }
  }
  return true;
}

FinGroup cyclic_group(std::size_t n) {
  std::vector<std::vector<GroupElem>> t(n, std::vector<GroupElem>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = GroupElem((a + b) % n);
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g" + std::to_string(a));
  }
  return FinGroup::from_table(std::move(t), std::move(names));
}

FinGroup trivial_group() { return cyclic_group(1); }

FinGroup subgroup(const FinGroup& G, const std::vector<GroupElem>& elems) {
  if (!G.is_subgroup(elems)) throw Error(ErrorKind::invalid_group, "not a subgroup", {{"elements", elems}});
  std::vector<GroupElem> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto pos = [&](GroupElem g) { return GroupElem(std::lower_bound(sorted.begin(), sorted.end(), g) - sorted.begin()); };
  std::vector<std::vector<GroupElem>> t;
  std::vector<std::string> names;
  for (GroupElem g : sorted) {
    std::vector<GroupElem> row;
    for (GroupElem h : sorted) row.push_back(pos(G.mul(g, h)));
    t.push_back(std::move(row));
    names.push_back(G.name(g));
  }
  return FinGroup::from_table(std::move(t), std::move(names));
}

StarCategory delooping(const FinGroup& G, Flavor flavor) {
  CategoryBuilder b;
  b.add_object("*");
  for (GroupElem g = 0; g < G.order(); ++g) b.add_morphism(0, 0, G.name(g));
  b.set_identity(0, G.unit());
  b.fill_compose([&](MorId g, MorId h) { return MorId(G.mul(g, h)); });
  FinCategory c = b.build();
  std::vector<MorId> star;
  for (GroupElem g = 0; g < G.order(); ++g) star.push_back(G.inv(g));
  return StarCategory::make(std::move(c), std::move(star), std::vector<bool>(G.order(), true), flavor);
}

void validate_action(const GAction& a) {
  const FinGroup& G = a.group;
  if (a.act.size() != G.order()) throw Error(ErrorKind::invalid_action, "one automorphism per element expected");
  for (GroupElem g = 0; g < G.order(); ++g) {
    if (!is_star_isomorphism(a.base, a.base, a.act[g])) {
      throw Error(ErrorKind::invalid_action, "element does not act by a *-automorphism", {{"element", G.name(g)}});
    }
  }
  if (a.act[G.unit()] != identity_functor(a.base.base())) {
    throw Error(ErrorKind::invalid_action, "unit does not act trivially");
  }
  for (GroupElem g = 0; g < G.order(); ++g) {
    for (GroupElem h = 0; h < G.order(); ++h) {
      if (a.act[G.mul(g, h)] != compose(a.act[g], a.act[h])) {
        throw Error(ErrorKind::invalid_action, "action is not multiplicative", {{"pair", {G.name(g), G.name(h)}}});
      }
    }
  }
}

GAction trivial_action(const FinGroup& G, const StarCategory& A) {
  return {G, A, std::vector<Functor>(G.order(), identity_functor(A.base()))};
}

void validate_action(const LinearGAction& a) {
  const FinGroup& G = a.group;
  const LinearStarCategory& A = a.base;
  if (a.act.size() != G.order()) throw Error(ErrorKind::invalid_action, "one automorphism per element expected");
  for (GroupElem g = 0; g < G.order(); ++g) {
    if (!is_linear_isomorphism(A, A, a.act[g])) {
      throw Error(ErrorKind::invalid_action, "element does not act by a linear *-automorphism",
                  {{"element", G.name(g)}});
    }
  }
  if (a.act[G.unit()] != identity_functor(A)) throw Error(ErrorKind::invalid_action, "unit does not act trivially");
  for (GroupElem g = 0; g < G.order(); ++g) {
    for (GroupElem h = 0; h < G.order(); ++h) {
      if (a.act[G.mul(g, h)] != compose(A, A, A, a.act[g], a.act[h])) {
        throw Error(ErrorKind::invalid_action, "action is not multiplicative", {{"pair", {G.name(g), G.name(h)}}});
      }
    }
  }
}

LinearGAction trivial_action(const FinGroup& G, const LinearStarCategory& A) {
  return {G, A, std::vector<LinearFunctor>(G.order(), identity_functor(A))};
}

}  // namespace mstar
