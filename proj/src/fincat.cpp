#include "mstar/fincat.hpp"

#include <algorithm>

#include "mstar/error.hpp"

namespace mstar {

using nlohmann::json;

std::optional<ObjId> FinCategory::find_object(const std::string& name) const {
  for (ObjId a = 0; a < obj_names_.size(); ++a) {
    if (obj_names_[a] == name) return a;
  }
  return std::nullopt;
}

std::optional<MorId> FinCategory::find_morphism(const std::string& name) const {
  for (MorId f = 0; f < mor_names_.size(); ++f) {
    if (mor_names_[f] == name) return f;
  }
  return std::nullopt;
}

ObjId CategoryBuilder::add_object(std::string name) {
  if (name.empty()) name = std::to_string(objects_.size());
  objects_.push_back(std::move(name));
  identity_.push_back(kNone);
  return ObjId(objects_.size() - 1);
}

MorId CategoryBuilder::add_morphism(ObjId s, ObjId t, std::string name) {
  if (name.empty()) name = "m" + std::to_string(morphisms_.size());
  morphisms_.push_back({s, t, std::move(name)});
  return MorId(morphisms_.size() - 1);
}

MorId CategoryBuilder::add_identity(ObjId a, std::string name) {
  if (name.empty()) name = "id_" + objects_.at(a);
  MorId f = add_morphism(a, a, std::move(name));
  set_identity(a, f);
  return f;
}

void CategoryBuilder::set_identity(ObjId a, MorId f) { identity_.at(a) = f; }

void CategoryBuilder::set_compose(MorId g, MorId f, MorId gf) { compose_.emplace_back(g, f, gf); }

void CategoryBuilder::fill_compose(const std::function<MorId(MorId, MorId)>& fn) { compose_fn_ = fn; }

FinCategory CategoryBuilder::build() const {
  const std::size_t n = objects_.size();
  const std::size_t m = morphisms_.size();
  FinCategory c;
  c.obj_names_ = objects_;
  c.mor_names_.reserve(m);
  c.src_.reserve(m);
  c.tgt_.reserve(m);
  for (MorId f = 0; f < m; ++f) {
    const Mor& mor = morphisms_[f];
    if (mor.src >= n || mor.tgt >= n) {
      throw Error(ErrorKind::dangling_composite, "morphism references an undeclared object",
                  {{"morphism", mor.name}});
    }
    c.mor_names_.push_back(mor.name);
    c.src_.push_back(mor.src);
    c.tgt_.push_back(mor.tgt);
  }
  auto mname = [&](MorId f) { return morphisms_[f].name; };

  c.ident_.resize(n);
  for (ObjId a = 0; a < n; ++a) {
    MorId f = identity_[a];
    if (f == kNone || f >= m || c.src_[f] != a || c.tgt_[f] != a) {
      throw Error(ErrorKind::missing_identity, "object has no valid identity", {{"object", objects_[a]}});
    }
    c.ident_[a] = f;
  }

  // Hom-sets in CSR layout keyed by (src, tgt).
  c.hom_offset_.assign(n * n + 1, 0);
  for (MorId f = 0; f < m; ++f) ++c.hom_offset_[std::size_t(c.src_[f]) * n + c.tgt_[f] + 1];
  for (std::size_t k = 0; k < n * n; ++k) c.hom_offset_[k + 1] += c.hom_offset_[k];
  c.hom_data_.resize(m);
  c.hom_pos_.resize(m);
  {
    std::vector<std::uint32_t> fill(c.hom_offset_.begin(), c.hom_offset_.end() - 1);
    for (MorId f = 0; f < m; ++f) {
      std::size_t k = std::size_t(c.src_[f]) * n + c.tgt_[f];
      c.hom_pos_[f] = fill[k] - c.hom_offset_[k];
      c.hom_data_[fill[k]++] = f;
    }
  }

  auto build_adjacency = [&](const std::vector<ObjId>& key, std::vector<std::uint32_t>& offset,
                             std::vector<MorId>& data) {
    offset.assign(n + 1, 0);
    for (MorId f = 0; f < m; ++f) ++offset[key[f] + 1];
    for (std::size_t a = 0; a < n; ++a) offset[a + 1] += offset[a];
    data.resize(m);
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (MorId f = 0; f < m; ++f) data[fill[key[f]]++] = f;
  };
  build_adjacency(c.src_, c.out_offset_, c.out_data_);
  build_adjacency(c.tgt_, c.in_offset_, c.in_data_);
  c.out_pos_.resize(m);
  for (ObjId a = 0; a < n; ++a) {
    auto outs = c.out(a);
    for (std::uint32_t k = 0; k < outs.size(); ++k) c.out_pos_[outs[k]] = k;
  }

  c.row_.resize(m);
  std::size_t total = 0;
  for (MorId f = 0; f < m; ++f) {
    c.row_[f] = total;
    total += c.out(c.tgt_[f]).size();
  }
  c.table_.assign(total, kNone);

  if (compose_fn_) {
    for (MorId f = 0; f < m; ++f) {
      for (MorId g : c.out(c.tgt_[f])) c.table_[c.row_[f] + c.out_pos_[g]] = compose_fn_(g, f);
    }
  }
  for (const auto& [g, f, gf] : compose_) {
    if (g >= m || f >= m || gf >= m) {
      throw Error(ErrorKind::dangling_composite, "composite references an undeclared morphism",
                  {{"g", g}, {"f", f}, {"gf", gf}});
    }
    if (c.tgt_[f] != c.src_[g]) {
      throw Error(ErrorKind::dangling_composite, "composite given for a non-composable pair",
                  {{"g", mname(g)}, {"f", mname(f)}});
    }
    c.table_[c.row_[f] + c.out_pos_[g]] = gf;
  }

  for (MorId f = 0; f < m; ++f) {
    for (MorId g : c.out(c.tgt_[f])) {
      MorId gf = c.table_[c.row_[f] + c.out_pos_[g]];
      if (gf == kNone) {
        if (c.ident_[c.src_[g]] == g) {
          throw Error(ErrorKind::missing_identity, "identity composite missing", {{"morphism", mname(f)}});
        }
        if (c.ident_[c.tgt_[f]] == f) {
          throw Error(ErrorKind::missing_identity, "identity composite missing", {{"morphism", mname(g)}});
        }
        throw Error(ErrorKind::dangling_composite, "composable pair has no composite",
                    {{"g", mname(g)}, {"f", mname(f)}});
      }
      if (gf >= m || c.src_[gf] != c.src_[f] || c.tgt_[gf] != c.tgt_[g]) {
        throw Error(ErrorKind::dangling_composite, "composite has the wrong type",
                    {{"g", mname(g)}, {"f", mname(f)}});
      }
    }
  }

  for (MorId f = 0; f < m; ++f) {
    if (c.compose(c.ident_[c.tgt_[f]], f) != f || c.compose(f, c.ident_[c.src_[f]]) != f) {
      throw Error(ErrorKind::missing_identity, "identity law fails", {{"morphism", mname(f)}});
    }
  }

  for (MorId f = 0; f < m; ++f) {
    for (MorId g : c.out(c.tgt_[f])) {
      MorId gf = c.compose(g, f);
      for (MorId h : c.out(c.tgt_[g])) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          throw Error(ErrorKind::non_associative, "associativity fails",
                      {{"h", mname(h)}, {"g", mname(g)}, {"f", mname(f)}});
        }
      }
    }
  }
  return c;
}

Functor identity_functor(const FinCategory& c) {
  Functor F;
  F.on_objects.resize(c.num_objects());
  F.on_morphisms.resize(c.num_morphisms());
  for (ObjId a = 0; a < c.num_objects(); ++a) F.on_objects[a] = a;
  for (MorId f = 0; f < c.num_morphisms(); ++f) F.on_morphisms[f] = f;
  return F;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor h;
  h.on_objects.reserve(f.on_objects.size());
  h.on_morphisms.reserve(f.on_morphisms.size());
  for (ObjId a : f.on_objects) h.on_objects.push_back(g.on_objects.at(a));
  for (MorId m : f.on_morphisms) h.on_morphisms.push_back(g.on_morphisms.at(m));
  return h;
}

std::optional<json> functor_violation(const FinCategory& A, const FinCategory& B, const Functor& F) {
  if (F.on_objects.size() != A.num_objects() || F.on_morphisms.size() != A.num_morphisms()) {
    return json{{"reason", "size mismatch"}};
  }
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    if (F.on_objects[a] >= B.num_objects()) return json{{"reason", "object out of range"}, {"object", a}};
  }
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    MorId g = F.on_morphisms[f];
    if (g >= B.num_morphisms()) return json{{"reason", "morphism out of range"}, {"morphism", f}};
    if (B.src(g) != F.on_objects[A.src(f)] || B.tgt(g) != F.on_objects[A.tgt(f)]) {
      return json{{"reason", "endpoints not preserved"}, {"morphism", f}};
    }
  }
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    if (F.on_morphisms[A.identity(a)] != B.identity(F.on_objects[a])) {
      return json{{"reason", "identity not preserved"}, {"object", a}};
    }
  }
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    for (MorId g : A.out(A.tgt(f))) {
      if (F.on_morphisms[A.compose(g, f)] != B.compose(F.on_morphisms[g], F.on_morphisms[f])) {
        return json{{"reason", "composition not preserved"}, {"g", g}, {"f", f}};
      }
    }
  }
  return std::nullopt;
}

std::optional<MorId> naturality_failure(const FinCategory& A, const FinCategory& B, const Functor& F,
                                        const Functor& G, const NatTransformation& t) {
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    MorId c = t.components.at(a);
    if (c >= B.num_morphisms() || B.src(c) != F.on_objects[a] || B.tgt(c) != G.on_objects[a]) {
      return A.identity(a);
    }
  }
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    MorId lhs = B.compose(G.on_morphisms[f], t.components[A.src(f)]);
    MorId rhs = B.compose(t.components[A.tgt(f)], F.on_morphisms[f]);
    if (lhs != rhs) return f;
  }
  return std::nullopt;
}

std::optional<MorId> inverse_of(const FinCategory& c, MorId f) {
  for (MorId g : c.hom(c.tgt(f), c.src(f))) {
    if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.tgt(f))) return g;
  }
  return std::nullopt;
}

bool is_groupoid(const FinCategory& c) {
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (!inverse_of(c, f)) return false;
  }
  return true;
}

std::vector<MorId> groupoid_inverses(const FinCategory& c) {
  std::vector<MorId> inv(c.num_morphisms());
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    auto g = inverse_of(c, f);
    if (!g) throw Error(ErrorKind::not_a_groupoid, "morphism has no inverse", {{"morphism", c.morphism_name(f)}});
    inv[f] = *g;
  }
  return inv;
}

Verdict is_equivalence(const FinCategory& A, const FinCategory& B, const Functor& F) {
  std::vector<bool> hit(B.num_objects(), false);
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    ObjId fa = F.on_objects[a];
    for (ObjId b = 0; b < B.num_objects(); ++b) {
      if (hit[b]) continue;
      for (MorId u : B.hom(fa, b)) {
        if (inverse_of(B, u)) {
          hit[b] = true;
          break;
        }
      }
    }
  }
  for (ObjId b = 0; b < B.num_objects(); ++b) {
    if (!hit[b]) return {false, {{"reason", "not essentially surjective"}, {"object", B.object_name(b)}}};
  }
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    for (ObjId a2 = 0; a2 < A.num_objects(); ++a2) {
      auto dom = A.hom(a, a2);
      auto cod = B.hom(F.on_objects[a], F.on_objects[a2]);
      std::vector<bool> seen(cod.size(), false);
      for (MorId f : dom) {
        std::uint32_t k = B.hom_position(F.on_morphisms[f]);
        if (seen[k]) {
          return {false, {{"reason", "not faithful"}, {"hom", {A.object_name(a), A.object_name(a2)}}}};
        }
        seen[k] = true;
      }
      if (dom.size() != cod.size()) {
        return {false, {{"reason", "not full"}, {"hom", {A.object_name(a), A.object_name(a2)}}}};
      }
    }
  }
  return {true, {}};
}

bool is_injective_on_objects(const Functor& F) {
  std::vector<ObjId> v = F.on_objects;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_isomorphism(const FinCategory& A, const FinCategory& B, const Functor& F) {
  if (A.num_objects() != B.num_objects() || A.num_morphisms() != B.num_morphisms()) return false;
  if (!is_functor(A, B, F) || !is_injective_on_objects(F)) return false;
  std::vector<MorId> v = F.on_morphisms;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

FinCategory empty_category() { return CategoryBuilder().build(); }

FinCategory terminal_category() { return discrete_category(1); }

FinCategory discrete_category(std::size_t n) {
  CategoryBuilder b;
  for (std::size_t k = 0; k < n; ++k) b.add_identity(b.add_object());
  b.fill_compose([](MorId g, MorId) { return g; });
  return b.build();
}

FinCategory indiscrete_category(std::size_t n) {
  CategoryBuilder b;
  for (std::size_t k = 0; k < n; ++k) b.add_object();
  // Morphism x→y gets id x*n+y.
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      MorId f = b.add_morphism(x, y, x == y ? "id_" + std::to_string(x) : std::to_string(x) + ">" + std::to_string(y));
      if (x == y) b.set_identity(x, f);
    }
  }
  b.fill_compose([&b, n](MorId g, MorId f) { return MorId(b.src(f) * n + b.tgt(g)); });
  return b.build();
}

FinCategory walking_arrow() {
  CategoryBuilder b;
  ObjId x = b.add_object("0"), y = b.add_object("1");
  MorId i0 = b.add_identity(x), i1 = b.add_identity(y);
  MorId a = b.add_morphism(x, y, "a");
  b.set_compose(i0, i0, i0);
  b.set_compose(i1, i1, i1);
  b.set_compose(a, i0, a);
  b.set_compose(i1, a, a);
  return b.build();
}

CoproductResult coproduct(const FinCategory& A, const FinCategory& B) {
  CategoryBuilder b;
  const auto na = ObjId(A.num_objects());
  const auto ma = MorId(A.num_morphisms());
  for (ObjId x = 0; x < A.num_objects(); ++x) b.add_object("L" + A.object_name(x));
  for (ObjId x = 0; x < B.num_objects(); ++x) b.add_object("R" + B.object_name(x));
  for (MorId f = 0; f < A.num_morphisms(); ++f) b.add_morphism(A.src(f), A.tgt(f), "L" + A.morphism_name(f));
  for (MorId f = 0; f < B.num_morphisms(); ++f) {
    b.add_morphism(na + B.src(f), na + B.tgt(f), "R" + B.morphism_name(f));
  }
  for (ObjId x = 0; x < A.num_objects(); ++x) b.set_identity(x, A.identity(x));
  for (ObjId x = 0; x < B.num_objects(); ++x) b.set_identity(na + x, ma + B.identity(x));
  b.fill_compose([&](MorId g, MorId f) {
    return f < ma ? A.compose(g, f) : ma + B.compose(g - ma, f - ma);
  });
  CoproductResult r{b.build(), {}, {}};
  for (ObjId x = 0; x < A.num_objects(); ++x) r.left.on_objects.push_back(x);
  for (MorId f = 0; f < A.num_morphisms(); ++f) r.left.on_morphisms.push_back(f);
  for (ObjId x = 0; x < B.num_objects(); ++x) r.right.on_objects.push_back(na + x);
  for (MorId f = 0; f < B.num_morphisms(); ++f) r.right.on_morphisms.push_back(ma + f);
  return r;
}

Functor constant_functor(const FinCategory& A, const FinCategory& B, ObjId b) {
  Functor F;
  F.on_objects.assign(A.num_objects(), b);
  F.on_morphisms.assign(A.num_morphisms(), B.identity(b));
  return F;
}

}  // namespace mstar
