#include "mstar/linear.hpp"

#include "mstar/error.hpp"
#include "mstar/linalg.hpp"

namespace mstar {

using nlohmann::json;

namespace {

std::string marked_key(const LinMor& m) {
  return std::to_string(m.src) + ":" + std::to_string(m.tgt) + ":" + key_of(m.v);
}

}  // namespace

Vec LinearStarCategory::compose(ObjId a, ObjId b, ObjId c, const Vec& g, const Vec& f) const {
  Vec r(dim(a, c));
  const std::size_t df = dim(a, b);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    for (std::size_t j = 0; j < df; ++j) {
      if (f[j].is_zero()) continue;
      axpy(r, g[i] * f[j], comp_[idx3(a, b, c)][i * df + j]);
    }
  }
  return r;
}

LinMor LinearStarCategory::compose(const LinMor& g, const LinMor& f) const {
  if (f.tgt != g.src) throw Error(ErrorKind::invalid_argument, "linear morphisms are not composable");
  return {f.src, g.tgt, compose(f.src, f.tgt, g.tgt, g.v, f.v)};
}

Vec LinearStarCategory::star(ObjId a, ObjId b, const Vec& f) const {
  Vec r(dim(b, a));
  for (std::size_t k = 0; k < f.size(); ++k) axpy(r, f[k].conj(), star_[idx(a, b)][k]);
  return r;
}

bool LinearStarCategory::is_unitary(const LinMor& u) const {
  LinMor us = star(u);
  return compose(us, u).v == identity(u.src) && compose(u, us).v == identity(u.tgt);
}

std::optional<std::size_t> LinearStarCategory::marked_index(const LinMor& u) const {
  auto it = marked_lookup_.find(marked_key(u));
  if (it == marked_lookup_.end()) return std::nullopt;
  return it->second;
}

bool LinearStarCategory::is_marked_generated() const {
  std::vector<std::vector<Vec>> spans(num_objects() * num_objects());
  for (const auto& m : marked_) spans[idx(m.src, m.tgt)].push_back(m.v);
  for (ObjId a = 0; a < num_objects(); ++a) {
    for (ObjId b = 0; b < num_objects(); ++b) {
      if (rank(spans[idx(a, b)]) != dim(a, b)) return false;
    }
  }
  return true;
}

ObjId LinearBuilder::add_object(std::string name) {
  if (tables_for_ != 0) throw Error(ErrorKind::invalid_argument, "objects must be added before hom data");
  if (name.empty()) name = std::to_string(names_.size());
  names_.push_back(std::move(name));
  return ObjId(names_.size() - 1);
}

void LinearBuilder::ensure_tables() {
  const std::size_t n = names_.size();
  if (tables_for_ == n && n != 0) return;
  tables_for_ = n;
  bases_.assign(n * n, {});
  identity_.assign(n, {});
  comp_.assign(n * n * n, {});
  star_.assign(n * n, {});
}

std::size_t LinearBuilder::dim(ObjId a, ObjId b) const {
  if (tables_for_ == 0) return 0;
  return bases_.at(std::size_t(a) * names_.size() + b).size();
}

void LinearBuilder::set_basis(ObjId a, ObjId b, std::vector<std::string> names) {
  ensure_tables();
  const std::size_t n = names_.size();
  bases_.at(std::size_t(a) * n + b) = std::move(names);
}

void LinearBuilder::set_identity(ObjId a, Vec v) {
  ensure_tables();
  identity_.at(a) = std::move(v);
}

void LinearBuilder::set_basis_product(ObjId a, ObjId b, ObjId c, std::size_t g, std::size_t f, Vec v) {
  ensure_tables();
  const std::size_t n = names_.size();
  auto& block = comp_.at((std::size_t(a) * n + b) * n + c);
  const std::size_t rows = dim(b, c), cols = dim(a, b);
  if (g >= rows || f >= cols) throw Error(ErrorKind::inconsistent_linear, "basis product index out of range");
  if (block.size() != rows * cols) block.assign(rows * cols, Vec(dim(a, c)));
  block[g * cols + f] = std::move(v);
}

void LinearBuilder::set_basis_star(ObjId a, ObjId b, std::size_t k, Vec v) {
  ensure_tables();
  const std::size_t n = names_.size();
  auto& col = star_.at(std::size_t(a) * n + b);
  if (k >= dim(a, b)) throw Error(ErrorKind::invalid_star, "star index out of range");
  if (col.size() != dim(a, b)) col.assign(dim(a, b), Vec());
  col[k] = std::move(v);
}

void LinearBuilder::add_marked(LinMor m) { marked_.push_back(std::move(m)); }

LinearStarCategory LinearBuilder::build() const {
  const std::size_t n = names_.size();
  LinearStarCategory c;
  c.names_ = names_;
  if (n == 0) return c;
  if (tables_for_ != n) {
    c.bases_.assign(n * n, {});
    c.identity_.assign(n, {});
    c.comp_.assign(n * n * n, {});
    c.star_.assign(n * n, {});
  } else {
    c.bases_ = bases_;
    c.identity_ = identity_;
    c.comp_ = comp_;
    c.star_ = star_;
  }
  auto oname = [&](ObjId a) { return names_[a]; };

  for (ObjId a = 0; a < n; ++a) {
    if (c.identity_[a].size() != c.dim(a, a)) {
      throw Error(ErrorKind::inconsistent_linear, "identity has the wrong length", {{"object", oname(a)}});
    }
  }
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      for (ObjId d = 0; d < n; ++d) {
        auto& block = c.comp_[c.idx3(a, b, d)];
        const std::size_t want = c.dim(b, d) * c.dim(a, b);
        if (block.size() != want) block.assign(want, Vec(c.dim(a, d)));
        for (auto& v : block) {
          if (v.empty()) v.assign(c.dim(a, d), Gaussian());
          if (v.size() != c.dim(a, d)) {
            throw Error(ErrorKind::inconsistent_linear, "product has the wrong length",
                        {{"objects", {oname(a), oname(b), oname(d)}}});
          }
        }
      }
      auto& col = c.star_[c.idx(a, b)];
      if (col.size() != c.dim(a, b)) {
        throw Error(ErrorKind::invalid_star, "star missing on a hom", {{"hom", {oname(a), oname(b)}}});
      }
      for (std::size_t k = 0; k < col.size(); ++k) {
        if (col[k].size() != c.dim(b, a)) {
          throw Error(ErrorKind::invalid_star, "star of a basis element has the wrong length",
                      {{"hom", {oname(a), oname(b)}}, {"basis", c.bases_[c.idx(a, b)][k]}});
        }
      }
    }
  }

  // Identity laws and star laws on basis elements.
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < c.dim(a, b); ++k) {
        Vec e = unit_vec(c.dim(a, b), k);
        if (c.compose(a, a, b, e, c.identity_[a]) != e || c.compose(a, b, b, c.identity_[b], e) != e) {
          throw Error(ErrorKind::inconsistent_linear, "identity law fails",
                      {{"hom", {oname(a), oname(b)}}, {"basis", c.bases_[c.idx(a, b)][k]}});
        }
        if (c.star(b, a, c.star(a, b, e)) != e) {
          throw Error(ErrorKind::invalid_star, "star is not an involution",
                      {{"hom", {oname(a), oname(b)}}, {"basis", c.bases_[c.idx(a, b)][k]}});
        }
      }
    }
    if (c.star(a, a, c.identity_[a]) != c.identity_[a]) {
      throw Error(ErrorKind::invalid_star, "star moves an identity", {{"object", oname(a)}});
    }
  }

  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      for (ObjId d = 0; d < n; ++d) {
        for (std::size_t f = 0; f < c.dim(a, b); ++f) {
          Vec ef = unit_vec(c.dim(a, b), f);
          for (std::size_t g = 0; g < c.dim(b, d); ++g) {
            Vec eg = unit_vec(c.dim(b, d), g);
            Vec gf = c.compose(a, b, d, eg, ef);
            if (c.star(a, d, gf) != c.compose(d, b, a, c.star(a, b, ef), c.star(b, d, eg))) {
              throw Error(ErrorKind::invalid_star, "star is not contravariant",
                          {{"objects", {oname(a), oname(b), oname(d)}}});
            }
            for (ObjId e = 0; e < n; ++e) {
              for (std::size_t h = 0; h < c.dim(d, e); ++h) {
                Vec eh = unit_vec(c.dim(d, e), h);
                if (c.compose(a, d, e, eh, gf) != c.compose(a, b, e, c.compose(b, d, e, eh, eg), ef)) {
                  throw Error(ErrorKind::non_associative, "associativity fails on basis elements",
                              {{"objects", {oname(a), oname(b), oname(d), oname(e)}}});
                }
              }
            }
          }
        }
      }
    }
  }

  for (const LinMor& m : marked_) {
    if (m.src >= n || m.tgt >= n || m.v.size() != c.dim(m.src, m.tgt)) {
      throw Error(ErrorKind::invalid_marking, "marked element has the wrong shape");
    }
    if (c.marked_lookup_.emplace(marked_key(m), c.marked_.size()).second) c.marked_.push_back(m);
  }
  for (ObjId a = 0; a < n; ++a) {
    if (!c.is_marked(c.identity_mor(a))) {
      throw Error(ErrorKind::invalid_marking, "identity is not marked", {{"object", oname(a)}});
    }
  }
  for (const LinMor& m : c.marked_) {
    if (!c.is_unitary(m)) {
      throw Error(ErrorKind::invalid_marking, "marked element is not unitary",
                  {{"hom", {oname(m.src), oname(m.tgt)}}, {"element", to_string(m.v)}});
    }
    if (!c.is_marked(c.star(m))) {
      throw Error(ErrorKind::invalid_marking, "marking not closed under star", {{"element", to_string(m.v)}});
    }
  }
  for (const LinMor& f : c.marked_) {
    for (const LinMor& g : c.marked_) {
      if (g.src == f.tgt && !c.is_marked(c.compose(g, f))) {
        throw Error(ErrorKind::invalid_marking, "marking not closed under composition",
                    {{"g", to_string(g.v)}, {"f", to_string(f.v)}});
      }
    }
  }
  return c;
}

Vec SubcategoryResult::coordinates(ObjId a, ObjId b, const Vec& ambient) const {
  auto c = solve_in_span(basis[std::size_t(a) * n + b], ambient);
  if (!c) throw Error(ErrorKind::inconsistent_linear, "vector outside the subcategory hom");
  return *c;
}

Vec SubcategoryResult::ambient(ObjId a, ObjId b, const Vec& coords) const {
  const auto& B = basis[std::size_t(a) * n + b];
  if (B.empty()) return {};
  Vec r(B.front().size());
  for (std::size_t k = 0; k < coords.size(); ++k) axpy(r, coords[k], B[k]);
  return r;
}

SubcategoryResult build_linear_subcategory(const AmbientStructure& s) {
  const std::size_t n = s.num_objects;
  SubcategoryResult r;
  r.n = n;
  r.basis.resize(n * n);
  LinearBuilder b;
  for (ObjId a = 0; a < n; ++a) b.add_object(a < s.object_names.size() ? s.object_names[a] : std::string());
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId c = 0; c < n; ++c) {
      std::vector<Vec> span = s.basis(a, c);
      std::vector<Vec> chosen;
      for (auto k : independent_subset(span)) chosen.push_back(span[k]);
      std::vector<std::string> names;
      for (std::size_t k = 0; k < chosen.size(); ++k) names.push_back("b" + std::to_string(k));
      r.basis[std::size_t(a) * n + c] = std::move(chosen);
      if (!names.empty()) b.set_basis(a, c, std::move(names));
    }
  }
  for (ObjId a = 0; a < n; ++a) {
    if (b.dim(a, a) > 0) b.set_identity(a, r.coordinates(a, a, s.identity(a)));
  }
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId c = 0; c < n; ++c) {
      const auto& Bac = r.basis[std::size_t(a) * n + c];
      for (std::size_t k = 0; k < Bac.size(); ++k) b.set_basis_star(a, c, k, r.coordinates(c, a, s.star(a, c, Bac[k])));
      for (ObjId d = 0; d < n; ++d) {
        const auto& Bcd = r.basis[std::size_t(c) * n + d];
        for (std::size_t g = 0; g < Bcd.size(); ++g) {
          for (std::size_t f = 0; f < Bac.size(); ++f) {
            Vec v = r.coordinates(a, d, s.compose(a, c, d, Bcd[g], Bac[f]));
            if (!is_zero(v)) b.set_basis_product(a, c, d, g, f, std::move(v));
          }
        }
      }
    }
  }
  for (const LinMor& m : s.marked) b.add_marked({m.src, m.tgt, r.coordinates(m.src, m.tgt, m.v)});
  r.category = b.build();
  return r;
}

LinearStarCategory linearize(const StarCategory& A) {
  const FinCategory& c = A.base();
  const std::size_t n = c.num_objects();
  LinearBuilder b;
  for (ObjId a = 0; a < n; ++a) b.add_object(c.object_name(a));
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId d = 0; d < n; ++d) {
      std::vector<std::string> names;
      for (MorId f : c.hom(a, d)) names.push_back(c.morphism_name(f));
      if (!names.empty()) b.set_basis(a, d, std::move(names));
    }
  }
  auto basis_vec = [&](MorId f) { return unit_vec(c.hom(c.src(f), c.tgt(f)).size(), c.hom_position(f)); };
  for (ObjId a = 0; a < n; ++a) b.set_identity(a, basis_vec(c.identity(a)));
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    b.set_basis_star(c.src(f), c.tgt(f), c.hom_position(f), basis_vec(A.star(f)));
    for (MorId g : c.out(c.tgt(f))) {
      b.set_basis_product(c.src(f), c.tgt(f), c.tgt(g), c.hom_position(g), c.hom_position(f),
                          basis_vec(c.compose(g, f)));
    }
    if (A.is_marked(f)) b.add_marked({c.src(f), c.tgt(f), basis_vec(f)});
  }
  return b.build();
}

LinearStarCategory linear_point() { return linearize(point(Flavor::marked)); }

LinearFunctor linearize(const StarCategory& A, const StarCategory& B, const Functor& F) {
  const FinCategory &a = A.base(), &b = B.base();
  const std::size_t n = a.num_objects();
  LinearFunctor out;
  out.on_objects = F.on_objects;
  out.on_basis.resize(n * n);
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      const std::size_t d = b.hom(F.on_objects[x], F.on_objects[y]).size();
      for (MorId f : a.hom(x, y)) out.on_basis[x * n + y].push_back(unit_vec(d, b.hom_position(F.on_morphisms[f])));
    }
  }
  return out;
}

bool is_underlying_functor(const StarCategory& A, const LinearStarCategory& B, const UnderlyingFunctor& Phi) {
  const FinCategory& c = A.base();
  if (Phi.on_objects.size() != c.num_objects() || Phi.on_morphisms.size() != c.num_morphisms()) return false;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    const LinMor& m = Phi.on_morphisms[f];
    if (m.src != Phi.on_objects[c.src(f)] || m.tgt != Phi.on_objects[c.tgt(f)]) return false;
    if (m.v.size() != B.dim(m.src, m.tgt)) return false;
    if (B.star(m) != Phi.on_morphisms[A.star(f)]) return false;
    if (A.is_marked(f) && !B.is_marked(m)) return false;
    for (MorId g : c.out(c.tgt(f))) {
      if (B.compose(Phi.on_morphisms[g], m) != Phi.on_morphisms[c.compose(g, f)]) return false;
    }
  }
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    if (Phi.on_morphisms[c.identity(a)] != B.identity_mor(Phi.on_objects[a])) return false;
  }
  return true;
}

LinearFunctor linearize_transport(const StarCategory& A, const LinearStarCategory&, const UnderlyingFunctor& Phi) {
  const FinCategory& c = A.base();
  const std::size_t n = c.num_objects();
  LinearFunctor Psi;
  Psi.on_objects = Phi.on_objects;
  Psi.on_basis.resize(n * n);
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId d = 0; d < n; ++d) {
      for (MorId f : c.hom(a, d)) Psi.on_basis[a * n + d].push_back(Phi.on_morphisms[f].v);
    }
  }
  return Psi;
}

UnderlyingFunctor linearize_transport_inverse(const StarCategory& A, const LinearStarCategory&,
                                              const LinearFunctor& Psi) {
  const FinCategory& c = A.base();
  const std::size_t n = c.num_objects();
  UnderlyingFunctor Phi;
  Phi.on_objects = Psi.on_objects;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    ObjId a = c.src(f), d = c.tgt(f);
    Phi.on_morphisms.push_back({Psi.on_objects[a], Psi.on_objects[d], Psi.on_basis[a * n + d][c.hom_position(f)]});
  }
  return Phi;
}

std::vector<UnderlyingFunctor> enumerate_underlying_functors(const StarCategory& A, const LinearStarCategory& B,
                                                             std::uint64_t bound) {
  if (A.marked_list().size() != A.num_morphisms()) {
    throw Error(ErrorKind::not_marked_generated, "domain has unmarked morphisms; the functor set is not finite");
  }
  StarCategory Bg = marked_groupoid(B);
  std::vector<UnderlyingFunctor> out;
  for (const Functor& F : enumerate_star_functors(A, Bg, bound)) {
    UnderlyingFunctor Phi;
    Phi.on_objects = F.on_objects;
    for (MorId m : F.on_morphisms) Phi.on_morphisms.push_back(B.marked()[m]);
    out.push_back(std::move(Phi));
  }
  return out;
}

}  // namespace mstar
