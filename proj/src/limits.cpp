#include "mstar/limits.hpp"

#include <map>

#include "mstar/error.hpp"

namespace mstar {

namespace {

// Non-identity index morphisms whose endpoints are both ≤ i and one of which is i.
std::vector<std::vector<MorId>> constraints_by_index(const FinCategory& I) {
  std::vector<std::vector<MorId>> by(I.num_objects());
  for (MorId phi = 0; phi < I.num_morphisms(); ++phi) {
    if (I.is_identity(phi)) continue;
    by[std::max(I.src(phi), I.tgt(phi))].push_back(phi);
  }
  return by;
}

}  // namespace

LimitResult finite_limit(const Diagram& d) {
  const FinCategory& I = d.index;
  const std::size_t k = I.num_objects();
  if (d.categories.size() != k || d.maps.size() != I.num_morphisms()) {
    throw Error(ErrorKind::invalid_argument, "diagram does not match its index category");
  }
  auto checks = constraints_by_index(I);
  LimitResult r;

  std::vector<ObjId> xs(k);
  auto objects = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      r.object_tuples.push_back(xs);
      return;
    }
    for (ObjId x = 0; x < d.categories[i].num_objects(); ++x) {
      xs[i] = x;
      bool ok = true;
      for (MorId phi : checks[i]) {
        if (d.maps[phi].on_objects[xs[I.src(phi)]] != xs[I.tgt(phi)]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
  };
  objects(objects, 0);

  CategoryBuilder b;
  for (std::size_t o = 0; o < r.object_tuples.size(); ++o) {
    std::string name = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) name += ",";
      name += d.categories[i].object_name(r.object_tuples[o][i]);
    }
    b.add_object(name + ")");
  }

  std::map<std::vector<MorId>, MorId> index_of;
  std::vector<MorId> fs(k);
  for (ObjId X = 0; X < r.object_tuples.size(); ++X) {
    for (ObjId Y = 0; Y < r.object_tuples.size(); ++Y) {
      const auto& xt = r.object_tuples[X];
      const auto& yt = r.object_tuples[Y];
      auto morphisms = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
          std::string name = "(";
          for (std::size_t j = 0; j < k; ++j) {
            if (j) name += ",";
            name += d.categories[j].morphism_name(fs[j]);
          }
          MorId id = b.add_morphism(X, Y, name + ")");
          index_of.emplace(fs, id);
          r.morphism_tuples.push_back(fs);
          return;
        }
        for (MorId f : d.categories[i].hom(xt[i], yt[i])) {
          fs[i] = f;
          bool ok = true;
          for (MorId phi : checks[i]) {
            if (d.maps[phi].on_morphisms[fs[I.src(phi)]] != fs[I.tgt(phi)]) {
              ok = false;
              break;
            }
          }
          if (ok) self(self, i + 1);
        }
      };
      morphisms(morphisms, 0);
    }
  }
  for (ObjId X = 0; X < r.object_tuples.size(); ++X) {
    std::vector<MorId> ids(k);
    for (std::size_t i = 0; i < k; ++i) ids[i] = d.categories[i].identity(r.object_tuples[X][i]);
    b.set_identity(X, index_of.at(ids));
  }
  b.fill_compose([&](MorId g, MorId f) {
    std::vector<MorId> gf(k);
    for (std::size_t i = 0; i < k; ++i) {
      gf[i] = d.categories[i].compose(r.morphism_tuples[g][i], r.morphism_tuples[f][i]);
    }
    return index_of.at(gf);
  });
  r.category = b.build();

  r.cone.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& t : r.object_tuples) r.cone[i].on_objects.push_back(t[i]);
    for (const auto& t : r.morphism_tuples) r.cone[i].on_morphisms.push_back(t[i]);
  }
  return r;
}

FinCategory cospan_shape() {
  CategoryBuilder b;
  for (int i = 0; i < 3; ++i) b.add_identity(b.add_object());
  MorId f = b.add_morphism(0, 2, "f");
  MorId g = b.add_morphism(1, 2, "g");
  b.fill_compose([&](MorId x, MorId y) {
    if (x == f || y == f) return f;
    if (x == g || y == g) return g;
    return x;
  });
  return b.build();
}

FinCategory parallel_pair_shape() {
  CategoryBuilder b;
  for (int i = 0; i < 2; ++i) b.add_identity(b.add_object());
  MorId F = b.add_morphism(0, 1, "F");
  MorId G = b.add_morphism(0, 1, "G");
  b.fill_compose([&](MorId x, MorId y) {
    if (x == F || y == F) return F;
    if (x == G || y == G) return G;
    return x;
  });
  return b.build();
}

LimitResult product(const FinCategory& A, const FinCategory& B) {
  return finite_limit({discrete_category(2), {A, B}, {identity_functor(A), identity_functor(B)}});
}

LimitResult pullback(const FinCategory& A, const FinCategory& B, const FinCategory& C, const Functor& f,
                     const Functor& g) {
  // Morphism ids of the cospan shape: id0, id1, id2, f, g.
  return finite_limit({cospan_shape(),
                       {A, B, C},
                       {identity_functor(A), identity_functor(B), identity_functor(C), f, g}});
}

LimitResult equalizer(const FinCategory& A, const FinCategory& B, const Functor& F, const Functor& G) {
  return finite_limit({parallel_pair_shape(), {A, B}, {identity_functor(A), identity_functor(B), F, G}});
}

}  // namespace mstar
