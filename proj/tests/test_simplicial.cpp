#include <doctest.h>

#include "mstar/corpus.hpp"
#include "mstar/group.hpp"
#include "mstar/simplicial.hpp"
#include "support.hpp"

using namespace mstar;

namespace {

std::vector<NamedCategory> small_groupoids() {
  std::vector<NamedCategory> out;
  for (auto& c : default_corpus().categories) {
    if (is_groupoid(c.category.base()) && c.category.num_morphisms() <= 6) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("fundamental groupoids of simplices") {
  for (const auto& [name, H] : small_groupoids()) {
    CAPTURE(name);
    const FinCategory& h = H.base();
    CHECK(hom_into(fundamental_groupoid(standard_simplex(0)), h).size() == h.num_objects());
    CHECK(hom_into(fundamental_groupoid(standard_simplex(1)), h).size() == h.num_morphisms());
    std::size_t triangles = 0, boundary = 0;
    for (ObjId a = 0; a < h.num_objects(); ++a) {
      for (ObjId b = 0; b < h.num_objects(); ++b) {
        for (ObjId c = 0; c < h.num_objects(); ++c) {
          triangles += h.hom(a, b).size() * h.hom(b, c).size();
          boundary += h.hom(a, b).size() * h.hom(b, c).size() * h.hom(a, c).size();
        }
      }
    }
    CHECK(hom_into(fundamental_groupoid(standard_simplex(2)), h).size() == triangles);
    CHECK(hom_into(fundamental_groupoid(boundary_triangle()), h).size() == boundary);
  }
}

TEST_CASE("nerves: maps out of N(C) are functors out of C") {
  const auto corpus = default_corpus();
  for (const auto& C : corpus.categories) {
    if (C.category.num_morphisms() > 6) continue;
    for (const auto& H : small_groupoids()) {
      CAPTURE(C.name);
      CAPTURE(H.name);
      const auto maps = hom_into(fundamental_groupoid(nerve(C.category.base())), H.category.base());
      CHECK(maps.size() == oracle::count_functors(C.category.base(), H.category.base()));
    }
  }
  const FinCategory bz2 = delooping(cyclic_group(2)).base();
  CHECK(hom_into(fundamental_groupoid(nerve(bz2)), bz2).size() == 2);
  CHECK(oracle::error_kind([&] { hom_into(fundamental_groupoid(standard_simplex(1)), walking_arrow()); }) ==
        ErrorKind::not_a_groupoid);
}

TEST_CASE("simplicial sets validate faces") {
  CHECK(oracle::error_kind([] { SimplicialSet::make({"a"}, {{"e", 0, 3, false}}, {}); }) ==
        ErrorKind::invalid_argument);
  const SimplicialSet d2 = standard_simplex(2);
  CHECK(d2.vertices().size() == 3);
  for (const Triangle& t : d2.triangles()) {
    const auto& e = d2.edges();
    CHECK(e[t.d0].d0 == e[t.d1].d0);
    CHECK(e[t.d0].d1 == e[t.d2].d0);
    CHECK(e[t.d1].d1 == e[t.d2].d1);
  }
  const SimplicialSet N = nerve(indiscrete_category(2));
  CHECK(N.vertices().size() == 2);
  CHECK(N.edges().size() == 4);
  CHECK(N.triangles().size() == 8);
}

TEST_CASE("mapping spaces") {
  const StarCategory pt = point(), bz2 = delooping(cyclic_group(2)), one = classifier(ClassifierKind::marked_unitary);
  for (const StarCategory& A : {pt, bz2}) {
    for (const StarCategory& B : {pt, bz2, one}) {
      CHECK(check_mapping_space(A, B));
      CHECK(mapping_simplices(A, B, 0).size() == oracle::count_star_functors(A, B));
    }
  }
  // Map(pt, B)[1] are the marked morphisms of B.
  CHECK(mapping_simplices(pt, one, 1).size() == one.marked_list().size());
  CHECK(compose(codegeneracy(1, 0), coface(2, 0)) == identity_functor(indiscrete_category(2)));
}
