#include "mstar/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>

#include "mstar/error.hpp"
#include "mstar/gtensor.hpp"
#include "mstar/io.hpp"

namespace mstar {

namespace fs = std::filesystem;

const StarCategory* Corpus::find_category(const std::string& name) const {
  for (const auto& c : categories) {
    if (c.name == name) return &c.category;
  }
  return nullptr;
}

bool Corpus::empty() const {
  return categories.empty() && morphisms.empty() && linear.empty() && triples.empty() && linear_triples.empty() &&
         actions.empty() && linear_actions.empty() && spaces.empty() && simplicial.empty();
}

FinGroup klein_group() {
  std::vector<std::vector<GroupElem>> t(4, std::vector<GroupElem>(4));
  for (GroupElem g = 0; g < 4; ++g) {
    for (GroupElem h = 0; h < 4; ++h) t[g][h] = g ^ h;
  }
  return FinGroup::from_table(std::move(t), {"e", "a", "b", "ab"});
}

StarCategory partial_isometry(Flavor flavor) {
  CategoryBuilder b;
  ObjId x = b.add_object("0"), y = b.add_object("1");
  MorId i0 = b.add_identity(x, "id0"), i1 = b.add_identity(y, "id1");
  MorId v = b.add_morphism(x, y, "v");
  MorId vs = b.add_morphism(y, x, "v*");
  MorId p = b.add_morphism(y, y, "p");
  b.fill_compose([=](MorId g, MorId f) -> MorId {
    if (g == i0 || g == i1) return f;
    if (f == i0 || f == i1) return g;
    if (g == vs && f == v) return i0;
    if (g == v && f == vs) return p;
    if (g == p && f == v) return v;
    if (g == vs && f == p) return vs;
    return p;  // p∘p
  });
  std::vector<MorId> star{i0, i1, vs, v, p};
  if (flavor == Flavor::unmarked) return StarCategory::make_unmarked(b.build(), star);
  return StarCategory::make_marked(b.build(), star, {i0, i1});
}

StarCategory projection_monoid(Flavor flavor) {
  CategoryBuilder b;
  ObjId x = b.add_object("*");
  MorId i = b.add_identity(x, "id");
  b.add_morphism(x, x, "p");
  b.fill_compose([=](MorId g, MorId f) -> MorId { return g == i ? f : (f == i ? g : 1); });
  if (flavor == Flavor::unmarked) return StarCategory::make_unmarked(b.build(), {0, 1});
  return StarCategory::make_marked(b.build(), {0, 1}, {i});
}

SimplicialSet boundary_triangle() {
  SimplicialSet d2 = standard_simplex(2);
  std::vector<Triangle> tri;
  for (const Triangle& t : d2.triangles()) {
    bool degenerate = d2.edges()[t.d0].degenerate || d2.edges()[t.d1].degenerate || d2.edges()[t.d2].degenerate;
    if (degenerate) tri.push_back(t);
  }
  return SimplicialSet::make(d2.vertices(), d2.edges(), std::move(tri));
}

namespace {

Functor power(const FinCategory& c, const Functor& f, std::size_t k) {
  Functor out = identity_functor(c);
  for (std::size_t i = 0; i < k; ++i) out = compose(f, out);
  return out;
}

GAction cyclic_action(std::size_t n, const StarCategory& A, const Functor& generator) {
  GAction a{cyclic_group(n), A, {}};
  for (std::size_t k = 0; k < n; ++k) a.act.push_back(power(A.base(), generator, k));
  validate_action(a);
  return a;
}

LinearGAction linearize_action(const GAction& a) {
  LinearGAction out{a.group, linearize(a.base), {}};
  for (const Functor& F : a.act) out.act.push_back(linearize(a.base, a.base, F));
  validate_action(out);
  return out;
}

BornCoarseSpace two_points(bool coarse, bool acted) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gens;
  if (coarse) gens.emplace_back(0, 1);
  if (!acted) return validate_space({"x", "y"}, gens, std::nullopt);
  return validate_space({"e", "g"}, gens, std::nullopt, cyclic_group(2), {{0, 1}, {1, 0}});
}

}  // namespace

Corpus default_corpus() {
  Corpus c;
  auto add = [&](std::string name, StarCategory A) { c.categories.push_back({std::move(name), std::move(A)}); };
  const FinGroup z2 = cyclic_group(2), z3 = cyclic_group(3), v4 = klein_group();

  add("pt", point(Flavor::marked));
  add("pt-u", point(Flavor::unmarked));
  add("one", classifier(ClassifierKind::unitary));
  add("one+", classifier(ClassifierKind::marked_unitary));
  add("mi-one", mi(classifier(ClassifierKind::marked_unitary)));
  add("bz2", delooping(z2, Flavor::marked));
  add("bz2-u", delooping(z2, Flavor::unmarked));
  add("mi-bz2", mi(delooping(z2, Flavor::marked)));
  add("bz3", delooping(z3, Flavor::marked));
  add("disc2", star_groupoid(discrete_category(2), Flavor::marked));
  add("indisc3", star_groupoid(indiscrete_category(3), Flavor::marked));
  add("partial-iso", partial_isometry(Flavor::marked));
  add("partial-iso-u", partial_isometry(Flavor::unmarked));
  add("proj", projection_monoid(Flavor::marked));
  add("bz2+pt", star_coproduct(delooping(z2), point()).category);
  add("one+-sharp-bz2", sharp(classifier(ClassifierKind::marked_unitary), delooping(z2).base()).category);
  add("klein-half", with_marking(delooping(v4, Flavor::marked), {0, 1}));

  // Morphisms: identities, maps to and from pt, and all maps between a few
  // chosen pairs (at most four each).
  auto cat = [&](const std::string& n) -> const StarCategory& { return *c.find_category(n); };
  auto add_all = [&](const std::string& s, const std::string& t, std::size_t cap) {
    auto fs_ = enumerate_star_functors(cat(s), cat(t));
    for (std::size_t k = 0; k < fs_.size() && k < cap; ++k) {
      std::string name = s + "-to-" + t;
      if (fs_.size() > 1) name += "-" + std::to_string(k);
      c.morphisms.push_back({name, cat(s), cat(t), fs_[k]});
    }
  };
  for (const auto& X : std::vector<NamedCategory>(c.categories)) {
    c.morphisms.push_back({"id-" + X.name, X.category, X.category, identity_functor(X.category.base())});
  }
  for (const auto& X : std::vector<NamedCategory>(c.categories)) {
    const std::string p = X.category.flavor() == Flavor::marked ? "pt" : "pt-u";
    if (X.name != p) add_all(X.name, p, 1);
  }
  for (const auto& X : std::vector<NamedCategory>(c.categories)) {
    const std::string p = X.category.flavor() == Flavor::marked ? "pt" : "pt-u";
    if (X.name != p) add_all(p, X.name, 1);
  }
  add_all("mi-one", "one+", 4);
  add_all("one+", "bz2", 4);
  add_all("disc2", "indisc3", 4);
  add_all("one+-sharp-bz2", "bz2", 4);
  add_all("bz2", "klein-half", 4);
  add_all("klein-half", "bz2", 4);
  add_all("bz2+pt", "bz2", 4);
  add_all("partial-iso", "proj", 4);
  add_all("proj", "partial-iso", 4);
  add_all("mi-bz2", "bz2", 4);
  add_all("bz2", "bz3", 4);
  add_all("partial-iso-u", "one", 4);
  add_all("bz2-u", "one", 4);
  add_all("one", "bz2-u", 4);

  // Linear categories.
  c.linear.push_back({"lin-pt", linear_point()});
  c.linear.push_back({"lin-bz2", linearize(cat("bz2"))});
  c.linear.push_back({"lin-one+", linearize(cat("one+"))});
  c.linear.push_back({"lin-bz3", linearize(cat("bz3"))});
  c.linear.push_back({"lin-mi-one", linearize(cat("mi-one"))});

  // Exponential triples.
  auto triple = [&](const std::string& C, const std::string& G, const std::string& A) {
    c.triples.push_back({C + "-sharp-" + G + "-to-" + A, cat(C), cat(G).base(), cat(A)});
  };
  triple("pt", "one+", "bz2");
  triple("pt", "bz2", "indisc3");
  triple("one+", "bz2", "bz2");
  triple("mi-one", "one+", "indisc3");
  triple("bz2", "disc2", "bz3");
  triple("disc2", "one+", "one+");
  triple("partial-iso", "bz2", "proj");
  triple("mi-bz2", "one+", "klein-half");
  triple("pt-u", "one", "bz2-u");
  triple("one", "bz2", "partial-iso-u");
  triple("bz2-u", "one", "one");
  triple("proj", "disc2", "partial-iso");
  auto linear_triple = [&](std::size_t C, const std::string& G, std::size_t A) {
    c.linear_triples.push_back(
        {c.linear[C].name + "-tensor-" + G + "-to-" + c.linear[A].name, c.linear[C].category, cat(G).base(), c.linear[A].category});
  };
  linear_triple(0, "one+", 1);
  linear_triple(0, "bz2", 2);
  linear_triple(1, "bz2", 1);
  linear_triple(2, "one+", 4);
  linear_triple(0, "disc2", 3);
  linear_triple(1, "one+", 2);
  linear_triple(2, "bz2", 1);
  linear_triple(3, "bz2", 1);
  linear_triple(0, "indisc3", 2);
  linear_triple(1, "disc2", 0);
  linear_triple(2, "one+", 2);

  // Actions.
  const StarCategory& one_plus = cat("one+");
  const Functor swap_one{{1, 0}, {1, 0, 3, 2}};
  c.actions.push_back({"z2-trivial-pt", trivial_action(z2, cat("pt"))});
  c.actions.push_back({"z2-swap-disc2", cyclic_action(2, cat("disc2"), Functor{{1, 0}, {1, 0}})});
  c.actions.push_back({"z2-trivial-bz2", trivial_action(z2, cat("bz2"))});
  c.actions.push_back({"z2-swap-one+", cyclic_action(2, one_plus, swap_one)});
  {
    Functor rot;
    for (ObjId x = 0; x < 3; ++x) rot.on_objects.push_back((x + 1) % 3);
    for (MorId m = 0; m < 9; ++m) rot.on_morphisms.push_back(((m / 3 + 1) % 3) * 3 + (m % 3 + 1) % 3);
    c.actions.push_back({"z3-rotate-indisc3", cyclic_action(3, cat("indisc3"), rot)});
  }
  c.actions.push_back({"z3-trivial-bz3", trivial_action(z3, cat("bz3"))});
  c.actions.push_back({"z2-shear-klein-half", cyclic_action(2, cat("klein-half"), Functor{{0}, {0, 1, 3, 2}})});
  c.actions.push_back({"z2-swap-one", cyclic_action(2, cat("one"), swap_one)});
  c.actions.push_back({"z2-trivial-bz2-u", trivial_action(z2, cat("bz2-u"))});
  c.linear_actions.push_back({"lin-z2-trivial-pt", trivial_action(z2, linear_point())});
  c.linear_actions.push_back({"lin-z2-swap-one+", linearize_action(cyclic_action(2, one_plus, swap_one))});
  c.linear_actions.push_back({"lin-z3-trivial-pt", trivial_action(z3, linear_point())});
  c.linear_actions.push_back({"lin-z2-trivial-bz2", trivial_action(z2, c.linear[1].category)});

  // Spaces.
  c.spaces.push_back({"z2", two_points(false, true)});
  c.spaces.push_back({"z2-bounded", two_points(true, true)});
  c.spaces.push_back({"pt", validate_space({"x"}, {}, std::nullopt)});
  c.spaces.push_back({"two-discrete", two_points(false, false)});
  c.spaces.push_back({"two-coarse", two_points(true, false)});

  // Simplicial sets.
  c.simplicial.push_back({"delta0", standard_simplex(0)});
  c.simplicial.push_back({"delta1", standard_simplex(1)});
  c.simplicial.push_back({"delta2", standard_simplex(2)});
  c.simplicial.push_back({"boundary-delta2", boundary_triangle()});
  c.simplicial.push_back({"nerve-bz2", nerve(delooping(z2).base())});
  c.simplicial.push_back({"nerve-one+", nerve(one_plus.base())});
  return c;
}

// ---- Triples ----

json to_json(const ExponentialTriple& t) { return {{"C", to_json(t.C)}, {"groupoid", to_json(t.groupoid)}, {"A", to_json(t.A)}}; }

json to_json(const LinearExponentialTriple& t) {
  return {{"C", to_json(t.C)}, {"groupoid", to_json(t.groupoid)}, {"A", to_json(t.A)}};
}

bool is_linear_triple(const json& j) { return j.contains("C") && j["C"].is_object() && j["C"].contains("scalars"); }

namespace {
FinCategory groupoid_from_json(const json& j) {
  FinCategory g = category_from_json(j);
  groupoid_inverses(g);  // NotAGroupoid
  return g;
}
}  // namespace

ExponentialTriple triple_from_json(const json& j) {
  ExponentialTriple t{"", star_category_from_json(j.at("C")), groupoid_from_json(j.at("groupoid")),
                      star_category_from_json(j.at("A"))};
  if (t.C.flavor() != t.A.flavor()) {
    throw Error(ErrorKind::incompatible_structures, "C and A must have the same flavor");
  }
  return t;
}

LinearExponentialTriple linear_triple_from_json(const json& j) {
  return {"", linear_from_json(j.at("C")), groupoid_from_json(j.at("groupoid")), linear_from_json(j.at("A"))};
}

// ---- Directory layout ----

namespace {

std::string file_name(std::size_t index, const std::string& name) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu-", index);
  std::string safe;
  for (char ch : name) {
    const bool ok = std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_' || ch == '+' || ch == '.';
    safe += ok ? ch : '_';
  }
  return buf + safe + ".json";
}

void write_file(const fs::path& p, const json& j) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + p.string());
  out << dump(j);
}

template <class T, class F>
void write_dir(const fs::path& dir, const std::vector<T>& items, F&& to) {
  if (items.empty()) return;
  fs::create_directories(dir);
  for (std::size_t i = 0; i < items.size(); ++i) write_file(dir / file_name(i, items[i].name), to(items[i]));
}

/// (name, document) for every .json file of the directory, in name order.
std::vector<std::pair<std::string, json>> read_dir(const fs::path& dir) {
  std::vector<std::pair<std::string, json>> out;
  if (!fs::is_directory(dir)) return out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::string stem = f.stem().string();
    std::size_t k = 0;
    while (k < stem.size() && std::isdigit(static_cast<unsigned char>(stem[k]))) ++k;
    if (k > 0 && k < stem.size() && stem[k] == '-') stem = stem.substr(k + 1);
    out.emplace_back(stem, read_json_file(f));
  }
  return out;
}

}  // namespace

void export_corpus(const Corpus& c, const fs::path& dir) {
  fs::create_directories(dir);
  write_dir(dir / "categories", c.categories, [](const NamedCategory& x) { return to_json(x.category); });
  write_dir(dir / "morphisms", c.morphisms,
            [](const NamedMorphism& x) { return functor_to_json(x.source, x.target, x.map); });
  write_dir(dir / "linear", c.linear, [](const NamedLinear& x) { return to_json(x.category); });
  struct Doc {
    std::string name;
    json j;
  };
  std::vector<Doc> docs;
  for (const auto& t : c.triples) docs.push_back({t.name, to_json(t)});
  for (const auto& t : c.linear_triples) docs.push_back({t.name, to_json(t)});
  write_dir(dir / "triples", docs, [](const Doc& d) { return d.j; });
  docs.clear();
  for (const auto& a : c.actions) docs.push_back({a.name, to_json(a.action)});
  for (const auto& a : c.linear_actions) docs.push_back({a.name, to_json(a.action)});
  write_dir(dir / "actions", docs, [](const Doc& d) { return d.j; });
  write_dir(dir / "spaces", c.spaces, [](const NamedSpace& x) { return to_json(x.space); });
  write_dir(dir / "simplicial", c.simplicial, [](const NamedSimplicial& x) { return to_json(x.complex); });
}

Corpus load_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::invalid_argument, "not a directory: " + dir.string());
  Corpus c;
  // Errors name the file they come from.
  auto guard = [](const std::string& where, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.what(), e.witness());
    }
  };
  for (auto& [name, j] : read_dir(dir / "categories")) {
    guard("categories/" + name, [&] { c.categories.push_back({name, star_category_from_json(j)}); });
  }
  for (auto& [name, j] : read_dir(dir / "morphisms")) {
    guard("morphisms/" + name, [&] {
      FunctorDocument d = functor_from_json(j);
      c.morphisms.push_back({name, std::move(d.domain), std::move(d.codomain), std::move(d.map)});
    });
  }
  for (auto& [name, j] : read_dir(dir / "linear")) {
    guard("linear/" + name, [&] { c.linear.push_back({name, linear_from_json(j)}); });
  }
  for (auto& [name, j] : read_dir(dir / "triples")) {
    guard("triples/" + name, [&] {
      if (is_linear_triple(j)) {
        auto t = linear_triple_from_json(j);
        t.name = name;
        c.linear_triples.push_back(std::move(t));
      } else {
        auto t = triple_from_json(j);
        t.name = name;
        c.triples.push_back(std::move(t));
      }
    });
  }
  for (auto& [name, j] : read_dir(dir / "actions")) {
    guard("actions/" + name, [&] {
      if (is_linear_action(j)) {
        c.linear_actions.push_back({name, linear_action_from_json(j)});
      } else {
        c.actions.push_back({name, action_from_json(j)});
      }
    });
  }
  for (auto& [name, j] : read_dir(dir / "spaces")) {
    guard("spaces/" + name, [&] { c.spaces.push_back({name, space_from_json(j)}); });
  }
  for (auto& [name, j] : read_dir(dir / "simplicial")) {
    guard("simplicial/" + name, [&] { c.simplicial.push_back({name, simplicial_from_json(j)}); });
  }
  return c;
}

}  // namespace mstar
