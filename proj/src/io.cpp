#include "mstar/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mstar/error.hpp"

namespace mstar {

namespace {

[[noreturn]] void parse_fail(const std::string& what, json witness = {}) {
  throw Error(ErrorKind::parse_error, what, std::move(witness));
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) parse_fail("expected an object around field '" + std::string(name) + "'");
  auto it = j.find(name);
  if (it == j.end()) parse_fail("missing field '" + std::string(name) + "'", {{"field", name}});
  return *it;
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) parse_fail(std::string("expected a string for ") + what, {{"field", what}});
  return j.get<std::string>();
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string("expected an array for ") + what, {{"field", what}});
  return j;
}

std::vector<std::string> uniquify(std::vector<std::string> names) {
  std::map<std::string, int> seen;
  for (const auto& n : names) ++seen[n];
  std::set<std::string> used;
  std::map<std::string, int> next;
  for (auto& n : names) {
    if (seen[n] == 1) {
      used.insert(n);
      continue;
    }
    std::string candidate;
    do {
      candidate = n + "~" + std::to_string(next[n]++);
    } while (seen.count(candidate) || used.count(candidate));
    used.insert(candidate);
    n = candidate;
  }
  return names;
}

template <class Lookup>
std::uint32_t lookup(const Lookup& index, const std::string& name, const char* what) {
  auto it = index.find(name);
  if (it == index.end()) parse_fail(std::string("unknown ") + what + " '" + name + "'", {{what, name}});
  return it->second;
}

std::map<std::string, std::uint32_t> index_of(const std::vector<std::string>& names, const char* what) {
  std::map<std::string, std::uint32_t> out;
  for (std::uint32_t k = 0; k < names.size(); ++k) {
    if (!out.emplace(names[k], k).second) parse_fail(std::string("duplicate ") + what + " '" + names[k] + "'");
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  std::vector<std::string> out;
  for (const auto& e : array(j, what)) out.push_back(str(e, what));
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

DocKind detect_kind(const json& j) {
  if (!j.is_object()) parse_fail("top level must be an object");
  if (j.contains("checks")) return DocKind::report;
  if (j.contains("C") && j.contains("groupoid") && j.contains("A")) return DocKind::triple;
  if (j.contains("scalars")) return DocKind::linear_category;
  if (j.contains("s0")) return DocKind::simplicial_set;
  if (j.contains("domain") && j.contains("codomain")) return DocKind::functor;
  if (j.contains("group") && j.contains("on_objects")) return DocKind::action;
  if (j.contains("points")) return DocKind::space;
  if (j.contains("elements") && j.contains("table")) return DocKind::group;
  if (j.contains("objects") && j.contains("morphisms")) {
    return j.contains("star") ? DocKind::star_category : DocKind::category;
  }
  parse_fail("cannot tell what the document describes");
}

std::string_view to_string(DocKind kind) {
  switch (kind) {
    case DocKind::category: return "category";
    case DocKind::star_category: return "star-category";
    case DocKind::linear_category: return "linear-category";
    case DocKind::simplicial_set: return "simplicial-set";
    case DocKind::functor: return "functor";
    case DocKind::action: return "action";
    case DocKind::space: return "space";
    case DocKind::group: return "group";
    case DocKind::report: return "report";
    case DocKind::triple: return "triple";
  }
  return "unknown";
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::parse_error, "malformed JSON at line " + std::to_string(line) + ", column " +
                                            std::to_string(col),
                {{"line", line}, {"column", col}});
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string(), {{"file", path.string()}});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- Categories ----

std::vector<std::string> export_object_names(const FinCategory& c) {
  std::vector<std::string> names;
  for (ObjId a = 0; a < c.num_objects(); ++a) names.push_back(c.object_name(a));
  return uniquify(std::move(names));
}

std::vector<std::string> export_morphism_names(const FinCategory& c) {
  std::vector<std::string> names;
  for (MorId f = 0; f < c.num_morphisms(); ++f) names.push_back(c.morphism_name(f));
  return uniquify(std::move(names));
}

json to_json(const FinCategory& c) {
  auto on = export_object_names(c), mn = export_morphism_names(c);
  json j;
  j["objects"] = on;
  j["morphisms"] = json::array();
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    j["morphisms"].push_back({{"id", mn[f]}, {"src", on[c.src(f)]}, {"tgt", on[c.tgt(f)]}});
  }
  j["identity"] = json::object();
  for (ObjId a = 0; a < c.num_objects(); ++a) j["identity"][on[a]] = mn[c.identity(a)];
  j["compose"] = json::array();
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (MorId g : c.out(c.tgt(f))) j["compose"].push_back({mn[g], mn[f], mn[c.compose(g, f)]});
  }
  return j;
}

json to_json(const StarCategory& A) {
  const FinCategory& c = A.base();
  json j = to_json(c);
  auto mn = export_morphism_names(c);
  j["star"] = json::object();
  for (MorId f = 0; f < c.num_morphisms(); ++f) j["star"][mn[f]] = mn[A.star(f)];
  if (A.flavor() == Flavor::marked) {
    j["marked"] = json::array();
    for (MorId f : A.marked_list()) j["marked"].push_back(mn[f]);
  }
  return j;
}

FinCategory category_from_json(const json& j) {
  CategoryBuilder b;
  auto objects = string_list(field(j, "objects"), "objects");
  auto oidx = index_of(objects, "object");
  for (const auto& o : objects) b.add_object(o);
  std::vector<std::string> mnames;
  for (const auto& m : array(field(j, "morphisms"), "morphisms")) {
    mnames.push_back(str(field(m, "id"), "id"));
    b.add_morphism(lookup(oidx, str(field(m, "src"), "src"), "object"),
                   lookup(oidx, str(field(m, "tgt"), "tgt"), "object"), mnames.back());
  }
  auto midx = index_of(mnames, "morphism");
  const json& ids = field(j, "identity");
  if (!ids.is_object()) parse_fail("identity must map objects to morphisms");
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    b.set_identity(lookup(oidx, it.key(), "object"), lookup(midx, str(it.value(), "identity"), "morphism"));
  }
  for (const auto& t : array(field(j, "compose"), "compose")) {
    if (!t.is_array() || t.size() != 3) parse_fail("compose entries are [g, f, gf]", {{"entry", t}});
    b.set_compose(lookup(midx, str(t[0], "compose"), "morphism"), lookup(midx, str(t[1], "compose"), "morphism"),
                  lookup(midx, str(t[2], "compose"), "morphism"));
  }
  return b.build();
}

StarCategory star_category_from_json(const json& j) {
  FinCategory c = category_from_json(j);
  std::map<std::string, std::uint32_t> midx;
  for (MorId f = 0; f < c.num_morphisms(); ++f) midx[c.morphism_name(f)] = f;
  const json& s = field(j, "star");
  if (!s.is_object()) parse_fail("star must map morphisms to morphisms");
  std::vector<MorId> star(c.num_morphisms(), kNone);
  for (auto it = s.begin(); it != s.end(); ++it) {
    star[lookup(midx, it.key(), "morphism")] = lookup(midx, str(it.value(), "star"), "morphism");
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (star[f] == kNone) throw Error(ErrorKind::invalid_star, "star is not total", {{"morphism", c.morphism_name(f)}});
  }
  if (!j.contains("marked")) return StarCategory::make_unmarked(std::move(c), std::move(star));
  std::vector<MorId> marked;
  for (const auto& m : array(j["marked"], "marked")) marked.push_back(lookup(midx, str(m, "marked"), "morphism"));
  return StarCategory::make_marked(std::move(c), std::move(star), marked);
}

// ---- Linear ----

namespace {

struct BasisNames {
  std::vector<std::vector<std::string>> per_hom;  // a*n+b
  std::map<std::string, std::tuple<ObjId, ObjId, std::size_t>> where;
};

BasisNames export_basis_names(const LinearStarCategory& A) {
  const std::size_t n = A.num_objects();
  std::vector<std::string> flat;
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < A.dim(a, b); ++k) flat.push_back(A.basis_name(a, b, k));
    }
  }
  flat = uniquify(std::move(flat));
  BasisNames r;
  r.per_hom.resize(n * n);
  std::size_t pos = 0;
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < A.dim(a, b); ++k) {
        r.where[flat[pos]] = {a, b, k};
        r.per_hom[a * n + b].push_back(flat[pos++]);
      }
    }
  }
  return r;
}

json sparse(const std::vector<std::string>& names, const Vec& v) {
  json out = json::object();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out[names[k]] = v[k].to_string();
  }
  return out;
}

Vec dense(const BasisNames& names, ObjId a, ObjId b, std::size_t dim, const json& j) {
  if (!j.is_object()) parse_fail("vectors are objects from basis names to coefficients");
  Vec v(dim);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto w = names.where.find(it.key());
    if (w == names.where.end()) parse_fail("unknown basis element '" + it.key() + "'");
    auto [s, t, k] = w->second;
    if (s != a || t != b) {
      throw Error(ErrorKind::inconsistent_linear, "basis element from the wrong hom", {{"element", it.key()}});
    }
    v[k] = Gaussian::parse(str(it.value(), "coefficient"));
  }
  return v;
}

}  // namespace

json vec_to_json(const LinearStarCategory& A, ObjId a, ObjId b, const Vec& v) {
  return sparse(export_basis_names(A).per_hom[a * A.num_objects() + b], v);
}

Vec vec_from_json(const LinearStarCategory& A, ObjId a, ObjId b, const json& j) {
  return dense(export_basis_names(A), a, b, A.dim(a, b), j);
}

json to_json(const LinearStarCategory& A) {
  const std::size_t n = A.num_objects();
  std::vector<std::string> on;
  for (ObjId a = 0; a < n; ++a) on.push_back(A.object_name(a));
  on = uniquify(on);
  BasisNames bn = export_basis_names(A);
  json j;
  j["objects"] = on;
  j["scalars"] = "gaussian-rational";
  j["hom_bases"] = json::array();
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      if (A.dim(a, b) > 0) j["hom_bases"].push_back({{"src", on[a]}, {"tgt", on[b]}, {"basis", bn.per_hom[a * n + b]}});
    }
  }
  j["identity"] = json::object();
  for (ObjId a = 0; a < n; ++a) j["identity"][on[a]] = sparse(bn.per_hom[a * n + a], A.identity(a));
  j["compose_bilinear"] = json::array();
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      for (ObjId c = 0; c < n; ++c) {
        for (std::size_t g = 0; g < A.dim(b, c); ++g) {
          for (std::size_t f = 0; f < A.dim(a, b); ++f) {
            const Vec& v = A.basis_product(a, b, c, g, f);
            if (is_zero(v)) continue;
            j["compose_bilinear"].push_back(
                {bn.per_hom[b * n + c][g], bn.per_hom[a * n + b][f], sparse(bn.per_hom[a * n + c], v)});
          }
        }
      }
    }
  }
  j["star_antilinear"] = json::object();
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < A.dim(a, b); ++k) {
        j["star_antilinear"][bn.per_hom[a * n + b][k]] = sparse(bn.per_hom[b * n + a], A.basis_star(a, b, k));
      }
    }
  }
  j["marked"] = json::array();
  for (const LinMor& m : A.marked()) {
    j["marked"].push_back({{"src", on[m.src]}, {"tgt", on[m.tgt]}, {"value", sparse(bn.per_hom[m.src * n + m.tgt], m.v)}});
  }
  return j;
}

LinearStarCategory linear_from_json(const json& j) {
  if (str(field(j, "scalars"), "scalars") != "gaussian-rational") parse_fail("only gaussian-rational scalars are supported");
  auto objects = string_list(field(j, "objects"), "objects");
  auto oidx = index_of(objects, "object");
  const std::size_t n = objects.size();
  LinearBuilder b;
  for (const auto& o : objects) b.add_object(o);
  BasisNames bn;
  bn.per_hom.resize(n * n);
  for (const auto& h : array(field(j, "hom_bases"), "hom_bases")) {
    ObjId s = lookup(oidx, str(field(h, "src"), "src"), "object");
    ObjId t = lookup(oidx, str(field(h, "tgt"), "tgt"), "object");
    if (!bn.per_hom[s * n + t].empty()) parse_fail("hom listed twice", {{"src", objects[s]}, {"tgt", objects[t]}});
    auto names = string_list(field(h, "basis"), "basis");
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (!bn.where.emplace(names[k], std::make_tuple(s, t, k)).second) {
        parse_fail("duplicate basis element '" + names[k] + "'");
      }
    }
    bn.per_hom[s * n + t] = names;
  }
  for (ObjId s = 0; s < n; ++s) {
    for (ObjId t = 0; t < n; ++t) b.set_basis(s, t, bn.per_hom[s * n + t]);
  }
  auto dim = [&](ObjId s, ObjId t) { return bn.per_hom[s * n + t].size(); };
  const json& ids = field(j, "identity");
  if (!ids.is_object()) parse_fail("identity must map objects to vectors");
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    ObjId a = lookup(oidx, it.key(), "object");
    b.set_identity(a, dense(bn, a, a, dim(a, a), it.value()));
  }
  for (ObjId a = 0; a < n; ++a) {
    if (dim(a, a) == 0) b.set_identity(a, {});
  }
  for (const auto& t : array(field(j, "compose_bilinear"), "compose_bilinear")) {
    if (!t.is_array() || t.size() != 3) parse_fail("compose_bilinear entries are [g, f, value]", {{"entry", t}});
    auto g = bn.where.find(str(t[0], "compose_bilinear"));
    auto f = bn.where.find(str(t[1], "compose_bilinear"));
    if (g == bn.where.end() || f == bn.where.end()) parse_fail("unknown basis element in compose_bilinear", {{"entry", t}});
    auto [gb, gc, gk] = g->second;
    auto [fa, fb, fk] = f->second;
    if (gb != fb) throw Error(ErrorKind::inconsistent_linear, "product of non-composable elements", {{"entry", t}});
    b.set_basis_product(fa, fb, gc, gk, fk, dense(bn, fa, gc, dim(fa, gc), t[2]));
  }
  const json& st = field(j, "star_antilinear");
  if (!st.is_object()) parse_fail("star_antilinear must map basis elements to vectors");
  std::set<std::string> starred;
  for (auto it = st.begin(); it != st.end(); ++it) {
    auto w = bn.where.find(it.key());
    if (w == bn.where.end()) parse_fail("unknown basis element '" + it.key() + "'");
    auto [s, t, k] = w->second;
    b.set_basis_star(s, t, k, dense(bn, t, s, dim(t, s), it.value()));
    starred.insert(it.key());
  }
  for (const auto& [name, where] : bn.where) {
    if (!starred.count(name)) throw Error(ErrorKind::invalid_star, "star missing for a basis element", {{"element", name}});
  }
  if (j.contains("marked")) {
    for (const auto& m : array(j["marked"], "marked")) {
      ObjId s = lookup(oidx, str(field(m, "src"), "src"), "object");
      ObjId t = lookup(oidx, str(field(m, "tgt"), "tgt"), "object");
      b.add_marked({s, t, dense(bn, s, t, dim(s, t), field(m, "value"))});
    }
  }
  return b.build();
}

// ---- Simplicial sets ----

json to_json(const SimplicialSet& K) {
  json j;
  j["s0"] = K.vertices();
  j["s1"] = json::array();
  for (const Edge& e : K.edges()) {
    json x = {{"id", e.name}, {"d0", K.vertices()[e.d0]}, {"d1", K.vertices()[e.d1]}};
    if (e.degenerate) x["degenerate"] = true;
    j["s1"].push_back(x);
  }
  j["s2"] = json::array();
  for (const Triangle& t : K.triangles()) {
    j["s2"].push_back({{"id", t.name},
                       {"d0", K.edges()[t.d0].name},
                       {"d1", K.edges()[t.d1].name},
                       {"d2", K.edges()[t.d2].name}});
  }
  return j;
}

SimplicialSet simplicial_from_json(const json& j) {
  auto vertices = string_list(field(j, "s0"), "s0");
  auto vidx = index_of(vertices, "vertex");
  std::vector<Edge> edges;
  std::vector<std::string> enames;
  for (const auto& e : array(field(j, "s1"), "s1")) {
    Edge x;
    x.name = str(field(e, "id"), "id");
    x.d0 = lookup(vidx, str(field(e, "d0"), "d0"), "vertex");
    x.d1 = lookup(vidx, str(field(e, "d1"), "d1"), "vertex");
    if (e.contains("degenerate")) {
      if (!e["degenerate"].is_boolean()) parse_fail("degenerate must be a boolean");
      x.degenerate = e["degenerate"].get<bool>();
    }
    enames.push_back(x.name);
    edges.push_back(std::move(x));
  }
  auto eidx = index_of(enames, "edge");
  std::vector<Triangle> tris;
  if (j.contains("s2")) {
    for (const auto& t : array(j["s2"], "s2")) {
      tris.push_back({str(field(t, "id"), "id"), lookup(eidx, str(field(t, "d0"), "d0"), "edge"),
                      lookup(eidx, str(field(t, "d1"), "d1"), "edge"), lookup(eidx, str(field(t, "d2"), "d2"), "edge")});
    }
  }
  return SimplicialSet::make(std::move(vertices), std::move(edges), std::move(tris));
}

// ---- Functors ----

json functor_to_json(const StarCategory& A, const StarCategory& B, const Functor& F) {
  auto ao = export_object_names(A.base()), am = export_morphism_names(A.base());
  auto bo = export_object_names(B.base()), bm = export_morphism_names(B.base());
  json j;
  j["domain"] = to_json(A);
  j["codomain"] = to_json(B);
  j["on_objects"] = json::object();
  for (ObjId a = 0; a < F.on_objects.size(); ++a) j["on_objects"][ao[a]] = bo[F.on_objects[a]];
  j["on_morphisms"] = json::object();
  for (MorId f = 0; f < F.on_morphisms.size(); ++f) j["on_morphisms"][am[f]] = bm[F.on_morphisms[f]];
  return j;
}

FunctorDocument functor_from_json(const json& j) {
  FunctorDocument d;
  d.domain = star_category_from_json(field(j, "domain"));
  d.codomain = star_category_from_json(field(j, "codomain"));
  const FinCategory &a = d.domain.base(), &b = d.codomain.base();
  std::map<std::string, std::uint32_t> ao, am, bo, bm;
  for (ObjId x = 0; x < a.num_objects(); ++x) ao[a.object_name(x)] = x;
  for (MorId x = 0; x < a.num_morphisms(); ++x) am[a.morphism_name(x)] = x;
  for (ObjId x = 0; x < b.num_objects(); ++x) bo[b.object_name(x)] = x;
  for (MorId x = 0; x < b.num_morphisms(); ++x) bm[b.morphism_name(x)] = x;
  d.map.on_objects.assign(a.num_objects(), kNone);
  d.map.on_morphisms.assign(a.num_morphisms(), kNone);
  const json &oo = field(j, "on_objects"), &om = field(j, "on_morphisms");
  if (!oo.is_object() || !om.is_object()) parse_fail("on_objects and on_morphisms must be objects");
  for (auto it = oo.begin(); it != oo.end(); ++it) {
    d.map.on_objects[lookup(ao, it.key(), "object")] = lookup(bo, str(it.value(), "on_objects"), "object");
  }
  for (auto it = om.begin(); it != om.end(); ++it) {
    d.map.on_morphisms[lookup(am, it.key(), "morphism")] = lookup(bm, str(it.value(), "on_morphisms"), "morphism");
  }
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (d.map.on_objects[x] == kNone) {
      throw Error(ErrorKind::invalid_functor, "object without an image", {{"object", a.object_name(x)}});
    }
  }
  for (MorId x = 0; x < a.num_morphisms(); ++x) {
    if (d.map.on_morphisms[x] == kNone) {
      throw Error(ErrorKind::invalid_functor, "morphism without an image", {{"morphism", a.morphism_name(x)}});
    }
  }
  if (auto v = star_functor_violation(d.domain, d.codomain, d.map)) {
    throw Error(ErrorKind::invalid_functor, "not a *-functor preserving the marking", *v);
  }
  return d;
}

// ---- Groups and actions ----

json to_json(const FinGroup& G) {
  std::vector<std::string> names;
  for (GroupElem g = 0; g < G.order(); ++g) names.push_back(G.name(g));
  json j;
  j["elements"] = names;
  j["table"] = json::array();
  for (GroupElem g = 0; g < G.order(); ++g) {
    json row = json::array();
    for (GroupElem h = 0; h < G.order(); ++h) row.push_back(names[G.mul(g, h)]);
    j["table"].push_back(row);
  }
  return j;
}

FinGroup group_from_json(const json& j) {
  auto names = string_list(field(j, "elements"), "elements");
  auto idx = index_of(names, "element");
  std::vector<std::vector<GroupElem>> table;
  for (const auto& row : array(field(j, "table"), "table")) {
    std::vector<GroupElem> r;
    for (const auto& e : array(row, "table row")) r.push_back(lookup(idx, str(e, "table"), "element"));
    if (r.size() != names.size()) throw Error(ErrorKind::invalid_group, "table row has the wrong length");
    table.push_back(std::move(r));
  }
  if (table.size() != names.size()) throw Error(ErrorKind::invalid_group, "table has the wrong number of rows");
  return FinGroup::from_table(std::move(table), std::move(names));
}

json to_json(const GAction& a) {
  const FinCategory& c = a.base.base();
  auto on = export_object_names(c), mn = export_morphism_names(c);
  json j;
  j["group"] = to_json(a.group);
  j["category"] = to_json(a.base);
  j["on_objects"] = json::object();
  j["on_morphisms"] = json::object();
  for (GroupElem g = 0; g < a.group.order(); ++g) {
    json oo = json::object(), om = json::object();
    for (ObjId x = 0; x < c.num_objects(); ++x) oo[on[x]] = on[a.act[g].on_objects[x]];
    for (MorId m = 0; m < c.num_morphisms(); ++m) om[mn[m]] = mn[a.act[g].on_morphisms[m]];
    j["on_objects"][a.group.name(g)] = oo;
    j["on_morphisms"][a.group.name(g)] = om;
  }
  return j;
}

json to_json(const LinearGAction& a) {
  const LinearStarCategory& A = a.base;
  const std::size_t n = A.num_objects();
  BasisNames bn = export_basis_names(A);
  std::vector<std::string> on;
  for (ObjId x = 0; x < n; ++x) on.push_back(A.object_name(x));
  on = uniquify(on);
  json j;
  j["group"] = to_json(a.group);
  j["category"] = to_json(A);
  j["on_objects"] = json::object();
  j["on_morphisms"] = json::object();
  for (GroupElem g = 0; g < a.group.order(); ++g) {
    const LinearFunctor& F = a.act[g];
    json oo = json::object(), om = json::object();
    for (ObjId x = 0; x < n; ++x) oo[on[x]] = on[F.on_objects[x]];
    for (ObjId x = 0; x < n; ++x) {
      for (ObjId y = 0; y < n; ++y) {
        for (std::size_t k = 0; k < A.dim(x, y); ++k) {
          om[bn.per_hom[x * n + y][k]] =
              sparse(bn.per_hom[F.on_objects[x] * n + F.on_objects[y]], F.on_basis[x * n + y][k]);
        }
      }
    }
    j["on_objects"][a.group.name(g)] = oo;
    j["on_morphisms"][a.group.name(g)] = om;
  }
  return j;
}

bool is_linear_action(const json& j) { return field(j, "category").contains("scalars"); }

GAction action_from_json(const json& j) {
  GAction a;
  a.group = group_from_json(field(j, "group"));
  a.base = star_category_from_json(field(j, "category"));
  const FinCategory& c = a.base.base();
  std::map<std::string, std::uint32_t> oi, mi;
  for (ObjId x = 0; x < c.num_objects(); ++x) oi[c.object_name(x)] = x;
  for (MorId x = 0; x < c.num_morphisms(); ++x) mi[c.morphism_name(x)] = x;
  const json &oo = field(j, "on_objects"), &om = field(j, "on_morphisms");
  for (GroupElem g = 0; g < a.group.order(); ++g) {
    const std::string& gn = a.group.name(g);
    Functor F{std::vector<ObjId>(c.num_objects(), kNone), std::vector<MorId>(c.num_morphisms(), kNone)};
    const json &go = field(oo, gn.c_str()), &gm = field(om, gn.c_str());
    for (auto it = go.begin(); it != go.end(); ++it) {
      F.on_objects[lookup(oi, it.key(), "object")] = lookup(oi, str(it.value(), "on_objects"), "object");
    }
    for (auto it = gm.begin(); it != gm.end(); ++it) {
      F.on_morphisms[lookup(mi, it.key(), "morphism")] = lookup(mi, str(it.value(), "on_morphisms"), "morphism");
    }
    for (ObjId x : F.on_objects) {
      if (x == kNone) throw Error(ErrorKind::invalid_action, "partial action on objects", {{"element", gn}});
    }
    for (MorId m : F.on_morphisms) {
      if (m == kNone) throw Error(ErrorKind::invalid_action, "partial action on morphisms", {{"element", gn}});
    }
    a.act.push_back(std::move(F));
  }
  validate_action(a);
  return a;
}

LinearGAction linear_action_from_json(const json& j) {
  LinearGAction a;
  a.group = group_from_json(field(j, "group"));
  a.base = linear_from_json(field(j, "category"));
  const LinearStarCategory& A = a.base;
  const std::size_t n = A.num_objects();
  BasisNames bn = export_basis_names(A);
  std::map<std::string, std::uint32_t> oi;
  for (ObjId x = 0; x < n; ++x) oi[A.object_name(x)] = x;
  const json &oo = field(j, "on_objects"), &om = field(j, "on_morphisms");
  for (GroupElem g = 0; g < a.group.order(); ++g) {
    const std::string& gn = a.group.name(g);
    LinearFunctor F;
    F.on_objects.assign(n, kNone);
    const json &go = field(oo, gn.c_str()), &gm = field(om, gn.c_str());
    for (auto it = go.begin(); it != go.end(); ++it) {
      F.on_objects[lookup(oi, it.key(), "object")] = lookup(oi, str(it.value(), "on_objects"), "object");
    }
    for (ObjId x : F.on_objects) {
      if (x == kNone) throw Error(ErrorKind::invalid_action, "partial action on objects", {{"element", gn}});
    }
    F.on_basis.resize(n * n);
    for (ObjId x = 0; x < n; ++x) {
      for (ObjId y = 0; y < n; ++y) {
        for (std::size_t k = 0; k < A.dim(x, y); ++k) {
          const json& v = field(gm, bn.per_hom[x * n + y][k].c_str());
          ObjId fx = F.on_objects[x], fy = F.on_objects[y];
          F.on_basis[x * n + y].push_back(dense(bn, fx, fy, A.dim(fx, fy), v));
        }
      }
    }
    a.act.push_back(std::move(F));
  }
  validate_action(a);
  return a;
}

// ---- Spaces ----

json to_json(const BornCoarseSpace& X) {
  json j;
  j["points"] = X.points;
  j["entourage_generators"] = json::array();
  for (auto [a, b] : X.generators) j["entourage_generators"].push_back({X.points[a], X.points[b]});
  if (!X.bornology) {
    j["bornology"] = "all";
  } else {
    j["bornology"] = json::array();
    for (std::uint32_t m : *X.bornology) {
      json set = json::array();
      for (std::uint32_t p = 0; p < X.size(); ++p) {
        if ((m >> p) & 1u) set.push_back(X.points[p]);
      }
      j["bornology"].push_back(set);
    }
  }
  if (X.group) {
    json ga;
    ga["group"] = to_json(*X.group);
    ga["on_points"] = json::object();
    for (GroupElem g = 0; g < X.group->order(); ++g) {
      json m = json::object();
      for (std::uint32_t p = 0; p < X.size(); ++p) m[X.points[p]] = X.points[X.action[g][p]];
      ga["on_points"][X.group->name(g)] = m;
    }
    j["group_action"] = ga;
  }
  return j;
}

BornCoarseSpace space_from_json(const json& j) {
  auto points = string_list(field(j, "points"), "points");
  auto pidx = index_of(points, "point");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gens;
  for (const auto& g : array(field(j, "entourage_generators"), "entourage_generators")) {
    if (!g.is_array() || g.size() != 2) parse_fail("entourage generators are pairs", {{"entry", g}});
    gens.emplace_back(lookup(pidx, str(g[0], "generator"), "point"), lookup(pidx, str(g[1], "generator"), "point"));
  }
  std::optional<std::vector<std::vector<std::uint32_t>>> born;
  const json& bj = field(j, "bornology");
  if (bj.is_string()) {
    if (bj.get<std::string>() != "all") parse_fail("bornology is \"all\" or a list of sets");
  } else {
    born.emplace();
    for (const auto& set : array(bj, "bornology")) {
      std::vector<std::uint32_t> s;
      for (const auto& p : array(set, "bounded set")) s.push_back(lookup(pidx, str(p, "bornology"), "point"));
      born->push_back(std::move(s));
    }
  }
  std::optional<FinGroup> group;
  std::vector<std::vector<std::uint32_t>> action;
  if (j.contains("group_action") && !j["group_action"].is_null()) {
    const json& ga = j["group_action"];
    group = group_from_json(field(ga, "group"));
    const json& op = field(ga, "on_points");
    for (GroupElem g = 0; g < group->order(); ++g) {
      const json& m = field(op, group->name(g).c_str());
      std::vector<std::uint32_t> perm(points.size(), UINT32_MAX);
      for (auto it = m.begin(); it != m.end(); ++it) {
        perm[lookup(pidx, it.key(), "point")] = lookup(pidx, str(it.value(), "on_points"), "point");
      }
      for (std::uint32_t p : perm) {
        if (p == UINT32_MAX) throw Error(ErrorKind::invalid_action, "partial action on points", {{"element", group->name(g)}});
      }
      action.push_back(std::move(perm));
    }
  }
  return validate_space(std::move(points), std::move(gens), std::move(born), std::move(group), std::move(action));
}

// ---- DOT ----

std::string to_dot(const FinCategory& c, const std::string& name) {
  auto on = export_object_names(c), mn = export_morphism_names(c);
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  for (ObjId a = 0; a < c.num_objects(); ++a) out << "  o" << a << " [label=" << quote(on[a]) << "];\n";
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    out << "  o" << c.src(f) << " -> o" << c.tgt(f) << " [label=" << quote(mn[f]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const StarCategory& A, const std::string& name) {
  const FinCategory& c = A.base();
  auto on = export_object_names(c), mn = export_morphism_names(c);
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  for (ObjId a = 0; a < c.num_objects(); ++a) out << "  o" << a << " [label=" << quote(on[a]) << "];\n";
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    out << "  o" << c.src(f) << " -> o" << c.tgt(f) << " [label=" << quote(mn[f] + " *=" + mn[A.star(f)]);
    if (A.is_marked(f)) out << ", style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const LinearStarCategory& A, const std::string& name) {
  const std::size_t n = A.num_objects();
  BasisNames bn = export_basis_names(A);
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  out << "  label=" << quote(std::to_string(A.marked().size()) + " marked elements") << ";\n";
  for (ObjId a = 0; a < n; ++a) out << "  o" << a << " [label=" << quote(A.object_name(a)) << "];\n";
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      for (const auto& e : bn.per_hom[a * n + b]) {
        out << "  o" << a << " -> o" << b << " [label=" << quote(e) << ", style=dashed];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const SimplicialSet& K, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  out << "  label=" << quote(std::to_string(K.triangles().size()) + " 2-simplices") << ";\n";
  for (std::size_t v = 0; v < K.vertices().size(); ++v) out << "  v" << v << " [label=" << quote(K.vertices()[v]) << "];\n";
  for (const Edge& e : K.edges()) {
    if (e.degenerate) continue;
    out << "  v" << e.d1 << " -> v" << e.d0 << " [label=" << quote(e.name) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mstar
