#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mstar/controlled.hpp"
#include "mstar/fincat.hpp"
#include "mstar/group.hpp"
#include "mstar/linear.hpp"
#include "mstar/simplicial.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

using nlohmann::json;

/// What a JSON document describes, decided by its fields.
enum class DocKind {
  category,         // objects + morphisms, no star
  star_category,    // with "star"; marked flavor iff "marked" is present
  linear_category,  // "scalars"
  simplicial_set,   // "s0"
  functor,          // "domain", "codomain"
  action,           // "group" + "on_objects"; linear when its category is
  space,            // "points"
  group,            // "elements" + "table"
  report,           // "checks"
  triple,           // "C", "groupoid", "A"
};
/// Errors: ParseError when no kind matches.
DocKind detect_kind(const json& j);
std::string_view to_string(DocKind kind);

/// Errors: ParseError naming the line and column.
json read_json_file(const std::filesystem::path& path);
json parse_json_text(const std::string& text);
/// Two-space indented, keys sorted, trailing newline.
std::string dump(const json& j);

// ---- Categories ----

json to_json(const FinCategory& c);
json to_json(const StarCategory& A);
FinCategory category_from_json(const json& j);
/// Unmarked flavor without "marked". Errors: ParseError plus the validation errors.
StarCategory star_category_from_json(const json& j);

/// Names used on export: the category's own names, with repeats disambiguated.
std::vector<std::string> export_object_names(const FinCategory& c);
std::vector<std::string> export_morphism_names(const FinCategory& c);

json to_json(const LinearStarCategory& A);
LinearStarCategory linear_from_json(const json& j);
/// Coefficient strings "a/b+c/d*i".
json vec_to_json(const LinearStarCategory& A, ObjId a, ObjId b, const Vec& v);
Vec vec_from_json(const LinearStarCategory& A, ObjId a, ObjId b, const json& j);

json to_json(const SimplicialSet& K);
SimplicialSet simplicial_from_json(const json& j);

struct FunctorDocument {
  StarCategory domain, codomain;
  Functor map;
};
json functor_to_json(const StarCategory& A, const StarCategory& B, const Functor& F);
/// Errors: ParseError, InvalidFunctor.
FunctorDocument functor_from_json(const json& j);

json to_json(const FinGroup& G);
FinGroup group_from_json(const json& j);

json to_json(const GAction& a);
json to_json(const LinearGAction& a);
GAction action_from_json(const json& j);
LinearGAction linear_action_from_json(const json& j);
/// True when the action's category is linear.
bool is_linear_action(const json& j);

json to_json(const BornCoarseSpace& X);
BornCoarseSpace space_from_json(const json& j);

// ---- DOT ----

std::string to_dot(const FinCategory& c, const std::string& name = "C");
/// Marked morphisms drawn bold; identities omitted.
std::string to_dot(const StarCategory& A, const std::string& name = "A");
/// One edge per basis element; marked elements listed in the graph label.
std::string to_dot(const LinearStarCategory& A, const std::string& name = "A");
std::string to_dot(const SimplicialSet& K, const std::string& name = "K");

}  // namespace mstar
