#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mstar/controlled.hpp"
#include "mstar/group.hpp"
#include "mstar/linear.hpp"
#include "mstar/simplicial.hpp"
#include "mstar/starcat.hpp"

namespace mstar {

struct NamedCategory {
  std::string name;
  StarCategory category;
};

struct NamedMorphism {
  std::string name;
  StarCategory source, target;
  Functor map;
};

struct NamedLinear {
  std::string name;
  LinearStarCategory category;
};

/// (C, 𝔾, A) for the exponential law.
struct ExponentialTriple {
  std::string name;
  StarCategory C;
  FinCategory groupoid;
  StarCategory A;
};
struct LinearExponentialTriple {
  std::string name;
  LinearStarCategory C;
  FinCategory groupoid;
  LinearStarCategory A;
};

struct NamedAction {
  std::string name;
  GAction action;
};
struct NamedLinearAction {
  std::string name;
  LinearGAction action;
};
struct NamedSpace {
  std::string name;
  BornCoarseSpace space;
};
struct NamedSimplicial {
  std::string name;
  SimplicialSet complex;
};

struct Corpus {
  std::vector<NamedCategory> categories;
  std::vector<NamedMorphism> morphisms;
  std::vector<NamedLinear> linear;
  std::vector<ExponentialTriple> triples;
  std::vector<LinearExponentialTriple> linear_triples;
  std::vector<NamedAction> actions;
  std::vector<NamedLinearAction> linear_actions;
  std::vector<NamedSpace> spaces;
  std::vector<NamedSimplicial> simplicial;

  const StarCategory* find_category(const std::string& name) const;
  bool empty() const;
};

// Building blocks shared with the tests.
FinGroup klein_group();
/// a: 0 → 1 with a*a = id and p = aa* a proper projection.
StarCategory partial_isometry(Flavor flavor);
/// One object with a selfadjoint idempotent p.
StarCategory projection_monoid(Flavor flavor);
/// Δ² without its nondegenerate 2-simplex.
SimplicialSet boundary_triangle();

/// The built-in corpus. Deterministic.
Corpus default_corpus();

/// Triple documents: {"C", "groupoid", "A"} with the categories inline; linear
/// when C is.
nlohmann::json to_json(const ExponentialTriple& t);
nlohmann::json to_json(const LinearExponentialTriple& t);
bool is_linear_triple(const nlohmann::json& j);
ExponentialTriple triple_from_json(const nlohmann::json& j);
LinearExponentialTriple linear_triple_from_json(const nlohmann::json& j);

/// categories/, morphisms/, linear/, triples/, actions/, spaces/ and
/// simplicial/, one JSON document per file named "<index>-<name>.json".
void export_corpus(const Corpus& corpus, const std::filesystem::path& dir);
/// Reads a directory laid out like export_corpus writes it; missing
/// subdirectories are empty. Files are read in name order and the index
/// prefix is dropped from the name. Errors: ParseError and validation errors.
Corpus load_corpus(const std::filesystem::path& dir);

}  // namespace mstar
