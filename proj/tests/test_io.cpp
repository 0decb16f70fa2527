#include <doctest.h>

#include "mstar/corpus.hpp"
#include "mstar/io.hpp"
#include "support.hpp"

using namespace mstar;

TEST_CASE("round trips through JSON text") {
  const Corpus corpus = default_corpus();
  for (const auto& [name, A] : corpus.categories) {
    CAPTURE(name);
    const json j = parse_json_text(dump(to_json(A)));
    CHECK(detect_kind(j) == DocKind::star_category);
    CHECK(star_category_from_json(j) == A);
    const json b = to_json(A.base());
    CHECK(detect_kind(b) == DocKind::category);
    CHECK(category_from_json(b) == A.base());
  }
  for (const auto& m : corpus.morphisms) {
    CAPTURE(m.name);
    const json j = parse_json_text(dump(functor_to_json(m.source, m.target, m.map)));
    CHECK(detect_kind(j) == DocKind::functor);
    const FunctorDocument d = functor_from_json(j);
    CHECK(d.domain == m.source);
    CHECK(d.codomain == m.target);
    CHECK(d.map == m.map);
  }
  for (const auto& [name, L] : corpus.linear) {
    CAPTURE(name);
    const json j = parse_json_text(dump(to_json(L)));
    CHECK(detect_kind(j) == DocKind::linear_category);
    CHECK(linear_from_json(j) == L);
  }
  for (const auto& [name, a] : corpus.actions) {
    CAPTURE(name);
    const json j = to_json(a);
    CHECK(detect_kind(j) == DocKind::action);
    CHECK_FALSE(is_linear_action(j));
    const GAction b = action_from_json(j);
    CHECK(b.group == a.group);
    CHECK(b.base == a.base);
    CHECK(b.act == a.act);
  }
  for (const auto& [name, a] : corpus.linear_actions) {
    CAPTURE(name);
    const json j = to_json(a);
    CHECK(is_linear_action(j));
    const LinearGAction b = linear_action_from_json(j);
    CHECK(b.base == a.base);
    CHECK(b.act == a.act);
  }
  for (const auto& [name, X] : corpus.spaces) {
    CAPTURE(name);
    const json j = to_json(X);
    CHECK(detect_kind(j) == DocKind::space);
    CHECK(to_json(space_from_json(j)) == j);
  }
  for (const auto& [name, K] : corpus.simplicial) {
    CAPTURE(name);
    const json j = to_json(K);
    CHECK(detect_kind(j) == DocKind::simplicial_set);
    CHECK(to_json(simplicial_from_json(j)) == j);
  }
  for (const auto& t : corpus.triples) {
    CAPTURE(t.name);
    const json j = to_json(t);
    CHECK(detect_kind(j) == DocKind::triple);
    CHECK_FALSE(is_linear_triple(j));
    const ExponentialTriple u = triple_from_json(j);
    CHECK(u.C == t.C);
    CHECK(u.A == t.A);
    CHECK(u.groupoid == t.groupoid);
  }
  const json g = to_json(klein_group());
  CHECK(detect_kind(g) == DocKind::group);
  CHECK(group_from_json(g) == klein_group());
}

TEST_CASE("dump is canonical") {
  const json j = to_json(classifier(ClassifierKind::unitary));
  const std::string s = dump(j);
  CHECK(s.back() == '\n');
  CHECK(dump(parse_json_text(s)) == s);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_json_text("{\n  \"objects\": [1,\n  ]\n}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse_error);
    CHECK(e.witness()["line"] == 3);
    CHECK(e.witness()["column"].get<int>() >= 1);
  }
  CHECK(oracle::error_kind([] { read_json_file("/nonexistent/file.json"); }) == ErrorKind::parse_error);
  CHECK(oracle::error_kind([] { detect_kind(json{{"unrelated", 1}}); }) == ErrorKind::parse_error);
}

TEST_CASE("invalid documents are rejected with the validation error") {
  json j = to_json(classifier(ClassifierKind::unitary));
  j["star"] = json::array();
  CHECK(oracle::error_kind([&] { star_category_from_json(j); }).has_value());
  json k = to_json(delooping(cyclic_group(2)));
  k["marked"] = json::array();
  CHECK(oracle::error_kind([&] { star_category_from_json(k); }) == ErrorKind::invalid_marking);
}

TEST_CASE("DOT output") {
  const StarCategory one = classifier(ClassifierKind::marked_unitary);
  const std::string dot = to_dot(one, "one");
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("bold") != std::string::npos);
  CHECK(to_dot(linearize(one)).find("digraph") != std::string::npos);
  CHECK(to_dot(standard_simplex(2)).find("digraph") != std::string::npos);
}
