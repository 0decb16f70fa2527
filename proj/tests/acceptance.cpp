// Acceptance run over the built-in corpus: one PASS/FAIL line per criterion.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mstar/corpus.hpp"
#include "mstar/suites.hpp"

using namespace mstar;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

bool all_pass(const std::vector<const Check*>& cs) {
  for (const Check* c : cs) {
    if (c->status != CheckStatus::pass) return false;
  }
  return true;
}

std::size_t count_suite(const SuiteReport& r, const std::string& suite, CheckStatus s) {
  std::size_t n = 0;
  for (const Check& c : r.checks) n += c.suite == suite && c.status == s;
  return n;
}

bool suite_clean(const SuiteReport& r, const std::string& suite) {
  return count_suite(r, suite, CheckStatus::fail) == 0 && count_suite(r, suite, CheckStatus::bound_exceeded) == 0 &&
         count_suite(r, suite, CheckStatus::skipped) == 0;
}

bool small(const StarCategory& A) { return A.num_objects() <= 4 && A.num_morphisms() <= 16; }

}  // namespace

int main() {
  const Corpus corpus = default_corpus();
  const SuiteOptions options;
  const SuiteReport r = run_suite("all", corpus, options);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("representability", [&]() -> Outcome {
    auto cs = r.of_kind("representability", "representable");
    bool sizes = true;
    for (const auto& c : corpus.categories) sizes = sizes && small(c.category);
    return {cs.size() >= 10 && cs.size() == corpus.categories.size() && sizes && all_pass(cs) &&
                suite_clean(r, "representability"),
            std::to_string(cs.size()) + " categories"};
  });

  criteria.emplace_back("weak equivalences", [&]() -> Outcome {
    auto cs = r.of_kind("equivalence", "agree");
    return {cs.size() >= 30 && cs.size() == corpus.morphisms.size() && all_pass(cs) && suite_clean(r, "equivalence"),
            std::to_string(cs.size()) + " morphisms"};
  });

  criteria.emplace_back("exponential law", [&]() -> Outcome {
    auto sharp = r.of_kind("exponential-law", "sharp");
    auto tensor = r.of_kind("exponential-law", "tensor");
    return {sharp.size() >= 10 && tensor.size() >= 10 && all_pass(sharp) && all_pass(tensor) &&
                suite_clean(r, "exponential-law"),
            std::to_string(sharp.size()) + " sharp, " + std::to_string(tensor.size()) + " tensor triples"};
  });

  criteria.emplace_back("factorization", [&]() -> Outcome {
    auto cyl = r.of_kind("factorization", "cylinder");
    auto path = r.of_kind("factorization", "path");
    auto uni = r.of_kind("factorization", "universal");
    const std::size_t n = corpus.morphisms.size();
    return {cyl.size() == n && path.size() == n && uni.size() == n && all_pass(cyl) && all_pass(path) &&
                all_pass(uni) && suite_clean(r, "factorization"),
            std::to_string(n) + " morphisms"};
  });

  criteria.emplace_back("model axioms", [&]() -> Outcome {
    std::size_t pairs = 0;
    for (const auto& f : corpus.morphisms) {
      for (const auto& g : corpus.morphisms) pairs += f.target == g.source;
    }
    auto two = r.of_kind("model", "two-of-three");
    auto retracts = r.of_kind("model", "retract-coproduct");
    auto retracts2 = r.of_kind("model", "retract-product");
    auto fib = r.of_kind("model", "fibration");
    auto fc = r.of_kind("model", "fibrant-cofibrant");
    return {two.size() == pairs && retracts.size() + retracts2.size() >= 5 &&
                fib.size() == corpus.morphisms.size() && fc.size() == corpus.categories.size() &&
                suite_clean(r, "model"),
            std::to_string(pairs) + " pairs, " + std::to_string(retracts.size() + retracts2.size()) + " retracts"};
  });

  criteria.emplace_back("fixed points", [&]() -> Outcome {
    auto fp = r.of_kind("fixed-points", "fixed-points");
    auto inj = r.of_kind("fixed-points", "injective");
    std::set<std::size_t> orders;
    bool plain = false, marked = false, linear = !corpus.linear_actions.empty(), bases = true;
    for (const auto& a : corpus.actions) {
      orders.insert(a.action.group.order());
      (a.action.base.flavor() == Flavor::marked ? marked : plain) = true;
      bases = bases && a.action.base.num_objects() <= 3;
    }
    for (const auto& a : corpus.linear_actions) {
      orders.insert(a.action.group.order());
      bases = bases && a.action.base.num_objects() <= 3;
    }
    const std::size_t n = corpus.actions.size() + corpus.linear_actions.size();
    return {n >= 6 && fp.size() == n && inj.size() == n && orders.count(2) && orders.count(3) && plain && marked &&
                linear && bases && suite_clean(r, "fixed-points"),
            std::to_string(n) + " actions"};
  });

  criteria.emplace_back("orbits", [&]() -> Outcome {
    std::size_t groupoids = 0;
    for (const auto& c : corpus.categories) groupoids += is_groupoid(c.category.base());
    auto colim = r.of_kind("orbits", "colimit");
    auto pt = r.of_kind("orbits", "orbit-pt");
    auto alg = r.of_kind("orbits", "group-algebra");
    bool z2 = false;
    for (const Check* c : alg) z2 = z2 || (c->name == "group-algebra:Z2" && c->witness.value("dimension", 0) == 2);
    return {colim.size() == 2 * groupoids && !pt.empty() && z2 && suite_clean(r, "orbits"),
            std::to_string(groupoids) + " groupoids"};
  });

  criteria.emplace_back("controlled", [&]() -> Outcome {
    for (const Check& c : r.checks) {
      if (c.suite == "controlled" && c.name == "controlled:z2") {
        const bool ok = c.status == CheckStatus::pass && c.witness.value("equivariant", false) &&
                        c.witness.value("isomorphic", false) && c.witness.value("measures", false) &&
                        c.witness.value("composition", false) && c.witness.value("control_definition", false);
        return {ok && suite_clean(r, "controlled"), "Z/2 with carriers 0, 1, 2"};
      }
    }
    return {false, "no Z/2 space in the corpus"};
  });

  criteria.emplace_back("fundamental groupoid", [&]() -> Outcome {
    std::size_t groupoids = 0;
    for (const auto& c : corpus.categories) groupoids += is_groupoid(c.category.base());
    auto d0 = r.of_kind("pi", "delta0");
    auto d1 = r.of_kind("pi", "delta1");
    bool nerve = false;
    for (const Check& c : r.checks) {
      nerve = nerve || (c.name == "nerve-bz2-into-bz2" && c.status == CheckStatus::pass);
    }
    return {d0.size() == groupoids && d1.size() == groupoids && nerve && suite_clean(r, "pi"),
            std::to_string(groupoids) + " groupoids"};
  });

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = criteria[i].second();
    std::printf("%s %zu %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.c_str());
    failures += !o.ok;
  }
  if (r.exit_code() != 0) {
    std::printf("FAIL report exit code %d\n", r.exit_code());
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}
