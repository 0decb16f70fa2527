// mstar: check, construct and verify finite (marked) *-categories.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 bound exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mstar/controlled.hpp"
#include "mstar/corpus.hpp"
#include "mstar/equivariant.hpp"
#include "mstar/error.hpp"
#include "mstar/gtensor.hpp"
#include "mstar/io.hpp"
#include "mstar/model.hpp"
#include "mstar/suites.hpp"

namespace fs = std::filesystem;
using namespace mstar;

namespace {

constexpr int kPass = 0, kFailure = 1, kInputError = 2, kBoundExceeded = 3;

/// Raised for unusable command-line input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// A construction whose certificates fail; maps to exit code 1.
struct CertificateFailure : std::runtime_error {
  CertificateFailure(const std::string& what, json w) : std::runtime_error(what), witness(std::move(w)) {}
  json witness;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// ---- check ----

/// Validates one document; throws the validation error when invalid.
json validate_document(const json& j, DocKind kind) {
  switch (kind) {
    case DocKind::category: {
      FinCategory c = category_from_json(j);
      return {{"objects", c.num_objects()}, {"morphisms", c.num_morphisms()}};
    }
    case DocKind::star_category: {
      StarCategory A = star_category_from_json(j);
      return {{"objects", A.num_objects()},
              {"morphisms", A.num_morphisms()},
              {"marked", A.marked_list().size()},
              {"flavor", A.flavor() == Flavor::marked ? "marked" : "unmarked"}};
    }
    case DocKind::linear_category: {
      LinearStarCategory A = linear_from_json(j);
      return {{"objects", A.num_objects()}, {"marked", A.marked().size()}};
    }
    case DocKind::simplicial_set: {
      SimplicialSet K = simplicial_from_json(j);
      return {{"vertices", K.vertices().size()}, {"edges", K.edges().size()}, {"triangles", K.triangles().size()}};
    }
    case DocKind::functor: {
      FunctorDocument d = functor_from_json(j);
      return {{"domain_objects", d.domain.num_objects()}, {"codomain_objects", d.codomain.num_objects()}};
    }
    case DocKind::action: {
      if (is_linear_action(j)) {
        LinearGAction a = linear_action_from_json(j);
        return {{"order", a.group.order()}, {"linear", true}};
      }
      GAction a = action_from_json(j);
      return {{"order", a.group.order()}, {"linear", false}};
    }
    case DocKind::space: {
      BornCoarseSpace X = space_from_json(j);
      return {{"points", X.size()}, {"equivariant", X.group.has_value()}};
    }
    case DocKind::group: {
      FinGroup G = group_from_json(j);
      return {{"order", G.order()}};
    }
    case DocKind::report: {
      Verdict v = validate_report(j);
      if (!v) throw Error(ErrorKind::parse_error, "malformed report", v.witness);
      return {{"checks", j["checks"].size()}};
    }
    case DocKind::triple: {
      if (is_linear_triple(j)) {
        linear_triple_from_json(j);
        return {{"linear", true}};
      }
      triple_from_json(j);
      return {{"linear", false}};
    }
  }
  return nullptr;
}

int cmd_check(const std::vector<std::string>& files, const std::string& output) {
  SuiteReport report;
  int code = kPass;
  for (const std::string& f : files) {
    json j;
    DocKind kind;
    try {
      j = read_json_file(f);
      kind = detect_kind(j);
    } catch (const Error& e) {
      std::cerr << f << ": " << e.what() << "\n";
      if (!e.witness().is_null()) std::cerr << e.witness().dump() << "\n";
      return kInputError;
    }
    Check c{"check", std::string(to_string(kind)) + ":" + f, CheckStatus::pass, nullptr};
    try {
      c.witness = validate_document(j, kind);
    } catch (const Error& e) {
      // A structurally readable file that violates an invariant is a
      // verification failure; unreadable fields are input errors.
      if (e.kind() == ErrorKind::parse_error && kind != DocKind::report) {
        std::cerr << f << ": " << e.what() << "\n";
        if (!e.witness().is_null()) std::cerr << e.witness().dump() << "\n";
        return kInputError;
      }
      c.status = e.kind() == ErrorKind::bound_exceeded ? CheckStatus::bound_exceeded : CheckStatus::fail;
      c.witness = {{"error", to_string(e.kind())}, {"message", e.what()}, {"detail", e.witness()}};
    }
    report.checks.push_back(std::move(c));
  }
  code = report.exit_code();
  write_output(dump(report.to_json(SuiteOptions{})), output);
  return code;
}

// ---- construct ----

struct ConstructArgs {
  std::string kind;
  std::string input, groupoid, group = "Z2", classifier_kind, part = "middle";
  std::string carrier_sizes = "0,1,2";
  bool equivariant = false;
  std::string output, format = "json";
  std::uint64_t bound = SearchBudget::kDefaultLimit;
};

json need_input(const ConstructArgs& a) {
  if (a.input.empty()) throw InputError("--input is required for " + a.kind);
  return read_json_file(a.input);
}

bool is_linear_doc(const json& j) { return detect_kind(j) == DocKind::linear_category; }

FinCategory groupoid_arg(const ConstructArgs& a) {
  if (a.groupoid.empty()) throw InputError("--groupoid is required for " + a.kind);
  if (a.groupoid == "I") return indiscrete_category(2);
  if (a.groupoid.size() > 2 && a.groupoid.compare(0, 2, "BZ") == 0) {
    return delooping(cyclic_group(std::stoul(a.groupoid.substr(2)))).base();
  }
  json j = read_json_file(a.groupoid);
  FinCategory g = detect_kind(j) == DocKind::star_category ? star_category_from_json(j).base() : category_from_json(j);
  groupoid_inverses(g);
  return g;
}

FinGroup group_arg(const ConstructArgs& a) {
  if (a.group.size() > 1 && a.group[0] == 'Z' &&
      a.group.find_first_not_of("0123456789", 1) == std::string::npos) {
    const unsigned long n = std::stoul(a.group.substr(1));
    if (n == 0) throw InputError("group order must be positive");
    return cyclic_group(n);
  }
  return group_from_json(read_json_file(a.group));
}

std::vector<std::uint32_t> sizes_arg(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("carrier sizes are comma-separated integers");
    }
    out.push_back(std::uint32_t(std::stoul(item)));
  }
  return out;
}

std::string render(const StarCategory& A, const std::string& fmt) { return fmt == "dot" ? to_dot(A) : dump(to_json(A)); }
std::string render(const LinearStarCategory& A, const std::string& fmt) {
  return fmt == "dot" ? to_dot(A) : dump(to_json(A));
}

std::string construct(const ConstructArgs& a) {
  const std::string& k = a.kind;
  if (k == "classifier") {
    static const std::map<std::string, ClassifierKind> kinds{{"object", ClassifierKind::object},
                                                             {"invertible", ClassifierKind::invertible},
                                                             {"unitary", ClassifierKind::unitary},
                                                             {"marked-unitary", ClassifierKind::marked_unitary}};
    auto it = kinds.find(a.classifier_kind);
    if (it == kinds.end()) throw InputError("--kind is one of object, invertible, unitary, marked-unitary");
    return render(classifier(it->second), a.format);
  }
  if (k == "linearize") return render(linearize(star_category_from_json(need_input(a))), a.format);
  if (k == "sharp") {
    json j = need_input(a);
    FinCategory G = groupoid_arg(a);
    if (is_linear_doc(j)) return render(sharp(linear_from_json(j), G).category, a.format);
    return render(sharp(star_category_from_json(j), G).category, a.format);
  }
  if (k == "funu") {
    json j = need_input(a);
    FinCategory G = groupoid_arg(a);
    if (is_linear_doc(j)) return render(funu(G, linear_from_json(j), a.bound).category(), a.format);
    return render(funu(G, star_category_from_json(j), a.bound).category, a.format);
  }
  if (k == "orbit") {
    json j = need_input(a);
    FinGroup G = group_arg(a);
    if (is_linear_doc(j)) return render(sharp(linear_from_json(j), delooping(G).base()).category, a.format);
    return render(orbit(star_category_from_json(j), G).category, a.format);
  }
  if (k == "fixed-points") {
    json j = need_input(a);
    if (is_linear_action(j)) return render(fixed_points(linear_action_from_json(j), a.bound).sub.category, a.format);
    return render(fixed_points(action_from_json(j), a.bound).category, a.format);
  }
  if (k == "vplus") {
    BornCoarseSpace X = space_from_json(need_input(a));
    const std::vector<std::uint32_t> sizes = sizes_arg(a.carrier_sizes);
    if (a.equivariant) return render(equivariant_vplus(X, sizes, a.bound).category, a.format);
    return render(build_vplus(X, sizes, a.bound).category, a.format);
  }
  if (k == "cylinder" || k == "path") {
    FunctorDocument d = functor_from_json(need_input(a));
    Factorization F = k == "cylinder" ? cylinder_factorize(d.domain, d.codomain, d.map)
                                      : path_factorize(d.domain, d.codomain, d.map, a.bound);
    if (!F.certified) throw CertificateFailure(k + " factorization not certified", F.certificates);
    if (a.part == "middle") return render(F.middle, a.format);
    if (a.format == "dot") throw InputError("functors are exported as JSON only");
    if (a.part == "first") return dump(functor_to_json(d.domain, F.middle, F.first));
    if (a.part == "second") return dump(functor_to_json(F.middle, d.codomain, F.second));
    throw InputError("--part is one of middle, first, second");
  }
  throw InputError("unknown construction " + k);
}

// ---- verify ----

struct VerifyArgs {
  std::string corpus, suite = "all", output, format = "json";
  SuiteOptions options;
};

int cmd_verify(const VerifyArgs& a) {
  Corpus corpus;
  if (a.corpus.empty()) {
    corpus = default_corpus();
  } else {
    if (!fs::is_directory(a.corpus)) throw InputError("corpus directory not found: " + a.corpus);
    corpus = load_corpus(a.corpus);
  }
  SuiteReport r = run_suite(a.suite, corpus, a.options);
  const std::string doc = a.format == "dot" ? r.to_dot() : dump(r.to_json(a.options));
  if (a.output.empty()) {
    std::cout << doc;
    std::cerr << r.table();
  } else {
    write_output(doc, a.output);
    std::cout << r.table();
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finite marked *-categories and linear *-categories over Q(i)"};
  app.require_subcommand(1);

  std::vector<std::string> check_files;
  std::string check_output;
  auto* check = app.add_subcommand("check", "Validate JSON documents");
  check->add_option("files", check_files, "Documents to validate")->required();
  check->add_option("-o,--output", check_output, "Write the report here instead of stdout");

  ConstructArgs ca;
  auto* cons = app.add_subcommand("construct", "Build a construction and print it");
  cons->add_option("construction", ca.kind, "sharp, funu, cylinder, path, fixed-points, orbit, vplus, classifier, linearize")
      ->required()
      ->check(CLI::IsMember(
          {"sharp", "funu", "cylinder", "path", "fixed-points", "orbit", "vplus", "classifier", "linearize"}));
  cons->add_option("-i,--input", ca.input, "Input document");
  cons->add_option("--groupoid", ca.groupoid, "Groupoid document, or I / BZn");
  cons->add_option("--group", ca.group, "Group document, or Zn")->capture_default_str();
  cons->add_option("--kind", ca.classifier_kind, "Classifier: object, invertible, unitary, marked-unitary");
  cons->add_option("--part", ca.part, "Factorization part: middle, first, second")->capture_default_str();
  cons->add_option("--carrier-sizes", ca.carrier_sizes, "Carrier sizes for vplus")->capture_default_str();
  cons->add_flag("--equivariant", ca.equivariant, "Equivariant objects for vplus");
  cons->add_option("-o,--output", ca.output, "Output file (default stdout)");
  cons->add_option("--format", ca.format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  cons->add_option("--bound", ca.bound, "Search budget")->capture_default_str();

  VerifyArgs va;
  double bound = double(SearchBudget::kDefaultLimit);
  auto* ver = app.add_subcommand("verify", "Run verification suites over a corpus");
  ver->add_option("--corpus", va.corpus, "Corpus directory (default: built-in corpus)");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", va.suite, "Suite name or all")->check(CLI::IsMember(suites))->capture_default_str();
  ver->add_option("--max-objects", va.options.max_objects, "Skip categories with more objects")->capture_default_str();
  ver->add_option("--max-morphisms", va.options.max_morphisms, "Skip categories with more morphisms")
      ->capture_default_str();
  ver->add_option("--word-length", va.options.word_length, "Word length for free presentations")
      ->capture_default_str();
  ver->add_option("--bound", bound, "Search budget per search (accepts 1e6)")->capture_default_str();
  ver->add_option("--seed", va.options.seed, "Seed for sampled checks")->capture_default_str();
  ver->add_option("--format", va.format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  ver->add_option("-o,--output", va.output, "Write the report here; the table goes to stdout");

  std::string export_dir;
  auto* corpus = app.add_subcommand("corpus", "Corpus utilities");
  corpus->require_subcommand(1);
  auto* exp = corpus->add_subcommand("export", "Write the built-in corpus to a directory");
  exp->add_option("dir", export_dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(check_files, check_output);
    if (*cons) {
      write_output(construct(ca), ca.output);
      return kPass;
    }
    if (*ver) {
      if (!(bound >= 1) || bound > 1.8e19) throw InputError("--bound must be a positive count");
      va.options.bound = std::uint64_t(bound);
      return cmd_verify(va);
    }
    if (*exp) {
      export_corpus(default_corpus(), export_dir);
      return kPass;
    }
  } catch (const CertificateFailure& e) {
    std::cerr << "error: " << e.what() << "\n" << e.witness.dump() << "\n";
    return kFailure;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.witness().is_null()) std::cerr << e.witness().dump() << "\n";
    if (e.kind() == ErrorKind::bound_exceeded) return kBoundExceeded;
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kPass;
}
