#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "mstar/io.hpp"
#include "mstar/suites.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kBinary = MSTAR_BINARY;

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("mstar-cli-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const int status = std::system((kBinary + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& p, const std::string& text) { std::ofstream(p) << text; }

// One object with a∘a = b and every other product of a, b equal to a.
const char* kNonAssociative = R"({
  "objects": ["x"],
  "morphisms": [{"id": "e", "src": "x", "tgt": "x"}, {"id": "a", "src": "x", "tgt": "x"},
                {"id": "b", "src": "x", "tgt": "x"}],
  "identity": {"x": "e"},
  "compose": [["e", "e", "e"], ["e", "a", "a"], ["e", "b", "b"], ["a", "e", "a"], ["b", "e", "b"],
              ["a", "a", "b"], ["a", "b", "a"], ["b", "a", "a"], ["b", "b", "a"]]
})";

}  // namespace

TEST_CASE("verify is deterministic and self-validating") {
  Scratch s;
  REQUIRE(run("verify --suite representability -o " + s.path("a.json")) == 0);
  REQUIRE(run("verify --suite representability -o " + s.path("b.json")) == 0);
  CHECK(slurp(s.path("a.json")) == slurp(s.path("b.json")));
  const auto report = mstar::parse_json_text(slurp(s.path("a.json")));
  CHECK(mstar::validate_report(report));
  CHECK(report["summary"]["fail"] == 0);
  CHECK(run("check " + s.path("a.json")) == 0);
  CHECK(slurp(s.path("a.json")).find("time") == std::string::npos);
}

TEST_CASE("exit codes") {
  Scratch s;
  write(s.path("nonassoc.json"), kNonAssociative);
  CHECK(run("check " + s.path("nonassoc.json")) == 1);
  write(s.path("broken.json"), "{\"objects\": [");
  CHECK(run("check " + s.path("broken.json")) == 2);
  CHECK(run("check " + s.path("missing.json")) == 2);
  CHECK(run("verify --corpus " + s.path("no-such-dir")) == 2);
  CHECK(run("verify --suite representability --bound 1") == 3);
  CHECK(run("frobnicate") == 2);
}

TEST_CASE("an empty corpus has no checks") {
  Scratch s;
  fs::create_directories(s.path("empty"));
  REQUIRE(run("verify --corpus " + s.path("empty") + " -o " + s.path("r.json")) == 0);
  const auto report = mstar::parse_json_text(slurp(s.path("r.json")));
  CHECK(report["summary"]["total"] == 0);
  CHECK(report["checks"].empty());
}

TEST_CASE("exported corpus re-validates and reproduces the built-in report") {
  Scratch s;
  REQUIRE(run("corpus export " + s.path("cx")) == 0);
  std::string files;
  std::size_t count = 0;
  for (const auto& e : fs::recursive_directory_iterator(s.path("cx"))) {
    if (e.is_regular_file()) {
      files += " " + e.path().string();
      ++count;
    }
  }
  CHECK(count > 100);
  CHECK(run("check" + files) == 0);
  REQUIRE(run("verify --suite equivalence -o " + s.path("builtin.json")) == 0);
  REQUIRE(run("verify --suite equivalence --corpus " + s.path("cx") + " -o " + s.path("loaded.json")) == 0);
  CHECK(slurp(s.path("builtin.json")) == slurp(s.path("loaded.json")));
}

TEST_CASE("constructions write documents that check") {
  Scratch s;
  REQUIRE(run("corpus export " + s.path("cx")) == 0);
  const std::string bz2 = s.path("cx/categories/005-bz2.json");
  REQUIRE(fs::exists(bz2));
  const std::vector<std::string> builds{
      "construct sharp -i " + bz2 + " --groupoid I",
      "construct funu -i " + bz2 + " --groupoid BZ2",
      "construct orbit -i " + bz2 + " --group Z3",
      "construct classifier --kind marked-unitary",
      "construct linearize -i " + bz2,
      "construct cylinder -i " + s.path("cx/morphisms/000-id-pt.json"),
      "construct path -i " + s.path("cx/morphisms/000-id-pt.json") + " --part second",
      "construct fixed-points -i " + s.path("cx/actions/000-z2-trivial-pt.json"),
      "construct vplus -i " + s.path("cx/spaces/000-z2.json") + " --equivariant",
  };
  for (std::size_t k = 0; k < builds.size(); ++k) {
    CAPTURE(builds[k]);
    const std::string out = s.path("out" + std::to_string(k) + ".json");
    REQUIRE(run(builds[k] + " -o " + out) == 0);
    CHECK(run("check " + out) == 0);
  }
  CHECK(run("construct funu -i " + bz2 + " --groupoid BZ3 --bound 1") == 3);
  CHECK(run("construct sharp -i " + bz2 + " --groupoid " + s.path("cx/morphisms/000-id-pt.json")) == 2);
}
