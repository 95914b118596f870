#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli/app.hpp"
#include "support.hpp"

namespace {

namespace fsys = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = normed::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fsys::temp_directory_path() / ("normed_cli_test_" + std::to_string(::getpid()))) {
    fsys::create_directories(dir_);
  }
  ~Scratch() { fsys::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fsys::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fsys::path dir_;
};

const char* kIdentity = R"({"domain":{"elements":[{"label":"a","norm":"1"},{"label":"b","norm":"2"}]},
  "codomain":{"elements":[{"label":"a","norm":"1"},{"label":"b","norm":"2"}]},"map":[["a","a"],["b","b"]]})";

}  // namespace

TEST_CASE("cli: classify identity") {
  Scratch dir;
  const auto r = run({"classify", "--map", dir.write("m.json", kIdentity)});
  REQUIRE(r.code == 0);
  const auto j = normed::serialization::parse_json(r.out);
  for (const char* cat : {"cset1", "csetinf"}) CHECK(j[cat]["iso"] == true);
}

TEST_CASE("cli: crh, compose and constructions") {
  Scratch dir;
  const std::string phi = dir.write("phi.json", R"({"domain":{"elements":[{"label":"a","norm":"1"}]},
    "codomain":{"elements":[{"label":"x","norm":"2"}]},"map":[["a","x"]]})");
  const std::string psi = dir.write("psi.json", R"({"domain":{"elements":[{"label":"x","norm":"2"}]},
    "codomain":{"elements":[{"label":"u","norm":"3"}]},"map":[["x","u"]]})");
  auto r = run({"crh", "--map", phi});
  CHECK(r.code == 0);
  CHECK(normed::serialization::parse_json(r.out)["crh"] == "2");
  r = run({"compose", "--first", phi, "--second", psi});
  CHECK(r.code == 0);
  CHECK(normed::serialization::parse_json(r.out)["crh"] == "3");
  CHECK(run({"compose", "--first", psi, "--second", phi}).code == 1);

  const std::string s = dir.write("s.json", R"({"elements":[{"label":"a","norm":"2"}]})");
  const std::string t = dir.write("t.json", R"({"elements":[{"label":"b","norm":"3"}]})");
  r = run({"product", "--set", s, "--set", t});
  CHECK(r.code == 0);
  const auto j = normed::serialization::parse_json(r.out);
  CHECK(j["object"]["elements"][0]["norm"] == "3");
  CHECK(j["legs"].size() == 2);
  CHECK(run({"coproduct", "--set", s, "--set", t}).code == 0);
  CHECK(run({"equalizer", "--first", phi, "--second", phi}).code == 0);
  CHECK(run({"coequalizer", "--first", phi, "--second", phi}).code == 0);
}

TEST_CASE("cli: free space") {
  Scratch dir;
  const std::string v = dir.write("v.json", R"({"base":{"elements":[{"label":"a","norm":"1/2"},{"label":"b","norm":"1"}]},
    "coeffs":[["a","2","0"],["b","-3","0"]]})");
  auto r = run({"free-space", "norm", "--vector", v});
  CHECK(r.code == 0);
  CHECK(normed::serialization::parse_json(r.out)["norm"] == "4");

  const std::string problem = dir.write("p.json", R"({"base":{"elements":[{"label":"a","norm":"1"},{"label":"b","norm":"2"}]},
    "target":{"kind":"scalar"},"images":[["a","1"],["b","1"]]})");
  const std::string arg = dir.write("arg.json", R"({"base":{"elements":[{"label":"a","norm":"1"},{"label":"b","norm":"2"}]},
    "coeffs":[["a","2"],["b","1"]]})");
  r = run({"free-space", "extend", "--problem", problem, "--apply", arg});
  CHECK(r.code == 0);
  const auto j = normed::serialization::parse_json(r.out);
  CHECK(j["operator_norm"] == "1");
  CHECK(j["applied"] == normed::serialization::parse_json(R"(["3","0"])"));

  const std::string unbounded = dir.write("u.json", R"({"base":{"elements":[{"label":"a","norm":"0"}]},
    "target":{"kind":"coordinates","weights":["1","2"]},"images":[["a",["1","0"]]]})");
  CHECK(run({"free-space", "extend", "--problem", unbounded}).code == 2);

  const std::string irrational = dir.write("i.json", R"({"base":{"elements":[{"label":"a","norm":"1"}]},
    "target":{"kind":"scalar"},"images":[["a",["1","1"]]]})");
  CHECK(run({"--mode", "complex", "free-space", "extend", "--problem", irrational, "--scaled-free"}).code == 2);
  r = run({"--mode", "complex", "free-space", "extend", "--problem", irrational});
  CHECK(r.code == 0);
  CHECK(normed::serialization::parse_json(r.out)["operator_norm"].get<std::string>().front() == '[');
  CHECK(run({"free-space", "extend", "--problem", irrational}).code == 3);

  const std::string base = dir.write("base.json", R"({"elements":[{"label":"a","norm":"1"},{"label":"z","norm":"0"}]})");
  r = run({"free-space", "check", "--base", base, "--samples", "5"});
  CHECK(r.code == 0);
  CHECK(run({"check", "adjunction", "--base", base, "--samples", "3"}).code == 0);
}

TEST_CASE("cli: free algebra") {
  Scratch dir;
  const std::string x = dir.write("x.json", R"({"base":{"elements":[{"label":"a","norm":"1/2"},{"label":"b","norm":"4"}]},
    "terms":[{"word":["a","b"],"coeff":["3","0"]}]})");
  auto r = run({"free-algebra", "norm", "--element", x});
  CHECK(r.code == 0);
  CHECK(normed::serialization::parse_json(r.out)["norm"] == "6");
  r = run({"free-algebra", "mul", "--left", x, "--right", x});
  CHECK(r.code == 0);
  CHECK(normed::serialization::parse_json(r.out)["norm"] == "36");
  CHECK(run({"--degree-cap", "3", "free-algebra", "mul", "--left", x, "--right", x}).code == 1);

  const std::string refused = dir.write("r.json", R"({"base":{"elements":[{"label":"s","norm":"1"}]},
    "target":{"kind":"scalar"},"images":[["s","2"]]})");
  r = run({"free-algebra", "extend", "--problem", refused});
  CHECK(r.code == 2);
  CHECK(r.err.find("contractive") != std::string::npos);

  const std::string matrix = dir.write("m.json", R"({"base":{"elements":[{"label":"s","norm":"1"}]},
    "target":{"kind":"matrix","size":2},"images":[["s",[["0","1"],["0","0"]]]]})");
  const std::string s2 = dir.write("s2.json", R"({"base":{"elements":[{"label":"s","norm":"1"}]},
    "terms":[{"word":["s","s"],"coeff":["1","0"]},{"word":["s"],"coeff":["1","0"]}]})");
  r = run({"free-algebra", "extend", "--problem", matrix, "--apply", s2});
  CHECK(r.code == 0);
  CHECK(normed::serialization::parse_json(r.out)["applied_norm"] == "1");

  r = run({"free-algebra", "conv-check", "--weight", "1", "--degree", "20"});
  CHECK(r.code == 0);
  CHECK(normed::serialization::parse_json(r.out)["ok"] == true);
  CHECK(run({"--degree-cap", "10", "free-algebra", "conv-check", "--degree", "20"}).code == 1);
}

TEST_CASE("cli: demos") {
  auto r = run({"demo", "banalg", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ratio: 8\n") != std::string::npos);
  CHECK(run({"demo", "banalg", "--n", "1"}).code == 2);
  r = run({"demo", "hilbert", "--fs", "1", "--ft", "2", "--json"});
  CHECK(r.code == 0);
  const auto j = normed::serialization::parse_json(r.out);
  CHECK(j["required_bound"] == "9");
  CHECK(j["violated_bound"] == "5");
  CHECK(run({"demo", "hilbert", "--fs", "1", "--ft", "0"}).code == 1);
  CHECK(run({"demo", "set-reflection", "--candidate-norm", "1/2", "--k", "3"}).code == 0);
  CHECK(run({"demo", "set-reflection", "--k", "0"}).code == 2);
  CHECK(run({"demo", "no-product", "--stage", "5"}).code == 0);
  CHECK(run({"demo", "no-coproduct", "--stage", "0"}).code == 1);
}

TEST_CASE("cli: errors and determinism") {
  Scratch dir;
  CHECK(run({}).code == 3);
  CHECK(run({"bogus"}).code == 3);
  CHECK(run({"crh"}).code == 3);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"crh", "--map", "/nonexistent/map.json"}).code == 1);
  CHECK(run({"crh", "--map", dir.write("bad.json", "{not json")}).code == 3);
  CHECK(run({"crh", "--map", dir.write("wrong.json", R"({"domain":5})")}).code == 3);
  CHECK(run({"--mode", "quaternion", "crh", "--map", dir.write("m.json", kIdentity)}).code == 3);

  const std::string m = dir.write("m.json", kIdentity);
  const auto first = run({"classify", "--map", m});
  const auto second = run({"classify", "--map", m});
  CHECK(first.out == second.out);
  const auto laws = run({"--universe-size", "2", "check", "laws", "--seed", "4"});
  CHECK(laws.code == 0);
  CHECK(laws.out == run({"--universe-size", "2", "check", "laws", "--seed", "4"}).out);
}
