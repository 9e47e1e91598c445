#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "jumpnum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = jumpnum::cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("jumpnum_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::vector<std::string> lambdas(const json& doc) {
  std::vector<std::string> out;
  for (const auto& r : doc["jumping_numbers"]) out.push_back(r["lambda"].get<std::string>());
  return out;
}

}  // namespace

TEST_CASE("cli jump on the 3,4 cusp") {
  const auto r = call({"jump", "--poly", "x^4 - y^3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(lambdas(doc) == std::vector<std::string>{"7/12", "5/6", "11/12", "1"});
  CHECK(doc["lct"] == "7/12");
  int relevant = 0;
  for (const auto& x : doc["relevance"]) {
    if (!x["relevant"].get<bool>()) continue;
    ++relevant;
    CHECK(x["divisor"] == "E3");
    CHECK(x["witness"] == "11/12");
  }
  CHECK(relevant == 1);
  const auto text = call({"jump", "--poly", "x^4 - y^3"});
  CHECK(text.out.find("relevant divisors: E3 (valence 3, witness 11/12)") != std::string::npos);
}

TEST_CASE("cli relevance on two transversal cusps") {
  const auto r = call({"relevance", "--poly", "(x^3-y^2)*(x^2-y^3)"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("lct 1/2: no single contributor; critical set {E0,E3,E4}") != std::string::npos);
  const auto doc = json::parse(call({"relevance", "--poly", "(x^3-y^2)*(x^2-y^3)", "--format", "json"}).out);
  std::vector<std::string> relevant;
  for (const auto& x : doc["relevance"]) {
    if (x["relevant"].get<bool>()) {
      relevant.push_back(x["divisor"].get<std::string>());
      CHECK(x["witness"] == "9/10");
    }
  }
  CHECK(relevant == std::vector<std::string>{"E3", "E4"});
  CHECK(doc["lct"]["contributing"].empty());
}

TEST_CASE("cli resolve from a branch file") {
  const auto file = temp_file("cusp34.json", R"({"branches": [{"name": "C", "char_exponents": [3, 4], "multiplicity": 1}]})");
  const auto r = call({"resolve", "--branches", file, "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  std::vector<long long> a, k;
  for (const auto& d : doc["divisors"]) {
    a.push_back(d["a"].get<long long>());
    k.push_back(d["k"].get<long long>());
  }
  CHECK(a == std::vector<long long>{3, 4, 8, 12});
  CHECK(k == std::vector<long long>{1, 2, 4, 6});
}

TEST_CASE("cli branch files with contacts and diagram files") {
  const auto two = temp_file("two.json", R"({"branches": [{"name": "A", "char_exponents": [2, 3]}, {"name": "B", "char_exponents": [2, 3]}],
                                             "contacts": [{"pair": ["A", "B"], "shared_points": 1}]})");
  const auto from_file = json::parse(call({"jump", "--branches", two, "--format", "json"}).out);
  const auto from_poly = json::parse(call({"jump", "--poly", "(x^3-y^2)*(x^2-y^3)", "--format", "json"}).out);
  CHECK(lambdas(from_file) == lambdas(from_poly));

  const auto diagram = temp_file("diagram.json", R"({"points": [{"id": 0, "parent": null}, {"id": 1, "parent": 0},
                                                               {"id": 2, "parent": 1, "extra_proximity": 0}],
                                                    "branches": [{"name": "C", "path": [0, 1, 2], "char_exponents": [2, 3]}]})");
  const auto d = call({"jump", "--diagram", diagram, "--format", "json"});
  REQUIRE(d.code == 0);
  CHECK(lambdas(json::parse(d.out)) == std::vector<std::string>{"5/6", "1"});

  const auto bad_ids = temp_file("bad_ids.json", R"({"points": [{"id": 1, "parent": null}], "branches": []})");
  CHECK(call({"resolve", "--diagram", bad_ids}).code == 1);
  const auto unknown = temp_file("unknown.json", R"({"branches": [{"name": "A", "char_exponents": [2, 3]}], "contacts": [{"pair": ["A", "Z"], "shared_points": 1}]})");
  CHECK(call({"resolve", "--branches", unknown}).code == 1);
}

TEST_CASE("cli text and json carry the same data") {
  const std::vector<std::vector<std::string>> cases{
      {"resolve", "--poly", "(x^3-y^2)*(x^2-y^3)"}, {"jump", "--poly", "x^5 - y^3", "--bound", "3/2"},
      {"relevance", "--poly", "x*y*(x-y)"},         {"oracle", "--poly", "x^7 - y^4"},
      {"graph", "--poly", "x^4 - y^3"},
  };
  for (auto args : cases) {
    const auto text = call(args);
    args.insert(args.end(), {"--format", "json"});
    const auto js = call(args);
    REQUIRE(text.code == 0);
    REQUIRE(js.code == 0);
    const auto doc = json::parse(js.out);
    CHECK(jumpnum::cli::render_text(doc) == text.out);
    CHECK(json::parse(doc.dump()) == doc);
  }
}

TEST_CASE("cli graph emits dot") {
  const auto r = call({"graph", "--poly", "x^4 - y^3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("graph", 0) == 0);
  CHECK(r.out.find("E3 [a=12,k=6,self=-1]") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"jump"}).code == 1);
  CHECK(call({"jump", "--poly", "x", "--branches", "f.json"}).code == 1);
  CHECK(call({"nonsense", "--poly", "x^2 - y^3"}).code == 1);
  CHECK(call({"jump", "--poly", "x^2 - "}).code == 1);
  CHECK(call({"jump", "--poly", "x^2 - y^3", "--bound", "0"}).code == 1);
  CHECK(call({"jump", "--poly", "x^2 - y^3", "--bound", "a/b"}).code == 1);
  CHECK(call({"jump", "--poly", "x^2 - y^3", "--format", "xml"}).code == 1);
  CHECK(call({"jump", "--branches", "/nonexistent/file.json"}).code == 1);
  CHECK(call({"jump", "--branches", temp_file("broken.json", "{")}).code == 1);
  CHECK(call({"oracle", "--poly", "(x - y)^2 + x^3"}).code == 1);
  CHECK(call({"jump", "--poly", "y^2 - 2*x^2", "--ext-depth", "0"}).code == 1);
  CHECK(call({"jump", "--poly", "y^2 - 2*x^2", "--ext-depth", "1"}).code == 0);
  const auto e = call({"jump", "--poly", "x + z"});
  CHECK(e.err.find("offset 4") != std::string::npos);
}

TEST_CASE("cli seeded self-check") {
  for (const char* seed : {"1", "2", "99"}) {
    CHECK(call({"jump", "--poly", "(x^3-y^2)*(x^2-y^3)*(x+y)", "--seed", seed}).code == 0);
  }
}
