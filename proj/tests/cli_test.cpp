#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gspline/cli/commands.hpp>
#include <gspline/io/documents.hpp>

#include "support/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace gspline;
using gspline::io::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gspline");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("gspline-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const json& doc) const {
    const auto path = dir_ / name;
    std::ofstream(path) << doc.dump();
    return path.string();
  }
  std::string write_text(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string spline_file(const Scratch& s, const std::string& name, std::initializer_list<const char*> values) {
  json v = json::array();
  for (const char* x : values) v.push_back(x);
  return s.write(name, json{{"values", v}});
}

}  // namespace

TEST_CASE("verify") {
  Scratch s;
  const auto g = s.write("g.json", io::graph_to_json(io::graph_document(fixtures::diamond())));
  auto r = run({"verify", "--graph", g, "--spline", spline_file(s, "f.json", {"2", "32", "34", "50"})});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.doc()["is_spline"] == true);
  CHECK(r.doc()["violation"].is_null());

  r = run({"verify", "--graph", g, "--spline", spline_file(s, "bad.json", {"0", "1", "0", "0"})});
  CHECK(r.code == cli::kNegative);
  CHECK(r.doc()["is_spline"] == false);
  CHECK(r.doc()["violation"]["label"] == "5");

  r = run({"verify", "--graph", g, "--spline", spline_file(s, "short.json", {"0", "1"}), "--format", "text"});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("invariants") {
  Scratch s;
  const auto g = s.write("g.json", io::graph_to_json(io::graph_document(fixtures::diamond())));
  auto r = run({"invariants", "--graph", g});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.doc()["moduli"] == json{"1", "30", "4", "18"});
  CHECK(r.doc()["q_g"] == "2160");

  r = run({"invariants", "--graph", g, "--format", "text"});
  CHECK(r.out.find("Q_G = 2160") != std::string::npos);

  const auto p = s.write("p.json", io::graph_to_json(io::graph_document(fixtures::poly_triangle())));
  r = run({"invariants", "--graph", p});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.doc()["moduli"][1] == "x^2 + x");
  CHECK(Polynomial::parse(r.doc()["q_g"].get<std::string>()) == Polynomial::parse("x^2*(x+1)^2"));
}

TEST_CASE("trails and selections") {
  Scratch s;
  const auto g = s.write("g.json", io::graph_to_json(io::graph_document(fixtures::diamond())));
  auto r = run({"trails", "--graph", g, "--vertex", "2"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.doc()["trails"].size() == 3);

  r = run({"trails", "--graph", g, "--vertex", "2", "--to", "1"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.doc()["trails"].size() == 9);

  r = run({"selections", "--graph", g, "--vertex", "2"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.doc()["modulus"] == "30");
  CHECK(r.doc()["selections"].size() == 4);

  CHECK(run({"selections", "--graph", g, "--vertex", "1"}).code == cli::kInputError);
  CHECK(run({"selections", "--graph", g, "--vertex", "9"}).code == cli::kInputError);
  CHECK(run({"trails", "--graph", g, "--vertex", "0"}).code == cli::kInputError);
}

TEST_CASE("construct") {
  Scratch s;
  const auto k = s.write("k5.json", io::graph_to_json(io::graph_document(fixtures::k5())));
  const auto listed = run({"selections", "--graph", k, "--vertex", "2", "--complete"});
  REQUIRE(listed.code == cli::kSuccess);
  const auto sels = listed.doc()["selections"];
  REQUIRE(sels.size() > 0);
  for (std::size_t id = 0; id < sels.size(); ++id) {
    const auto r = run({"construct", "--graph", k, "--vertex", "2", "--selection", std::to_string(id)});
    REQUIRE(r.code == cli::kSuccess);
    const auto values = r.doc()["values"];
    CHECK(values[0] == "0");
    CHECK(values[1] == sels[id]["value"]);
    const auto f = s.write("f.json", r.doc());
    CHECK(run({"verify", "--graph", k, "--spline", f}).code == cli::kSuccess);
  }
  CHECK(run({"construct", "--graph", k, "--vertex", "2", "--selection", "999"}).code == cli::kInputError);

  const auto top = run({"construct", "--graph", k, "--vertex", "5"});
  REQUIRE(top.code == cli::kSuccess);
  CHECK(top.doc()["values"][0] == "0");

  // Incomplete graphs are completed with a note.
  const auto g = s.write("g.json", io::graph_to_json(io::graph_document(fixtures::diamond())));
  const auto r = run({"construct", "--graph", g, "--vertex", "2", "--selection", "0"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.err.find("not complete") != std::string::npos);
}

TEST_CASE("check-basis") {
  Scratch s;
  const auto g = s.write("g.json", io::graph_to_json(io::graph_document(fixtures::diamond())));
  const auto f1 = spline_file(s, "f1.json", {"1", "1", "1", "1"});
  const auto f2 = spline_file(s, "f2.json", {"0", "30", "0", "48"});
  const auto f3 = spline_file(s, "f3.json", {"0", "0", "8", "0"});
  const auto f4 = spline_file(s, "f4.json", {"0", "0", "0", "36"});
  auto r = run({"check-basis", "--graph", g, "--spline", f1, "--spline", f2, "--spline", f3, "--spline", f4});
  CHECK(r.code == cli::kNegative);
  CHECK(r.doc()["is_basis"] == false);
  CHECK(Integer::parse(r.doc()["quotient"].get<std::string>()) * Integer::parse(r.doc()["quotient"].get<std::string>()) ==
        Integer(16));

  const auto f2b = spline_file(s, "f2b.json", {"0", "30", "0", "12"});
  const auto f3b = spline_file(s, "f3b.json", {"0", "0", "4", "0"});
  const auto f4b = spline_file(s, "f4b.json", {"0", "0", "0", "18"});
  r = run({"check-basis", "--graph", g, "--spline", f1, "--spline", f2b, "--spline", f3b, "--spline", f4b});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.doc()["is_basis"] == true);

  r = run({"check-basis", "--graph", g, "--spline", f1, "--spline", f2b});
  CHECK(r.code == cli::kInputError);
}

TEST_CASE("flowup") {
  Scratch s;
  const auto g = s.write("g.json", io::graph_to_json(io::graph_document(fixtures::diamond())));
  const auto r = run({"flowup", "--graph", g, "--out-dir", s.path("out")});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.doc()["diagonal"] == json{"1", "30", "4", "18"});
  CHECK(fs::exists(s.path("out/F4.json")));
  std::ifstream f2(s.path("out/F2.json"));
  CHECK(json::parse(f2)["values"] == json{"0", "30", "0", "12"});

  const auto p = s.write("p.json", io::graph_to_json(io::graph_document(fixtures::poly_triangle())));
  CHECK(run({"flowup", "--graph", p}).code == cli::kInputError);
}

TEST_CASE("bad input and usage") {
  Scratch s;
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"verify"}).code == cli::kInputError);
  CHECK(run({"invariants", "--graph", s.path("missing.json")}).code == cli::kInputError);
  const auto junk = s.write_text("junk.json", "{ not json");
  auto r = run({"invariants", "--graph", junk});
  CHECK(r.code == cli::kInputError);
  CHECK(r.out.empty());

  LabeledGraph<Integer> split(3);
  split.add_edge(0, 1, 4);
  const auto d = s.write("split.json", io::graph_to_json(io::graph_document(split)));
  r = run({"invariants", "--graph", d});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("connected") != std::string::npos);

  const auto g = s.write("g.json", io::graph_to_json(io::graph_document(fixtures::diamond())));
  CHECK(run({"invariants", "--graph", g, "--format", "yaml"}).code == cli::kInputError);
  CHECK(run({"invariants", "--graph", g, "--help"}).code == cli::kSuccess);
  CHECK(run({"trails", "--graph", g, "--vertex", "4", "--max-trails", "1"}).code == cli::kInputError);
}
