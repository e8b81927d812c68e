#include "folinv/cli.hpp"
#include "folinv/document.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace folinv;

namespace {

const std::filesystem::path kData = FOLINV_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

} // namespace

TEST_CASE("document sections and comments") {
  auto doc = parse_document("# header\n[params]\nlambda = 3/2 # inline\n\n[foliation]\nP = -y\nQ = x\n");
  CHECK(doc.has("foliation"));
  CHECK(doc.find("foliation", "P")->value == "-y");
  CHECK(doc.find("foliation", "Q")->line == 7);
  auto params = resolve_params(doc);
  CHECK(params.at("lambda") == Rational(3, 2));
  auto over = resolve_params(doc, {"lambda=2", "mu=-1/3"});
  CHECK(over.at("lambda") == 2);
  CHECK(over.at("mu") == Rational(-1, 3));
  CHECK_THROWS_AS(resolve_params(doc, {"lambda"}), InvalidInput);
  CHECK_THROWS_AS(resolve_params(doc, {"x=1"}), InvalidInput);
  CHECK_THROWS_AS(resolve_params(doc, {"lambda=1/0"}), InvalidInput);
}

TEST_CASE("document errors carry line numbers") {
  auto fails_at = [](const std::string& text, int line) {
    try {
      parse_document(text, "t.fol");
      FAIL("expected a document error");
    } catch (const DocumentError& e) {
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).rfind("t.fol:" + std::to_string(line), 0) == 0);
    }
  };
  fails_at("[foliation]\nP = x\n[nonsense]\n", 3);
  fails_at("[foliation]\nR = x\n", 2);
  fails_at("P = x\n", 1);
  fails_at("[foliation\n", 1);
  fails_at("[foliation]\nP = x\nP = y\n", 3);
  fails_at("[foliation]\nP x\n", 2);
  fails_at("[params]\nx = 1\n", 2);

  auto doc = parse_document("[foliation]\nP = x + )\nQ = y\n", "t.fol");
  try {
    germ_input(doc, {});
    FAIL("expected a parse error");
  } catch (const DocumentError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("column 9") != std::string::npos);
  }
}

TEST_CASE("germ and projective blocks") {
  auto both = parse_document("[foliation]\nP = -y\nQ = x\n[projective]\nA = -y\nB = x\nC = 0\n");
  CHECK_THROWS_AS(germ_input(both, {}), DocumentError);
  CHECK_THROWS_AS(projective_input(both, {}), DocumentError);
  auto germ = parse_document("[germ]\nP = -y\nQ = x\n[divisor]\nzero = x*y\n");
  auto in = germ_input(germ, {});
  REQUIRE(in.divisor.has_value());
  CHECK_FALSE(in.divisor->pole.has_value());
  auto missing = parse_document("[foliation]\nP = -y\n");
  CHECK_THROWS_AS(germ_input(missing, {}), DocumentError);
  auto not_invariant = parse_document("[foliation]\nP = -y\nQ = x\n[divisor]\nzero = y - x^2\n");
  CHECK_THROWS_AS(germ_input(not_invariant, {}), InvalidInput);
}

TEST_CASE("point lists") {
  auto pts = parse_points("[1:0:0]; (0,1,0) ; 0:0:1;");
  REQUIRE(pts.size() == 3);
  CHECK(pts[1].str() == "[0:1:0]");
  CHECK(parse_points("[2:4:2]")[0].str() == "[1:2:1]");
  CHECK(parse_points("[-1/2 : 1 : 0]")[0].str() == "[-1/2:1:0]");
  CHECK_THROWS(parse_points("[1:0]"));
  CHECK_THROWS(parse_points("[0:0:0]"));
  CHECK_THROWS(parse_points("[a:0:1]"));
}

TEST_CASE("cli exit codes follow verdicts") {
  auto radial = cli({"check-bs", data("radial.fol")});
  CHECK(radial.code == 0);
  CHECK(radial.out.find("[holds] f2_in_jacobian_ideal") != std::string::npos);

  auto fk = cli({"check-bs", data("fk5.fol"), "--param", "lambda=1"});
  CHECK(fk.code == 1);
  CHECK(fk.out.find("[FAILS] f2_in_jacobian_ideal") != std::string::npos);
  CHECK(fk.out.find("param lambda = 1") != std::string::npos);

  auto global = cli({"projective-global", data("omega_lambda.fol"), "--param", "lambda=2"});
  CHECK(global.code == 0);
  CHECK(global.out.find("2 ≤ 3") != std::string::npos);

  CHECK(cli({"check-second-type", data("cusp.fol")}).code == 0);
  CHECK(cli({"check-second-type", data("fk5.fol"), "--mode", "criterion"}).code == 1);
  CHECK(cli({"reduce", data("cusp.fol")}).code == 0);
  CHECK(cli({"invariants", data("fk5.fol"), "--truncation-cap", "64"}).code == 0);
  CHECK(cli({"check-cota", data("radial.fol"), "--probes", "9"}).code == 0);
  CHECK(cli({"check-liu", data("node.fol")}).code == 0);
  CHECK(cli({"projective-validate", data("omega_lambda.fol")}).code == 0);
  CHECK(cli({"projective-global", data("radial_projective.fol")}).code == 0);
}

TEST_CASE("cli input errors exit with 2") {
  CHECK(cli({"frobnicate", data("radial.fol")}).code == 2);
  CHECK(cli({"check-bs"}).code == 2);
  CHECK(cli({"check-bs", data("missing.fol")}).code == 2);
  CHECK(cli({"check-bs", data("radial.fol"), "--mode", "sometimes"}).code == 2);
  CHECK(cli({"projective-global", data("radial.fol")}).code == 2);
  CHECK(cli({"check-bs", data("omega_lambda.fol")}).code == 2);
  auto euler = temp_file("folinv_euler.fol", "[projective]\nA = y*z\nB = x*z\nC = x*y\n");
  auto r = cli({"projective-validate", euler.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("3*x*y*z") != std::string::npos);
  auto nodiv = temp_file("folinv_nodiv.fol", "[foliation]\nP = -y\nQ = x\n");
  CHECK(cli({"check-liu", nodiv.string()}).code == 2);
  CHECK(cli({"invariants", nodiv.string()}).code == 0);
  auto nonisolated = temp_file("folinv_noniso.fol", "[foliation]\nP = x\nQ = 0\n");
  CHECK(cli({"invariants", nonisolated.string()}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("structured reports are deterministic and parseable") {
  auto out = std::filesystem::temp_directory_path() / "folinv_report.json";
  auto a = cli({"check-cota", data("radial.fol"), "--json", "--out", out.string()});
  auto b = cli({"check-cota", data("radial.fol"), "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["check"] == "polar-bound");
  CHECK(j["verdict"] == "pass");
  CHECK(j["invariants"]["lower_bound"] == 1);
  CHECK(j["assertions"]["lower_bound_le_mu"] == true);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
}
