#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "vpwave/cli.hpp"
#include "vpwave/coeff_file.hpp"

using namespace vpwave;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  std::stringstream hs(line);
  for (std::string cell; std::getline(hs, cell, ',');) csv.header.push_back(cell);
  while (std::getline(is, line)) {
    std::stringstream ls(line);
    std::vector<double> row;
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    csv.rows.push_back(row);
  }
  return csv;
}

}  // namespace

TEST_CASE("sample") {
  auto r = invoke({"sample", "1", "--n0", "2", "--no-timestamp"});
  REQUIRE(r.code == 0);
  CoeffFile f = parse_coeff_file(r.out);
  CHECK(f.kind == FileKind::samples);
  CHECK(f.coarse == std::vector<double>{1.0, 1.0});
  CHECK(f.meta.source_expr == std::string("1"));
  CHECK(!f.meta.created);

  r = invoke({"sample", "x", "--n0", "3"});
  REQUIRE(r.code == 0);
  f = parse_coeff_file(r.out);
  for (int k = 1; k <= 3; ++k) CHECK(f.coarse[static_cast<std::size_t>(k - 1)] == oracle::node(3, k));
  CHECK(f.meta.created);

  r = invoke({"sample", "sin(6*x)+sign(sin(x+exp(2*x)))", "--n0", "64", "--levels", "3"});
  REQUIRE(r.code == 0);
  CHECK(parse_coeff_file(r.out).coarse.size() == 1728);
}

TEST_CASE("sample errors") {
  auto r = invoke({"sample", "log(x)", "--n0", "4"});
  CHECK(r.code == 3);
  CHECK(r.err.find("log") != std::string::npos);
  CHECK(r.out.empty());
  r = invoke({"sample", "sin(", "--n0", "4"});
  CHECK(r.code == 1);
  CHECK(r.err.find("offset 4") != std::string::npos);
  CHECK(invoke({"sample", "x", "--n0", "0"}).code == 1);
  CHECK(invoke({"sample", "x"}).code == 1);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("decompose and reconstruct through streams") {
  const std::string expr = "exp(x)*cos(3*x) + x^3";
  const auto s = invoke({"sample", expr, "--n0", "4", "--levels", "3", "--no-timestamp"});
  REQUIRE(s.code == 0);
  const auto d = invoke({"decompose", "-", "--no-timestamp"}, s.out);
  REQUIRE(d.code == 0);
  const CoeffFile pf = parse_coeff_file(d.out);
  CHECK(pf.kind == FileKind::pyramid);
  CHECK(pf.meta.theta == 0.7);
  CHECK(pf.meta.source_expr == expr);
  REQUIRE(pf.levels.size() == 3);
  CHECK(pf.levels[0].n == 4);
  CHECK(pf.levels[2].n == 36);

  const auto r = invoke({"reconstruct", "--no-timestamp"}, d.out);
  REQUIRE(r.code == 0);
  const CoeffFile orig = parse_coeff_file(s.out);
  const CoeffFile back = parse_coeff_file(r.out);
  CHECK(back.n0 == 4);
  CHECK(oracle::rel_diff(back.coarse, orig.coarse) <= 1e-9);
}

TEST_CASE("pipeline identity over the catalog") {
  const char* exprs[] = {"sin(6*x)+sign(sin(x+exp(2*x)))", "abs(x)", "tanh(5*x)", "sqrt(1.5+x)", "log(2+x)",
                         "tan(x)/3", "1/(1+25*x^2)", "-x^4 + 2*x - 1"};
  for (const char* e : exprs) {
    const auto s = invoke({"sample", "--n0", "8", "--levels", "3", "--no-timestamp", "--", e});
    REQUIRE(s.code == 0);
    const auto d = invoke({"decompose", "--theta", "0.6", "--no-timestamp"}, s.out);
    REQUIRE(d.code == 0);
    const auto r = invoke({"reconstruct", "--no-timestamp"}, d.out);
    REQUIRE(r.code == 0);
    CHECK_MESSAGE(oracle::rel_diff(parse_coeff_file(r.out).coarse, parse_coeff_file(s.out).coarse) <= 1e-9, e);
  }
}

TEST_CASE("decompose options") {
  const auto s = invoke({"sample", "x^2", "--n0", "8", "--levels", "3", "--no-timestamp"});
  auto d = invoke({"decompose", "--m-list", "5,17,53", "--no-timestamp"}, s.out);
  REQUIRE(d.code == 0);
  CoeffFile f = parse_coeff_file(d.out);
  CHECK(f.levels[0].m == 5);
  CHECK(f.levels[1].m == 17);
  CHECK(f.levels[2].m == 53);
  CHECK(!f.meta.theta);

  CHECK(invoke({"decompose", "--m-list", "5,17"}, s.out).code == 2);
  CHECK(invoke({"decompose", "--m-list", "5,17,72"}, s.out).code == 2);
  CHECK(invoke({"decompose", "--m-list", "5,17,53", "--theta", "0.5"}, s.out).code == 1);
  CHECK(invoke({"decompose", "--theta", "1.0"}, s.out).code == 1);
  CHECK(invoke({"decompose", "--theta", "0"}, s.out).code == 1);

  d = invoke({"decompose", "--levels", "2", "--no-timestamp"}, s.out);
  REQUIRE(d.code == 0);
  f = parse_coeff_file(d.out);
  CHECK(f.n0 == 24);
  CHECK(f.levels.size() == 2);
  d = invoke({"decompose", "--n0", "72", "--no-timestamp"}, s.out);
  REQUIRE(d.code == 0);
  CHECK(parse_coeff_file(d.out).levels.size() == 1);
  CHECK(invoke({"decompose", "--n0", "216"}, s.out).code == 2);
  CHECK(invoke({"decompose", "--n0", "7"}, s.out).code == 2);
  CHECK(invoke({"decompose", "--n0", "8", "--levels", "3"}, s.out).code == 1);

  const auto tiny = invoke({"sample", "x", "--n0", "2", "--levels", "2", "--no-timestamp"});
  d = invoke({"decompose", "--theta", "0.01", "--no-timestamp"}, tiny.out);
  CHECK(d.code == 0);
  CHECK(d.err.find("warning") != std::string::npos);
  f = parse_coeff_file(d.out);
  CHECK(f.levels[0].m == 1);
  CHECK(f.levels[1].m == 1);

  CHECK(invoke({"decompose"}, d.out).code == 2);  // already a pyramid
  CHECK(invoke({"decompose", "/nonexistent/file.json"}).code == 1);
  CHECK(invoke({"decompose"}, "not json").code == 2);
}

TEST_CASE("tampered pyramid is rejected") {
  const auto s = invoke({"sample", "cos(x)", "--n0", "4", "--levels", "2", "--no-timestamp"});
  const auto d = invoke({"decompose", "--no-timestamp"}, s.out);
  auto doc = nlohmann::json::parse(d.out);
  doc["levels"][1]["m"] = 3;
  const auto r = invoke({"reconstruct"}, doc.dump());
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  doc["metadata"].erase("theta");
  doc["levels"][1]["m"] = 12;
  CHECK(invoke({"reconstruct"}, doc.dump()).code == 2);
}

TEST_CASE("threshold") {
  const auto s = invoke({"sample", "sin(6*x)+sign(sin(x+exp(2*x)))", "--n0", "64", "--levels", "3", "--no-timestamp"});
  const auto d = invoke({"decompose", "--no-timestamp"}, s.out);
  const CoeffFile orig = parse_coeff_file(d.out);

  auto t = invoke({"threshold", "--tau", "0", "--no-timestamp"}, d.out);
  REQUIRE(t.code == 0);
  CoeffFile f = parse_coeff_file(t.out);
  CHECK(f.levels == orig.levels);
  CHECK(f.coarse == orig.coarse);
  CHECK(f.meta.tau == 0.0);

  t = invoke({"threshold", "--tau", "1e300", "--no-timestamp"}, d.out);
  REQUIRE(t.code == 0);
  f = parse_coeff_file(t.out);
  for (const auto& lv : f.levels) CHECK(oracle::max_abs(lv.details) == 0.0);
  CHECK(f.coarse == orig.coarse);
  CHECK(t.err.find("kept 0/1152") != std::string::npos);

  t = invoke({"threshold", "--tau", "0.01", "--no-timestamp"}, d.out);
  REQUIRE(t.code == 0);
  CHECK(t.err.find("level n=576") != std::string::npos);

  CHECK(invoke({"threshold", "--tau", "-1"}, d.out).code == 1);
  CHECK(invoke({"threshold"}, d.out).code == 1);
  CHECK(invoke({"threshold", "--tau", "1", "--mode", "soft"}, d.out).code == 1);
  CHECK(invoke({"threshold", "--tau", "1"}, s.out).code == 2);
}

TEST_CASE("plotdata scaling and wavelet") {
  auto r = invoke({"plotdata", "scaling", "--n", "27", "--theta", "0.7", "--k", "14", "--grid", "500"});
  REQUIRE(r.code == 0);
  Csv c = parse_csv(r.out);
  CHECK(c.header == std::vector<std::string>{"x", "phi_14"});
  REQUIRE(c.rows.size() == 500);
  CHECK(c.rows.front()[0] == -1.0);
  CHECK(c.rows.back()[0] == 1.0);
  for (std::size_t i = 1; i < c.rows.size(); ++i) CHECK(c.rows[i][0] > c.rows[i - 1][0]);
  double peak = 0.0;
  for (const auto& row : c.rows) peak = std::max(peak, std::abs(row[1]));
  CHECK(peak <= 1.0 + 1e-10);

  r = invoke({"plotdata", "scaling", "--n", "27", "--theta", "0.7", "--k", "14", "--grid", "163"});
  c = parse_csv(r.out);
  // t_i = pi i / 162 hits (2k-1) pi / 54 at i = 3(2k-1).
  for (int k = 1; k <= 27; ++k) {
    const std::size_t i = static_cast<std::size_t>(162 - 3 * (2 * k - 1));
    CHECK(std::abs(c.rows[i][1] - (k == 14 ? 1.0 : 0.0)) <= 1e-12);
  }

  r = invoke({"plotdata", "wavelet", "--n", "9", "--theta", "0.5", "--k", "5", "--grid", "109"});
  REQUIRE(r.code == 0);
  c = parse_csv(r.out);
  CHECK(c.header[1] == "psi_5");
  // X_27 angles (2j-1) pi / 54 sit at i = (2j-1) on a 109-point grid (pi/108 spacing).
  for (int k = 1; k <= 18; ++k) {
    const int j = (k % 2 == 1) ? 3 * ((k + 1) / 2) - 2 : 3 * (k / 2);
    const std::size_t i = static_cast<std::size_t>(108 - 2 * (2 * j - 1));
    CHECK(std::abs(c.rows[i][1] - (k == 5 ? 1.0 : 0.0)) <= 1e-12);
  }

  r = invoke({"plotdata", "scaling", "--n", "4", "--m", "2"});
  REQUIRE(r.code == 0);
  c = parse_csv(r.out);
  CHECK(c.header.size() == 5);
  CHECK(c.rows.size() == 2000);

  CHECK(invoke({"plotdata", "scaling"}).code == 1);
  CHECK(invoke({"plotdata", "scaling", "--n", "4", "--k", "5"}).code == 1);
  CHECK(invoke({"plotdata", "wavelet", "--n", "4", "--k", "9"}).code == 1);
  CHECK(invoke({"plotdata", "scaling", "--n", "4", "--m", "4"}).code == 1);
  CHECK(invoke({"plotdata", "scaling", "--n", "4", "--m", "2", "--theta", "0.5"}).code == 1);
  CHECK(invoke({"plotdata", "histogram"}).code == 1);
  CHECK(invoke({"plotdata", "scaling", "--n", "4", "--grid", "1"}).code == 1);
}

TEST_CASE("plotdata function and levels") {
  const auto s = invoke({"sample", "sin(3*x)", "--n0", "6", "--levels", "2", "--no-timestamp"});
  auto r = invoke({"plotdata", "function", "--grid", "300"}, s.out);
  REQUIRE(r.code == 0);
  Csv c = parse_csv(r.out);
  CHECK(c.header == std::vector<std::string>{"x", "f_54"});
  for (const auto& row : c.rows) CHECK(std::abs(row[1] - std::sin(3 * row[0])) <= 1e-9);

  const auto d = invoke({"decompose", "--no-timestamp"}, s.out);
  r = invoke({"plotdata", "levels", "--grid", "300"}, d.out);
  REQUIRE(r.code == 0);
  c = parse_csv(r.out);
  CHECK(c.header == std::vector<std::string>{"x", "f_54", "f_6", "g_12", "g_36"});
  for (const auto& row : c.rows) {
    CHECK(std::abs(row[2] + row[3] + row[4] - row[1]) <= 1e-9);
    CHECK(std::abs(row[1] - std::sin(3 * row[0])) <= 1e-9);
  }
  const auto fn = invoke({"plotdata", "function", "--grid", "300"}, d.out);
  REQUIRE(fn.code == 0);
  const Csv cf = parse_csv(fn.out);
  for (std::size_t i = 0; i < c.rows.size(); ++i) CHECK(std::abs(cf.rows[i][1] - c.rows[i][1]) <= 1e-12);

  CHECK(invoke({"plotdata", "levels"}, s.out).code == 2);
}

TEST_CASE("files on disk and determinism") {
  const std::string dir = std::filesystem::temp_directory_path().string();
  const std::string samples = dir + "/vpwave_cli_samples.json";
  const std::string pyr = dir + "/vpwave_cli_pyr.json";
  REQUIRE(invoke({"sample", "abs(x)", "--n0", "3", "--levels", "3", "--out", samples, "--decimal", "--no-timestamp"}).code == 0);
  const auto a = invoke({"decompose", samples, "--no-timestamp"});
  const auto b = invoke({"decompose", samples, "--no-timestamp"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  REQUIRE(invoke({"decompose", samples, "-o", pyr}).code == 0);
  const auto r = invoke({"reconstruct", pyr, "--no-timestamp"});
  REQUIRE(r.code == 0);
  const auto again = invoke({"reconstruct", pyr, "--no-timestamp"});
  CHECK(r.out == again.out);
  CHECK(invoke({"sample", "x", "--n0", "3", "--out", "/nonexistent-dir/x.json"}).code == 1);
  std::filesystem::remove(samples);
  std::filesystem::remove(pyr);
}
