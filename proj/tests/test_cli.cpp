#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sspread/cli.hpp"
#include "sspread/matrix_io.hpp"
#include "sspread/random.hpp"
#include "sspread/report.hpp"
#include "support.hpp"

using namespace sspread;

namespace {

const std::string fixtures = SSPREAD_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sspread");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  const Run r = run(std::move(args));
  INFO(r.err);
  CHECK(r.code == expected_code);
  return Json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("sspread_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::vector<double> doubles(const Json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(x.get<double>());
  return out;
}

}  // namespace

TEST_CASE("complex literals") {
  CHECK(parse_complex("1+2i") == Complex(1, 2));
  CHECK(parse_complex("-0.5-3i") == Complex(-0.5, -3));
  CHECK(parse_complex("2") == Complex(2, 0));
  CHECK(parse_complex("+2") == Complex(2, 0));
  CHECK(parse_complex("3i") == Complex(0, 3));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("1-i") == Complex(1, -1));
  CHECK(parse_complex("1e-3+2e2i") == Complex(1e-3, 200));
  for (const char* bad : {"1+2", "abc", "1+2j", "inf", "1+-2i", "", "1++2i", "2ii"}) {
    INFO(bad);
    CHECK(test::error_of([&] { parse_complex(bad); }) == ErrorCode::parse_error);
  }
}

TEST_CASE("formatted complex numbers parse back exactly") {
  CounterRng rng(51);
  for (int i = 0; i < 500; ++i) {
    const Complex z(rng.normal() * std::pow(10.0, rng.uniform(-20, 20)), rng.normal());
    CHECK(parse_complex(format_complex(z)) == z);
  }
  CHECK(format_complex(Complex(1, -0.5)) == "1-0.5i");
  CHECK(format_complex(Complex(0.1, 0)) == "0.1+0i");
}

TEST_CASE("canonical files round-trip unchanged") {
  const std::string matrix = "dim 2\nmode: compact\ntail: 0.25+0i\n1+0i 0.5-2i\n0.5+2i 3+0i\n";
  CHECK(serialize(parse_input(matrix)) == matrix);
  const std::string spec = "diag\nhead: 2 1.5 -0.5\nliminf: -1\nlimsup: 1\ngenerator: harmonic 1 0.5\n";
  CHECK(serialize(parse_input(spec)) == spec);
  const std::string empty_head = "diag\nmode: diagonal\nhead:\nliminf: 0\nlimsup: 0\n";
  CHECK(serialize(parse_input(empty_head)) == empty_head);
}

TEST_CASE("a random matrix written and read back has the same scale") {
  CounterRng rng(52);
  const HermMatrix a = random_hermitian(rng, 6);
  InputFile f;
  f.content = a.matrix();
  const InputFile back = parse_input(serialize(f));
  CHECK(back.matrix() == a.matrix());
  const TwoSidedSeq x = compact_scale(a), y = compact_scale(back.hermitian());
  CHECK(x.pos == y.pos);
  CHECK(x.neg == y.neg);
}

TEST_CASE("malformed files are parse errors") {
  for (const char* bad : {"", "dim 2\n1 0\n", "dim 2\n1 0\n0\n", "dim x\n1\n", "matrix 2\n", "dim 1\nmode: sparse\n1\n",
                          "dim 1\nmode: compact\nmode: compact\n1\n", "dim 1\n1\n2\n", "diag\nliminf: 0\n",
                          "diag\nliminf: 1\nlimsup: 0\n", "diag\nliminf: 0\nlimsup: 1\ncolour: red\n",
                          "diag\nliminf: 0\nlimsup: 1\ngenerator: geometric 1\n"}) {
    INFO(bad);
    CHECK(test::error_of([&] { parse_input(bad); }) == ErrorCode::parse_error);
  }
  CHECK(parse_input("# comment\n\ndim 1\n  2.5-1i  \n").matrix()(0, 0) == Complex(2.5, -1));
}

TEST_CASE("Hermiticity is validated when a Hermitian operand is loaded") {
  const InputFile f = parse_input("dim 2\n1 2\n3 4\n");
  CHECK(test::error_of([&] { f.hermitian(); }) == ErrorCode::not_hermitian);
  const std::string path = temp_file("nonherm.mat", "dim 2\n1 2\n3 4\n");
  CHECK(run({"scale", path}).code == 2);
}

TEST_CASE("scale of the identity in matrix mode") {
  const std::string path = temp_file("id.mat", "dim 3\n1 0 0\n0 1 0\n0 0 1\n");
  const Json j = run_json({"scale", path, "--mode", "matrix"});
  CHECK(j["command"] == "scale");
  test::check_values(doubles(j["scale"]["pos"]), {1, 1, 1}, 0.0);
  test::check_values(doubles(j["scale"]["neg"]), {1, 1, 1}, 0.0);
  CHECK(run({"scale", path, "--mode", "matrix", "--horizon", "5"}).code == 3);
}

TEST_CASE("scale of the diagonal example") {
  const Json j = run_json({"scale", fixtures + "/diag-scale/diag.spec", "--horizon", "50"});
  const auto pos = doubles(j["scale"]["pos"]);
  REQUIRE(pos.size() == 50);
  for (std::size_t i = 0; i < 50; ++i) CHECK(std::abs(pos[i] - (1.0 + 1.0 / double(i + 1))) <= 1e-12);
  test::check_values(doubles(j["scale"]["neg"]), std::vector<double>(50, -1.0), 0.0);
  CHECK(j["scale"]["pos_tail"] == 1.0);
  CHECK(j["scale"]["neg_tail"] == -1.0);
  CHECK(run({"scale", fixtures + "/diag-scale/diag.spec", "--mode", "compact"}).code == 3);
}

TEST_CASE("spread of the 3x3 weighted matrix through a file") {
  // G E G for the 3x3 example is diag(13/4, 2, 13/4)^{1/2} E diag(...)^{1/2}.
  const std::string path = temp_file("geg.mat", "dim 3\n3.25 0 6.5\n0 2 0\n6.5 0 3.25\n");
  const Json j = run_json({"spread", path});
  test::check_values(doubles(j["spread_plus"]["values"]), {13, 2, 0}, 1e-9);
  const Json m = run_json({"spread", temp_file("ci.mat", "dim 2\n4 0\n0 4\n"), "--mode", "matrix"});
  test::check_values(doubles(m["spread_plus"]["values"]), {0}, 0.0);
}

TEST_CASE("check reports and exit codes") {
  const std::string d = temp_file("diag.mat", "dim 3\n2 0 0\n0 -1 0\n0 0 0.5\n");
  const Json key = run_json({"check", "key", d});
  REQUIRE(key["checks"].size() == 1);
  const Json& c = key["checks"][0];
  CHECK(c["ineq_id"] == "key");
  CHECK(c["holds"] == true);
  CHECK(c.contains("margins"));
  CHECK(c.contains("worst_k"));
  CHECK(c["tail_verdict"] == "conclusive");

  const std::string k = fixtures + "/kittaneh-fail/";
  const Json mixed = run_json({"check", "mixed_commutator", k + "a.mat", k + "b.mat", k + "x.mat"});
  CHECK(mixed["checks"][0]["holds"] == true);
  CHECK(mixed["checks"][0]["entrywise_fails"] == true);
  CHECK(mixed["checks"][0]["entrywise"]["first_violation"] == 2);

  const std::string g = fixtures + "/agm-fail-2x2/";
  run_json({"check", "agm_compact", g + "s.mat", g + "c.mat", g + "identity.mat"}, 1);

  CHECK(run({"check", "key", d, "--mode", "matrix"}).code == 3);
  CHECK(run({"check", "key", fixtures + "/diag-scale/diag.spec"}).code == 3);
  CHECK(run({"check", "key"}).code == 2);
  CHECK(run({"check", "no_such_inequality", d}).code == 4);
  CHECK(run({"check", "zhan", d, temp_file("two.mat", "dim 2\n1 0\n0 1\n")}).code == 3);
}

TEST_CASE("errors still produce a JSON report") {
  const Run r = run({"check", "key", "/no/such/file", "--json"});
  CHECK(r.code == 2);
  const Json j = Json::parse(r.out);
  CHECK(j["error"]["code"] == "ParseError");
}

TEST_CASE("fuzz, repro and unknown ids") {
  const Json empty = run_json({"fuzz", "key", "--trials", "0"});
  CHECK(empty["campaign"]["trials"] == 0);
  CHECK(empty["checks"].empty());
  const Json some = run_json({"fuzz", "zhan", "--trials", "10", "--dims", "2..4", "--seed", "9"});
  CHECK(some["seed"] == 9);
  CHECK(some["campaign"]["failures"] == 0);
  CHECK(some["checks"].size() == 1);
  CHECK(run({"fuzz", "zhan", "--dims", "4..2"}).code == 2);
  CHECK(run({"fuzz", "nope"}).code == 4);
  CHECK(run({"repro", "nope"}).code == 4);

  const Run table = run({"repro", "agm-fail-3x3"});
  CHECK(table.code == 0);
  CHECK(table.out.find("Spr+(GEG)[1]") != std::string::npos);
  CHECK(table.out.find("expected") != std::string::npos);
}

TEST_CASE("the seed defaults to SSPREAD_SEED") {
  setenv("SSPREAD_SEED", "77", 1);
  CHECK(run_json({"fuzz", "key", "--trials", "1"})["seed"] == 77);
  CHECK(run_json({"fuzz", "key", "--trials", "1", "--seed", "3"})["seed"] == 3);
  setenv("SSPREAD_SEED", "many", 1);
  CHECK(run({"fuzz", "key", "--trials", "1"}).code == 2);
  unsetenv("SSPREAD_SEED");
  CHECK(run_json({"fuzz", "key", "--trials", "1"})["seed"] == 1);
}

TEST_CASE("reports carry 17 significant digits") {
  const Json j = run_json({"scale", temp_file("third.mat", "dim 1\n0.3333333333333333\n")});
  const Run r = run({"scale", temp_file("third.mat", "dim 1\n0.3333333333333333\n"), "--json"});
  CHECK(r.out.find("0.33333333333333331") != std::string::npos);
  CHECK(j["versions"]["sspread"] == std::string(library_version));
  CHECK(j["inputs_digest"].get<std::string>().size() == 16);
}

TEST_CASE("suite output is byte-identical across runs") {
  const Run a = run({"suite", "--seed", "2", "--trials", "3", "--json"});
  const Run b = run({"suite", "--seed", "2", "--trials", "3", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["pass"] == true);
  CHECK(j["campaigns"].size() == fuzz_ids().size());
}

TEST_CASE("exit codes by error kind") {
  CHECK(exit_code(ErrorCode::parse_error) == 2);
  CHECK(exit_code(ErrorCode::not_hermitian) == 2);
  CHECK(exit_code(ErrorCode::mode_error) == 3);
  CHECK(exit_code(ErrorCode::dimension_mismatch) == 3);
  CHECK(exit_code(ErrorCode::unknown_example) == 4);
  CHECK(exit_code(ErrorCode::unknown_inequality) == 4);
}
