#include "doctest.h"

#include "expression_corpus.hpp"
#include "osc/cli.hpp"
#include "osc/expression.hpp"
#include "osc/oscillator.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace osc;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "oscalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_expression examples") {
  CHECK(parse_expression("b(1)") == QuadraticElement::mode(1));
  CHECK(parse_expression("1/2*:b(-1)b(-1): + K") ==
        Rational(1, 2) * QuadraticElement::pair(-1, -1) + QuadraticElement::unit());
  CHECK(parse_expression("T(2)") == tau_hat(2));
  CHECK(parse_expression("S(2)") == sigma_hat(2));
  CHECK(parse_expression("L(-3)") == tau(-3));
  CHECK(parse_expression("  - 2 * b( -3 )+K ") == QuadraticElement::unit() - Rational(2) * QuadraticElement::mode(-3));
  CHECK(parse_expression("3") == QuadraticElement::central_element(Rational(3)));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_expression("b(0)");
    FAIL("b(0) accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("central") != std::string::npos);
    CHECK(e.position() == 0);  // start of the offending atom
  }
  try {
    parse_expression("K + x");
    FAIL("bad atom accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  CHECK_THROWS_AS(parse_expression("b(1"), ParseError);
  CHECK_THROWS_AS(parse_expression(":b(1)b(0):"), ParseError);
  CHECK_THROWS_AS(parse_expression("K +"), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0*K"), ParseError);
}

TEST_CASE("round trip on the canonical corpus") {
  const auto& items = corpus::canonical_expressions();
  CHECK(items.size() >= 50);
  for (const auto& s : items) {
    CAPTURE(s);
    CHECK(to_canonical_string(parse_expression(s)) == s);
  }
}

TEST_CASE("property: printing is a normal form") {
  const std::vector<std::string> variants{"b(1) + K", "K+b(1)", ":b(1)b(-1):", ":b(-1)b(1):", "T(2) + 3/2*b(2)",
                                          "S(2)", "b(2) - b(2)", "0*T(4)", "L(0) + :b(-1)b(1): - :b(-1)b(1):"};
  for (const auto& s : variants) {
    const std::string c = to_canonical_string(parse_expression(s));
    CHECK(to_canonical_string(parse_expression(c)) == c);
    CHECK(parse_expression(c) == parse_expression(s));
  }
  CHECK(to_canonical_string(parse_expression("S(2)")) == "3/2*b(2) + T(2)");
}

TEST_CASE("parse_gap_list") {
  CHECK(parse_gap_list("").empty());
  CHECK(parse_gap_list("1,2, 5") == std::set<std::int64_t>{1, 2, 5});
  CHECK_THROWS_AS(parse_gap_list("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gap_list("1,a"), std::invalid_argument);
}

TEST_CASE("run: bracket example") {
  const auto r = invoke({"bracket", ":b(1)b(-2):", "b(-1)"});
  CHECK(r.code == kOk);
  CHECK(r.out == "b(-2)\n");
  CHECK(invoke({"bracket", "T(2)", "T(-2)"}).out == "1/2*K + 4*T(0)\n");
}

TEST_CASE("run: cocycle values and defects") {
  CHECK(invoke({"cocycle", "gamma", ":b(1)b(1):", ":b(1)b(-2):", "b(-1)"}).out == "2\n");
  CHECK(invoke({"cocycle", "gamma", ":b(1)b(1):", "b(-2)"}).out == "2\n");
  CHECK(invoke({"cocycle", "psi", "T(2)", "T(-2)"}).out == "-1\n");
  CHECK(invoke({"cocycle", "delta", "b(1)", "b(2)"}).code == kUsageError);
}

TEST_CASE("run: fock-apply") {
  CHECK(invoke({"fock-apply", "T(0)", "[2,1]"}).out == "3*[2,1]\n");
  const auto r = invoke({"fock-apply", "b(1)", "([1]|[1])", "--rank", "2", "--embedding", "2"});
  CHECK(r.code == kOk);
  CHECK(r.out == "([1]|[])\n");
}

TEST_CASE("run: coinv example and exit codes") {
  const auto r = invoke({"coinv", "--gaps", "", "--rank", "1", "--N", "6", "--M", "12", "--W", "12", "--format", "json"});
  CHECK(r.code == kOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["dims"] == nlohmann::ordered_json::array({1, 0, 0, 0, 0, 0, 0}));
  CHECK(j["stabilized"] == true);
  CHECK(invoke({"coinv", "--N", "9", "--M", "8", "--W", "8"}).code == kUsageError);
  CHECK(invoke({"coinv", "--kind", "Z"}).code == kUsageError);
}

TEST_CASE("run: verify-all") {
  const auto r = invoke({"verify-all", "--probe-bound", "2"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("run: central-scalars") {
  const auto r = invoke({"central-scalars", "--format", "json"});
  CHECK(r.code == kOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["table"].size() == 4);
  CHECK(j["consistent"] == true);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == kUsageError);
  CHECK(invoke({"frobnicate"}).code == kUsageError);
  CHECK(invoke({"bracket", "b(1)"}).code == kUsageError);
  CHECK(invoke({"bracket", "b(0)", "b(1)"}).code == kUsageError);
  CHECK(invoke({"bracket", "b(1)", "b(-1)", "--format", "xml"}).code == kUsageError);
  CHECK(invoke({"fock-apply", "b(1)", "[1]", "--rank", "1", "--embedding", "2"}).code == kUsageError);
  CHECK(invoke({"--help"}).code == kOk);
}

TEST_CASE("determinism: identical configs give byte-identical JSON") {
  const std::vector<std::vector<std::string>> runs{
      {"bracket", "S(3)", "b(-2)", "--format", "json"},
      {"cocycle", "alpha", "T(3)", "T(-3)", "--format", "json"},
      {"coinv", "--gaps", "1,2", "--N", "4", "--M", "6", "--W", "6", "--format", "json"},
      {"coinv", "--gaps", "1,2", "--N", "4", "--M", "6", "--W", "6", "--format", "json", "--threads", "3"},
      {"verify-all", "--probe-bound", "2", "--format", "json"},
      {"central-scalars", "1/2", "3", "--format", "json"}};
  for (const auto& args : runs) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
  CHECK(invoke(runs[2]).out == invoke(runs[3]).out);
}

TEST_CASE("config file mirrors the flags") {
  const std::string path = "oscalg_test_config.ini";
  {
    std::ofstream f(path);
    f << "gaps = 1\nN = 3\nM = 6\nW = 6\nformat = json\n";
  }
  const auto from_file = invoke({"coinv", "--config", path});
  const auto from_flags = invoke({"coinv", "--gaps", "1", "--N", "3", "--M", "6", "--W", "6", "--format", "json"});
  std::remove(path.c_str());
  CHECK(from_file.code == from_flags.code);
  CHECK(from_file.out == from_flags.out);
}

TEST_CASE("RunConfig validation") {
  RunConfig c;
  c.command = "coinv";
  c.N = 10;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.N = 2;
  CHECK_NOTHROW(c.validate());
  c.rank = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  RunConfig v;
  v.command = "verify-all";
  v.probe_bound = 2;
  const RunResult r = run(v);
  CHECK(r.exit_code == kOk);
}
