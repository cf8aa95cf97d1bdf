#include <set>
#include <sstream>

#include "doctest.h"
#include "legendrian/cli.hpp"
#include "legendrian/contact.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/io.hpp"
#include "legendrian/montecarlo.hpp"
#include "legendrian/oracle.hpp"

using namespace legendrian;

namespace {

const std::string kData = LEGMOD_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

}  // namespace

TEST_CASE("curve document round trip") {
  CurveDocument doc{3, {{10, Rational(1)}, {11, Rational(-7, 3)}, {14, Rational(22, 5)}}, 18};
  const std::string text = write_curve_document(doc);
  CHECK(parse_curve_document(text) == doc);
  CHECK(write_curve_document(parse_curve_document(text)) == text);

  CurveDocument bare{2, {{5, Rational(1)}}, -1};
  CHECK(write_curve_document(bare).find("precision") == std::string::npos);
  CHECK(parse_curve_document(write_curve_document(bare)) == bare);

  const PlaneCurveGerm c = to_curve(doc);
  CHECK(c.m() == 10);
  CHECK(c.accuracy() == 18);
  CHECK(from_curve(c) == doc);
}

TEST_CASE("curve document rationals are strings") {
  const std::string text = write_curve_document({3, {{10, Rational(1, 2)}}, -1});
  CHECK(text.find("\"c\": \"1/2\"") != std::string::npos);
  CHECK_THROWS_AS(parse_curve_document(R"({"n": 3, "terms": [{"e": 10, "c": 1}]})"), ParseError);
}

TEST_CASE("curve document errors carry line and column") {
  const std::string text = "{\"n\": 3,\n \"terms\": [{\"e\": 10, \"c\": \"1//2\"}]}";
  try {
    parse_curve_document(text);
    FAIL("accepted a malformed rational");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    const std::string line2 = text.substr(text.find('\n') + 1);
    const int quote = static_cast<int>(line2.find("\"1//2\"")) + 1;
    CHECK(e.column() > quote);
    CHECK(e.column() <= quote + 5);
  }

  try {
    parse_curve_document("{\"n\": 3,\n\n  \"terms\": [ }");
    FAIL("accepted malformed JSON");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 14);
  }

  CHECK_THROWS_AS(parse_curve_document(R"({"n": 3, "terms": [], "extra": 1})"), ParseError);
  CHECK_THROWS_AS(parse_curve_document(R"({"n": 3, "terms": [{"e": 11, "c": "1"}, {"e": 10, "c": "1"}]})"), ParseError);
  CHECK_THROWS_AS(parse_curve_document(R"({"n": 3, "terms": [{"e": 10, "c": "1"}, {"e": 10, "c": "2"}]})"), ParseError);
  CHECK_THROWS_AS(parse_curve_document(R"({"n": -3, "terms": []})"), ParseError);
  CHECK_THROWS_AS(parse_curve_document(R"({"terms": []})"), ParseError);
  CHECK_THROWS_AS(parse_curve_document(R"({"n": 3, "terms": [{"e": 10, "c": "1/0"}]})"), ParseError);
  CHECK_THROWS_AS(parse_curve_document("[1, 2]"), ParseError);
  // A document can be well formed yet describe an invalid curve.
  CHECK_THROWS_AS(to_curve(parse_curve_document(R"({"n": 3, "terms": [{"e": 9, "c": "1"}]})")), DomainError);
}

TEST_CASE("germ expression parsing") {
  const GermPolynomial g = parse_germ_expression("3/2 x^2 y p - p + 4");
  CHECK(g.size() == 3);
  CHECK(g.at({2, 1, 1}) == Rational(3, 2));
  CHECK(g.at({0, 0, 1}) == Rational(-1));
  CHECK(g.at({0, 0, 0}) == Rational(4));

  CHECK(parse_germ_expression("x x p^2 x") == GermPolynomial{{{3, 0, 2}, Rational(1)}});
  CHECK(parse_germ_expression("-2p") == GermPolynomial{{{0, 0, 1}, Rational(-2)}});
  CHECK(parse_germ_expression("\xE2\x88\x92" "2p") == parse_germ_expression("-2p"));
  CHECK(parse_germ_expression("y \xE2\x88\x92 y").empty());
  CHECK(parse_germ_expression("0").empty());
  CHECK(parse_germ_expression("  x ^ 3  +  y  ") == parse_germ_expression("x^3+y"));
}

TEST_CASE("germ expression errors are position annotated") {
  const auto column_of = [](const std::string& text) {
    try {
      parse_germ_expression(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      return e.column();
    }
    FAIL("accepted " << text);
    return -1;
  };
  CHECK(column_of("x + z") == 5);
  CHECK(column_of("x +") == 4);
  CHECK(column_of("") == 1);
  CHECK(column_of("2/0 x") == 3);
  CHECK(column_of("x^") == 3);
  CHECK(column_of("x^300") == 3);
  CHECK(column_of("\xE2\x88\x92 q") == 3);
  CHECK(column_of("x * y") == 3);
}

TEST_CASE("germ expression print and parse round trip") {
  TrialRng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    GermPolynomial poly;
    const int terms = static_cast<int>(rng.uniform(0, 5));
    for (int k = 0; k < terms; ++k) {
      const Monomial J{static_cast<int>(rng.uniform(0, 3)), static_cast<int>(rng.uniform(0, 3)),
                       static_cast<int>(rng.uniform(0, 3))};
      const Rational c(static_cast<long>(rng.uniform(-9, 9)), static_cast<long>(rng.uniform(1, 4)));
      if (!c.is_zero()) poly[J] = c;
    }
    const std::string text = format_germ_expression(poly);
    CHECK_MESSAGE(parse_germ_expression(text) == poly, text);
    CHECK(format_germ_expression(parse_germ_expression(text)) == text);
  }
  CHECK(format_germ_expression({}) == "0");
  CHECK(format_germ_expression(parse_germ_expression("-1/2 x^2 y + p")) == "p - 1/2 x^2 y");
}

TEST_CASE("seed derivation is fixed") {
  // Reference value of SplitMix64 seeded with 0 (first output).
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xE220A8397B1DCDAFULL);
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));

  TrialRng a(7, 3), b(7, 3);
  for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
  TrialRng r(99);
  for (int k = 0; k < 1000; ++k) {
    const auto v = r.uniform(-2, 2);
    CHECK(v >= -2);
    CHECK(v <= 2);
  }
  CHECK(r.uniform(5, 5) == 5);
  CHECK_THROWS_AS(r.uniform(1, 0), DomainError);
}

TEST_CASE("Monte-Carlo trials are reproducible and schedule independent") {
  const auto serial = verify_generic_trials(3, 10, 12, 5, 1000000, Execution::Serial);
  const auto parallel = verify_generic_trials(3, 10, 12, 5, 1000000, Execution::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].trial == k);
    CHECK(parallel[k].trial == k);
    CHECK(serial[k].curve.coefficients() == parallel[k].curve.coefficients());
    CHECK(serial[k].observed == parallel[k].observed);
    CHECK(serial[k].pass);
  }
  // Trial k depends on (seed, k) only.
  TrialRng rng(5, 7);
  CHECK(random_generic_curve(3, 10, 1000000, rng).coefficients() == serial[7].curve.coefficients());
}

TEST_CASE("random J maps are contact and in J") {
  const Weights w{3, 10};
  TrialRng rng(11);
  for (int k = 0; k < 5; ++k) {
    const ContactMap phi = random_j_map(w, 18, rng);
    CHECK(verify_contact(phi).ok);
    CHECK(classify(phi).in_J);
  }
}

TEST_CASE("cli gamma") {
  const Run a = run({"gamma", "3", "7"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("gaps: {1, 2, 5}") != std::string::npos);
  CHECK(a.out.find("s: none") != std::string::npos);
  CHECK(a.out.find("dimension: 0") != std::string::npos);

  const Run b = run({"gamma", "3", "10"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("gaps: {1, 2, 4, 5, 8}") != std::string::npos);
  CHECK(b.out.find("s: 11") != std::string::npos);
  CHECK(b.out.find("dimension: 1") != std::string::npos);

  const Run j = run({"gamma", "3", "10", "--json"});
  CHECK(j.code == kExitOk);
  CHECK(j.out.find("\"schema\": \"legmod/1\"") != std::string::npos);
  CHECK(j.out.find("\"trajectories\"") != std::string::npos);
  CHECK(j.out.find("\"tau\"") != std::string::npos);

  const Run bad = run({"gamma", "4", "10"});
  CHECK(bad.code == kExitValidation);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"gamma", "3", "5"}).code == kExitValidation);
  CHECK(run({"gamma", "3"}).code == kExitValidation);
  CHECK(run({"frobnicate"}).code == kExitValidation);
}

TEST_CASE("cli semigroup and conormal") {
  const Run a = run({"semigroup", data("short_3_10_a1.json")});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("gaps: {1, 2, 4, 5, 8}\n") != std::string::npos);

  const Run b = run({"semigroup", data("nongeneric_3_10.json")});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("gaps: {1, 2, 4, 5, 8, 11}") != std::string::npos);

  const Run bad = run({"semigroup", data("malformed_rational.json")});
  CHECK(bad.code == kExitValidation);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(bad.err.find("column") != std::string::npos);

  const Run low = run({"semigroup", data("low_precision.json")});
  CHECK(low.code == kExitPrecision);
  CHECK(low.err.find("insufficient precision") != std::string::npos);

  CHECK(run({"semigroup", data("missing.json")}).code == kExitValidation);

  const Run cn = run({"conormal", data("short_3_10_a1.json")});
  CHECK(cn.code == kExitOk);
  CHECK(cn.out.find("10/3") != std::string::npos);
}

TEST_CASE("cli transform") {
  const Run a = run({"transform", data("nongeneric_3_10.json"), "--alpha", "0", "--beta0", "-x^4"});
  REQUIRE(a.code == kExitOk);
  const CurveDocument doc = parse_curve_document(a.out);
  REQUIRE(doc.terms.size() == 1);
  CHECK(doc.terms[0] == std::pair<int, Rational>{10, Rational(1)});

  // Same map built in process.
  const PlaneCurveGerm f = to_curve(parse_curve_document(
      R"({"n": 3, "terms": [{"e": 10, "c": "1"}, {"e": 11, "c": "1"}, {"e": 13, "c": "1"}], "precision": 18})"));
  const Run b = run({"transform", data("fixture_3_10_13.json"), "--alpha", "-2p", "--beta0", "0"});
  REQUIRE(b.code == kExitOk);
  const Weights w{3, 10};
  GermQ alpha(w, 21), beta0(w, 21);
  alpha.add_term({0, 0, 1}, Rational(-2));
  const PlaneCurveGerm expected = act_on_curve(from_alpha_beta0(alpha, beta0, 18), f);
  CHECK(parse_curve_document(b.out) == from_curve(expected));

  const Run p = run({"transform", data("fixture_3_10_13.json"), "--beta0", "y^2 p"});
  CHECK(p.code == kExitValidation);
  CHECK(p.err.find("must not involve p") != std::string::npos);

  const Run bad_expr = run({"transform", data("fixture_3_10_13.json"), "--alpha", "x +"});
  CHECK(bad_expr.code == kExitValidation);
  CHECK(bad_expr.err.find("column 4") != std::string::npos);

  for (const char* opt : {"--alpha", "--beta0"}) {
    const Run unit = run({"transform", data("fixture_3_10_13.json"), opt, std::string(opt) == "--alpha" ? "1" : "y"});
    CHECK(unit.code == kExitValidation);
    CHECK(unit.err.find("violates") != std::string::npos);
  }
}

TEST_CASE("cli normalize and equivalent") {
  const Run a = run({"normalize", data("fixture_3_10_13.json")});
  REQUIRE(a.code == kExitOk);
  const std::string doc_text = a.out.substr(a.out.find('{'));
  const CurveDocument doc = parse_curve_document(doc_text);
  std::set<int> support;
  for (const auto& [e, c] : doc.terms) support.insert(e);
  CHECK(support == std::set<int>{10, 11});

  const Run ng = run({"normalize", data("nongeneric_3_10.json")});
  CHECK(ng.code == kExitNonGeneric);
  CHECK(ng.err.find("non-generic curve") != std::string::npos);
  CHECK(run({"equivalent", data("nongeneric_3_10.json"), data("short_3_10_a1.json")}).code == kExitNonGeneric);

  const Run ne = run({"equivalent", data("short_3_10_a1.json"), data("short_3_10_a2.json")});
  CHECK(ne.code == kExitOk);
  CHECK(ne.out.find("equivalent: no") != std::string::npos);

  const Run self = run({"equivalent", data("fixture_3_10_13.json"), data("short_3_10_a1.json")});
  CHECK(self.code == kExitOk);
  CHECK(self.out.find("equivalent: yes") != std::string::npos);

  const Run j = run({"equivalent", data("short_3_10_a1.json"), data("short_3_10_a2.json"), "--json"});
  CHECK(j.out.find("\"schema\": \"legmod/1\"") != std::string::npos);
}

TEST_CASE("cli verify-generic") {
  const Run a = run({"verify-generic", "3", "10", "--trials", "20", "--seed", "1", "--range", "1000000"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("passed: 20/20") != std::string::npos);
  const Run again = run({"verify-generic", "3", "10", "--trials", "20", "--seed", "1", "--range", "1000000"});
  CHECK(again.out == a.out);

  const Run n2 = run({"verify-generic", "2", "7", "--trials", "5"});
  CHECK(n2.code == kExitOk);
  CHECK(n2.out.find("passed: 5/5") != std::string::npos);

  CHECK(run({"verify-generic", "3", "9"}).code == kExitValidation);
  CHECK(run({"verify-generic", "3", "10", "--trials", "-1"}).code == kExitValidation);
}

TEST_CASE("cli upsilon") {
  for (const char* check : {"direct-vs-closed", "mu-derivative", "det-invariance"}) {
    const Run a = run({"upsilon", "3", "10", "--check", check});
    CHECK_MESSAGE(a.code == kExitOk, check);
    CHECK(a.out.find("PASS") != std::string::npos);
  }
  const Run det = run({"upsilon", "3", "10", "--check", "det-invariance", "--seed", "3"});
  CHECK(det.out.find("selections tested: 50") != std::string::npos);
  CHECK(run({"upsilon", "3", "10", "--check", "det-invariance", "--seed", "3"}).out == det.out);

  const Run cap = run({"upsilon", "5", "12", "--check", "direct-vs-closed"});
  CHECK(cap.code == kExitValidation);
  CHECK(cap.err.find("cap") != std::string::npos);
  CHECK(run({"upsilon", "3", "10", "--check", "nonsense"}).code == kExitValidation);
}

TEST_CASE("cli outputs are byte-stable") {
  const std::vector<std::vector<std::string>> commands = {
      {"gamma", "5", "13", "--json"},
      {"normalize", data("fixture_3_10_13.json"), "--json"},
      {"conormal", data("fixture_3_10_13.json")},
  };
  for (const auto& args : commands) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}
