#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "reeskit/cli.hpp"

using namespace reeskit;

namespace {

const char* kHypersurface =
    "field QQ;\n"
    "vars y1, y2;\n"
    "quotient f = y1^2 + y2^2;\n"
    "ideal I = y1, y2;\n";

// Line and column of the diagnostic for `text`.
std::pair<int, int> where(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no parse error for: " << text);
  return {0, 0};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse a small problem") {
  auto p = parse_problem("field QQ; vars y1,y2; ideal I = y1, y2; check rank;");
  CHECK(p.prime == 0);
  CHECK(p.vars == std::vector<std::string>{"y1", "y2"});
  CHECK(p.ideal == std::vector<std::string>{"y1", "y2"});
  CHECK(p.quotient.empty());
  REQUIRE(p.checks.has_value());
  CHECK(*p.checks == std::vector<std::string>{"rank"});
  CHECK(p.seed == 0);

  auto h = parse_problem(kHypersurface);
  CHECK(h.quotient == std::vector<std::string>{"y1^2 + y2^2"});
  CHECK_FALSE(h.checks.has_value());
  CHECK(h.effective_checks() == default_checks());
}

TEST_CASE("statements and comments") {
  auto p = parse_problem(
      "# leading comment\n"
      "field Fp 7;   # trailing\n"
      "vars a, b;\n"
      "ideal I = a^2 - b^2, a*b;\n"
      "check d2, rank; check rank;\n"
      "seed 42; max-pairs 1000; max-minor 10; red-cap 5; hilb-window 6;\n");
  CHECK(p.prime == 7);
  CHECK(*p.checks == std::vector<std::string>{"rank", "d2"});
  CHECK(p.seed == 42);
  CHECK(p.max_pairs == 1000);
  CHECK(p.max_minor == 10);
  CHECK(p.red_cap == 5);
  CHECK(p.hilb_window == 6);
  // coefficients are read mod 7
  CHECK(parse_problem("field Fp 7; vars a; ideal I = 8*a;").ideal == std::vector<std::string>{"a"});
  CHECK(parse_problem("vars a; ideal I = a; check none;").checks->empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK(where("field Fp 4;\nvars y1;\nideal I = y1;") == std::make_pair(1, 10));
  CHECK(where("field RR;\nvars y1;\nideal I = y1;") == std::make_pair(1, 7));
  CHECK(where("vars y1, y2, y1;\nideal I = y1;") == std::make_pair(1, 14));
  CHECK(where("vars y1, y2;\nideal I = y1, y1 + y2^2;") == std::make_pair(2, 15));
  CHECK(where("vars y1;\nideal I = y1;\ncheck rank, bogus;") == std::make_pair(3, 13));
  CHECK(where("vars y1;\nideal I = y1;\nfrobnicate;") == std::make_pair(3, 1));
  CHECK(where("vars y1;\nideal I = y1") == std::make_pair(2, 1));
  CHECK(where("vars y1;\nideal I = 2*z;") == std::make_pair(2, 11));
  CHECK(where("vars y1;\nideal I = 0;") == std::make_pair(2, 11));
  CHECK(where("vars y1, T;\nideal I = y1;").first == 1);
  CHECK(where("vars y1, X2;\nideal I = y1;").first == 1);
  CHECK(where("ideal I = y1;\nvars y1;").first == 1);
  CHECK(where("vars y1;\nfield QQ;\nideal I = y1;").first == 2);
  CHECK(where("vars y1;\nideal I = y1;\nseed -3;").first == 3);
  CHECK(where("vars y1;").first == 1);
  CHECK_THROWS_AS(parse_problem("vars y1; ideal I = y1; max-minor 0;"), ParseError);
}

TEST_CASE("echo round trip") {
  std::vector<std::string> texts = {
      kHypersurface,
      "field Fp 101; vars u, v, w; ideal I = u^2, v*w; check none; seed 9;",
      "vars y1, y2; ideal I = 3/2*y1^2 - y1*y2, y2^2; check gulliksen, rank; max-minor 11; hilb-window 5;",
  };
  for (const auto& t : texts) {
    auto p = parse_problem(t);
    auto e = echo(p);
    CAPTURE(e);
    CHECK(parse_problem(e) == p);
    CHECK(echo(parse_problem(e)) == e);
  }
}

TEST_CASE("normalized problems") {
  auto p = parse_problem("vars y1, y2; ideal I = 8*y1, y2;");
  p.prime = 7;
  auto q = normalized(p);
  CHECK(q.ideal == std::vector<std::string>{"y1", "y2"});
  p.prime = 4;
  CHECK_THROWS_AS(normalized(p), ParseError);
  auto r = parse_problem("vars y1; ideal I = 1/7*y1;");
  r.prime = 7;
  CHECK_THROWS_AS(normalized(r), ParseError);
  auto c = parse_problem("vars y1; ideal I = y1;");
  c.checks = std::vector<std::string>{"d2", "nope"};
  CHECK_THROWS_AS(normalized(c), ParseError);
  c.checks = std::vector<std::string>{"d2", "rank"};
  CHECK(*normalized(c).checks == std::vector<std::string>{"rank", "d2"});
}

TEST_CASE("run the rank check") {
  auto d = run(parse_problem("vars y1, y2; ideal I = y1, y2; check rank;"));
  CHECK(d.error.empty());
  REQUIRE(d.reports.size() == 1);
  const auto& r = d.reports[0];
  CHECK(r.status == ReportStatus::Consistent);
  CHECK(r.find("formula_rees")->certificate == "0 = 0");
  CHECK(r.find("formula_ext")->certificate == "0 = 0");
  CHECK(d.exit_code() == 0);
  CHECK(d.mu_I == 2);
  CHECK(d.rees.mu == 1);
  CHECK(d.ext.mu == 2);
}

TEST_CASE("empty check list gives presentations only") {
  auto d = run(parse_problem("vars y1, y2; ideal I = y1, y2; check none;"));
  CHECK(d.reports.empty());
  CHECK(d.rees.J_min.size() == 1);
  CHECK(d.exit_code() == 0);
  auto md = render(d, Format::Markdown);
  CHECK(md.find("| check |") == std::string::npos);
}

TEST_CASE("all checks on the hypersurface") {
  auto p = parse_problem(std::string(kHypersurface) + "check rank, proj-ci, ext-ci, min-gen, d2, hilb, gulliksen; seed 1;");
  auto d = run(p);
  CHECK(d.error.empty());
  CHECK(d.exit_code() == 0);
  auto json = render(d, Format::Json);
  CHECK(json.find("bound attained: 1 = 1") != std::string::npos);
  auto md = render(d, Format::Markdown);
  CHECK(md.find("bound attained: 1 = 1") != std::string::npos);
  // hilb runs once per i = 1..dim A; here dim A = 1
  CHECK(d.reports.size() == 7);
  CHECK(count(md, "\n| ") == d.reports.size() + 1);
}

TEST_CASE("json is canonical") {
  auto p = parse_problem("vars y1, y2; ideal I = y1^2, y2^2; check rank, min-gen, d2; seed 3;");
  auto a = render(run(p), Format::Json);
  auto b = render(run(p), Format::Json);
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);
  auto j = nlohmann::json::parse(a);
  CHECK(j["schema_version"] == 1);
  CHECK(j["tool"] == "reeskit");
  CHECK(j["version"] == REESKIT_VERSION);
  CHECK(j["summary"]["exit_code"] == 0);
  CHECK(j["reports"].size() == 3);
  CHECK(j.dump(2) + "\n" == a);  // keys already sorted
  auto t = render(run(p), Format::Json, true);
  CHECK(nlohmann::json::parse(t).contains("timings"));
}

TEST_CASE("exit codes and violation markers") {
  ReportDocument d;
  d.version = "test";
  d.problem = parse_problem("vars y1; ideal I = y1;");
  TheoremReport ok;
  ok.check = "rank";
  ok.add("x", true);
  d.reports.push_back(ok);
  CHECK(d.exit_code() == 0);

  TheoremReport skip;
  skip.check = "hilb";
  skip.status = ReportStatus::Inapplicable;
  d.reports.push_back(skip);
  CHECK(d.exit_code() == 0);

  TheoremReport err;
  err.check = "d2";
  err.status = ReportStatus::Error;
  d.reports.push_back(err);
  CHECK(d.exit_code() == 3);

  TheoremReport bad;
  bad.check = "ext-ci";
  bad.status = ReportStatus::Violation;
  bad.add("complete_intersection", true);
  bad.add("koszul_side", false);
  d.reports.push_back(bad);
  CHECK(d.exit_code() == 2);
  auto md = render(d, Format::Markdown);
  CHECK(count(md, "!! VIOLATION !!") == 1);
  CHECK(count(md, "\n| ") == d.reports.size() + 1);
  auto j = nlohmann::json::parse(render(d, Format::Json));
  CHECK(j["summary"]["counts"]["VIOLATION"] == 1);
  CHECK(j["summary"]["exit_code"] == 2);

  ReportDocument broken;
  broken.error = "boom";
  CHECK(broken.exit_code() == 3);
}

TEST_CASE("construction failures are engine errors") {
  auto d = run(parse_problem("vars y1, y2; quotient f = y1*y2, y1^2; ideal I = y1, y2;"));
  CHECK_FALSE(d.error.empty());
  CHECK(d.exit_code() == 3);
  CHECK(render(d, Format::Markdown).find("ERROR") != std::string::npos);
}

TEST_CASE("caps reach the engine and are restored") {
  auto before = default_matrix_caps().max_minor;
  auto d = run(parse_problem("vars y1, y2; ideal I = y1^2, y1*y2, y2^2; check gulliksen; max-minor 2;"));
  REQUIRE(d.reports.size() == 1);
  CHECK(d.reports[0].status == ReportStatus::Error);
  CHECK(d.reports[0].note.find("cap") != std::string::npos);
  CHECK(d.exit_code() == 3);
  CHECK(default_matrix_caps().max_minor == before);
}
