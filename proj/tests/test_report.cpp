#include <doctest.h>

#include <random>
#include <stdexcept>

#include "homspace/report.hpp"

using namespace homspace;

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("8/6") == Rational(4, 3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("inequality names round-trip") {
  for (Inequality i : kAllInequalities) CHECK(parse_inequality(inequality_name(i)) == i);
  CHECK_THROWS_AS(parse_inequality("thm_nonsense"), std::invalid_argument);
}

TEST_CASE("only the square-root bounds are strict") {
  for (Inequality i : kAllInequalities) {
    const bool sqrt_bound =
        i == Inequality::cor_sqrt_affine || i == Inequality::thm_proj_sqrt;
    CHECK(is_strict(i) == sqrt_bound);
    CHECK(make_report("x", 1, 1, i, Rational(2), Rational(2)).passed == !sqrt_bound);
  }
}

TEST_CASE("make_report fills slack and verdict") {
  const auto r = make_report("A3/I={}", 6, 3, Inequality::thm_proj_linear, Rational(3),
                             Rational(12, 4));
  CHECK(r.passed);
  CHECK(r.slack == Rational(0));

  const auto bad = make_report("q", 1, 2, Inequality::prop1, Rational(2), Rational(1));
  CHECK_FALSE(bad.passed);
  CHECK(bad.slack == Rational(-1));
}

TEST_CASE("JSON keys keep schema order") {
  const auto line = to_json_line(
      make_report("E6/k=3", 54, 3, Inequality::thm_affine, Rational(3), Rational(54, 7)));
  CHECK(line ==
        R"({"instance_id":"E6/k=3","dim_X":54,"picard_bound":3,"inequality":"thm_affine",)"
        R"("lhs":"3","rhs":"54/7","passed":true,"slack":"33/7"})");
}

TEST_CASE("JSON round-trip on random reports") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> small(-500, 500);
  std::uniform_int_distribution<int> positive(1, 97);
  std::uniform_int_distribution<std::size_t> which(0, kAllInequalities.size() - 1);
  const std::string alphabet = "AB17x/={},() \"\\";
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string id;
    for (int c = 0; c < trial % 12; ++c) id += alphabet[letter(rng)];
    const auto r = make_report(id, positive(rng), positive(rng), kAllInequalities[which(rng)],
                               Rational(small(rng), positive(rng)),
                               Rational(small(rng), positive(rng)));
    const auto line = to_json_line(r);
    CHECK(from_json_line(line) == r);
    CHECK(line.find('\n') == std::string::npos);
  }
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(from_json_line("not json"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_line("{}"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_line(R"({"instance_id":"a","dim_X":"2","picard_bound":1,)"
                                 R"("inequality":"prop1","lhs":"1","rhs":"2","passed":true,)"
                                 R"("slack":"1"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_json_line(R"({"instance_id":"a","dim_X":2,"picard_bound":1,)"
                                 R"("inequality":"prop9","lhs":"1","rhs":"2","passed":true,)"
                                 R"("slack":"1"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_json_line(R"({"instance_id":"a","dim_X":2,"picard_bound":1,)"
                                 R"("inequality":"prop1","lhs":"1/0","rhs":"2","passed":true,)"
                                 R"("slack":"1"})"),
                  std::invalid_argument);
}

TEST_CASE("CSV rows") {
  CHECK(csv_header() == "instance_id,dim_X,picard_bound,inequality,lhs,rhs,passed,slack");
  const auto plain = make_report("E6/k=3", 54, 3, Inequality::thm_affine, Rational(3),
                                 Rational(54, 7));
  CHECK(to_csv_row(plain) == "E6/k=3,54,3,thm_affine,3,54/7,true,33/7");

  const auto commas = make_report("A1xA1/t=(1,0)", 2, 1, Inequality::cor_half, Rational(1),
                                  Rational(1));
  CHECK(to_csv_row(commas) == "\"A1xA1/t=(1,0)\",2,1,cor_half,1,1,true,0");

  const auto quotes = make_report("say \"hi\"", 2, 1, Inequality::prop1, Rational(1),
                                  Rational(2));
  CHECK(to_csv_row(quotes).starts_with("\"say \"\"hi\"\"\","));
}

TEST_CASE("summaries") {
  const std::vector<VerificationReport> rows{
      make_report("a", 4, 1, Inequality::prop1, Rational(1), Rational(4)),
      make_report("a", 4, 1, Inequality::thm_proj_sqrt, Rational(1), Rational(8)),
      make_report("b", 1, 2, Inequality::prop1, Rational(2), Rational(1)),
  };
  const auto s = summarize(rows);
  CHECK(s.total == 3);
  CHECK(s.failed == 1);
  CHECK_FALSE(s.all_passed());
  CHECK(s.by_inequality.at(Inequality::prop1).checked == 2);
  CHECK(s.by_inequality.at(Inequality::prop1).failed == 1);
  CHECK(*s.by_inequality.at(Inequality::prop1).min_slack == Rational(-1));
  CHECK(format_summary(s) ==
        "checked=3 failed=1 | prop1: n=2 failed=1 min_slack=-1 | "
        "thm_proj_sqrt: n=1 failed=0 min_slack=7");

  const auto empty = summarize(std::vector<VerificationReport>{});
  CHECK(empty.all_passed());
  CHECK(format_summary(empty) == "checked=0 failed=0");
}
