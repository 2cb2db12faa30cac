#include <doctest.h>

#include "potalg/cli.hpp"

using namespace potalg;

namespace {

RationalField q;
PrimeField fp(kDefaultPrime);

}  // namespace

TEST_CASE("parse symmetrized words") {
    auto f = parse_potential("(x1*x2^3)~", q);
    CHECK(f == example_potential_kgen(q, 2, 4));
    CHECK(f.generators() == 2);
    CHECK(f.min_degree() == 4);
    CHECK(f.max_degree() == 4);
}

TEST_CASE("parse mixed degrees") {
    auto f = parse_potential("3 (x2^3*x1)~ + (x1^5)~", q);
    CHECK(f.min_degree() == 4);
    CHECK(f.max_degree() == 5);
    CHECK(f.poly().coefficient(Word{1, 1, 1, 1, 1}) == 5);
    CHECK(f.poly().coefficient(Word{2, 1, 2, 2}) == 3);
}

TEST_CASE("parse explicit terms, signs and rationals") {
    auto f = parse_potential("x1*x2*x3 + x2*x3*x1 + x3*x1*x2 - 1/2 (x1^3)~", q);
    CHECK(f.poly().coefficient(Word{1, 1, 1}) == mpq_class(-3, 2));
    CHECK(f.generators() == 3);

    auto g = parse_potential("-2*(x1*x2*x2)~", q, 4);
    CHECK(g.generators() == 4);
    CHECK(g.poly().coefficient(Word{2, 1, 2}) == -2);

    auto h = parse_potential("1/2 (x1^3)~", fp);
    CHECK(h.poly().coefficient(Word{1, 1, 1}) == fp.from_rational(mpq_class(3, 2)));
}

TEST_CASE("comments and whitespace") {
    auto f = parse_potential("# potential\n  ( x1 * x2 ^ 3 ) ~   # trailing\n", q);
    CHECK(f == example_potential_kgen(q, 2, 4));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_potential("(x1*x2)~ +\n  (x1*y2)~", q);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(parse_potential("(x1*x2", q), ParseError);
    CHECK_THROWS_AS(parse_potential("(x1*x2)", q), ParseError);
    CHECK_THROWS_AS(parse_potential("x0*x1*x1", q), ParseError);
    CHECK_THROWS_AS(parse_potential("1/0 (x1^3)~", q), ParseError);
    CHECK_THROWS_AS(parse_potential("x1^40", q), ParseError);
    CHECK_THROWS_AS(parse_potential("(x1^3)~ (x2^3)~", q), ParseError);
}

TEST_CASE("semantic errors") {
    CHECK_THROWS_AS(parse_potential("x1*x2 + x2*x1", q), std::invalid_argument);
    CHECK_THROWS_AS(parse_potential("x1*x2*x2", q), std::invalid_argument);
    CHECK_THROWS_AS(parse_potential("", q), std::invalid_argument);
    CHECK_THROWS_AS(parse_potential("(x1^3)~ - (x1^3)~", q), std::invalid_argument);
    CHECK_THROWS_AS(parse_potential("(x3^3)~", q, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_potential("5 + (x1^3)~", q), std::invalid_argument);
}

TEST_CASE("format round trip") {
    auto check = [](const auto& f) {
        auto text = format_potential(f);
        CHECK(parse_potential(text, f.field(), f.generators()) == f);
    };
    check(example_potential_kgen(q, 2, 4));
    check(example_potential_kgen(q, 3, 3));
    check(example_potential_ngtk(q, 5, 3));
    check(parse_potential("-3/7 (x1*x2*x1*x2)~ + 2 (x1^4)~ + (x1*x2^3)~ - (x2^5)~", q));
    for (std::uint64_t s = 0; s < 5; ++s)
        check(random_potential(2, 3 + static_cast<int>(s % 2), 5, FieldSpec::prime(kDefaultPrime), s));
    check(random_potential(2, 4, 4, FieldSpec::prime(3), 1));
    CHECK(format_potential(example_potential_kgen(q, 2, 4)) == "(x2^3*x1)~");
}

TEST_CASE("series json") {
    auto t = gsv_bound_coeffs(2, 4, 8);
    auto j = to_json(t);
    CHECK(j["kind"] == "gsv-bound");
    CHECK(j["n"] == 2);
    CHECK(j["k"] == 4);
    CHECK(j["m"] == 4);
    CHECK(j["D"] == 8);
    CHECK(j["coeffs"].size() == 9);
    CHECK(j.size() == 6);
    CHECK(series_from_json(j) == t);
    CHECK(series_from_json(nlohmann::json::parse(j.dump())) == t);
}

TEST_CASE("series csv") {
    auto t = rational_series_coeffs(2, 4, 3);
    auto b = gsv_bound_coeffs(2, 4, 2);
    CHECK(series_csv(t, &b) == "degree,coefficient,bound-coefficient,slack\n0,1,1,0\n1,2,3,-1\n2,4,7,-3\n3,6,,\n");
    CHECK(series_csv(t).starts_with("degree,coefficient,bound-coefficient,slack\n0,1,,\n"));
}

TEST_CASE("config and report json") {
    RunConfig c;
    c.field = FieldSpec::prime(101);
    c.degree_bound = 9;
    c.format = OutputFormat::Json;
    c.seed = 42;
    auto j = to_json(c);
    CHECK(j["field"] == "fp:101");
    CHECK(j["seed"] == 42);
    CHECK(j["out"].is_null());
    CHECK(output_format_from_string("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(output_format_from_string("xml"), std::invalid_argument);

    ExperimentParams p;
    p.trials = 2;
    p.degree_bound = 6;
    p.seed = 5;
    auto r = to_json(genericity_experiment(p));
    CHECK(r["params"]["trials"] == 2);
    CHECK(r["trials"].size() == 2);
    CHECK(r["trials"][1]["seed"] == 6);
    CHECK(r["summary"]["minimal_count"] == 2);
}
