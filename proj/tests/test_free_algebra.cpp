#include <doctest.h>

#include <unordered_set>

#include "potalg/field.hpp"
#include "potalg/linalg.hpp"
#include "potalg/ncpoly.hpp"
#include "potalg/word.hpp"

using namespace potalg;

TEST_CASE("word basics") {
    Word w{1, 2, 2, 2};
    CHECK(w.degree() == 4);
    CHECK(w.to_string() == "x1*x2^3");
    CHECK(Word{}.to_string() == "1");
    CHECK(w.prefix(2) == Word{1, 2});
    CHECK(w.suffix(3) == Word{2, 2, 2});
    CHECK(w.subword(1, 2) == Word{2, 2});
    CHECK(w.rotated(1) == Word{2, 2, 2, 1});
    CHECK(w.max_letter() == 2);
    CHECK(Word{1, 2} * Word{3} == Word{1, 2, 3});

    Word v;
    v.push_back(3);
    v.push_back(1);
    v.pop_back();
    CHECK(v == Word{3});
    CHECK(v.hash() == Word{3}.hash());

    CHECK_THROWS_AS(Word::letter(0), std::invalid_argument);
}

TEST_CASE("word period") {
    CHECK(Word{1, 2, 1, 2}.period() == 2);
    CHECK(Word{1, 1, 1}.period() == 1);
    CHECK(Word{1, 2, 2}.period() == 3);
}

TEST_CASE("deglex order") {
    CHECK(Word{2} < Word{1, 1});
    CHECK(Word{1, 2} < Word{2, 1});
    CHECK(Word{1, 2, 2} < Word{2, 1, 1});
    CHECK(Word{} < Word{1});
    CHECK((Word{1, 2} <=> Word{1, 2}) == std::strong_ordering::equal);
}

TEST_CASE("word rank round trip") {
    for (std::size_t r = 0; r < 27; ++r)
        CHECK(word_rank(word_from_rank(r, 3, 3), 3) == r);
    CHECK(word_rank(Word{1, 1}, 2) == 0);
    CHECK(word_rank(Word{2, 2}, 2) == 3);
    CHECK(word_from_rank(1, 2, 2) == Word{1, 2});
}

TEST_CASE("word hash spreads") {
    std::unordered_set<Word> seen;
    for (std::size_t r = 0; r < 81; ++r)
        seen.insert(word_from_rank(r, 3, 4));
    CHECK(seen.size() == 81);
}

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("fp:7") == FieldSpec::prime(7));
    CHECK(FieldSpec::prime(65521).to_string() == "fp:65521");
    CHECK_THROWS_AS(FieldSpec::parse("fp:8"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("r"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(2147483659ULL), std::invalid_argument);
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("prime field arithmetic") {
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(3) == 4);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.div(1, 3) == 5);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.from_rational(mpq_class(1, 2)) == 4);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.from_rational(mpq_class(1, 7)), std::domain_error);
}

TEST_CASE("rational field arithmetic") {
    RationalField q;
    CHECK(q.div(q.from_int(1), q.from_int(3)) == mpq_class(1, 3));
    CHECK(q.inv(mpq_class(-2, 5)) == mpq_class(-5, 2));
    CHECK_THROWS_AS(q.inv(0), std::domain_error);
    CHECK(q.to_string(mpq_class(-3, 4)) == "-3/4");
}

TEST_CASE("polynomial normalization") {
    RationalField q;
    using P = NCPoly<RationalField>;
    auto p = P::from_terms(q, {{Word{1}, 2}, {Word{1, 2}, 1}, {Word{1}, -2}, {Word{2}, 3}});
    REQUIRE(p.size() == 2);
    CHECK(p.leading_term().word == Word{1, 2});
    CHECK(p.coefficient(Word{2}) == 3);
    CHECK(p.coefficient(Word{1}) == 0);
    CHECK(p.degree() == 2);
    CHECK(p.min_degree() == 1);
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.homogeneous_part(1) == P::monomial(q, Word{2}, 3));
    CHECK(p.truncated(1) == P::monomial(q, Word{2}, 3));
    CHECK(p.to_string() == "x1*x2 + 3*x2");
}

TEST_CASE("polynomial arithmetic") {
    RationalField q;
    using P = NCPoly<RationalField>;
    auto x = P::monomial(q, Word{1}, 1);
    auto y = P::monomial(q, Word{2}, 1);
    auto c = x * y - y * x;
    CHECK(c.size() == 2);
    CHECK(c.coefficient(Word{2, 1}) == -1);
    CHECK((c + y * x - x * y).is_zero());
    CHECK(((x + y) * (x + y)).size() == 4);
    CHECK(x.sandwiched(Word{2}, Word{2}) == P::monomial(q, Word{2, 1, 2}, 1));
    CHECK((-x).coefficient(Word{1}) == -1);
    CHECK(x.scaled(0).is_zero());

    PrimeField f(5);
    auto z = NCPoly<PrimeField>::monomial(f, Word{1}, 1);
    auto z7 = NCPoly<PrimeField>::monomial(PrimeField(7), Word{1}, 1);
    CHECK_THROWS_AS(z + z7, std::invalid_argument);
    CHECK((z.scaled(5 - 1) + z).is_zero());
}

TEST_CASE("sparse echelon rank") {
    PrimeField f(7);
    std::vector<SparseVector<PrimeField>> v{{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{2, 3}}};
    CHECK(rank(f, v) == 2);

    RationalField q;
    EchelonBasis<RationalField> b(q);
    CHECK(b.insert({{0, mpq_class(1, 2)}, {2, 1}}));
    CHECK(b.insert({{1, 1}, {2, mpq_class(-1, 3)}}));
    CHECK_FALSE(b.insert({{0, 1}, {1, 3}, {2, 1}}));
    CHECK_FALSE(b.insert({}));
    CHECK(b.rank() == 2);

    SparseMatrix<RationalField> m{3, 3, {{{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}}}};
    CHECK(rank(m, q) == 2);
}
