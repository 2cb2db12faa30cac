#include <doctest.h>

#include <numeric>

#include "potalg/potential.hpp"

using namespace potalg;

namespace {

RationalField q;
using P = NCPoly<RationalField>;

P mono(std::initializer_list<int> w, long c = 1) { return P::monomial(q, Word(w), c); }

// Burnside: (1/d) sum_{e | d} phi(e) n^{d/e}
std::size_t necklace_count(int n, int d) {
    std::size_t total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e)
            continue;
        int phi = 0;
        for (int i = 1; i <= e; ++i)
            phi += std::gcd(i, e) == 1;
        std::size_t pw = 1;
        for (int i = 0; i < d / e; ++i)
            pw *= static_cast<std::size_t>(n);
        total += static_cast<std::size_t>(phi) * pw;
    }
    return total / static_cast<std::size_t>(d);
}

}  // namespace

TEST_CASE("cyclic symmetrization") {
    CHECK(cyclic_symmetrize(q, Word{1, 2}, mpq_class(1)) == mono({1, 2}) + mono({2, 1}));
    CHECK(cyclic_symmetrize(q, Word{1, 1}, mpq_class(1)) == mono({1, 1}, 2));
    CHECK(cyclic_symmetrize(q, Word{1, 2, 2, 2}, mpq_class(1)) ==
          mono({1, 2, 2, 2}) + mono({2, 1, 2, 2}) + mono({2, 2, 1, 2}) + mono({2, 2, 2, 1}));
    CHECK(cyclic_symmetrize(q, Word{1, 2, 1, 2}, mpq_class(3)) == mono({1, 2, 1, 2}, 6) + mono({2, 1, 2, 1}, 6));
    CHECK_THROWS_AS(cyclic_symmetrize(q, Word{}, mpq_class(1)), std::invalid_argument);
}

TEST_CASE("cyclic invariance") {
    CHECK(is_cyclically_invariant(mono({1, 2}) + mono({2, 1})));
    CHECK_FALSE(is_cyclically_invariant(mono({1, 2})));
    CHECK_FALSE(is_cyclically_invariant(mono({1, 2}, 2) + mono({2, 1})));
    CHECK(is_cyclically_invariant(P(q)));
}

TEST_CASE("potential validation") {
    auto f = cyclic_symmetrize(q, Word{1, 2, 2, 2}, mpq_class(1));
    CHECK_NOTHROW(Potential<RationalField>(f, 2, 4, 4));
    CHECK_NOTHROW(Potential<RationalField>(f, 3, 3, 5));
    CHECK_THROWS_AS(Potential<RationalField>(f, 1, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(Potential<RationalField>(f, 2, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(Potential<RationalField>(f, 2, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(Potential<RationalField>(mono({1, 2, 2, 2}), 2, 4, 4), std::invalid_argument);
    CHECK(Potential<RationalField>::zero(q, 2, 4, 4).is_zero());
}

TEST_CASE("cyclic derivatives of (x1 x2^3)~") {
    Potential<RationalField> f(cyclic_symmetrize(q, Word{1, 2, 2, 2}, mpq_class(1)), 2, 4, 4);
    CHECK(cyclic_derivative(f, 1) == mono({2, 2, 2}));
    CHECK(cyclic_derivative(f, 2) == mono({1, 2, 2}) + mono({2, 1, 2}) + mono({2, 2, 1}));
    CHECK_THROWS_AS(cyclic_derivative(f, 3), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_derivative(f, 0), std::invalid_argument);
    CHECK(key_syzygy_defect(f).is_zero());

    auto rels = jacobi_relations(f);
    CHECK(rels.generators == 2);
    CHECK(rels.relations.size() == 2);
}

TEST_CASE("derivative of a letter that does not occur") {
    Potential<RationalField> f(cyclic_symmetrize(q, Word{1, 1, 1}, mpq_class(1)), 2, 3, 3);
    CHECK(f.poly() == mono({1, 1, 1}, 3));
    CHECK(cyclic_derivative(f, 2).is_zero());
    CHECK(key_syzygy_defect(Potential<RationalField>::zero(q, 2, 3, 3)).is_zero());
}

TEST_CASE("kgen examples") {
    auto f24 = example_potential_kgen(q, 2, 4);
    CHECK(f24.poly() == cyclic_symmetrize(q, Word{2, 2, 2, 1}, mpq_class(1)));
    CHECK(f24.poly().size() == 4);

    auto f33 = example_potential_kgen(q, 3, 3);
    CHECK(f33.poly() ==
          cyclic_symmetrize(q, Word{3, 1, 2}, mpq_class(1)) + cyclic_symmetrize(q, Word{3, 2, 1}, mpq_class(1)));
    CHECK(f33.poly().size() == 6);

    // n = 3, k = 4: (x3^2 x1 x2)~ + (x3^2 x2 x1)~
    CHECK(example_potential_kgen(q, 3, 4).poly().size() == 8);

    CHECK_THROWS_AS(example_potential_kgen(q, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(example_potential_kgen(q, 4, 3), std::invalid_argument);
}

TEST_CASE("ngtk examples") {
    auto m = ngtk_monomials(4, 3);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == Word{2});
    CHECK(m[1] == Word{3});
    CHECK(m[2] == Word{1});

    auto f = example_potential_ngtk(q, 4, 3);
    auto expected = cyclic_symmetrize(q, Word{4, 3, 2}, mpq_class(1)) +
                    cyclic_symmetrize(q, Word{1, 4, 2}, mpq_class(1)) +
                    cyclic_symmetrize(q, Word{3, 4, 1}, mpq_class(1));
    CHECK(f.poly() == expected);

    auto m5 = ngtk_monomials(5, 3);
    CHECK(m5[2] == Word{4});
    // pinned m_{n-k+1} = x_{n-1} ... x_{n-k+2}
    CHECK(ngtk_monomials(6, 4)[2] == Word{5, 4});
    for (const Word& w : ngtk_monomials(6, 4)) {
        CHECK(w.degree() == 2);
        CHECK(w[0] != w[1]);
    }

    CHECK_THROWS_AS(example_potential_ngtk(q, 3, 3), std::invalid_argument);
}

TEST_CASE("necklaces") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 1; d <= 6; ++d) {
            auto reps = necklace_representatives(n, d);
            CHECK(reps.size() == necklace_count(n, d));
            for (std::size_t i = 0; i < reps.size(); ++i) {
                for (std::size_t s = 1; s < reps[i].degree(); ++s)
                    CHECK(reps[i].rotated(s) <= reps[i]);
                if (i)
                    CHECK(reps[i - 1] < reps[i]);
            }
        }
    }
}

TEST_CASE("random potentials") {
    auto fp = FieldSpec::prime(kDefaultPrime);
    auto a = random_potential(2, 4, 4, fp, 11);
    auto b = random_potential(2, 4, 4, fp, 11);
    CHECK(a == b);
    CHECK(a.is_homogeneous());
    CHECK(a.generators() == 2);
    CHECK(is_cyclically_invariant(a.poly()));
    CHECK(a.poly().size() <= 16);

    std::size_t classes = 0;
    for (const auto& t : a.poly().terms()) {
        bool rep = true;
        for (std::size_t s = 1; s < t.word.degree(); ++s)
            rep = rep && t.word.rotated(s) <= t.word;
        classes += rep;
    }
    CHECK(classes <= necklace_count(2, 4));

    auto c = random_potential(2, 4, 5, fp, 11);
    for (const auto& t : c.poly().terms())
        CHECK((t.word.degree() == 4 || t.word.degree() == 5));
    CHECK_FALSE(random_potential(2, 4, 4, fp, 12) == a);

    CHECK_THROWS_AS(random_potential(2, 4, 4, FieldSpec::rationals(), 1), std::invalid_argument);
    CHECK_THROWS_AS(random_potential(2, 2, 4, fp, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_potential(2, 5, 4, fp, 1), std::invalid_argument);
}

TEST_CASE("lowest homogeneous part") {
    auto fp = FieldSpec::prime(kDefaultPrime);
    auto f = random_potential(2, 4, 6, fp, 5);
    auto low = lowest_homogeneous_part(f);
    CHECK(low.min_degree() == 4);
    CHECK(low.max_degree() == 4);
    CHECK(low.poly() == f.poly().homogeneous_part(4));
    CHECK(lowest_homogeneous_part(low) == low);
    CHECK_THROWS_AS(lowest_homogeneous_part(Potential<PrimeField>::zero(PrimeField(kDefaultPrime), 2, 4, 4)),
                    std::invalid_argument);
}
