#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "potalg/analysis.hpp"
#include "potalg/groebner.hpp"
#include "potalg/hilbert.hpp"
#include "potalg/potential.hpp"

using namespace potalg;

namespace {

const FieldSpec kFp = FieldSpec::prime(kDefaultPrime);

Word random_word(std::mt19937_64& rng, int n, int max_degree) {
    std::uniform_int_distribution<int> len(0, max_degree), letter(1, n);
    Word w;
    for (int i = len(rng); i > 0; --i)
        w.push_back(static_cast<Letter>(letter(rng)));
    return w;
}

NCPoly<PrimeField> random_poly(std::mt19937_64& rng, const PrimeField& f, int n, int max_degree, int terms) {
    std::uniform_int_distribution<std::uint32_t> coeff(1, kDefaultPrime - 1);
    std::vector<NCPoly<PrimeField>::Term> t;
    for (int i = 0; i < terms; ++i)
        t.push_back({random_word(rng, n, max_degree), coeff(rng)});
    return NCPoly<PrimeField>::from_terms(f, std::move(t));
}

struct Case {
    int n, k, m;
};

}  // namespace

TEST_CASE("deglex is a total order compatible with concatenation") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        Word u = random_word(rng, 3, 5), v = random_word(rng, 3, 5), w = random_word(rng, 3, 4);
        auto c = u <=> v;
        CHECK((v <=> u) == (0 <=> c));
        if (u.degree() + v.degree() + 2 * w.degree() > Word::kMaxDegree)
            continue;
        CHECK(((w * u) <=> (w * v)) == c);
        CHECK(((u * w) <=> (v * w)) == c);
    }
}

TEST_CASE("polynomial ring axioms") {
    PrimeField f(kDefaultPrime);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(rng, f, 3, 3, 4), b = random_poly(rng, f, 3, 3, 4), c = random_poly(rng, f, 3, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("euler identity and key syzygy on random potentials") {
    for (Case c : {Case{2, 4, 5}, Case{3, 3, 4}, Case{4, 3, 3}, Case{2, 3, 6}}) {
        for (std::uint64_t s = 0; s < 8; ++s) {
            auto f = random_potential(c.n, c.k, c.m, kFp, s);
            const auto& field = f.field();
            NCPoly<PrimeField> left(field), right(field);
            for (int j = 1; j <= c.n; ++j) {
                auto r = cyclic_derivative(f, j);
                auto x = NCPoly<PrimeField>::monomial(field, Word::letter(j), 1);
                left = left + x * r;
                right = right + r * x;
                if (!r.is_zero()) {
                    CHECK(r.min_degree() >= c.k - 1);
                    CHECK(r.degree() <= c.m - 1);
                }
            }
            CHECK(left == f.poly());
            CHECK(right == f.poly());
            CHECK(key_syzygy_defect(f).is_zero());
        }
    }
}

TEST_CASE("random potentials are rotation invariant") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto f = random_potential(3, 3, 5, kFp, s);
        for (const auto& t : f.poly().terms())
            for (std::size_t r = 1; r < t.word.degree(); ++r)
                CHECK(f.poly().coefficient(t.word.rotated(r)) == t.coeff);
    }
}

TEST_CASE("groebner bases are confluent, reduced and contain the relations") {
    for (Case c : {Case{2, 4, 4}, Case{2, 4, 5}, Case{3, 3, 3}, Case{3, 3, 4}}) {
        for (std::uint64_t s = 0; s < 3; ++s) {
            auto f = random_potential(c.n, c.k, c.m, kFp, s);
            auto rels = jacobi_relations(f);
            const int d = c.n == 2 ? 7 : 5;
            for (auto order : {MonomialOrder::DegLex, MonomialOrder::LowDegreeFirst}) {
                if (order == MonomialOrder::DegLex && c.m > c.k)
                    continue;
                auto gb = truncated_groebner(rels, d, order);
                for (const auto& a : ambiguity_remainders(gb))
                    CHECK(a.remainder.is_zero());

                // reduced: no lead word occurs in another element
                for (std::size_t i = 0; i < gb.elements().size(); ++i) {
                    for (std::size_t j = 0; j < gb.elements().size(); ++j) {
                        if (i == j)
                            continue;
                        for (const auto& t : gb.elements()[j].terms()) {
                            bool contains = false;
                            const Word& l = gb.leads()[i];
                            for (std::size_t p = 0; p + l.degree() <= t.word.degree() && !contains; ++p)
                                contains = t.word.subword(p, l.degree()) == l;
                            CHECK_FALSE(contains);
                        }
                    }
                }

                // membership of u r v, and idempotence of normal forms
                std::mt19937_64 rng(s);
                for (int i = 0; i < 30; ++i) {
                    const auto& r = rels.relations[rng() % rels.relations.size()];
                    if (r.is_zero())
                        continue;
                    Word u = random_word(rng, c.n, 1), v = random_word(rng, c.n, 1);
                    auto p = r.sandwiched(u, v);
                    if (order == MonomialOrder::DegLex && p.degree() > d)
                        continue;
                    if (order == MonomialOrder::LowDegreeFirst)
                        p = p.truncated(d);
                    CHECK(normal_form(p, gb).is_zero());
                }
                PrimeField field(kDefaultPrime);
                for (int i = 0; i < 30; ++i) {
                    auto p = random_poly(rng, field, c.n, d, 5);
                    auto nf = normal_form(p, gb);
                    CHECK(normal_form(nf, gb) == nf);
                }
            }
        }
    }
}

TEST_CASE("groebner engine agrees with both oracles") {
    for (Case c : {Case{2, 4, 4}, Case{2, 5, 5}, Case{3, 3, 3}}) {
        for (std::uint64_t s = 0; s < 3; ++s) {
            auto f = random_potential(c.n, c.k, c.m, kFp, 50 + s);
            auto rels = jacobi_relations(f);
            const int d = c.n == 2 ? 7 : 5;
            auto counts = normal_word_counts(truncated_groebner(rels, d), d);
            CHECK(counts == brute_force_graded_dims(rels, d).coeffs);
            std::vector<oracle::Poly> plain;
            for (const auto& r : rels.relations)
                plain.push_back(oracle::plain(r, kDefaultPrime));
            CHECK(oracle::partial_sums(counts) == oracle::truncation_dims(c.n, plain, d, kDefaultPrime));
        }
    }
}

TEST_CASE("nonhomogeneous truncation dims agree with the dense oracle") {
    for (Case c : {Case{2, 4, 5}, Case{2, 4, 6}, Case{2, 3, 4}, Case{3, 3, 4}}) {
        for (std::uint64_t s = 0; s < 2; ++s) {
            auto f = random_potential(c.n, c.k, c.m, kFp, 70 + s);
            const int d = c.n == 2 ? 7 : 5;
            std::vector<oracle::Poly> plain;
            for (const auto& r : jacobi_relations(f).relations)
                plain.push_back(oracle::plain(r, kDefaultPrime));
            CHECK(truncation_dims(f, d).coeffs == oracle::truncation_dims(c.n, plain, d, kDefaultPrime));
        }
    }
}

TEST_CASE("groebner construction is deterministic") {
    auto f = random_potential(2, 4, 5, kFp, 9);
    auto a = truncated_groebner(jacobi_relations(f), 8, MonomialOrder::LowDegreeFirst);
    auto b = truncated_groebner(jacobi_relations(f), 8, MonomialOrder::LowDegreeFirst);
    CHECK(a.elements() == b.elements());
    CHECK(a.leads() == b.leads());
}

TEST_CASE("truncation dims are running sums of graded dims for homogeneous potentials") {
    RationalField q;
    for (auto f : {example_potential_kgen(q, 2, 4), example_potential_kgen(q, 3, 3),
                   example_potential_ngtk(q, 4, 3)}) {
        const int d = f.generators() == 2 ? 9 : 6;
        CHECK(truncation_dims(f, d).coeffs == oracle::partial_sums(graded_dims(f, d).coeffs));
    }
}

TEST_CASE("truncation dims respect the gsv bound and grow") {
    for (Case c : {Case{2, 4, 4}, Case{2, 4, 5}, Case{2, 5, 6}, Case{3, 3, 4}}) {
        for (std::uint64_t s = 0; s < 4; ++s) {
            auto f = random_potential(c.n, c.k, c.m, kFp, 90 + s);
            const int d = c.n == 2 ? 8 : 6;
            auto t = truncation_dims(f, d);
            CHECK_FALSE(first_bound_violation(t, gsv_bound_coeffs(c.n, c.k, d)).has_value());
            CHECK_FALSE(check_gsv_inequality(t, c.n, c.k).has_value());
            for (std::size_t j = 1; j < t.size(); ++j)
                CHECK(t[j] > t[j - 1]);
        }
    }
}

TEST_CASE("rank is independent of vector order") {
    PrimeField f(kDefaultPrime);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        std::vector<SparseVector<PrimeField>> v;
        std::vector<std::vector<std::uint64_t>> dense;
        for (int r = 0; r < 8; ++r) {
            SparseVector<PrimeField> s;
            std::vector<std::uint64_t> row(6, 0);
            for (std::uint32_t c = 0; c < 6; ++c) {
                if (rng() % 3 == 0) {
                    std::uint32_t x = static_cast<std::uint32_t>(rng() % 3);
                    if (x) {
                        s.emplace_back(c, x);
                        row[c] = x;
                    }
                }
            }
            v.push_back(s);
            dense.push_back(row);
        }
        auto r1 = rank(f, v);
        std::reverse(v.begin(), v.end());
        CHECK(rank(f, v) == r1);
        CHECK(r1 == oracle::dense_rank(dense, kDefaultPrime));
    }
}
