#include "potalg/potential.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace potalg {

template <class Field>
Potential<Field>::Potential(NCPoly<Field> poly, int generators, int min_degree, int max_degree)
    : poly_(std::move(poly)), n_(generators), k_(min_degree), m_(max_degree) {
    if (n_ < 1 || n_ > 255)
        throw std::invalid_argument("generator count must lie in 1..255");
    if (k_ < 3 || m_ < k_)
        throw std::invalid_argument("degree window must satisfy 3 <= k <= m, got [" +
                                    std::to_string(k_) + ", " + std::to_string(m_) + "]");
    if (poly_.max_letter() > n_)
        throw std::invalid_argument("potential uses a generator above x" + std::to_string(n_));
    if (!poly_.is_zero() && (poly_.min_degree() < k_ || poly_.degree() > m_))
        throw std::invalid_argument("potential has terms outside its degree window");
    if (!is_cyclically_invariant(poly_))
        throw std::invalid_argument("potential is not cyclically invariant");
}

template <class Field>
bool is_cyclically_invariant(const NCPoly<Field>& p) {
    for (const auto& t : p.terms()) {
        for (std::size_t s = 1; s < t.word.degree(); ++s) {
            auto c = p.coefficient(t.word.rotated(s));
            if (!(c == t.coeff))
                return false;
        }
    }
    return true;
}

template <class Field>
NCPoly<Field> cyclic_symmetrize(const Field& field, const Word& w, const typename Field::Element& c) {
    if (w.empty())
        throw std::invalid_argument("cannot symmetrize the empty word");
    std::vector<typename NCPoly<Field>::Term> terms;
    for (std::size_t s = 0; s < w.degree(); ++s)
        terms.push_back({w.rotated(s), c});
    return NCPoly<Field>::from_terms(field, std::move(terms));
}

template <class Field>
NCPoly<Field> cyclic_derivative(const Potential<Field>& f, int j) {
    if (j < 1 || j > f.generators())
        throw std::invalid_argument("generator index out of range: " + std::to_string(j));
    std::vector<typename NCPoly<Field>::Term> terms;
    for (const auto& t : f.poly().terms()) {
        if (t.word.degree() > 0 && t.word[0] == j)
            terms.push_back({t.word.suffix(t.word.degree() - 1), t.coeff});
    }
    return NCPoly<Field>::from_terms(f.field(), std::move(terms));
}

template <class Field>
RelationSet<Field> jacobi_relations(const Potential<Field>& f) {
    RelationSet<Field> rels;
    rels.generators = f.generators();
    for (int j = 1; j <= f.generators(); ++j)
        rels.relations.push_back(cyclic_derivative(f, j));
    return rels;
}

template <class Field>
NCPoly<Field> key_syzygy_defect(const Potential<Field>& f) {
    const Field& field = f.field();
    NCPoly<Field> sum(field);
    for (int j = 1; j <= f.generators(); ++j) {
        auto r = cyclic_derivative(f, j);
        auto x = NCPoly<Field>::monomial(field, Word::letter(j), field.one());
        sum = sum + (x * r - r * x);
    }
    return sum;
}

template <class Field>
Potential<Field> example_potential_kgen(const Field& field, int n, int k) {
    if (!(k >= n && n >= 2 && k >= 3) || (n == 2 && k == 3))
        throw std::invalid_argument("kgen example requires k >= n >= 2, k >= 3, (n,k) != (2,3)");
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    NCPoly<Field> sum(field);
    do {
        Word w;
        for (int i = 0; i < k - n + 1; ++i)
            w.push_back(static_cast<Letter>(n));
        for (int l : perm)
            w.push_back(static_cast<Letter>(l));
        sum = sum + cyclic_symmetrize(field, w, field.one());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Potential<Field>(std::move(sum), n, k, k);
}

std::vector<Word> ngtk_monomials(int n, int k) {
    if (!(n > k && k >= 3))
        throw std::invalid_argument("ngtk example requires n > k >= 3");
    const int len = k - 2;
    std::vector<Word> all;
    // words of length k-2 over x1..x_{n-1} with pairwise distinct letters
    std::vector<int> letters(n - 1);
    std::iota(letters.begin(), letters.end(), 1);
    std::vector<bool> used(n, false);
    Word cur;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.degree()) == len) {
            all.push_back(cur);
            return;
        }
        for (int l = 1; l <= n - 1; ++l) {
            if (used[l])
                continue;
            used[l] = true;
            cur.push_back(static_cast<Letter>(l));
            self(self);
            cur.pop_back();
            used[l] = false;
        }
    };
    extend(extend);
    std::sort(all.begin(), all.end(), std::greater<>());
    // (n-1)!/(n-k+1)! >= n-1 whenever n > k >= 3
    std::vector<Word> top(all.begin(), all.begin() + (n - 1));

    const int pinned = n - k + 1;
    std::vector<Word> m(n - 1);
    m[pinned - 1] = top[0];
    std::size_t next = 1;
    for (int j = 1; j <= n - 1; ++j) {
        if (j != pinned)
            m[j - 1] = top[next++];
    }
    return m;
}

template <class Field>
Potential<Field> example_potential_ngtk(const Field& field, int n, int k) {
    auto m = ngtk_monomials(n, k);
    const int pinned = n - k + 1;
    Word head;
    for (int l = n; l >= n - k + 1; --l)
        head.push_back(static_cast<Letter>(l));
    NCPoly<Field> sum = cyclic_symmetrize(field, head, field.one());
    for (int j = 1; j <= n - 1; ++j) {
        if (j == pinned)
            continue;
        Word w = Word::letter(j) * Word::letter(n) * m[j - 1];
        sum = sum + cyclic_symmetrize(field, w, field.one());
    }
    return Potential<Field>(std::move(sum), n, k, k);
}

std::vector<Word> necklace_representatives(int n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("necklaces need n >= 1 and d >= 1");
    std::vector<Word> reps;
    std::size_t total = 1;
    for (int i = 0; i < d; ++i)
        total *= static_cast<std::size_t>(n);
    for (std::size_t r = 0; r < total; ++r) {
        Word w = word_from_rank(r, n, static_cast<std::size_t>(d));
        bool largest = true;
        for (int s = 1; s < d && largest; ++s)
            largest = !(w.rotated(s) > w);
        if (largest)
            reps.push_back(w);
    }
    return reps;
}

Potential<PrimeField> random_potential(int n, int k, int m, const FieldSpec& spec,
                                       std::uint64_t seed) {
    if (spec.kind != FieldSpec::Kind::Prime)
        throw std::invalid_argument("random potentials are sampled over prime fields only");
    if (n < 2 || k < 3 || m < k)
        throw std::invalid_argument("random potential requires n >= 2 and m >= k >= 3");
    PrimeField field(spec.modulus);
    const std::uint64_t p = spec.modulus;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / p * p;
    std::mt19937_64 gen(seed);
    auto draw = [&]() {
        std::uint64_t x;
        do {
            x = gen();
        } while (x >= limit);
        return static_cast<PrimeField::Element>(x % p);
    };
    std::vector<NCPoly<PrimeField>::Term> terms;
    for (int d = k; d <= m; ++d) {
        for (const Word& rep : necklace_representatives(n, d)) {
            auto c = draw();
            if (c == 0)
                continue;
            for (int s = 0; s < d; ++s)
                terms.push_back({rep.rotated(s), c});
        }
    }
    return Potential<PrimeField>(NCPoly<PrimeField>::from_terms(field, std::move(terms)), n, k, m);
}

template <class Field>
Potential<Field> lowest_homogeneous_part(const Potential<Field>& f) {
    if (f.is_zero())
        throw std::invalid_argument("zero potential has no lowest homogeneous part");
    const int k = f.min_degree();
    return Potential<Field>(f.poly().homogeneous_part(k), f.generators(), k, k);
}

#define POTALG_INSTANTIATE(F)                                                                  \
    template class Potential<F>;                                                               \
    template bool is_cyclically_invariant(const NCPoly<F>&);                                   \
    template NCPoly<F> cyclic_symmetrize(const F&, const Word&, const F::Element&);            \
    template NCPoly<F> cyclic_derivative(const Potential<F>&, int);                            \
    template RelationSet<F> jacobi_relations(const Potential<F>&);                             \
    template NCPoly<F> key_syzygy_defect(const Potential<F>&);                                 \
    template Potential<F> example_potential_kgen(const F&, int, int);                          \
    template Potential<F> example_potential_ngtk(const F&, int, int);                          \
    template Potential<F> lowest_homogeneous_part(const Potential<F>&);

POTALG_INSTANTIATE(PrimeField)
POTALG_INSTANTIATE(RationalField)

#undef POTALG_INSTANTIATE

}  // namespace potalg
