#include "potalg/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "potalg/hilbert.hpp"

namespace potalg {

namespace {

template <class Field>
std::vector<Word> normal_words_upto(const TruncatedGB<Field>& gb, int j) {
    std::vector<Word> out;
    for (int d = 0; d <= j; ++d) {
        auto w = normal_words(gb, d);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

template <class Field>
TruncatedGB<Field> basis_for(const Potential<Field>& f, int degree_bound) {
    const auto order = f.is_homogeneous() ? MonomialOrder::DegLex : MonomialOrder::LowDegreeFirst;
    if (f.is_zero())
        return TruncatedGB<Field>::empty(f.field(), f.generators(), degree_bound, order);
    return truncated_groebner(jacobi_relations(f), degree_bound, order);
}

}  // namespace

template <class Field>
MultiplicationMatrix<Field> x1_multiplication_matrix(const TruncatedGB<Field>& gb, int j,
                                                     Slicing slicing) {
    if (j < 0 || j + 1 > gb.reliable_degree())
        throw std::out_of_range("x1 multiplication needs 0 <= j < " + std::to_string(gb.reliable_degree()));
    if (slicing == Slicing::Truncated && gb.order() != MonomialOrder::LowDegreeFirst && !gb.homogeneous())
        throw std::invalid_argument("truncated slicing needs a low-degree-first basis");

    MultiplicationMatrix<Field> out;
    if (slicing == Slicing::Graded) {
        out.domain = normal_words(gb, j);
        out.codomain = normal_words(gb, j + 1);
    } else {
        out.domain = normal_words_upto(gb, j);
        out.codomain = normal_words_upto(gb, j + 1);
    }
    std::unordered_map<Word, std::uint32_t> row_of;
    for (std::size_t i = 0; i < out.codomain.size(); ++i)
        row_of.emplace(out.codomain[i], static_cast<std::uint32_t>(i));

    const Field& f = gb.field();
    const Word x1 = Word::letter(1);
    out.matrix.rows = out.codomain.size();
    out.matrix.cols = out.domain.size();
    for (const Word& w : out.domain) {
        auto image = normal_form(NCPoly<Field>::monomial(f, x1 * w, f.one()), gb);
        SparseVector<Field> col;
        for (const auto& t : image.terms()) {
            if (static_cast<int>(t.word.degree()) > j + 1)
                continue;  // zero in A^(j+1)
            col.emplace_back(row_of.at(t.word), t.coeff);
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.matrix.columns.push_back(std::move(col));
    }
    return out;
}

template <class Field>
InjectivityReport check_left_injectivity(const Potential<Field>& f, int degree_bound) {
    if (degree_bound < 1)
        throw std::invalid_argument("injectivity check needs D >= 1");
    auto gb = basis_for(f, degree_bound);
    const Slicing slicing = f.is_homogeneous() ? Slicing::Graded : Slicing::Truncated;
    InjectivityReport report;
    for (int j = 0; j < degree_bound; ++j) {
        auto m = x1_multiplication_matrix(gb, j, slicing);
        std::size_t r = rank(m.matrix, gb.field());
        report.ranks.push_back({j, m.domain.size(), r});
        report.max_degree_checked = j;
        if (r < m.domain.size() && !report.first_failure)
            report.first_failure = j;
    }
    return report;
}

template <class Field>
bool check_minimal_series(const Potential<Field>& f, int degree_bound) {
    if (!f.is_homogeneous())
        throw std::invalid_argument("minimal-series check needs a homogeneous potential");
    auto dims = graded_dims(f, degree_bound);
    auto minimal = rational_series_coeffs(f.generators(), f.min_degree(), degree_bound);
    return dims.coeffs == minimal.coeffs;
}

ExperimentReport genericity_experiment(const ExperimentParams& params) {
    const auto& p = params;
    if (p.n == 2 && p.k == 3)
        throw std::invalid_argument("genericity experiment excludes (n,k) = (2,3)");
    if (p.n < 2 || p.k < 3 || p.m < p.k)
        throw std::invalid_argument("genericity experiment needs n >= 2 and m >= k >= 3");
    if (p.field.kind != FieldSpec::Kind::Prime)
        throw std::invalid_argument("genericity experiment samples over a prime field");
    if (p.trials < 0)
        throw std::invalid_argument("trial count must be nonnegative");
    if (p.degree_bound < 1)
        throw std::invalid_argument("genericity experiment needs D >= 1");

    ExperimentReport report;
    report.params = p;
    report.trials.resize(static_cast<std::size_t>(p.trials));
    const auto bound = gsv_bound_coeffs(p.n, p.k, p.degree_bound);

    auto run_trial = [&](std::size_t i) {
        TrialResult& t = report.trials[i];
        t.seed = p.seed + i;
        auto f = random_potential(p.n, p.k, p.m, p.field, t.seed);
        auto dims = truncation_dims(f, p.degree_bound);
        t.truncation_dims = dims.coeffs;
        t.minimal_series = dims.coeffs == bound.coeffs;
        t.bound_respected = !first_bound_violation(dims, bound).has_value();
        auto inj = check_left_injectivity(f, p.degree_bound);
        t.first_injectivity_failure = inj.first_failure;
        t.injective_up_to_d = !inj.first_failure.has_value();
    };

    unsigned workers = p.threads ? p.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max(p.trials, 1)));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < report.trials.size(); i = next++)
                        run_trial(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }

    for (const auto& t : report.trials) {
        report.minimal_count += t.minimal_series;
        report.injective_count += t.injective_up_to_d;
    }
    if (p.trials > 0) {
        report.minimal_fraction = static_cast<double>(report.minimal_count) / p.trials;
        report.injective_fraction = static_cast<double>(report.injective_count) / p.trials;
    }
    return report;
}

#define POTALG_INSTANTIATE(F)                                                                      \
    template MultiplicationMatrix<F> x1_multiplication_matrix(const TruncatedGB<F>&, int, Slicing); \
    template InjectivityReport check_left_injectivity(const Potential<F>&, int);                   \
    template bool check_minimal_series(const Potential<F>&, int);

POTALG_INSTANTIATE(PrimeField)
POTALG_INSTANTIATE(RationalField)

#undef POTALG_INSTANTIATE

}  // namespace potalg
