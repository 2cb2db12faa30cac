#include "potalg/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "potalg/groebner.hpp"

namespace potalg {

std::string to_string(SeriesKind kind) {
    switch (kind) {
    case SeriesKind::GradedDims:
        return "graded-dims";
    case SeriesKind::TruncationDims:
        return "truncation-dims";
    case SeriesKind::RationalExpansion:
        return "rational-expansion";
    case SeriesKind::GsvBound:
        return "gsv-bound";
    }
    return "unknown";
}

SeriesKind series_kind_from_string(const std::string& s) {
    for (auto k : {SeriesKind::GradedDims, SeriesKind::TruncationDims, SeriesKind::RationalExpansion,
                   SeriesKind::GsvBound}) {
        if (to_string(k) == s)
            return k;
    }
    throw std::invalid_argument("unknown series kind: " + s);
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflows 64 bits");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflows 64 bits");
    return r;
}

void check_nk(int n, int k) {
    if (n < 2 || k < 3)
        throw std::invalid_argument("series parameters need n >= 2 and k >= 3");
}

void check_degree(int degree_bound) {
    if (degree_bound < 0)
        throw std::invalid_argument("degree bound must be nonnegative");
}

std::int64_t at(const std::vector<std::int64_t>& c, long i) {
    return i < 0 ? 0 : c[static_cast<std::size_t>(i)];
}

std::vector<std::int64_t> free_dims(int n, int degree_bound) {
    std::vector<std::int64_t> c{1};
    for (int d = 1; d <= degree_bound; ++d)
        c.push_back(checked_mul(c.back(), n));
    return c;
}

std::vector<std::int64_t> running_sums(std::vector<std::int64_t> c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        c[i] = checked_add(c[i], c[i - 1]);
    return c;
}

}  // namespace

int default_degree_bound(int n) {
    if (n <= 2)
        return 12;
    if (n == 3)
        return 10;
    return 8;
}

template <class Field>
SeriesTable graded_dims(const Potential<Field>& f, int degree_bound) {
    if (!f.is_homogeneous())
        throw std::invalid_argument("graded dimensions need a homogeneous potential");
    check_degree(degree_bound);
    SeriesTable t{SeriesKind::GradedDims, f.generators(), f.min_degree(), f.max_degree(), degree_bound, {}};
    if (f.is_zero()) {
        t.coeffs = free_dims(f.generators(), degree_bound);
        return t;
    }
    auto gb = truncated_groebner(jacobi_relations(f), degree_bound, MonomialOrder::DegLex);
    t.coeffs = normal_word_counts(gb, degree_bound);
    return t;
}

template <class Field>
SeriesTable truncation_dims(const Potential<Field>& f, int degree_bound) {
    check_degree(degree_bound);
    SeriesTable t{SeriesKind::TruncationDims, f.generators(), f.min_degree(), f.max_degree(), degree_bound, {}};
    if (f.is_zero()) {
        t.coeffs = running_sums(free_dims(f.generators(), degree_bound));
        return t;
    }
    auto gb = truncated_groebner(jacobi_relations(f), degree_bound, MonomialOrder::LowDegreeFirst);
    t.coeffs = running_sums(normal_word_counts(gb, degree_bound));
    return t;
}

SeriesTable rational_series_coeffs(int n, int k, int degree_bound) {
    check_nk(n, k);
    check_degree(degree_bound);
    SeriesTable t{SeriesKind::RationalExpansion, n, k, k, degree_bound, {}};
    auto& c = t.coeffs;
    for (long j = 0; j <= degree_bound; ++j) {
        if (j == 0) {
            c.push_back(1);
            continue;
        }
        std::int64_t v = checked_mul(n, at(c, j - 1));
        v = checked_add(v, -checked_mul(n, at(c, j - k + 1)));
        v = checked_add(v, at(c, j - k));
        c.push_back(v);
    }
    return t;
}

SeriesTable gsv_bound_coeffs(int n, int k, int degree_bound) {
    auto t = rational_series_coeffs(n, k, degree_bound);
    t.kind = SeriesKind::GsvBound;
    t.coeffs = running_sums(std::move(t.coeffs));
    return t;
}

std::optional<int> first_recurrence_mismatch(const SeriesTable& b, int n, int k, int offset) {
    check_nk(n, k);
    const auto& c = b.coeffs;
    for (long j = k - 1; j + 1 < static_cast<long>(c.size()); ++j) {
        std::int64_t rhs = n * at(c, j) - n * at(c, j + 2 - k) + at(c, j + 1 - k) + offset;
        if (at(c, j + 1) != rhs)
            return static_cast<int>(j);
    }
    return std::nullopt;
}

std::optional<int> check_gsv_inequality(const SeriesTable& dims, int n, int k) {
    if (dims.kind != SeriesKind::TruncationDims && dims.kind != SeriesKind::GsvBound)
        throw std::invalid_argument("GSV inequality applies to truncation dimensions, got " +
                                    to_string(dims.kind));
    check_nk(n, k);
    const auto& a = dims.coeffs;
    for (long j = k - 1; j + 1 < static_cast<long>(a.size()); ++j) {
        std::int64_t rhs = n * at(a, j) - n * at(a, j + 2 - k) + at(a, j + 1 - k) + 1;
        if (at(a, j + 1) < rhs)
            return static_cast<int>(j);
    }
    return std::nullopt;
}

std::optional<int> first_bound_violation(const SeriesTable& dims, const SeriesTable& bound) {
    const std::size_t len = std::min(dims.size(), bound.size());
    for (std::size_t j = 0; j < len; ++j) {
        if (dims[j] < bound[j])
            return static_cast<int>(j);
    }
    return std::nullopt;
}

std::string to_string(GrowthClass g) {
    switch (g) {
    case GrowthClass::ExcludedCase23:
        return "excluded-case-2-3";
    case GrowthClass::AtLeastCubic:
        return "at-least-cubic";
    case GrowthClass::Exponential:
        return "exponential";
    }
    return "unknown";
}

GrowthClass classify_growth(int n, int k) {
    check_nk(n, k);
    if (n == 2 && k == 3)
        return GrowthClass::ExcludedCase23;
    if ((n == 2 && k == 4) || (n == 3 && k == 3))
        return GrowthClass::AtLeastCubic;
    return GrowthClass::Exponential;
}

GrowthReport empirical_growth(const SeriesTable& dims) {
    const auto& c = dims.coeffs;
    if (c.size() < 8)
        throw std::invalid_argument("growth estimate needs at least 8 coefficients");
    GrowthReport report;
    const std::size_t len = c.size();
    report.tail_ratio = static_cast<double>(c[len - 1]) / static_cast<double>(c[len - 2]);

    const std::size_t first = len / 2;
    const std::size_t points = len - first;
    const double mid = 0.5 * static_cast<double>(first + len - 1);
    const double half = 0.5 * static_cast<double>(len - 1 - first);
    Eigen::VectorXd y(static_cast<Eigen::Index>(points));
    double mean = 0;
    for (std::size_t i = 0; i < points; ++i) {
        y(static_cast<Eigen::Index>(i)) = static_cast<double>(c[first + i]);
        mean += std::abs(y(static_cast<Eigen::Index>(i)));
    }
    mean /= static_cast<double>(points);

    const int max_degree = std::min<int>(kMaxFitDegree, static_cast<int>(points) - 2);
    for (int d = 0; d <= max_degree; ++d) {
        Eigen::MatrixXd v(static_cast<Eigen::Index>(points), d + 1);
        for (std::size_t i = 0; i < points; ++i) {
            // abscissae rescaled to [-1, 1] keep the Vandermonde system tame
            double s = (static_cast<double>(first + i) - mid) / half;
            double pw = 1;
            for (int e = 0; e <= d; ++e) {
                v(static_cast<Eigen::Index>(i), e) = pw;
                pw *= s;
            }
        }
        Eigen::VectorXd coef = v.colPivHouseholderQr().solve(y);
        double rms = std::sqrt((v * coef - y).squaredNorm() / static_cast<double>(points));
        double rel = mean > 0 ? rms / mean : rms;
        report.fit_residuals.push_back(rel);
        if (!report.fitted_degree && rel <= kFitTolerance)
            report.fitted_degree = d;
    }
    return report;
}

template SeriesTable graded_dims(const Potential<PrimeField>&, int);
template SeriesTable graded_dims(const Potential<RationalField>&, int);
template SeriesTable truncation_dims(const Potential<PrimeField>&, int);
template SeriesTable truncation_dims(const Potential<RationalField>&, int);

}  // namespace potalg
