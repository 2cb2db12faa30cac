#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potalg/potential.hpp"
#include "potalg/series.hpp"

namespace potalg {

/// Default degree bound by generator count: 12 for n = 2, 10 for n = 3,
/// 8 otherwise.
int default_degree_bound(int n);

/// dim (A_F)_j for j = 0..D, from a deglex truncated Groebner basis.
/// Requires a homogeneous potential.
template <class Field>
SeriesTable graded_dims(const Potential<Field>& f, int degree_bound);

/// dim A_F^(j) = dim K<X>/(I + J^j) for j = 0..D. Computed from one
/// low-degree-first basis of I + J^D: the normal words of degree <= j span
/// A^(j) for every j <= D.
template <class Field>
SeriesTable truncation_dims(const Potential<Field>& f, int degree_bound);

/// Taylor coefficients of (1 - n t + n t^{k-1} - t^k)^{-1} up to t^D.
SeriesTable rational_series_coeffs(int n, int k, int degree_bound);

/// Taylor coefficients of (1 - t)^{-1} (1 - n t + n t^{k-1} - t^k)^{-1}.
SeriesTable gsv_bound_coeffs(int n, int k, int degree_bound);

/// First j in [k-1, size-2] where
///     b_{j+1} != n b_j - n b_{j+2-k} + b_{j+1-k} + offset
/// (entries with negative index read as 0), or nullopt if the identity holds
/// throughout. The Taylor coefficients of the bound satisfy it with offset +1.
std::optional<int> first_recurrence_mismatch(const SeriesTable& b, int n, int k, int offset);

/// First j in [k-1, size-2] violating
///     a_{j+1} >= n a_j - n a_{j+2-k} + a_{j+1-k} + 1
/// with a_s = 0 for s < 0. Accepts truncation-dims and gsv-bound tables;
/// throws std::invalid_argument for other kinds.
std::optional<int> check_gsv_inequality(const SeriesTable& dims, int n, int k);

/// First j with dims[j] < bound[j], comparing over the common prefix.
std::optional<int> first_bound_violation(const SeriesTable& dims, const SeriesTable& bound);

enum class GrowthClass { ExcludedCase23, AtLeastCubic, Exponential };

std::string to_string(GrowthClass g);

GrowthClass classify_growth(int n, int k);

/// Advisory numeric look at a coefficient table.
struct GrowthReport {
    double tail_ratio = 0;                // c_{L-1} / c_{L-2}
    std::optional<int> fitted_degree;     // smallest d whose fit is within tolerance
    std::vector<double> fit_residuals;    // relative RMS residual for d = 0..max
};

inline constexpr int kMaxFitDegree = 6;
inline constexpr double kFitTolerance = 1e-3;

/// Least-squares fits of degree 0..6 over the last half of the table; the
/// reported degree is the smallest whose RMS residual relative to the mean
/// coefficient is at most 1e-3. Needs at least 8 coefficients.
GrowthReport empirical_growth(const SeriesTable& dims);

}  // namespace potalg
