#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "potalg/groebner.hpp"
#include "potalg/linalg.hpp"
#include "potalg/potential.hpp"
#include "potalg/series.hpp"

namespace potalg {

/// How the quotient is sliced when building a multiplication map.
enum class Slicing {
    Graded,     // degree j -> degree j+1 of a graded algebra
    Truncated,  // A^(j) -> A^(j+1): normal words of degree <= j -> <= j+1
};

template <class Field>
struct MultiplicationMatrix {
    std::vector<Word> domain;    // column labels
    std::vector<Word> codomain;  // row labels
    SparseMatrix<Field> matrix;
};

/// Matrix of a -> normal_form(x1 a) on the normal-word bases.
/// Truncated slicing needs a low-degree-first basis (or homogeneous
/// relations); throws std::out_of_range unless j + 1 <= reliable_degree().
template <class Field>
MultiplicationMatrix<Field> x1_multiplication_matrix(const TruncatedGB<Field>& gb, int j,
                                                     Slicing slicing);

struct InjectivityReport {
    struct Step {
        int degree;
        std::size_t domain_dim;
        std::size_t image_rank;
    };
    int max_degree_checked = -1;
    std::optional<int> first_failure;
    std::vector<Step> ranks;
};

/// Checks that left multiplication by x1 is injective from degree j to j+1
/// (graded, for homogeneous F) or from A^(j) to A^(j+1) (otherwise), for
/// every j < D.
template <class Field>
InjectivityReport check_left_injectivity(const Potential<Field>& f, int degree_bound);

/// Graded dims through D coincide with (1 - n t + n t^{k-1} - t^k)^{-1}.
/// Requires a homogeneous potential.
template <class Field>
bool check_minimal_series(const Potential<Field>& f, int degree_bound);

struct ExperimentParams {
    int n = 2;
    int k = 4;
    int m = 4;
    int degree_bound = 10;
    int trials = 20;
    std::uint64_t seed = 0;
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    unsigned threads = 0;  // 0: hardware concurrency
};

struct TrialResult {
    std::uint64_t seed = 0;
    bool minimal_series = false;     // truncation dims equal the GSV bound through D
    bool injective_up_to_d = false;
    bool bound_respected = false;    // truncation dims >= GSV bound through D
    std::optional<int> first_injectivity_failure;
    std::vector<std::int64_t> truncation_dims;
};

struct ExperimentReport {
    ExperimentParams params;
    std::vector<TrialResult> trials;
    /// Fractions over trials; empty when there were no trials.
    std::optional<double> minimal_fraction;
    std::optional<double> injective_fraction;
    std::size_t minimal_count = 0;
    std::size_t injective_count = 0;
};

/// Runs `trials` random potentials from P_{n,k}^{(m)} with seeds seed+i,
/// comparing truncation dims against the GSV bound and checking left
/// injectivity of x1. Trials run concurrently; results stay in trial order.
ExperimentReport genericity_experiment(const ExperimentParams& params);

}  // namespace potalg
