#pragma once

#include <cstdint>
#include <vector>

#include "potalg/field.hpp"
#include "potalg/ncpoly.hpp"
#include "potalg/word.hpp"

namespace potalg {

/// A cyclically invariant element F of K<x1,...,xn> whose homogeneous
/// components vanish outside the degree window [k, m], with k >= 3.
template <class Field>
class Potential {
public:
    /// Throws std::invalid_argument if the polynomial is not rotation
    /// invariant, uses a letter above n, or has a term outside [k, m].
    Potential(NCPoly<Field> poly, int generators, int min_degree, int max_degree);

    static Potential zero(const Field& field, int generators, int min_degree, int max_degree) {
        return Potential(NCPoly<Field>(field), generators, min_degree, max_degree);
    }

    const NCPoly<Field>& poly() const { return poly_; }
    const Field& field() const { return poly_.field(); }
    int generators() const { return n_; }
    int min_degree() const { return k_; }
    int max_degree() const { return m_; }
    bool is_homogeneous() const { return k_ == m_; }
    bool is_zero() const { return poly_.is_zero(); }

    bool operator==(const Potential&) const = default;

private:
    NCPoly<Field> poly_;
    int n_;
    int k_;
    int m_;
};

/// Every rotation of every term carries the same coefficient.
template <class Field>
bool is_cyclically_invariant(const NCPoly<Field>& p);

/// c times the sum of all |w| rotations of w, counted with multiplicity.
template <class Field>
NCPoly<Field> cyclic_symmetrize(const Field& field, const Word& w,
                                const typename Field::Element& c);

/// delta_{x_j} F: the sum of c*u over the terms c*(x_j u) of F.
template <class Field>
NCPoly<Field> cyclic_derivative(const Potential<Field>& f, int j);

/// r_j = delta_{x_j} F for j = 1..n.
template <class Field>
RelationSet<Field> jacobi_relations(const Potential<Field>& f);

/// sum_j (x_j r_j - r_j x_j), which vanishes for every cyclically invariant F.
template <class Field>
NCPoly<Field> key_syzygy_defect(const Potential<Field>& f);

/// Degree-k potential sum over sigma in S_{n-1} of
/// (x_n^{k-n+1} x_sigma(1) ... x_sigma(n-1)) symmetrized.
/// Requires k >= n >= 2, k >= 3 and (n,k) != (2,3).
template <class Field>
Potential<Field> example_potential_kgen(const Field& field, int n, int k);

/// Degree-k potential for n > k >= 3:
/// (x_n x_{n-1} ... x_{n-k+1}) + sum_{j != n-k+1} (x_j x_n m_j), all symmetrized,
/// where m_j runs over the top n-1 degree-(k-2) words in x1..x_{n-1} with
/// distinct letters. The largest is pinned to m_{n-k+1}; the rest go to
/// j = 1,2,... in decreasing deglex order.
template <class Field>
Potential<Field> example_potential_ngtk(const Field& field, int n, int k);

/// The words m_1..m_{n-1} used by example_potential_ngtk (index 0 is m_1).
std::vector<Word> ngtk_monomials(int n, int k);

/// Necklace representatives of degree d over n letters: the deglex-largest
/// rotation of each class, listed in increasing deglex order.
std::vector<Word> necklace_representatives(int n, int d);

/// Random element of P_{n,k}^{(m)} over a prime field. Each necklace of
/// degree in [k, m] (in increasing degree, then increasing deglex order of
/// its representative) gets one coefficient drawn from std::mt19937_64
/// seeded with `seed`: raw 64-bit outputs are rejection sampled below the
/// largest multiple of p and reduced mod p.
Potential<PrimeField> random_potential(int n, int k, int m, const FieldSpec& field,
                                       std::uint64_t seed);

/// The degree-k component of F, as a potential with window [k, k].
template <class Field>
Potential<Field> lowest_homogeneous_part(const Potential<Field>& f);

}  // namespace potalg
