#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potalg/ncpoly.hpp"
#include "potalg/series.hpp"
#include "potalg/word.hpp"

namespace potalg {

/// Term orders supported by the engine.
///
/// DegLex is the order of word_compare: the leading word of a relation sits
/// in its top degree. LowDegreeFirst makes lower degree dominate (deglex
/// breaks ties within a degree), so the leading word sits in the lowest
/// degree. Under LowDegreeFirst with every word above the degree bound D set
/// to zero, the engine computes a basis of I + J^D, the ideal defining the
/// truncated algebra. For homogeneous input both orders agree.
enum class MonomialOrder { DegLex, LowDegreeFirst };

std::string to_string(MonomialOrder order);

/// Prefix tree over leading words; finds the leftmost occurrence of any
/// leading word inside a given word.
class LeadIndex {
public:
    explicit LeadIndex(int generators = 0);

    void insert(const Word& w, std::uint32_t id);
    void erase(const Word& w);
    void clear();

    struct Match {
        std::uint32_t id;
        std::size_t pos;
    };
    /// Leftmost occurrence; among matches at the same position, the shortest.
    std::optional<Match> find(const Word& w) const;

private:
    int n_;
    std::vector<std::int32_t> children_;  // node * n + (letter - 1)
    std::vector<std::int64_t> terminal_;  // element id or -1
    std::int32_t child(std::int32_t node, Letter l) const {
        return children_[static_cast<std::size_t>(node) * n_ + (l - 1)];
    }
    std::int32_t add_node();
};

/// A reduced set of monic relation polynomials, complete up to a degree
/// bound: every ambiguity whose word has degree <= D resolves.
template <class Field>
class TruncatedGB {
public:
    using Poly = NCPoly<Field>;

    TruncatedGB(Field field, int generators, int degree_bound, MonomialOrder order,
                std::vector<Poly> elements, int relation_spread);

    /// The basis of the zero ideal (the free algebra).
    static TruncatedGB empty(Field field, int generators, int degree_bound,
                             MonomialOrder order = MonomialOrder::DegLex) {
        return TruncatedGB(std::move(field), generators, degree_bound, order, {}, 0);
    }

    const Field& field() const { return field_; }
    int generators() const { return n_; }
    int degree_bound() const { return degree_bound_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Poly>& elements() const { return elements_; }
    const std::vector<Word>& leads() const { return leads_; }
    const LeadIndex& index() const { return index_; }

    /// Highest degree whose normal words are guaranteed to match the ideal.
    /// Equals D except for deglex runs on nonhomogeneous input, where
    /// unprocessed ambiguities above D may still produce lower-degree
    /// remainders; those report D - (max degree - min degree of relations).
    int reliable_degree() const;
    /// Whether the generating relations were homogeneous.
    bool homogeneous() const { return relation_spread_ == 0; }

private:
    Field field_;
    int n_;
    int degree_bound_;
    MonomialOrder order_;
    std::vector<Poly> elements_;
    std::vector<Word> leads_;
    LeadIndex index_;
    int relation_spread_;
};

/// The leading word of p under `order`. Precondition: p nonzero.
template <class Field>
const Word& leading_word(const NCPoly<Field>& p, MonomialOrder order);

/// Degree-truncated Groebner basis of the two-sided ideal generated by
/// `rels`, processing ambiguities (suffix-prefix overlaps; inclusions are
/// removed by eager inter-reduction) in increasing degree up to D.
/// Throws std::invalid_argument for an all-zero relation set or when a
/// relation has degree above D under DegLex.
template <class Field>
TruncatedGB<Field> truncated_groebner(const RelationSet<Field>& rels, int degree_bound,
                                      MonomialOrder order = MonomialOrder::DegLex);

/// Rewrites every occurrence of a leading word until none is left, always
/// treating the largest reducible term first and its leftmost occurrence.
/// Under LowDegreeFirst, terms above D are dropped as they appear.
/// Throws std::invalid_argument if p has a term of degree above D.
template <class Field>
NCPoly<Field> normal_form(const NCPoly<Field>& p, const TruncatedGB<Field>& gb);

/// Degree-j words avoiding every leading word, in increasing deglex order.
/// Throws std::out_of_range unless 0 <= j <= reliable_degree().
template <class Field>
std::vector<Word> normal_words(const TruncatedGB<Field>& gb, int j);

/// Number of normal words in each degree 0..upto.
template <class Field>
std::vector<std::int64_t> normal_word_counts(const TruncatedGB<Field>& gb, int upto);

/// Every ambiguity of the basis with word degree <= D, together with the
/// normal form of its S-polynomial. Used to certify confluence.
template <class Field>
struct Ambiguity {
    Word word;
    std::size_t left;   // element whose lead is a prefix of word
    std::size_t right;  // element whose lead is a suffix of word
    NCPoly<Field> remainder;
};

template <class Field>
std::vector<Ambiguity<Field>> ambiguity_remainders(const TruncatedGB<Field>& gb);

/// Independent oracle for graded dimensions: for each d <= D, the rank of
/// span{u r v : deg(u r v) = d} inside the n^d-dimensional word space,
/// computed by sparse Gaussian elimination. Requires homogeneous relations
/// and n^D <= 200000.
template <class Field>
SeriesTable brute_force_graded_dims(const RelationSet<Field>& rels, int degree_bound);

inline constexpr std::size_t kBruteForceWordLimit = 200000;

}  // namespace potalg
