#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "potalg/field.hpp"

namespace potalg {

template <class Field>
using SparseVector = std::vector<std::pair<std::uint32_t, typename Field::Element>>;

/// Column-major sparse matrix: cols[c] holds the nonzero entries of column c
/// sorted by row index.
template <class Field>
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseVector<Field>> columns;
};

/// Incremental row echelon form over a field. Vectors are reduced on their
/// largest index. Over Q the elimination is fraction-free: vectors carry
/// integer entries and are divided by their content after each step.
template <class Field>
class EchelonBasis {
public:
    explicit EchelonBasis(Field field) : field_(std::move(field)) {}

    /// Returns true if v was independent of the vectors inserted so far.
    bool insert(SparseVector<Field> v);
    std::size_t rank() const { return pivots_.size(); }

private:
    Field field_;
    std::map<std::uint32_t, SparseVector<Field>> pivots_;
};

template <class Field>
std::size_t rank(const Field& field, const std::vector<SparseVector<Field>>& vectors) {
    EchelonBasis<Field> basis(field);
    for (const auto& v : vectors)
        basis.insert(v);
    return basis.rank();
}

template <class Field>
std::size_t rank(const SparseMatrix<Field>& m, const Field& field) {
    return rank(field, m.columns);
}

}  // namespace potalg
