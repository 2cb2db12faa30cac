#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace potalg {

enum class SeriesKind { GradedDims, TruncationDims, RationalExpansion, GsvBound };

std::string to_string(SeriesKind kind);
SeriesKind series_kind_from_string(const std::string& s);

/// A nonnegative integer coefficient sequence indexed from degree 0, with
/// the parameters it was computed for (-1 where a parameter does not apply).
struct SeriesTable {
    SeriesKind kind = SeriesKind::GradedDims;
    int n = -1;
    int k = -1;
    int m = -1;
    int degree_bound = -1;
    std::vector<std::int64_t> coeffs;

    std::size_t size() const { return coeffs.size(); }
    std::int64_t operator[](std::size_t i) const { return coeffs[i]; }
    bool operator==(const SeriesTable&) const = default;
};

}  // namespace potalg
