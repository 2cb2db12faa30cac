#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "potalg/analysis.hpp"
#include "potalg/field.hpp"
#include "potalg/hilbert.hpp"
#include "potalg/potential.hpp"
#include "potalg/series.hpp"

namespace potalg {

/// Syntax error in potential text; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parses a potential written as a sum of terms:
///
///     3 (x2^3*x1)~ - 1/2 x1*x2*x1*x2 + (x1^5)~   # comment
///
/// `(w)~` is the sum of all rotations of w. With no explicit generator
/// count, n is the largest letter used. k and m are the lowest and highest
/// degrees present. Throws ParseError on syntax errors and
/// std::invalid_argument when the result is zero, not rotation invariant,
/// or has k < 3.
template <class Field>
Potential<Field> parse_potential(std::string_view text, const Field& field,
                                 std::optional<int> generators = std::nullopt);

/// Prints F in the grammar above; parse_potential(format_potential(F))
/// gives back F (with the same n when n is passed explicitly).
template <class Field>
std::string format_potential(const Potential<Field>& f);

enum class OutputFormat { Json, Csv, Plain };

OutputFormat output_format_from_string(const std::string& s);
std::string to_string(OutputFormat f);

struct RunConfig {
    FieldSpec field = FieldSpec::rationals();
    int degree_bound = 0;
    OutputFormat format = OutputFormat::Plain;
    std::string out_path;  // empty: stdout
    std::optional<std::uint64_t> seed;
};

nlohmann::json to_json(const RunConfig& c);

/// {kind, n, k, m, D, coeffs[]}
nlohmann::json to_json(const SeriesTable& t);
SeriesTable series_from_json(const nlohmann::json& j);

/// Header `degree,coefficient,bound-coefficient,slack`; the bound columns
/// are empty where the bound table is absent or too short.
std::string series_csv(const SeriesTable& t, const SeriesTable* bound = nullptr);

nlohmann::json to_json(const InjectivityReport& r);
nlohmann::json to_json(const GrowthReport& r);
nlohmann::json to_json(const ExperimentParams& p);
nlohmann::json to_json(const ExperimentReport& r);

}  // namespace potalg
