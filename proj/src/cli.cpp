#include "potalg/cli.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <type_traits>

namespace potalg {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    struct RawTerm {
        mpq_class coeff;
        Word word;
        bool symmetrize;
    };

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_space();
        if (at_end())
            return terms;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
            skip_space();
        }
        terms.push_back(term(negative));
        for (;;) {
            skip_space();
            if (at_end())
                break;
            char c = peek();
            if (c != '+' && c != '-')
                fail(std::string("expected '+' or '-', found '") + c + "'");
            get();
            skip_space();
            terms.push_back(term(c == '-'));
        }
        return terms;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

    void skip_space() {
        while (!at_end()) {
            char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n')
                    get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    std::string digits() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a number");
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            s += get();
        return s;
    }

    long small_number(long limit, const char* what) {
        const int line = line_, column = column_;
        std::string s = digits();
        if (s.size() > 9 || std::stol(s) > limit || std::stol(s) < 1)
            throw ParseError(std::string(what) + " out of range: " + s, line, column);
        return std::stol(s);
    }

    RawTerm term(bool negative) {
        RawTerm t{mpq_class(1), Word{}, false};
        bool has_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const int line = line_, column = column_;
            std::string num = digits();
            skip_space();
            std::string den = "1";
            if (peek() == '/') {
                get();
                skip_space();
                den = digits();
                if (den.find_first_not_of('0') == std::string::npos)
                    throw ParseError("zero denominator", line, column);
            }
            t.coeff = mpq_class(num + "/" + den);
            t.coeff.canonicalize();
            has_coeff = true;
            skip_space();
            if (peek() == '*') {
                get();
                skip_space();
            }
        }
        if (negative)
            t.coeff = -t.coeff;
        if (peek() == '(') {
            get();
            skip_space();
            t.word = word();
            skip_space();
            if (peek() != ')')
                fail("expected ')'");
            get();
            skip_space();
            if (peek() != '~')
                fail("expected '~' after parenthesized word");
            get();
            t.symmetrize = true;
        } else if (peek() == 'x') {
            t.word = word();
        } else if (!has_coeff) {
            fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
        }
        return t;
    }

    Word word() {
        Word w;
        for (;;) {
            if (peek() != 'x')
                fail("expected a generator x<i>");
            const int line = line_, column = column_;
            get();
            long letter = small_number(255, "generator index");
            long exponent = 1;
            skip_space();
            if (peek() == '^') {
                get();
                skip_space();
                exponent = small_number(static_cast<long>(Word::kMaxDegree), "exponent");
                skip_space();
            }
            if (w.degree() + static_cast<std::size_t>(exponent) > Word::kMaxDegree)
                throw ParseError("word longer than " + std::to_string(Word::kMaxDegree) + " letters", line,
                                 column);
            for (long e = 0; e < exponent; ++e)
                w.push_back(static_cast<Letter>(letter));
            if (peek() != '*')
                return w;
            get();
            skip_space();
        }
    }
};

template <class Field>
std::string coefficient_prefix(const Field& field, const typename Field::Element& c, bool first) {
    std::string sign = first ? "" : " + ";
    std::string body;
    if constexpr (std::is_same_v<Field, RationalField>) {
        mpq_class a = abs(c);
        if (sgn(c) < 0)
            sign = first ? "-" : " - ";
        body = a == 1 ? "" : a.get_str() + " ";
    } else {
        body = field.is_one(c) ? "" : field.to_string(c) + " ";
    }
    return sign + body;
}

Word largest_rotation(const Word& w) {
    Word best = w;
    for (std::size_t s = 1; s < w.degree(); ++s)
        best = std::max(best, w.rotated(s));
    return best;
}

}  // namespace

template <class Field>
Potential<Field> parse_potential(std::string_view text, const Field& field, std::optional<int> generators) {
    auto raw = Parser(text).parse();
    NCPoly<Field> poly(field);
    int max_letter = 0;
    for (const auto& t : raw) {
        auto c = field.from_rational(t.coeff);
        if (!t.word.empty())
            max_letter = std::max<int>(max_letter, t.word.max_letter());
        if (t.symmetrize) {
            poly = poly + cyclic_symmetrize(field, t.word, c);
        } else {
            poly = poly + NCPoly<Field>::monomial(field, t.word, c);
        }
    }
    if (poly.is_zero())
        throw std::invalid_argument("potential is zero");
    if (!is_cyclically_invariant(poly))
        throw std::invalid_argument("potential is not cyclically invariant; mark symmetrized terms with (...)~");
    const int k = poly.min_degree();
    if (k < 3)
        throw std::invalid_argument("potential has a term of degree " + std::to_string(k) + "; need k >= 3");
    const int n = generators.value_or(max_letter);
    if (n < max_letter)
        throw std::invalid_argument("potential uses x" + std::to_string(max_letter) + " but n = " +
                                    std::to_string(n));
    const int m = poly.degree();
    return Potential<Field>(std::move(poly), n, k, m);
}

template <class Field>
std::string format_potential(const Potential<Field>& f) {
    if (f.is_zero())
        return "0";
    const Field& field = f.field();
    const auto& terms = f.poly().terms();
    std::string out;
    bool first = true;
    // ascending order: lowest degree first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Word& w = it->word;
        if (largest_rotation(w) != w)
            continue;
        const std::size_t p = w.period();
        if (p == w.degree() && w.degree() > 1) {
            out += coefficient_prefix(field, it->coeff, first) + "(" + w.to_string() + ")~";
            first = false;
            continue;
        }
        // periodic necklace: spell out the distinct rotations
        std::set<Word> orbit;
        for (std::size_t s = 0; s < p; ++s)
            orbit.insert(w.rotated(s));
        for (const Word& u : orbit) {
            out += coefficient_prefix(field, it->coeff, first) + u.to_string();
            first = false;
        }
    }
    return out;
}

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "json")
        return OutputFormat::Json;
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "plain")
        return OutputFormat::Plain;
    throw std::invalid_argument("unknown output format: " + s);
}

std::string to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::Json:
        return "json";
    case OutputFormat::Csv:
        return "csv";
    case OutputFormat::Plain:
        return "plain";
    }
    return "unknown";
}

nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j{{"field", c.field.to_string()},
                     {"degree", c.degree_bound},
                     {"format", to_string(c.format)},
                     {"out", c.out_path.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.out_path)}};
    j["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const SeriesTable& t) {
    return {{"kind", to_string(t.kind)}, {"n", t.n},          {"k", t.k},
            {"m", t.m},                  {"D", t.degree_bound}, {"coeffs", t.coeffs}};
}

SeriesTable series_from_json(const nlohmann::json& j) {
    SeriesTable t;
    t.kind = series_kind_from_string(j.at("kind").get<std::string>());
    t.n = j.at("n").get<int>();
    t.k = j.at("k").get<int>();
    t.m = j.at("m").get<int>();
    t.degree_bound = j.at("D").get<int>();
    t.coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
    return t;
}

std::string series_csv(const SeriesTable& t, const SeriesTable* bound) {
    std::ostringstream os;
    os << "degree,coefficient,bound-coefficient,slack\n";
    for (std::size_t j = 0; j < t.size(); ++j) {
        os << j << ',' << t[j] << ',';
        if (bound && j < bound->size())
            os << (*bound)[j] << ',' << t[j] - (*bound)[j];
        else
            os << ',';
        os << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const InjectivityReport& r) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : r.ranks)
        steps.push_back({{"degree", s.degree}, {"domain_dim", s.domain_dim}, {"image_rank", s.image_rank}});
    return {{"max_degree_checked", r.max_degree_checked},
            {"first_failure", r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json(nullptr)},
            {"injective", !r.first_failure.has_value()},
            {"steps", steps}};
}

nlohmann::json to_json(const GrowthReport& r) {
    return {{"tail_ratio", r.tail_ratio},
            {"fitted_degree", r.fitted_degree ? nlohmann::json(*r.fitted_degree) : nlohmann::json(nullptr)},
            {"fit_residuals", r.fit_residuals}};
}

nlohmann::json to_json(const ExperimentParams& p) {
    return {{"n", p.n},         {"k", p.k},           {"m", p.m},
            {"D", p.degree_bound}, {"trials", p.trials}, {"seed", p.seed},
            {"field", p.field.to_string()}, {"threads", p.threads}};
}

nlohmann::json to_json(const ExperimentReport& r) {
    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& t : r.trials) {
        trials.push_back({{"seed", t.seed},
                          {"minimal_series", t.minimal_series},
                          {"injective", t.injective_up_to_d},
                          {"bound_respected", t.bound_respected},
                          {"first_injectivity_failure", t.first_injectivity_failure
                                                            ? nlohmann::json(*t.first_injectivity_failure)
                                                            : nlohmann::json(nullptr)},
                          {"truncation_dims", t.truncation_dims}});
    }
    return {{"params", to_json(r.params)},
            {"trials", trials},
            {"summary",
             {{"minimal_count", r.minimal_count},
              {"injective_count", r.injective_count},
              {"minimal_fraction", opt(r.minimal_fraction)},
              {"injective_fraction", opt(r.injective_fraction)}}}};
}

template Potential<PrimeField> parse_potential(std::string_view, const PrimeField&, std::optional<int>);
template Potential<RationalField> parse_potential(std::string_view, const RationalField&, std::optional<int>);
template std::string format_potential(const Potential<PrimeField>&);
template std::string format_potential(const Potential<RationalField>&);

}  // namespace potalg
