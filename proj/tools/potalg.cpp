// potalg: command-line front end for the potential-algebra workbench.

#include <fstream>
#include <iostream>
#include <sstream>
#include <type_traits>

#include <CLI11.hpp>
#include <json.hpp>

#include "potalg/analysis.hpp"
#include "potalg/cli.hpp"
#include "potalg/groebner.hpp"
#include "potalg/hilbert.hpp"
#include "potalg/potential.hpp"

using namespace potalg;
using nlohmann::json;

namespace {

struct Options {
    std::string field = "q";
    std::optional<int> degree;
    std::optional<std::uint64_t> seed;
    int trials = 20;
    unsigned threads = 0;
    double threshold = 0.9;
    std::string format = "plain";
    std::string out;

    std::string file;
    std::string inline_text;
    std::string builtin;
    std::string random;
    std::optional<int> generators;
    std::string kind;  // series: graded | truncation

    std::vector<int> params;  // positional n k [m]
};

struct Output {
    std::string text;
    bool passed = true;
    json failure;
};

RunConfig run_config(const Options& o, int default_degree) {
    RunConfig c;
    c.field = FieldSpec::parse(o.field);
    c.degree_bound = o.degree.value_or(default_degree);
    if (c.degree_bound < 3)
        throw std::invalid_argument("--degree must be at least 3");
    c.format = output_format_from_string(o.format);
    c.out_path = o.out;
    c.seed = o.seed;
    return c;
}

std::uint64_t require_seed(const Options& o) {
    if (!o.seed)
        throw std::invalid_argument("this command is randomized; pass --seed");
    return *o.seed;
}

std::vector<int> ints(const std::string& s, std::size_t count, const char* what) {
    std::istringstream is(s);
    std::vector<int> v;
    int x;
    while (is >> x)
        v.push_back(x);
    if (!is.eof() || v.size() != count)
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + s + "'");
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json source_record(const Options& o) {
    if (!o.file.empty())
        return {{"file", o.file}};
    if (!o.inline_text.empty())
        return {{"potential", o.inline_text}};
    if (!o.builtin.empty())
        return {{"builtin", o.builtin}};
    return {{"random", o.random}};
}

template <class Field>
Potential<Field> load_potential(const Options& o, const Field& field) {
    const int given = !o.file.empty() + !o.inline_text.empty() + !o.builtin.empty() + !o.random.empty();
    if (given != 1)
        throw std::invalid_argument("give exactly one of --file, --potential, --builtin, --random");
    if (!o.file.empty())
        return parse_potential(read_file(o.file), field, o.generators);
    if (!o.inline_text.empty())
        return parse_potential(o.inline_text, field, o.generators);
    if (!o.builtin.empty()) {
        std::istringstream is(o.builtin);
        std::string name;
        is >> name;
        std::string rest;
        std::getline(is, rest);
        auto nk = ints(rest, 2, "--builtin");
        if (name == "kgen")
            return example_potential_kgen(field, nk[0], nk[1]);
        if (name == "ngtk")
            return example_potential_ngtk(field, nk[0], nk[1]);
        throw std::invalid_argument("unknown builtin '" + name + "' (kgen or ngtk)");
    }
    auto nkm = ints(o.random, 3, "--random");
    if constexpr (std::is_same_v<Field, PrimeField>) {
        return random_potential(nkm[0], nkm[1], nkm[2], field.spec(), require_seed(o));
    } else {
        throw std::invalid_argument("--random samples over a prime field; pass --field fp:<p>");
    }
}

std::string plain_series(const SeriesTable& t) {
    std::string s = to_string(t.kind) + ":";
    for (auto c : t.coeffs)
        s += " " + std::to_string(c);
    return s + "\n";
}

std::string render_series(const RunConfig& c, const json& report, const SeriesTable& t,
                          const SeriesTable* bound) {
    switch (c.format) {
    case OutputFormat::Json:
        return report.dump(2) + "\n";
    case OutputFormat::Csv:
        return series_csv(t, bound);
    case OutputFormat::Plain:
        return plain_series(t) + (bound ? plain_series(*bound) : "");
    }
    return {};
}

json base_report(const std::string& command, const RunConfig& c) {
    return {{"command", command}, {"config", to_json(c)}};
}

template <class Field>
Output cmd_series(const Options& o, const RunConfig& c, const Field& field) {
    auto f = load_potential(o, field);
    std::string kind = o.kind.empty() ? (f.is_homogeneous() ? "graded" : "truncation") : o.kind;
    SeriesTable t, bound;
    if (kind == "graded") {
        t = graded_dims(f, c.degree_bound);
        bound = rational_series_coeffs(f.generators(), f.min_degree(), c.degree_bound);
    } else if (kind == "truncation") {
        t = truncation_dims(f, c.degree_bound);
        bound = gsv_bound_coeffs(f.generators(), f.min_degree(), c.degree_bound);
    } else {
        throw std::invalid_argument("--kind must be graded or truncation");
    }
    json r = base_report("series", c);
    r["source"] = source_record(o);
    r["series"] = to_json(t);
    r["bound"] = to_json(bound);
    return {render_series(c, r, t, &bound), true, {}};
}

Output cmd_bound(const Options& o, const RunConfig& c) {
    const int n = o.params.at(0), k = o.params.at(1);
    auto rat = rational_series_coeffs(n, k, c.degree_bound);
    auto gsv = gsv_bound_coeffs(n, k, c.degree_bound);
    auto plus_one = first_recurrence_mismatch(gsv, n, k, +1);
    auto minus_one = first_recurrence_mismatch(gsv, n, k, -1);
    json r = base_report("bound", c);
    r["rational_expansion"] = to_json(rat);
    r["gsv_bound"] = to_json(gsv);
    auto mismatch = [](const std::optional<int>& m) { return m ? json(*m) : json(nullptr); };
    r["recurrence_plus_one_first_mismatch"] = mismatch(plus_one);
    r["recurrence_minus_one_first_mismatch"] = mismatch(minus_one);
    std::string text;
    if (c.format == OutputFormat::Json) {
        text = r.dump(2) + "\n";
    } else if (c.format == OutputFormat::Csv) {
        text = series_csv(gsv, nullptr);
    } else {
        text = plain_series(rat) + plain_series(gsv);
        text += "recurrence b_{j+1} = n b_j - n b_{j+2-k} + b_{j+1-k} + 1: " +
                std::string(plus_one ? "fails at j=" + std::to_string(*plus_one) : "holds") + "\n";
        text += "recurrence b_{j+1} = n b_j - n b_{j+2-k} + b_{j+1-k} - 1: " +
                std::string(minus_one ? "fails at j=" + std::to_string(*minus_one) : "holds") + "\n";
    }
    Output out{text, !plus_one.has_value(), {}};
    if (plus_one)
        out.failure = {{"check", "gsv-recurrence"}, {"first_mismatch", *plus_one}};
    return out;
}

Output cmd_classify(const Options& o, const RunConfig& c) {
    const int n = o.params.at(0), k = o.params.at(1);
    auto g = classify_growth(n, k);
    auto bound = gsv_bound_coeffs(n, k, c.degree_bound);
    auto growth = empirical_growth(bound);
    json r = base_report("classify", c);
    r["n"] = n;
    r["k"] = k;
    r["class"] = to_string(g);
    r["empirical"] = to_json(growth);
    std::string text;
    if (c.format == OutputFormat::Json) {
        text = r.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "class: " << to_string(g) << "\n"
           << "tail ratio: " << growth.tail_ratio << "\n"
           << "fitted degree: " << (growth.fitted_degree ? std::to_string(*growth.fitted_degree) : "none")
           << "\n";
        text = os.str();
    }
    return {text, true, {}};
}

template <class Field>
Output cmd_inject(const Options& o, const RunConfig& c, const Field& field) {
    auto f = load_potential(o, field);
    auto rep = check_left_injectivity(f, c.degree_bound);
    json r = base_report("inject", c);
    r["source"] = source_record(o);
    r["report"] = to_json(rep);
    std::string text;
    if (c.format == OutputFormat::Json) {
        text = r.dump(2) + "\n";
    } else if (c.format == OutputFormat::Csv) {
        text = "degree,domain-dim,image-rank\n";
        for (const auto& s : rep.ranks)
            text += std::to_string(s.degree) + "," + std::to_string(s.domain_dim) + "," +
                    std::to_string(s.image_rank) + "\n";
    } else {
        for (const auto& s : rep.ranks)
            text += "j=" + std::to_string(s.degree) + " dim=" + std::to_string(s.domain_dim) +
                    " rank=" + std::to_string(s.image_rank) + "\n";
        text += rep.first_failure ? "x1 not injective at j=" + std::to_string(*rep.first_failure) + "\n"
                                  : "x1 injective through j=" + std::to_string(rep.max_degree_checked) + "\n";
    }
    Output out{text, !rep.first_failure.has_value(), {}};
    if (rep.first_failure)
        out.failure = {{"check", "left-injectivity"}, {"first_failure", *rep.first_failure}};
    return out;
}

template <class Field>
Output cmd_minimal(const Options& o, const RunConfig& c, const Field& field) {
    auto f = load_potential(o, field);
    auto dims = graded_dims(f, c.degree_bound);
    auto minimal = rational_series_coeffs(f.generators(), f.min_degree(), c.degree_bound);
    const bool ok = check_minimal_series(f, c.degree_bound);
    json r = base_report("minimal", c);
    r["source"] = source_record(o);
    r["series"] = to_json(dims);
    r["minimal"] = to_json(minimal);
    r["minimal_series"] = ok;
    std::string text = c.format == OutputFormat::Plain
                           ? plain_series(dims) + plain_series(minimal) +
                                 (ok ? "minimal series attained\n" : "minimal series not attained\n")
                           : render_series(c, r, dims, &minimal);
    Output out{text, ok, {}};
    if (!ok) {
        std::optional<int> first;
        for (std::size_t j = 0; j < dims.size() && !first; ++j)
            if (dims[j] != minimal[j])
                first = static_cast<int>(j);
        out.failure = {{"check", "minimal-series"}, {"first_difference", *first}};
    }
    return out;
}

Output cmd_generic(const Options& o, const RunConfig& c) {
    ExperimentParams p;
    p.n = o.params.at(0);
    p.k = o.params.at(1);
    p.m = o.params.at(2);
    p.degree_bound = c.degree_bound;
    p.trials = o.trials;
    p.seed = require_seed(o);
    p.field = c.field;
    p.threads = o.threads;
    auto rep = genericity_experiment(p);
    json r = base_report("generic", c);
    r["threshold"] = o.threshold;
    r["experiment"] = to_json(rep);
    const bool ok = rep.minimal_fraction && *rep.minimal_fraction >= o.threshold &&
                    rep.injective_fraction && *rep.injective_fraction >= o.threshold;
    std::string text;
    if (c.format == OutputFormat::Json) {
        text = r.dump(2) + "\n";
    } else if (c.format == OutputFormat::Csv) {
        text = "seed,minimal-series,injective,bound-respected\n";
        for (const auto& t : rep.trials)
            text += std::to_string(t.seed) + "," + (t.minimal_series ? "1" : "0") + "," +
                    (t.injective_up_to_d ? "1" : "0") + "," + (t.bound_respected ? "1" : "0") + "\n";
    } else {
        text = "trials: " + std::to_string(rep.trials.size()) + "\n" +
               "minimal series: " + std::to_string(rep.minimal_count) + "\n" +
               "x1 injective: " + std::to_string(rep.injective_count) + "\n";
    }
    Output out{text, ok, {}};
    if (!ok)
        out.failure = {{"check", "genericity"},
                       {"threshold", o.threshold},
                       {"minimal_count", rep.minimal_count},
                       {"injective_count", rep.injective_count},
                       {"trials", rep.trials.size()}};
    return out;
}

template <class Field>
Output cmd_examples(const Options& o, const RunConfig& c, const Field& field) {
    const int n = o.params.at(0), k = o.params.at(1);
    json r = base_report("examples", c);
    json list = json::array();
    std::string text;
    auto add = [&](const std::string& name, const Potential<Field>& f) {
        std::string s = format_potential(f);
        list.push_back({{"name", name}, {"potential", s}});
        text += "# " + name + "\n" + s + "\n";
    };
    if (k >= n && !(n == 2 && k == 3))
        add("kgen " + std::to_string(n) + " " + std::to_string(k), example_potential_kgen(field, n, k));
    if (n > k)
        add("ngtk " + std::to_string(n) + " " + std::to_string(k), example_potential_ngtk(field, n, k));
    if (list.empty())
        throw std::invalid_argument("no builtin potential for this (n,k)");
    r["examples"] = list;
    return {c.format == OutputFormat::Json ? r.dump(2) + "\n" : text, true, {}};
}

template <class Field>
Output cmd_oracle(const Options& o, const RunConfig& c, const Field& field) {
    auto f = load_potential(o, field);
    auto fast = graded_dims(f, c.degree_bound);
    auto slow = brute_force_graded_dims(jacobi_relations(f), c.degree_bound);
    const bool ok = fast.coeffs == slow.coeffs;
    json r = base_report("oracle", c);
    r["source"] = source_record(o);
    r["groebner"] = to_json(fast);
    r["brute_force"] = to_json(slow);
    r["agree"] = ok;
    std::string text = c.format == OutputFormat::Json
                           ? r.dump(2) + "\n"
                           : plain_series(fast) + plain_series(slow) + (ok ? "agree\n" : "disagree\n");
    Output out{text, ok, {}};
    if (!ok)
        out.failure = {{"check", "oracle"}, {"groebner", fast.coeffs}, {"brute_force", slow.coeffs}};
    return out;
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.out_path);
    if (!out)
        throw std::runtime_error("cannot write " + c.out_path);
    out << text;
}

void add_common(CLI::App* sub, Options& o, bool randomized) {
    sub->add_option("--field", o.field, "q or fp:<p>")->capture_default_str();
    sub->add_option("--degree", o.degree, "degree bound D (>= 3)");
    sub->add_option("--seed", o.seed, randomized ? "RNG seed (required)" : "RNG seed");
    sub->add_option("--format", o.format, "json, csv or plain")->capture_default_str();
    sub->add_option("--out", o.out, "write the report to this path");
}

void add_source(CLI::App* sub, Options& o) {
    sub->add_option("--file", o.file, "potential file");
    sub->add_option("--potential", o.inline_text, "potential text");
    sub->add_option("--builtin", o.builtin, "'kgen n k' or 'ngtk n k'");
    sub->add_option("--random", o.random, "'n k m': random potential (needs --seed and a prime field)");
    sub->add_option("--generators", o.generators, "number of generators for parsed potentials");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"potential-algebra workbench"};
    app.require_subcommand(1);
    Options o;

    auto* series = app.add_subcommand("series", "graded or truncation dimensions of a potential algebra");
    add_common(series, o, false);
    add_source(series, o);
    series->add_option("--kind", o.kind, "graded or truncation (default: graded when homogeneous)");

    auto* bound = app.add_subcommand("bound", "GSV bound and minimal series");
    add_common(bound, o, false);
    bound->add_option("n_k", o.params, "n k")->expected(2)->required();

    auto* classify = app.add_subcommand("classify", "growth class and empirical fit of the bound");
    add_common(classify, o, false);
    classify->add_option("n_k", o.params, "n k")->expected(2)->required();

    auto* inject = app.add_subcommand("inject", "check injectivity of left multiplication by x1");
    add_common(inject, o, false);
    add_source(inject, o);

    auto* minimal = app.add_subcommand("minimal", "compare graded dims with the minimal series");
    add_common(minimal, o, false);
    add_source(minimal, o);

    auto* generic = app.add_subcommand("generic", "genericity experiment over random potentials");
    add_common(generic, o, true);
    generic->add_option("n_k_m", o.params, "n k m")->expected(3)->required();
    generic->add_option("--trials", o.trials)->capture_default_str();
    generic->add_option("--threads", o.threads, "worker threads (0: all cores)");
    generic->add_option("--threshold", o.threshold, "minimum passing fraction")->capture_default_str();

    auto* examples = app.add_subcommand("examples", "print the builtin potentials");
    add_common(examples, o, false);
    examples->add_option("n_k", o.params, "n k")->expected(2)->required();

    auto* oracle = app.add_subcommand("oracle", "cross-check graded dims against brute-force ranks");
    add_common(oracle, o, false);
    add_source(oracle, o);

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands().front()->get_name();
    try {
        const bool needs_field = command != "bound" && command != "classify" && command != "generic";
        int default_degree = 12;
        if (command == "generic" || command == "classify" || command == "bound") {
            default_degree = command == "classify" ? 24 : default_degree_bound(o.params.at(0));
        } else if (!o.builtin.empty() || !o.random.empty()) {
            std::istringstream is(o.builtin.empty() ? o.random : o.builtin.substr(4));
            int n = 2;
            is >> n;
            default_degree = default_degree_bound(n);
        } else if (o.generators) {
            default_degree = default_degree_bound(*o.generators);
        }
        if (command == "generic" && o.field == "q")
            o.field = FieldSpec::prime(kDefaultPrime).to_string();
        RunConfig c = run_config(o, default_degree);

        Output out;
        if (!needs_field) {
            if (command == "bound")
                out = cmd_bound(o, c);
            else if (command == "classify")
                out = cmd_classify(o, c);
            else
                out = cmd_generic(o, c);
        } else {
            out = with_field(c.field, [&](const auto& field) {
                if (command == "series")
                    return cmd_series(o, c, field);
                if (command == "inject")
                    return cmd_inject(o, c, field);
                if (command == "minimal")
                    return cmd_minimal(o, c, field);
                if (command == "examples")
                    return cmd_examples(o, c, field);
                return cmd_oracle(o, c, field);
            });
        }
        emit(c, out.text);
        if (!out.passed) {
            json rec{{"status", "fail"}, {"command", command}, {"config", to_json(c)}};
            rec.update(out.failure);
            std::cerr << rec.dump() << "\n";
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        json rec{{"status", "error"}, {"command", command}, {"message", e.what()}};
        std::cerr << rec.dump() << "\n";
        return 2;
    }
}
