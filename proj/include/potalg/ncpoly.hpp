#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "potalg/field.hpp"
#include "potalg/word.hpp"

namespace potalg {

/// An element of the free algebra K<x1,...,xn>.
///
/// Terms are kept sorted by decreasing deglex order with no repeated words
/// and no zero coefficients, so equality is structural.
template <class Field>
class NCPoly {
public:
    using Element = typename Field::Element;

    struct Term {
        Word word;
        Element coeff;

        bool operator==(const Term&) const = default;
    };

    explicit NCPoly(Field field) : field_(std::move(field)) {}

    static NCPoly monomial(Field field, const Word& w, Element c) {
        NCPoly p(std::move(field));
        if (!p.field_.is_zero(c))
            p.terms_.push_back({w, std::move(c)});
        return p;
    }
    static NCPoly constant(Field field, Element c) { return monomial(std::move(field), Word{}, std::move(c)); }

    /// Sums duplicate words and drops zeros; input order is irrelevant.
    static NCPoly from_terms(Field field, std::vector<Term> terms) {
        NCPoly p(std::move(field));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.word > b.word; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().word == t.word)
                p.terms_.back().coeff = p.field_.add(p.terms_.back().coeff, t.coeff);
            else {
                if (!p.terms_.empty() && p.field_.is_zero(p.terms_.back().coeff))
                    p.terms_.pop_back();
                p.terms_.push_back(std::move(t));
            }
        }
        if (!p.terms_.empty() && p.field_.is_zero(p.terms_.back().coeff))
            p.terms_.pop_back();
        return p;
    }

    const Field& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Element coefficient(const Word& w) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                                   [](const Term& t, const Word& x) { return t.word > x; });
        if (it != terms_.end() && it->word == w)
            return it->coeff;
        return field_.zero();
    }

    /// Deglex-largest term. Precondition: nonzero.
    const Term& leading_term() const { return terms_.front(); }

    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().word.degree()); }
    int min_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().word.degree()); }
    bool is_homogeneous() const { return degree() == min_degree(); }
    int max_letter() const {
        int m = 0;
        for (const auto& t : terms_)
            m = std::max<int>(m, t.word.max_letter());
        return m;
    }

    NCPoly homogeneous_part(int d) const {
        NCPoly p(field_);
        for (const auto& t : terms_) {
            if (static_cast<int>(t.word.degree()) == d)
                p.terms_.push_back(t);
        }
        return p;
    }

    /// Drops every term of degree above d.
    NCPoly truncated(int d) const {
        NCPoly p(field_);
        for (const auto& t : terms_) {
            if (static_cast<int>(t.word.degree()) <= d)
                p.terms_.push_back(t);
        }
        return p;
    }

    NCPoly scaled(const Element& c) const {
        NCPoly p(field_);
        if (field_.is_zero(c))
            return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            p.terms_.push_back({t.word, field_.mul(t.coeff, c)});
        return p;
    }

    /// u * this * v
    NCPoly sandwiched(const Word& u, const Word& v) const {
        NCPoly p(field_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            p.terms_.push_back({u * t.word * v, t.coeff});
        // left/right multiplication by a fixed word preserves deglex order
        return p;
    }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& t : terms_) {
            std::string c = field_.to_string(t.coeff);
            bool negative = c.starts_with('-');
            if (negative)
                c.erase(0, 1);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (t.word.empty())
                out += c;
            else {
                if (c != "1")
                    out += c + "*";
                out += t.word.to_string();
            }
        }
        return out;
    }

    bool operator==(const NCPoly& other) const {
        return field_ == other.field_ && terms_ == other.terms_;
    }

    template <class F>
    friend NCPoly<F> poly_combine(const NCPoly<F>& p, const NCPoly<F>& q,
                                  const typename F::Element& c);

private:
    Field field_;
    std::vector<Term> terms_;
};

template <class Field>
void require_same_field(const NCPoly<Field>& p, const NCPoly<Field>& q) {
    if (!(p.field() == q.field()))
        throw std::invalid_argument("field mismatch between polynomials");
}

/// p + c*q
template <class Field>
NCPoly<Field> poly_combine(const NCPoly<Field>& p, const NCPoly<Field>& q,
                           const typename Field::Element& c) {
    require_same_field(p, q);
    const Field& f = p.field();
    NCPoly<Field> r(f);
    if (f.is_zero(c))
        return p;
    auto i = p.terms_.begin();
    auto j = q.terms_.begin();
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    while (i != p.terms_.end() || j != q.terms_.end()) {
        if (j == q.terms_.end() || (i != p.terms_.end() && i->word > j->word)) {
            r.terms_.push_back(*i++);
        } else if (i == p.terms_.end() || j->word > i->word) {
            r.terms_.push_back({j->word, f.mul(c, j->coeff)});
            ++j;
        } else {
            auto s = f.add(i->coeff, f.mul(c, j->coeff));
            if (!f.is_zero(s))
                r.terms_.push_back({i->word, std::move(s)});
            ++i;
            ++j;
        }
    }
    return r;
}

template <class Field>
NCPoly<Field> poly_mul(const NCPoly<Field>& p, const NCPoly<Field>& q) {
    require_same_field(p, q);
    const Field& f = p.field();
    std::vector<typename NCPoly<Field>::Term> terms;
    terms.reserve(p.size() * q.size());
    for (const auto& a : p.terms())
        for (const auto& b : q.terms())
            terms.push_back({a.word * b.word, f.mul(a.coeff, b.coeff)});
    return NCPoly<Field>::from_terms(f, std::move(terms));
}

template <class Field>
NCPoly<Field> operator+(const NCPoly<Field>& p, const NCPoly<Field>& q) {
    return poly_combine(p, q, p.field().one());
}
template <class Field>
NCPoly<Field> operator-(const NCPoly<Field>& p, const NCPoly<Field>& q) {
    return poly_combine(p, q, p.field().neg(p.field().one()));
}
template <class Field>
NCPoly<Field> operator-(const NCPoly<Field>& p) {
    return p.scaled(p.field().neg(p.field().one()));
}
template <class Field>
NCPoly<Field> operator*(const NCPoly<Field>& p, const NCPoly<Field>& q) {
    return poly_mul(p, q);
}

/// The relations r_1..r_n of a presentation over a fixed alphabet.
template <class Field>
struct RelationSet {
    int generators = 0;
    std::vector<NCPoly<Field>> relations;
};

}  // namespace potalg
