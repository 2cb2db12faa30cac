#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace potalg {

inline constexpr std::uint32_t kDefaultPrime = 65521;

/// Which ground field a computation runs over.
struct FieldSpec {
    enum class Kind { Rationals, Prime };

    Kind kind = Kind::Rationals;
    std::uint32_t modulus = 0;  // present iff kind == Prime

    static FieldSpec rationals() { return {}; }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "q" or "fp:<p>".
    static FieldSpec parse(std::string_view text);

    std::string to_string() const;
    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t p);

/// Z/p with p < 2^31; elements are canonical residues.
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    FieldSpec spec() const { return {FieldSpec::Kind::Prime, p_}; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }

    Element add(Element a, Element b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
    }
    /// a - b*c
    Element sub_mul(Element a, Element b, Element c) const { return sub(a, mul(b, c)); }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element from_int(std::int64_t v) const;
    Element from_rational(const mpq_class& q) const;
    std::string to_string(Element a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

/// Q with GMP rationals, always kept canonical.
class RationalField {
public:
    using Element = mpq_class;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element sub_mul(const Element& a, const Element& b, const Element& c) const {
        return a - b * c;
    }
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return a / b; }

    Element from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
    Element from_rational(const mpq_class& q) const { return q; }
    std::string to_string(const Element& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const = default;
};

/// Runs `fn` with the concrete field type selected by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::Prime)
        return fn(PrimeField(spec.modulus));
    return fn(RationalField{});
}

}  // namespace potalg
