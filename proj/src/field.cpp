#include "potalg/field.hpp"

#include <charconv>
#include <stdexcept>

namespace potalg {

bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("modulus must be a prime below 2^31: " + std::to_string(p));
    return {Kind::Prime, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q")
        return rationals();
    if (text.starts_with("fp:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw std::invalid_argument("bad modulus in field spec: " + std::string(text));
        return prime(p);
    }
    throw std::invalid_argument("field must be 'q' or 'fp:<p>', got: " + std::string(text));
}

std::string FieldSpec::to_string() const {
    return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(modulus);
}

PrimeField::PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).modulus) {}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0)
        throw std::domain_error("division by zero in prime field");
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0)
        t += p_;
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
    mpz_class p(p_);
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (num < 0)
        num += p;
    if (den == 0)
        throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
}

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0)
        throw std::domain_error("division by zero in rationals");
    return 1 / a;
}

}  // namespace potalg
