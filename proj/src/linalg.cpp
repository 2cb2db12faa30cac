#include "potalg/linalg.hpp"

#include <algorithm>
#include <type_traits>

namespace potalg {

namespace {

/// a*x - b*y on sorted sparse vectors, dropping zeros.
template <class Field, class Elem>
SparseVector<Field> combine(const Field& f, const Elem& a, const SparseVector<Field>& x,
                            const Elem& b, const SparseVector<Field>& y) {
    SparseVector<Field> out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            auto v = f.mul(a, i->second);
            if (!f.is_zero(v))
                out.emplace_back(i->first, std::move(v));
            ++i;
        } else if (i == x.end() || j->first < i->first) {
            auto v = f.neg(f.mul(b, j->second));
            if (!f.is_zero(v))
                out.emplace_back(j->first, std::move(v));
            ++j;
        } else {
            auto v = f.sub(f.mul(a, i->second), f.mul(b, j->second));
            if (!f.is_zero(v))
                out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void make_primitive(SparseVector<RationalField>& v) {
    if (v.empty())
        return;
    mpz_class den = 1;
    for (const auto& [idx, q] : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_class content = 0;
    for (auto& [idx, q] : v) {
        q *= den;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), q.get_num_mpz_t());
    }
    if (v.back().second < 0)
        content = -content;
    for (auto& [idx, q] : v)
        q = mpq_class(q.get_num() / content);
}

void sort_entries(auto& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

template <class Field>
bool EchelonBasis<Field>::insert(SparseVector<Field> v) {
    const Field& f = field_;
    std::erase_if(v, [&](const auto& e) { return f.is_zero(e.second); });
    sort_entries(v);
    if constexpr (std::is_same_v<Field, RationalField>) {
        make_primitive(v);
        while (!v.empty()) {
            auto it = pivots_.find(v.back().first);
            if (it == pivots_.end()) {
                pivots_.emplace(v.back().first, std::move(v));
                return true;
            }
            const auto& piv = it->second;
            // both leads are integers; cross-multiply to stay integral
            auto a = piv.back().second;
            auto b = v.back().second;
            v = combine(f, a, v, b, piv);
            make_primitive(v);
        }
    } else {
        while (!v.empty()) {
            auto it = pivots_.find(v.back().first);
            if (it == pivots_.end()) {
                auto inv = f.inv(v.back().second);
                for (auto& e : v)
                    e.second = f.mul(e.second, inv);
                pivots_.emplace(v.back().first, std::move(v));
                return true;
            }
            auto b = v.back().second;
            v = combine(f, f.one(), v, b, it->second);
        }
    }
    return false;
}

template class EchelonBasis<PrimeField>;
template class EchelonBasis<RationalField>;

}  // namespace potalg
