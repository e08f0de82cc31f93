// Test-only brute-force oracles, kept independent of the library's sparse
// arithmetic: dense map-based polynomials over GF(2) and a truncated-series
// expansion of gamma. Shared by the unit suites and the acceptance suite.
#ifndef EQCOB_TESTS_ORACLES_HPP
#define EQCOB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "eqcob/gf2poly.hpp"
#include "eqcob/linratfun.hpp"
#include "eqcob/repring.hpp"
#include "eqcob/tomdieck.hpp"

namespace eqcob::testing {

// Dense GF(2) polynomial: exponent vector -> presence. The arithmetic here
// deliberately mirrors the textbook definitions, not the library's merge
// machinery.
using DensePoly = std::map<std::vector<unsigned>, bool>;

inline void dense_toggle(DensePoly& p, const std::vector<unsigned>& key) {
    auto it = p.find(key);
    if (it == p.end())
        p.emplace(key, true);
    else
        p.erase(it);
}

inline DensePoly dense_one(int nvars) {
    DensePoly p;
    p.emplace(std::vector<unsigned>(static_cast<std::size_t>(nvars), 0u), true);
    return p;
}

inline DensePoly dense_add(const DensePoly& a, const DensePoly& b) {
    DensePoly out = a;
    for (const auto& [k, v] : b) dense_toggle(out, k);
    return out;
}

inline DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    DensePoly out;
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) {
            std::vector<unsigned> k(ka.size());
            for (std::size_t t = 0; t < ka.size(); ++t) k[t] = ka[t] + kb[t];
            dense_toggle(out, k);
        }
    }
    return out;
}

inline DensePoly dense_pow(const DensePoly& p, unsigned k, int nvars) {
    DensePoly r = dense_one(nvars);
    for (unsigned t = 0; t < k; ++t) r = dense_mul(r, p);
    return r;
}

inline DensePoly dense_sigma(int nvars, std::uint32_t support) {
    DensePoly p;
    for (int e : elements_of(support)) {
        std::vector<unsigned> k(static_cast<std::size_t>(nvars), 0u);
        k[static_cast<std::size_t>(e - 1)] = 1;
        dense_toggle(p, k);
    }
    return p;
}

inline DensePoly to_dense(const Gf2Poly& p) {
    DensePoly out;
    for (const auto& m : p.terms()) {
        std::vector<unsigned> k(static_cast<std::size_t>(p.nvars()));
        for (int v = 1; v <= p.nvars(); ++v) k[static_cast<std::size_t>(v - 1)] = m.exponent(v);
        dense_toggle(out, k);
    }
    return out;
}

inline Gf2Poly from_dense(int nvars, const DensePoly& p) {
    std::vector<Monomial> ms;
    for (const auto& [k, v] : p) ms.emplace_back(nvars, k);
    return Gf2Poly::from_monomials(nvars, std::move(ms));
}

// Dense rational value num/den; equality by dense cross-multiplication.
struct DenseRat {
    DensePoly num;
    DensePoly den;
};

inline bool dense_rat_eq(const DenseRat& a, const DenseRat& b) {
    return dense_mul(a.num, b.den) == dense_mul(b.num, a.den);
}

inline DenseRat to_dense_rat(const RationalFunction& f) {
    return DenseRat{to_dense(f.numerator()),
                    to_dense(f.denominator().expand(f.nvars()))};
}

// gamma coefficient by truncated-series expansion: for each monomial of e,
// multiply out prod_t (sum_{r=0}^{R} b_r sigma_t^r) keyed by sorted b-part
// lists, read off B, and put the result over that monomial's slot product.
// Contributions combine over the product of every monomial's denominator.
inline DenseRat oracle_b_coefficient(const RepElement& e, const BMultiIndex& B) {
    const int nv = e.rank();
    const unsigned R = B.weight();
    std::vector<unsigned> target = B.parts_descending();

    std::vector<DensePoly> per_mono_num;
    std::vector<DensePoly> per_mono_den;
    for (const RepMonomial& mono : e.monomials()) {
        DensePoly den = dense_one(nv);
        std::map<std::vector<unsigned>, DensePoly> series;
        series.emplace(std::vector<unsigned>{}, dense_one(nv));
        for (std::uint32_t s : mono.expanded_supports()) {
            const DensePoly sig = dense_sigma(nv, s);
            den = dense_mul(den, sig);
            std::map<std::vector<unsigned>, DensePoly> next;
            for (unsigned r = 0; r <= R; ++r) {
                const DensePoly sp = dense_pow(sig, r, nv);
                for (const auto& [bm, poly] : series) {
                    unsigned w = r;
                    for (unsigned part : bm) w += part;
                    if (w > R) continue;
                    std::vector<unsigned> nbm = bm;
                    if (r > 0) {
                        nbm.push_back(r);
                        std::sort(nbm.begin(), nbm.end(), std::greater<unsigned>{});
                    }
                    const DensePoly q = dense_mul(poly, sp);
                    auto it = next.find(nbm);
                    if (it == next.end())
                        next.emplace(nbm, q);
                    else
                        it->second = dense_add(it->second, q);
                }
            }
            series = std::move(next);
        }
        auto it = series.find(target);
        per_mono_num.push_back(it == series.end() ? DensePoly{} : it->second);
        per_mono_den.push_back(std::move(den));
    }

    DenseRat total{DensePoly{}, dense_one(nv)};
    for (const auto& d : per_mono_den) total.den = dense_mul(total.den, d);
    for (std::size_t t = 0; t < per_mono_num.size(); ++t) {
        DensePoly scaled = per_mono_num[t];
        for (std::size_t u = 0; u < per_mono_den.size(); ++u)
            if (u != t) scaled = dense_mul(scaled, per_mono_den[u]);
        total.num = dense_add(total.num, scaled);
    }
    return total;
}

}  // namespace eqcob::testing

#endif
