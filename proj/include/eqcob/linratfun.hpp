#ifndef EQCOB_LINRATFUN_HPP
#define EQCOB_LINRATFUN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqcob/gf2poly.hpp"

namespace eqcob {

/// Multiset of linear-form supports standing for their product. The empty
/// multiset is the denominator 1. Supports are irreducible and pairwise
/// non-associate, so multiset equality is polynomial equality.
class FactoredDenominator {
public:
    FactoredDenominator() = default;
    static FactoredDenominator from_supports(const std::vector<std::uint32_t>& supports);

    void push(std::uint32_t support, unsigned multiplicity = 1);

    bool is_one() const { return factors_.empty(); }
    unsigned factor_count() const;  // total multiplicity = degree of the product
    const std::map<std::uint32_t, unsigned, SupportLess>& factors() const { return factors_; }

    static FactoredDenominator lcm(const FactoredDenominator& a, const FactoredDenominator& b);
    /// Multiset difference; requires other <= *this factor-wise.
    FactoredDenominator minus(const FactoredDenominator& other) const;

    Gf2Poly expand(int nvars) const;
    std::vector<std::string> factor_strings() const;  // multiplicity-expanded
    std::string str() const;                          // "(y1+y2)(y3)", "1" when empty

    bool operator==(const FactoredDenominator& other) const { return factors_ == other.factors_; }

private:
    std::map<std::uint32_t, unsigned, SupportLess> factors_;
};

/// numerator / product of linear forms. Held greedily reduced: no denominator
/// factor divides the numerator. Since the forms are primes of GF(2)[y], the
/// reduced pair is unique for a given value, whatever order sums were folded.
class RationalFunction {
public:
    RationalFunction(Gf2Poly numerator, FactoredDenominator denominator);
    static RationalFunction zero(int nvars);
    static RationalFunction one(int nvars);

    int nvars() const { return num_.nvars(); }
    const Gf2Poly& numerator() const { return num_; }
    const FactoredDenominator& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RationalFunction& operator+=(const RationalFunction& other);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
        a += b;
        return a;
    }

    /// Value equality by cross-multiplication.
    bool operator==(const RationalFunction& other) const;

    /// Divide the numerator by every denominator factor with multiplicity;
    /// nullopt if any division fails.
    std::optional<Gf2Poly> to_polynomial() const;

    std::string str() const;  // "num / (f)(f)" or bare numerator

private:
    Gf2Poly num_;
    FactoredDenominator den_;

    void reduce();
};

/// Sum over i of 1 / prod_{j != i} (y_i + y_j), n >= 2. Identically zero.
RationalFunction lagrange_p(int n);
/// 1/(y_1...y_n) + sum over i of 1 / (y_i prod_{j != i} (y_i + y_j)), n >= 1.
/// Identically zero.
RationalFunction lagrange_ii(int n);
/// Sum over i of y_i^k / prod_{j != i} (y_i + y_j), n >= 2, k >= 0. The raw
/// sum; callers assert the threshold behavior.
RationalFunction lagrange_q(int n, int k);

// Same sums over an explicit subset of the variables of a larger context,
// for the shift recursions.
RationalFunction lagrange_p_on(int nvars, std::span<const int> vars);
RationalFunction lagrange_q_on(int nvars, std::span<const int> vars, int k);

}  // namespace eqcob

#endif
