#ifndef EQCOB_GF2POLY_HPP
#define EQCOB_GF2POLY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqcob/subset.hpp"

namespace eqcob {

// Per-variable exponent cap. Exponents reach ~40 in real computations; the
// cap turns runaway loops into hard errors instead of silent wraparound.
inline constexpr unsigned kMaxExponent = 65535;

/// A power product y_1^{a_1}...y_r^{a_r} inside a fixed r-variable context.
class Monomial {
public:
    explicit Monomial(int nvars);
    Monomial(int nvars, std::vector<unsigned> exponents);

    static Monomial variable(int nvars, int index);  // y_index, 1-based

    int nvars() const { return static_cast<int>(exps_.size()); }
    unsigned exponent(int index) const;  // 1-based
    unsigned total_degree() const;

    Monomial times(const Monomial& other) const;
    Monomial squared() const;
    Monomial with_exponent(int index, unsigned value) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    // graded lexicographic: total degree first, then y_1 exponent, y_2, ...
    std::strong_ordering operator<=>(const Monomial& other) const;

    std::string str() const;  // "y1^2*y3", "1" for the empty product

private:
    std::vector<std::uint16_t> exps_;
};

/// Sparse polynomial over the two-element field: the set of monomials with
/// coefficient 1. Addition is symmetric difference, so p + p = 0.
class Gf2Poly {
public:
    explicit Gf2Poly(int nvars) : nvars_(nvars) {}

    static Gf2Poly zero(int nvars) { return Gf2Poly(nvars); }
    static Gf2Poly one(int nvars);
    static Gf2Poly variable(int nvars, int index);
    static Gf2Poly from_monomials(int nvars, std::vector<Monomial> monomials);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    unsigned degree() const;  // max total degree; 0 for the zero polynomial

    /// Terms in ascending graded-lex order.
    const std::vector<Monomial>& terms() const { return terms_; }

    Gf2Poly& operator+=(const Gf2Poly& other);
    friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) {
        a += b;
        return a;
    }
    Gf2Poly operator*(const Gf2Poly& other) const;
    Gf2Poly squared() const;  // Frobenius: termwise exponent doubling
    Gf2Poly pow(unsigned k) const;

    bool operator==(const Gf2Poly& other) const = default;

    /// Canonical text: terms joined by "+", leading (graded-lex largest) first.
    std::string str() const;

private:
    int nvars_;
    std::vector<Monomial> terms_;  // sorted ascending, no duplicates
};

/// The linear form sum of y_i over a nonempty support subset of {1..r}.
/// Degree 1, hence irreducible; distinct supports give non-associate forms.
class LinearForm {
public:
    LinearForm(int nvars, std::uint32_t support);
    static LinearForm from_elements(int nvars, const std::vector<int>& elems);

    int nvars() const { return nvars_; }
    std::uint32_t support() const { return support_; }
    int pivot() const;  // smallest element of the support

    Gf2Poly to_poly() const;
    Gf2Poly rest_poly() const;  // support minus pivot; zero for singletons

    bool operator==(const LinearForm& other) const = default;
    std::string str() const;  // "y1+y2"

private:
    int nvars_;
    std::uint32_t support_;
};

Gf2Poly linear_form_poly(int nvars, std::uint32_t support);

/// Exact division of p by a linear form. Divisibility is decided by
/// substituting the pivot variable by the sum of the rest of the support
/// (valid over GF(2)); the quotient comes out of synthetic division in the
/// pivot variable. Returns nullopt when the substitution residue is nonzero.
std::optional<Gf2Poly> divide_by_linear_form(const Gf2Poly& p, const LinearForm& f);

}  // namespace eqcob

#endif
