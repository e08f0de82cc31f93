#ifndef EQCOB_REPRING_HPP
#define EQCOB_REPRING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eqcob/subset.hpp"

namespace eqcob {

/// Raised when a pullback sends a character to the empty support, i.e. out
/// of the reduced representation ring.
class EmptyCharacterError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Irreducible character Y_S of (Z_2)^r: a nonempty subset of {1..r}. The
/// trivial character is unrepresentable by construction.
class Character {
public:
    Character(int rank, std::uint32_t support);
    static Character from_elements(int rank, const std::vector<int>& elems);

    int rank() const { return rank_; }
    std::uint32_t support() const { return support_; }
    std::string str() const { return "Y" + support_str(support_); }

    bool operator==(const Character& other) const = default;

private:
    int rank_;
    std::uint32_t support_;
};

/// Monomial of the polynomial ring Z_2[Y_S]: a multiset of characters.
/// Y_S * Y_S is the square, a degree-2 monomial, never a character product.
class RepMonomial {
public:
    explicit RepMonomial(int rank);
    static RepMonomial from_supports(int rank, const std::vector<std::uint32_t>& supports);

    int rank() const { return rank_; }
    unsigned degree() const;
    const std::vector<std::pair<std::uint32_t, unsigned>>& factors() const { return factors_; }
    /// Supports with multiplicity expanded, in canonical order.
    std::vector<std::uint32_t> expanded_supports() const;

    RepMonomial times(const RepMonomial& other) const;

    bool operator==(const RepMonomial& other) const = default;
    bool operator<(const RepMonomial& other) const;  // degree, then support-lex

    std::string str() const;  // "Y{1}Y{1,2}^2", "1" for degree 0

private:
    int rank_;
    // sorted by canonical support order, multiplicities >= 1
    std::vector<std::pair<std::uint32_t, unsigned>> factors_;
};

/// GF(2) combination of monomials; addition is symmetric difference.
class RepElement {
public:
    explicit RepElement(int rank) : rank_(rank) {}
    static RepElement zero(int rank) { return RepElement(rank); }
    static RepElement one(int rank);
    static RepElement monomial(RepMonomial m);
    static RepElement character(int rank, std::uint32_t support);
    static RepElement from_monomials(int rank, std::vector<RepMonomial> monomials);

    int rank() const { return rank_; }
    bool is_zero() const { return monomials_.empty(); }
    std::size_t monomial_count() const { return monomials_.size(); }
    const std::vector<RepMonomial>& monomials() const { return monomials_; }

    bool is_homogeneous() const;
    /// Common degree of a nonzero homogeneous element; throws otherwise.
    unsigned degree() const;

    RepElement& operator+=(const RepElement& other);
    friend RepElement operator+(RepElement a, const RepElement& b) {
        a += b;
        return a;
    }
    RepElement operator*(const RepElement& other) const;

    bool operator==(const RepElement& other) const = default;

    std::string str() const;  // "+"-joined sorted monomials, "0" when zero

private:
    int rank_;
    std::vector<RepMonomial> monomials_;  // sorted, no duplicates
};

/// Homomorphism (Z_2)^r -> (Z_2)^n recorded by the images (S_1..S_n), each a
/// subset of {1..r}: the generator T_i of the source maps through every
/// factor j with i in S_j.
class GroupHom {
public:
    GroupHom(int domain_rank, std::vector<std::uint32_t> images);
    static GroupHom identity(int n);

    int domain_rank() const { return domain_rank_; }
    int codomain_rank() const { return static_cast<int>(images_.size()); }
    const std::vector<std::uint32_t>& images() const { return images_; }

    bool operator==(const GroupHom& other) const = default;
    std::string str() const;  // "{1};{2};{3,4}"

private:
    int domain_rank_;
    std::vector<std::uint32_t> images_;
};

/// Pullback along the homomorphism: Y_T goes to Y of the symmetric
/// difference of the S_t over t in T. Throws EmptyCharacterError when that
/// difference is empty.
RepMonomial pullback(const RepMonomial& m, const GroupHom& h);
RepElement pullback(const RepElement& e, const GroupHom& h);

}  // namespace eqcob

#endif
