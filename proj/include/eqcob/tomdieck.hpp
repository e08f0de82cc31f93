#ifndef EQCOB_TOMDIECK_HPP
#define EQCOB_TOMDIECK_HPP

#include <map>
#include <string>
#include <vector>

#include "eqcob/linratfun.hpp"
#include "eqcob/repring.hpp"

namespace eqcob {

/// Monomial in the degree-graded generators b_1, b_2, ...: a finitely
/// supported map index -> multiplicity. b_0 = 1 is never stored.
class BMultiIndex {
public:
    BMultiIndex() = default;
    static BMultiIndex single(unsigned k);            // b_k
    static BMultiIndex split(unsigned k);             // b_{k-1} b_1, k >= 2
    static BMultiIndex from_parts(const std::vector<unsigned>& parts);

    bool is_empty() const { return mults_.empty(); }
    unsigned weight() const;  // sum of index * multiplicity
    unsigned size() const;    // total multiplicity
    const std::map<unsigned, unsigned>& multiplicities() const { return mults_; }
    std::vector<unsigned> parts_descending() const;

    bool operator==(const BMultiIndex& other) const = default;
    bool operator<(const BMultiIndex& other) const;  // weight, then parts

    std::string str() const;  // "b8*b1", "b2^3", "1" when empty

private:
    std::map<unsigned, unsigned> mults_;
};

/// Coefficient of the b-monomial B in gamma applied to a homogeneous
/// element: per monomial Y_{S_1}...Y_{S_d}, the sum over distinct placements
/// of B's parts into the d slots of prod_t sigma_{S_t}^{a(t)} over
/// prod_t sigma_{S_t}; summed across monomials. Homogeneous of degree
/// weight(B) - d, or zero.
RationalFunction b_coefficient(const RepElement& e, const BMultiIndex& B);

struct IntegralityEntry {
    BMultiIndex B;
    bool requires_zero;  // weight < degree: coefficient must vanish
    bool pass;
};

struct IntegralityReport {
    int degree = 0;
    unsigned max_weight = 0;
    std::vector<IntegralityEntry> entries;

    bool all_pass() const;
};

/// For every B with weight <= max_weight and size <= d: coefficients of
/// weight below d must vanish, the rest must be polynomial. The caller
/// vouches that e is the eta-image of a genuine degree-d class.
IntegralityReport check_integrality(const RepElement& e, int d, unsigned max_weight);

/// All b-monomials with weight <= max_weight and size <= max_size, ordered
/// by weight then descending-part lists.
std::vector<BMultiIndex> enumerate_b_indices(unsigned max_weight, unsigned max_size);

}  // namespace eqcob

#endif
