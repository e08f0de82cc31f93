#ifndef EQCOB_CRITERIA_HPP
#define EQCOB_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqcob/milnor.hpp"
#include "eqcob/tomdieck.hpp"

namespace eqcob {

/// Proof object for indecomposability: the index k > degree at which a
/// gamma-coefficient is nonzero, which coefficient it is, and the nonzero
/// witness itself.
struct Certificate {
    enum class Kind { kSingle, kSplit };

    int k = 0;
    Kind kind = Kind::kSingle;
    int degree = 0;
    RationalFunction witness;

    std::string kind_name() const { return kind == Kind::kSingle ? "single" : "split"; }
    BMultiIndex b_index() const {
        return kind == Kind::kSingle ? BMultiIndex::single(static_cast<unsigned>(k))
                                     : BMultiIndex::split(static_cast<unsigned>(k));
    }
};

/// Ordered list of candidate indices to probe. The default follows the
/// power-of-two pattern N + m with N in {8, 16, 32}, keeping only k > degree.
struct SearchPolicy {
    std::vector<int> k_candidates;

    static SearchPolicy standard(int m, int degree);
    static SearchPolicy range(int k_min, int k_max);
};

/// Probes the coefficient of b_k, then of b_{k-1}b_1, for each candidate in
/// order; the first nonzero one yields a certificate. nullopt means the
/// criterion did not fire. It never means decomposable.
std::optional<Certificate> test_indecomposable(const RepElement& e, int degree,
                                               const SearchPolicy& policy);

/// The eta-image of a class vanishes exactly when the class bounds, so a
/// nonzero image certifies nonbounding.
bool is_nonbounding(const RepElement& e);

/// The hom psi_j of the linear-independence family over rank k: S_1 = {j},
/// S_2..S_n the first n-1 nonempty subsets of {i+1..k} in (size, lex) order.
GroupHom linind_hom(int k, int i, int m, int n, int j);

/// For j = 1..i, eta of H(m,n) pulled back along psi_j. Requires
/// 1 <= i <= m <= n-2 and n <= 2^(k-i) - 1.
std::vector<RepElement> build_linind_family(int k, int i, int m, int n);

/// True when every nonempty subset of the list has nonzero GF(2) sum.
bool verify_linear_independence(const std::vector<RepElement>& es);

}  // namespace eqcob

#endif
