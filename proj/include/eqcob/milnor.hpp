#ifndef EQCOB_MILNOR_HPP
#define EQCOB_MILNOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqcob/repring.hpp"

namespace eqcob {

/// Stationary point P_{i,j} of the coordinate-flip action on H(m,n): the
/// product of the i-th coordinate line of RP^m and the j-th of RP^n.
struct FixedPoint {
    int i;
    int j;
    bool operator==(const FixedPoint& other) const = default;
};

/// All P_{i,j} with 0 <= i <= m, 0 <= j <= n, i != j. Count is n(m+1).
std::vector<FixedPoint> fixed_points(int m, int n);

/// Tangential representation at P_{i,j} as a degree-(m+n-1) monomial over
/// rank n.
RepMonomial tangential_rep(int m, int n, FixedPoint fp);

/// The Milnor hypersurface H(m,n) of RP^m x RP^n, 1 <= m <= n, carrying
/// either the standard coordinate-flip action of (Z_2)^n (hom absent) or its
/// pullback along hom: (Z_2)^r -> (Z_2)^n.
struct MilnorAction {
    int m;
    int n;
    std::optional<GroupHom> hom;

    int rank() const { return hom ? hom->domain_rank() : n; }
    int dimension() const { return m + n - 1; }
};

/// nullopt when the images are pairwise distinct and nonempty (the pulled
/// back action then has exactly the stationary points P_{i,j}); otherwise a
/// message naming the offending subset.
std::optional<std::string> validate_pullback_action(const GroupHom& h);

/// Throws std::invalid_argument when the action parameters are out of range
/// or the hom fails validate_pullback_action.
void validate_action(const MilnorAction& action);

/// Sum of the tangential representations over all stationary points, each
/// pulled back along the hom when present.
RepElement eta_fixed_point_sum(const MilnorAction& action);

/// The grouped two-part expression for the same sum, transcribed directly;
/// kept independent of the fixed-point assembly so their equality is a real
/// check.
RepElement eta_closed_formula(int m, int n);

/// Image under eta of the coordinate-flip action of (Z_2)^k on RP^k.
RepElement projective_class(int k);

}  // namespace eqcob

#endif
