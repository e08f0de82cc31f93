#include "eqcob/milnor.hpp"

#include <stdexcept>

namespace eqcob {

namespace {

void check_mn(int m, int n) {
    if (m < 1 || m > n)
        throw std::invalid_argument("need 1 <= m <= n, got m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
    if (n > kMaxRank) throw std::invalid_argument("n exceeds the rank cap of 32");
}

// Group generators are indexed 1..n while projective coordinates start at 0,
// so the character attached to a coordinate pair is {a,b} with 0 dropped.
// This is the only place the drop-zero convention lives.
std::uint32_t pair_char(int a, int b) {
    std::uint32_t mask = 0;
    if (a > 0) mask |= std::uint32_t{1} << (a - 1);
    if (b > 0) mask |= std::uint32_t{1} << (b - 1);
    return mask;
}

}  // namespace

std::vector<FixedPoint> fixed_points(int m, int n) {
    check_mn(m, n);
    std::vector<FixedPoint> out;
    out.reserve(static_cast<std::size_t>(n) * (m + 1));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j) out.push_back({i, j});
    return out;
}

RepMonomial tangential_rep(int m, int n, FixedPoint fp) {
    check_mn(m, n);
    const int i = fp.i, j = fp.j;
    if (i < 0 || i > m || j < 0 || j > n || i == j)
        throw std::invalid_argument("invalid stationary point (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
    std::vector<std::uint32_t> supports;
    supports.reserve(static_cast<std::size_t>(m + n - 1));
    if (j > m) {
        // x-chart basis e_l, l != i; y-chart basis f_l, l != i, j
        for (int l = 0; l <= m; ++l)
            if (l != i) supports.push_back(pair_char(i, l));
        for (int l = 0; l <= n; ++l)
            if (l != i && l != j) supports.push_back(pair_char(j, l));
    } else {
        // the hypersurface identifies f_i with e_j, one combined coordinate
        for (int l = 0; l <= m; ++l)
            if (l != i && l != j) supports.push_back(pair_char(i, l));
        for (int l = 0; l <= n; ++l)
            if (l != i && l != j) supports.push_back(pair_char(j, l));
        supports.push_back(pair_char(i, j));
    }
    return RepMonomial::from_supports(n, supports);
}

std::optional<std::string> validate_pullback_action(const GroupHom& h) {
    const auto& images = h.images();
    for (std::size_t a = 0; a < images.size(); ++a)
        if (images[a] == 0)
            return "image subset S_" + std::to_string(a + 1) + " is empty";
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
            if (images[a] == images[b])
                return "image subsets S_" + std::to_string(a + 1) + " and S_" +
                       std::to_string(b + 1) + " coincide (" + support_str(images[a]) + ")";
    return std::nullopt;
}

void validate_action(const MilnorAction& action) {
    check_mn(action.m, action.n);
    if (action.hom) {
        if (action.hom->codomain_rank() != action.n)
            throw std::invalid_argument("hom must list exactly n=" + std::to_string(action.n) +
                                        " image subsets");
        if (auto err = validate_pullback_action(*action.hom))
            throw std::invalid_argument("invalid action: " + *err);
    }
}

RepElement eta_fixed_point_sum(const MilnorAction& action) {
    validate_action(action);
    std::vector<RepMonomial> contributions;
    for (const FixedPoint& fp : fixed_points(action.m, action.n)) {
        RepMonomial rep = tangential_rep(action.m, action.n, fp);
        if (action.hom) rep = pullback(rep, *action.hom);
        contributions.push_back(std::move(rep));
    }
    return RepElement::from_monomials(action.rank(), std::move(contributions));
}

RepElement eta_closed_formula(int m, int n) {
    check_mn(m, n);
    const auto Y1 = [n](int a) { return RepElement::character(n, mask_from_elements({a})); };
    const auto Y2 = [n](int a, int b) {
        return RepElement::character(n, mask_from_elements({a, b}));
    };
    const RepElement one = RepElement::one(n);

    RepElement prefix = one;
    for (int i = 1; i <= m; ++i) prefix = prefix * Y1(i);
    RepElement first_sum = RepElement::zero(n);
    for (int j = 1; j <= n; ++j) {
        RepElement t = one;
        for (int k = 1; k <= n; ++k)
            if (k != j) t = t * Y2(k, j);
        first_sum += t;
    }
    RepElement result = prefix * first_sum;

    for (int i = 1; i <= m; ++i) {
        RepElement head = Y1(i);
        for (int k = 1; k <= m; ++k)
            if (k != i) head = head * Y2(k, i);
        RepElement inner = one;
        for (int l = 1; l <= n; ++l)
            if (l != i) inner = inner * Y1(l);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            RepElement t = Y1(j);
            for (int l = 1; l <= n; ++l)
                if (l != i && l != j) t = t * Y2(l, j);
            inner += t;
        }
        result += head * inner;
    }
    return result;
}

RepElement projective_class(int k) {
    if (k < 1 || k > kMaxRank)
        throw std::invalid_argument("need 1 <= k <= 32, got " + std::to_string(k));
    std::vector<RepMonomial> contributions;
    for (int i = 0; i <= k; ++i) {
        std::vector<std::uint32_t> supports;
        for (int l = 0; l <= k; ++l)
            if (l != i) supports.push_back(pair_char(i, l));
        contributions.push_back(RepMonomial::from_supports(k, supports));
    }
    return RepElement::from_monomials(k, std::move(contributions));
}

}  // namespace eqcob
