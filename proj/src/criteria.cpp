#include "eqcob/criteria.hpp"

#include <stdexcept>

namespace eqcob {

SearchPolicy SearchPolicy::standard(int m, int degree) {
    SearchPolicy p;
    for (int N : {8, 16, 32}) {
        const int k = N + m;
        if (k > degree) p.k_candidates.push_back(k);
    }
    return p;
}

SearchPolicy SearchPolicy::range(int k_min, int k_max) {
    SearchPolicy p;
    for (int k = k_min; k <= k_max; ++k) p.k_candidates.push_back(k);
    return p;
}

std::optional<Certificate> test_indecomposable(const RepElement& e, int degree,
                                               const SearchPolicy& policy) {
    if (policy.k_candidates.empty()) throw std::invalid_argument("empty search policy");
    for (int k : policy.k_candidates)
        if (k <= degree)
            throw std::invalid_argument("policy candidate k=" + std::to_string(k) +
                                        " is not above the degree " + std::to_string(degree));
    for (int k : policy.k_candidates) {
        RationalFunction c = b_coefficient(e, BMultiIndex::single(static_cast<unsigned>(k)));
        if (!c.is_zero())
            return Certificate{k, Certificate::Kind::kSingle, degree, std::move(c)};
        if (k >= 2) {
            c = b_coefficient(e, BMultiIndex::split(static_cast<unsigned>(k)));
            if (!c.is_zero())
                return Certificate{k, Certificate::Kind::kSplit, degree, std::move(c)};
        }
    }
    return std::nullopt;
}

bool is_nonbounding(const RepElement& e) { return !e.is_zero(); }

namespace {

void check_linind_params(int k, int i, int m, int n) {
    if (k < 1 || k > kMaxRank)
        throw std::invalid_argument("rank k must be in [1, 32]");
    if (i < 1) throw std::invalid_argument("family size i must be >= 1");
    if (i > m)
        throw std::invalid_argument("need i <= m: i=" + std::to_string(i) +
                                    ", m=" + std::to_string(m));
    if (m > n - 2)
        throw std::invalid_argument("need m <= n-2: m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n));
    if (k - i < 1 || n > (1 << (k - i)) - 1)
        throw std::invalid_argument("need n <= 2^(k-i)-1: n=" + std::to_string(n) + ", k=" +
                                    std::to_string(k) + ", i=" + std::to_string(i));
}

}  // namespace

GroupHom linind_hom(int k, int i, int m, int n, int j) {
    check_linind_params(k, i, m, n);
    if (j < 1 || j > i) throw std::invalid_argument("need 1 <= j <= i");
    std::vector<std::uint32_t> images;
    images.push_back(std::uint32_t{1} << (j - 1));
    const auto pool = subsets_in_order(i + 1, k);
    for (int t = 0; t < n - 1; ++t) images.push_back(pool[static_cast<std::size_t>(t)]);
    return GroupHom(k, std::move(images));
}

std::vector<RepElement> build_linind_family(int k, int i, int m, int n) {
    check_linind_params(k, i, m, n);
    std::vector<RepElement> family;
    family.reserve(static_cast<std::size_t>(i));
    for (int j = 1; j <= i; ++j) {
        GroupHom h = linind_hom(k, i, m, n, j);
        if (auto err = validate_pullback_action(h))
            throw std::invalid_argument("invalid pullback action: " + *err);
        family.push_back(eta_fixed_point_sum(MilnorAction{m, n, std::move(h)}));
    }
    return family;
}

bool verify_linear_independence(const std::vector<RepElement>& es) {
    if (es.empty()) return true;
    if (es.size() > 16)
        throw std::invalid_argument("independence check capped at 16 elements");
    const int rank = es.front().rank();
    std::optional<unsigned> degree;
    for (const auto& e : es) {
        if (e.rank() != rank) throw std::invalid_argument("mixed ranks");
        if (!e.is_zero()) {
            if (!e.is_homogeneous()) throw std::invalid_argument("inhomogeneous element");
            if (degree && *degree != e.degree()) throw std::invalid_argument("mixed degrees");
            degree = e.degree();
        }
    }
    const std::size_t count = es.size();
    for (std::size_t bits = 1; bits < (std::size_t{1} << count); ++bits) {
        RepElement sum = RepElement::zero(rank);
        for (std::size_t t = 0; t < count; ++t)
            if (bits & (std::size_t{1} << t)) sum += es[t];
        if (sum.is_zero()) return false;
    }
    return true;
}

}  // namespace eqcob
