#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqcob/linratfun.hpp"
#include "oracles.hpp"

using namespace eqcob;

namespace {

Gf2Poly y(int nvars, int i) { return Gf2Poly::variable(nvars, i); }

RationalFunction over(Gf2Poly num, std::vector<std::uint32_t> supports) {
    return RationalFunction(std::move(num), FactoredDenominator::from_supports(supports));
}

// lagrange_p expanded independently: numerator of the sum over the full
// product of pair forms, all dense.
testing::DensePoly dense_lagrange_p_numerator(int n) {
    using namespace testing;
    DensePoly num;
    for (int i = 1; i <= n; ++i) {
        DensePoly t = dense_one(n);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (a != i && b != i) t = dense_mul(t, dense_sigma(n, mask_from_elements({a, b})));
        num = dense_add(num, t);
    }
    return num;
}

}  // namespace

TEST_CASE("rational addition examples") {
    const int nv = 3;
    const auto f = over(Gf2Poly::one(nv), {mask_from_elements({1, 2})});
    CHECK((f + f).is_zero());

    const auto a = over(Gf2Poly::one(nv), {mask_from_elements({1})});
    const auto b = over(Gf2Poly::one(nv), {mask_from_elements({2})});
    const auto sum = a + b;
    CHECK(sum == over(y(nv, 1) + y(nv, 2), {mask_from_elements({1}), mask_from_elements({2})}));
    CHECK(sum.numerator() == y(nv, 1) + y(nv, 2));

    // 1/((y2+y1)(y3+y1)) + 1/((y1+y2)(y3+y2)) + 1/((y1+y3)(y2+y3)) = 0
    const auto t1 = over(Gf2Poly::one(nv), {mask_from_elements({1, 2}), mask_from_elements({1, 3})});
    const auto t2 = over(Gf2Poly::one(nv), {mask_from_elements({1, 2}), mask_from_elements({2, 3})});
    const auto t3 = over(Gf2Poly::one(nv), {mask_from_elements({1, 3}), mask_from_elements({2, 3})});
    CHECK((t1 + t2 + t3).is_zero());
}

TEST_CASE("addition rejects mixed contexts") {
    CHECK_THROWS_AS(RationalFunction::one(2) + RationalFunction::one(3), std::invalid_argument);
}

TEST_CASE("zero test") {
    CHECK(RationalFunction::zero(2).is_zero());
    CHECK_FALSE(over(Gf2Poly::one(2), {mask_from_elements({1})}).is_zero());
    CHECK(lagrange_p(3).is_zero());
}

TEST_CASE("conversion to polynomial") {
    const int nv = 2;
    auto p = over(y(nv, 1).pow(2) + y(nv, 2).pow(2), {mask_from_elements({1, 2})}).to_polynomial();
    REQUIRE(p.has_value());
    CHECK(*p == y(nv, 1) + y(nv, 2));

    CHECK_FALSE(RationalFunction(Gf2Poly::one(nv),
                                 FactoredDenominator::from_supports({mask_from_elements({1})}))
                    .to_polynomial()
                    .has_value());

    auto q = over(y(nv, 1).pow(2) * y(nv, 2) + y(nv, 1) * y(nv, 2).pow(2),
                  {mask_from_elements({1}), mask_from_elements({2})})
                 .to_polynomial();
    REQUIRE(q.has_value());
    CHECK(*q == y(nv, 1) + y(nv, 2));
}

TEST_CASE("greedy reduction reaches the unique reduced pair") {
    const int nv = 2;
    // (y1^2+y2^2)/(y1+y2) reduces to (y1+y2)/1
    const auto f = over(y(nv, 1).pow(2) + y(nv, 2).pow(2), {mask_from_elements({1, 2})});
    CHECK(f.denominator().is_one());
    CHECK(f.numerator() == y(nv, 1) + y(nv, 2));
}

TEST_CASE("reduction preserves the value") {
    std::mt19937 rng(42217);
    for (int trial = 0; trial < 120; ++trial) {
        const int nv = 2 + static_cast<int>(rng() % 3);
        std::vector<Monomial> ms;
        const int terms = 1 + static_cast<int>(rng() % 6);
        for (int t = 0; t < terms; ++t) {
            std::vector<unsigned> exps(static_cast<std::size_t>(nv));
            for (auto& e : exps) e = rng() % 4;
            ms.emplace_back(nv, exps);
        }
        Gf2Poly num = Gf2Poly::from_monomials(nv, ms);
        std::vector<std::uint32_t> supports;
        const int fac = static_cast<int>(rng() % 4);
        for (int t = 0; t < fac; ++t) {
            std::uint32_t s = rng() & ((1u << nv) - 1);
            supports.push_back(s == 0 ? 1u : s);
        }
        // multiply a random subset of the factors into the numerator so
        // reduction has something to find
        Gf2Poly scaled = num;
        for (auto s : supports)
            if (rng() % 2) scaled = scaled * linear_form_poly(nv, s);

        const RationalFunction reduced = over(scaled, supports);
        // raw value by dense cross-multiplication
        testing::DenseRat raw{testing::to_dense(scaled),
                              testing::to_dense(
                                  FactoredDenominator::from_supports(supports).expand(nv))};
        CHECK(testing::dense_rat_eq(raw, testing::to_dense_rat(reduced)));
    }
}

TEST_CASE("value equality is association-independent") {
    std::mt19937 rng(90911);
    for (int trial = 0; trial < 60; ++trial) {
        const int nv = 3;
        std::vector<RationalFunction> parts;
        for (int t = 0; t < 4; ++t) {
            std::uint32_t s = rng() & 7u;
            if (s == 0) s = 1u;
            std::uint32_t s2 = rng() & 7u;
            if (s2 == 0) s2 = 2u;
            parts.push_back(over(y(nv, 1 + static_cast<int>(rng() % 3)), {s, s2}));
        }
        auto left = (parts[0] + parts[1]) + (parts[2] + parts[3]);
        auto right = parts[3] + (parts[1] + (parts[0] + parts[2]));
        CHECK(left == right);
        CHECK(left.numerator() == right.numerator());
        CHECK(left.denominator() == right.denominator());
        CHECK((parts[0] + parts[0]).is_zero());
    }
}

TEST_CASE("lagrange identity (i): the interpolation sum vanishes") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(lagrange_p(n).is_zero());
    }
    CHECK_THROWS_AS(lagrange_p(1), std::invalid_argument);
    // independent dense expansion for n = 6
    CHECK(dense_lagrange_p_numerator(6).empty());
}

TEST_CASE("lagrange identity (ii) vanishes") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(lagrange_ii(n).is_zero());
    }
    CHECK_THROWS_AS(lagrange_ii(0), std::invalid_argument);
}

TEST_CASE("lagrange power sums: thresholds at n-1 and n") {
    // q_k = 0 for k < n-1, = 1 at k = n-1, = y_1+...+y_n at k = n
    CHECK(lagrange_q(2, 0).is_zero());
    CHECK(lagrange_q(2, 1).is_one());
    CHECK(lagrange_q(3, 2).is_one());
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        for (int k = 0; k < n - 1; ++k) {
            CAPTURE(k);
            CHECK(lagrange_q(n, k).is_zero());
        }
        CHECK(lagrange_q(n, n - 1).is_one());
        const auto at_n = lagrange_q(n, n);
        CHECK(at_n == RationalFunction(linear_form_poly(n, (1u << n) - 1),
                                       FactoredDenominator{}));
    }
    CHECK_THROWS_AS(lagrange_q(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_q(3, -1), std::invalid_argument);
}

TEST_CASE("shift recursion for the interpolation sum") {
    // (y_1+y_{n+1}) p(y_1..y_{n+1}) = p(y_1..y_n) + p(y_2..y_{n+1})
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        const int nv = n + 1;
        std::vector<int> all, lo, hi;
        for (int v = 1; v <= n + 1; ++v) all.push_back(v);
        for (int v = 1; v <= n; ++v) lo.push_back(v);
        for (int v = 2; v <= n + 1; ++v) hi.push_back(v);

        const auto p_all = lagrange_p_on(nv, all);
        const auto lhs = RationalFunction(
            p_all.numerator() * linear_form_poly(nv, mask_from_elements({1, n + 1})),
            p_all.denominator());
        const auto rhs = lagrange_p_on(nv, lo) + lagrange_p_on(nv, hi);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("shift recursion for the power sums") {
    for (int n = 2; n <= 6; ++n) {
        const int nv = n + 1;
        std::vector<int> all, lo, hi;
        for (int v = 1; v <= n + 1; ++v) all.push_back(v);
        for (int v = 1; v <= n; ++v) lo.push_back(v);
        for (int v = 2; v <= n + 1; ++v) hi.push_back(v);
        for (int k = 0; k <= n + 1; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const auto q_all = lagrange_q_on(nv, all, k);
            const auto lhs = RationalFunction(
                q_all.numerator() * linear_form_poly(nv, mask_from_elements({1, n + 1})),
                q_all.denominator());
            const auto rhs = lagrange_q_on(nv, lo, k) + lagrange_q_on(nv, hi, k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("text form") {
    const int nv = 2;
    CHECK(RationalFunction::zero(nv).str() == "0");
    CHECK(over(y(nv, 1) * y(nv, 2), {mask_from_elements({1, 2})}).str() == "y1*y2 / (y1+y2)");
    CHECK(over(y(nv, 1) + y(nv, 2), {}).str() == "y1+y2");
}
