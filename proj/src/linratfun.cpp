#include "eqcob/linratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqcob {

FactoredDenominator FactoredDenominator::from_supports(
    const std::vector<std::uint32_t>& supports) {
    FactoredDenominator d;
    for (auto s : supports) d.push(s);
    return d;
}

void FactoredDenominator::push(std::uint32_t support, unsigned multiplicity) {
    if (support == 0) throw std::invalid_argument("denominator factor needs a nonempty support");
    if (multiplicity == 0) return;
    factors_[support] += multiplicity;
}

unsigned FactoredDenominator::factor_count() const {
    unsigned n = 0;
    for (const auto& [s, m] : factors_) n += m;
    return n;
}

FactoredDenominator FactoredDenominator::lcm(const FactoredDenominator& a,
                                             const FactoredDenominator& b) {
    FactoredDenominator out = a;
    for (const auto& [s, m] : b.factors_) {
        auto it = out.factors_.find(s);
        if (it == out.factors_.end())
            out.factors_[s] = m;
        else
            it->second = std::max(it->second, m);
    }
    return out;
}

FactoredDenominator FactoredDenominator::minus(const FactoredDenominator& other) const {
    FactoredDenominator out;
    for (const auto& [s, m] : factors_) {
        auto it = other.factors_.find(s);
        const unsigned sub = it == other.factors_.end() ? 0u : it->second;
        if (sub > m) throw std::invalid_argument("multiset difference underflow");
        if (m > sub) out.factors_[s] = m - sub;
    }
    return out;
}

Gf2Poly FactoredDenominator::expand(int nvars) const {
    Gf2Poly p = Gf2Poly::one(nvars);
    for (const auto& [s, m] : factors_) p = p * linear_form_poly(nvars, s).pow(m);
    return p;
}

std::vector<std::string> FactoredDenominator::factor_strings() const {
    std::vector<std::string> out;
    for (const auto& [s, m] : factors_) {
        std::string fs;
        for (int e : elements_of(s)) {
            if (!fs.empty()) fs += "+";
            fs += "y" + std::to_string(e);
        }
        for (unsigned t = 0; t < m; ++t) out.push_back(fs);
    }
    return out;
}

std::string FactoredDenominator::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& f : factor_strings()) s += "(" + f + ")";
    return s;
}

RationalFunction::RationalFunction(Gf2Poly numerator, FactoredDenominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    reduce();
}

RationalFunction RationalFunction::zero(int nvars) {
    return RationalFunction(Gf2Poly::zero(nvars), FactoredDenominator{});
}

RationalFunction RationalFunction::one(int nvars) {
    return RationalFunction(Gf2Poly::one(nvars), FactoredDenominator{});
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = FactoredDenominator{};
        return;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [s, m] : den_.factors()) {
            if (auto q = divide_by_linear_form(num_, LinearForm(num_.nvars(), s))) {
                num_ = std::move(*q);
                FactoredDenominator one_factor;
                one_factor.push(s);
                den_ = den_.minus(one_factor);
                changed = true;
                break;
            }
        }
    }
}

bool RationalFunction::is_one() const { return *this == one(nvars()); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
    if (nvars() != other.nvars())
        throw std::invalid_argument("mixed variable contexts in rational sum");
    const FactoredDenominator common = FactoredDenominator::lcm(den_, other.den_);
    Gf2Poly scaled = num_ * common.minus(den_).expand(nvars()) +
                     other.num_ * common.minus(other.den_).expand(nvars());
    *this = RationalFunction(std::move(scaled), common);
    return *this;
}

bool RationalFunction::operator==(const RationalFunction& other) const {
    if (nvars() != other.nvars()) return false;
    return num_ * other.den_.expand(nvars()) == other.num_ * den_.expand(nvars());
}

std::optional<Gf2Poly> RationalFunction::to_polynomial() const {
    Gf2Poly p = num_;
    for (const auto& [s, m] : den_.factors()) {
        for (unsigned t = 0; t < m; ++t) {
            auto q = divide_by_linear_form(p, LinearForm(nvars(), s));
            if (!q) return std::nullopt;
            p = std::move(*q);
        }
    }
    return p;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + " / " + den_.str();
}

namespace {

void check_vars(int nvars, std::span<const int> vars, std::size_t min_count) {
    if (vars.size() < min_count)
        throw std::invalid_argument("need at least " + std::to_string(min_count) +
                                    " variables");
    for (int v : vars)
        if (v < 1 || v > nvars) throw std::invalid_argument("variable index out of context");
    for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b)
            if (vars[a] == vars[b]) throw std::invalid_argument("repeated variable");
}

FactoredDenominator pair_denominator(std::span<const int> vars, int i) {
    FactoredDenominator d;
    for (int j : vars)
        if (j != i) d.push(mask_from_elements({i, j}));
    return d;
}

std::vector<int> iota_vars(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) v[static_cast<std::size_t>(t)] = t + 1;
    return v;
}

}  // namespace

RationalFunction lagrange_p_on(int nvars, std::span<const int> vars) {
    check_vars(nvars, vars, 2);
    RationalFunction acc = RationalFunction::zero(nvars);
    for (int i : vars)
        acc += RationalFunction(Gf2Poly::one(nvars), pair_denominator(vars, i));
    return acc;
}

RationalFunction lagrange_q_on(int nvars, std::span<const int> vars, int k) {
    check_vars(nvars, vars, 2);
    if (k < 0) throw std::invalid_argument("power must be nonnegative");
    RationalFunction acc = RationalFunction::zero(nvars);
    for (int i : vars) {
        acc += RationalFunction(Gf2Poly::variable(nvars, i).pow(static_cast<unsigned>(k)),
                                pair_denominator(vars, i));
    }
    return acc;
}

RationalFunction lagrange_p(int n) {
    const auto vars = iota_vars(n);
    return lagrange_p_on(n, vars);
}

RationalFunction lagrange_q(int n, int k) {
    const auto vars = iota_vars(n);
    return lagrange_q_on(n, vars, k);
}

RationalFunction lagrange_ii(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    const auto vars = iota_vars(n);
    FactoredDenominator singles;
    for (int i : vars) singles.push(mask_from_elements({i}));
    RationalFunction acc(Gf2Poly::one(n), singles);
    for (int i : vars) {
        FactoredDenominator d = pair_denominator(vars, i);
        d.push(mask_from_elements({i}));
        acc += RationalFunction(Gf2Poly::one(n), d);
    }
    return acc;
}

}  // namespace eqcob
