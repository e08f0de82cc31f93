#include "eqcob/gf2poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eqcob {

namespace {

void check_nvars(int nvars) {
    if (nvars < 1 || nvars > kMaxRank)
        throw std::invalid_argument("variable count must be in [1, 32], got " +
                                    std::to_string(nvars));
}

void check_same_context(int a, int b) {
    if (a != b)
        throw std::invalid_argument("mixed variable contexts: " + std::to_string(a) +
                                    " vs " + std::to_string(b));
}

unsigned checked_exponent(unsigned long long e) {
    if (e > kMaxExponent)
        throw std::overflow_error("exponent " + std::to_string(e) + " exceeds cap " +
                                  std::to_string(kMaxExponent));
    return static_cast<unsigned>(e);
}

// XOR-merge of two sorted monomial vectors: keep entries seen an odd number
// of times.
std::vector<Monomial> merge_cancel(const std::vector<Monomial>& a,
                                   const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const auto cmp = a[i] <=> b[j];
        if (cmp == std::strong_ordering::less) {
            out.push_back(a[i++]);
        } else if (cmp == std::strong_ordering::greater) {
            out.push_back(b[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

void sort_cancel(std::vector<Monomial>& ms) {
    std::sort(ms.begin(), ms.end());
    std::vector<Monomial> out;
    out.reserve(ms.size());
    std::size_t i = 0;
    while (i < ms.size()) {
        std::size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(ms[i]);
        i = j;
    }
    ms = std::move(out);
}

}  // namespace

Monomial::Monomial(int nvars) {
    check_nvars(nvars);
    exps_.assign(static_cast<std::size_t>(nvars), 0);
}

Monomial::Monomial(int nvars, std::vector<unsigned> exponents) {
    check_nvars(nvars);
    if (exponents.size() != static_cast<std::size_t>(nvars))
        throw std::invalid_argument("exponent vector length does not match variable count");
    exps_.reserve(exponents.size());
    for (unsigned e : exponents) exps_.push_back(static_cast<std::uint16_t>(checked_exponent(e)));
}

Monomial Monomial::variable(int nvars, int index) {
    Monomial m(nvars);
    if (index < 1 || index > nvars)
        throw std::invalid_argument("variable index out of range: " + std::to_string(index));
    m.exps_[static_cast<std::size_t>(index - 1)] = 1;
    return m;
}

unsigned Monomial::exponent(int index) const {
    if (index < 1 || index > nvars())
        throw std::invalid_argument("variable index out of range: " + std::to_string(index));
    return exps_[static_cast<std::size_t>(index - 1)];
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    check_same_context(nvars(), other.nvars());
    Monomial out(nvars());
    for (std::size_t t = 0; t < exps_.size(); ++t) {
        out.exps_[t] = static_cast<std::uint16_t>(
            checked_exponent(static_cast<unsigned long long>(exps_[t]) + other.exps_[t]));
    }
    return out;
}

Monomial Monomial::squared() const {
    Monomial out(nvars());
    for (std::size_t t = 0; t < exps_.size(); ++t)
        out.exps_[t] = static_cast<std::uint16_t>(
            checked_exponent(2ull * exps_[t]));
    return out;
}

Monomial Monomial::with_exponent(int index, unsigned value) const {
    if (index < 1 || index > nvars())
        throw std::invalid_argument("variable index out of range: " + std::to_string(index));
    Monomial out = *this;
    out.exps_[static_cast<std::size_t>(index - 1)] =
        static_cast<std::uint16_t>(checked_exponent(value));
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(exps_.begin(), exps_.end(),
                                                  other.exps_.begin(), other.exps_.end());
}

std::string Monomial::str() const {
    std::string s;
    for (int i = 1; i <= nvars(); ++i) {
        const unsigned e = exps_[static_cast<std::size_t>(i - 1)];
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += "y" + std::to_string(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

Gf2Poly Gf2Poly::one(int nvars) {
    Gf2Poly p(nvars);
    p.terms_.push_back(Monomial(nvars));
    return p;
}

Gf2Poly Gf2Poly::variable(int nvars, int index) {
    Gf2Poly p(nvars);
    p.terms_.push_back(Monomial::variable(nvars, index));
    return p;
}

Gf2Poly Gf2Poly::from_monomials(int nvars, std::vector<Monomial> monomials) {
    Gf2Poly p(nvars);
    for (const auto& m : monomials) check_same_context(nvars, m.nvars());
    sort_cancel(monomials);
    p.terms_ = std::move(monomials);
    return p;
}

bool Gf2Poly::is_one() const {
    return terms_.size() == 1 && terms_.front().total_degree() == 0;
}

unsigned Gf2Poly::degree() const {
    return terms_.empty() ? 0u : terms_.back().total_degree();
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
    check_same_context(nvars_, other.nvars_);
    terms_ = merge_cancel(terms_, other.terms_);
    return *this;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& other) const {
    check_same_context(nvars_, other.nvars_);
    Gf2Poly out(nvars_);
    if (is_zero() || other.is_zero()) return out;
    std::vector<Monomial> prods;
    prods.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) prods.push_back(a.times(b));
    sort_cancel(prods);
    out.terms_ = std::move(prods);
    return out;
}

Gf2Poly Gf2Poly::squared() const {
    Gf2Poly out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& m : terms_) out.terms_.push_back(m.squared());
    // squaring preserves graded-lex order, no re-sort needed
    return out;
}

Gf2Poly Gf2Poly::pow(unsigned k) const {
    Gf2Poly result = one(nvars_);
    Gf2Poly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base.squared();
    }
    return result;
}

std::string Gf2Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += "+";
        s += it->str();
    }
    return s;
}

LinearForm::LinearForm(int nvars, std::uint32_t support) : nvars_(nvars), support_(support) {
    check_nvars(nvars);
    if (support == 0) throw std::invalid_argument("linear form needs a nonempty support");
    if (nvars < kMaxRank && (support >> nvars) != 0)
        throw std::invalid_argument("linear form support exceeds variable count");
}

LinearForm LinearForm::from_elements(int nvars, const std::vector<int>& elems) {
    return LinearForm(nvars, mask_from_elements(elems));
}

int LinearForm::pivot() const { return std::countr_zero(support_) + 1; }

Gf2Poly LinearForm::to_poly() const { return linear_form_poly(nvars_, support_); }

Gf2Poly LinearForm::rest_poly() const {
    const std::uint32_t rest = support_ & (support_ - 1);  // clear lowest bit
    Gf2Poly p(nvars_);
    if (rest == 0) return p;
    return linear_form_poly(nvars_, rest);
}

std::string LinearForm::str() const {
    std::string s;
    for (int e : elements_of(support_)) {
        if (!s.empty()) s += "+";
        s += "y" + std::to_string(e);
    }
    return s;
}

Gf2Poly linear_form_poly(int nvars, std::uint32_t support) {
    if (support == 0) throw std::invalid_argument("linear form needs a nonempty support");
    std::vector<Monomial> ms;
    for (int e : elements_of(support)) {
        if (e > nvars) throw std::invalid_argument("linear form support exceeds variable count");
        ms.push_back(Monomial::variable(nvars, e));
    }
    return Gf2Poly::from_monomials(nvars, std::move(ms));
}

std::optional<Gf2Poly> divide_by_linear_form(const Gf2Poly& p, const LinearForm& f) {
    check_same_context(p.nvars(), f.nvars());
    const int nv = p.nvars();
    if (p.is_zero()) return Gf2Poly::zero(nv);

    const int v = f.pivot();
    const Gf2Poly g = f.rest_poly();

    // Split p by powers of the pivot: p = sum_k c_k * y_v^k with c_k free of y_v.
    std::map<unsigned, std::vector<Monomial>> by_power;
    for (const auto& m : p.terms())
        by_power[m.exponent(v)].push_back(m.with_exponent(v, 0));

    const unsigned top = by_power.rbegin()->first;
    if (top == 0) return std::nullopt;  // no pivot anywhere, nonzero residue

    auto coeff = [&](unsigned k) {
        auto it = by_power.find(k);
        if (it == by_power.end()) return Gf2Poly::zero(nv);
        return Gf2Poly::from_monomials(nv, it->second);
    };

    // Synthetic division by y_v + g: q_{top-1} = c_top, q_{k-1} = c_k + q_k*g,
    // remainder c_0 + q_0*g. Remainder equals p with y_v := g substituted.
    std::vector<Gf2Poly> quot(top, Gf2Poly::zero(nv));
    Gf2Poly running = coeff(top);
    quot[top - 1] = running;
    for (unsigned k = top - 1; k >= 1; --k) {
        running = coeff(k) + running * g;
        quot[k - 1] = running;
    }
    const Gf2Poly remainder = coeff(0) + running * g;
    if (!remainder.is_zero()) return std::nullopt;

    std::vector<Monomial> out;
    for (unsigned k = 0; k < top; ++k)
        for (const auto& m : quot[k].terms()) out.push_back(m.with_exponent(v, k));
    return Gf2Poly::from_monomials(nv, std::move(out));
}

}  // namespace eqcob
