#include "eqcob/repring.hpp"

#include <algorithm>

namespace eqcob {

namespace {

void check_rank(int rank) {
    if (rank < 1 || rank > kMaxRank)
        throw std::invalid_argument("rank must be in [1, 32], got " + std::to_string(rank));
}

void check_same_rank(int a, int b) {
    if (a != b)
        throw std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
}

void check_support(int rank, std::uint32_t support) {
    if (support == 0) throw std::invalid_argument("character support must be nonempty");
    if (rank < kMaxRank && (support >> rank) != 0)
        throw std::invalid_argument("character support " + support_str(support) +
                                    " exceeds rank " + std::to_string(rank));
}

void sort_cancel(std::vector<RepMonomial>& ms) {
    std::sort(ms.begin(), ms.end());
    std::vector<RepMonomial> out;
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

Character::Character(int rank, std::uint32_t support) : rank_(rank), support_(support) {
    check_rank(rank);
    check_support(rank, support);
}

Character Character::from_elements(int rank, const std::vector<int>& elems) {
    return Character(rank, mask_from_elements(elems));
}

RepMonomial::RepMonomial(int rank) : rank_(rank) { check_rank(rank); }

RepMonomial RepMonomial::from_supports(int rank, const std::vector<std::uint32_t>& supports) {
    RepMonomial m(rank);
    std::vector<std::uint32_t> sorted = supports;
    for (auto s : sorted) check_support(rank, s);
    std::sort(sorted.begin(), sorted.end(), support_less);
    for (auto s : sorted) {
        if (!m.factors_.empty() && m.factors_.back().first == s)
            ++m.factors_.back().second;
        else
            m.factors_.emplace_back(s, 1u);
    }
    return m;
}

unsigned RepMonomial::degree() const {
    unsigned d = 0;
    for (const auto& [s, mult] : factors_) d += mult;
    return d;
}

std::vector<std::uint32_t> RepMonomial::expanded_supports() const {
    std::vector<std::uint32_t> out;
    out.reserve(degree());
    for (const auto& [s, mult] : factors_)
        for (unsigned t = 0; t < mult; ++t) out.push_back(s);
    return out;
}

RepMonomial RepMonomial::times(const RepMonomial& other) const {
    check_same_rank(rank_, other.rank_);
    RepMonomial out(rank_);
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first == b->first) {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        } else if (support_less(a->first, b->first)) {
            out.factors_.push_back(*a++);
        } else {
            out.factors_.push_back(*b++);
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

bool RepMonomial::operator<(const RepMonomial& other) const {
    if (degree() != other.degree()) return degree() < other.degree();
    const auto a = expanded_supports();
    const auto b = other.expanded_supports();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), support_less);
}

std::string RepMonomial::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [sup, mult] : factors_) {
        s += "Y" + support_str(sup);
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s;
}

RepElement RepElement::one(int rank) {
    RepElement e(rank);
    e.monomials_.push_back(RepMonomial(rank));
    return e;
}

RepElement RepElement::monomial(RepMonomial m) {
    RepElement e(m.rank());
    e.monomials_.push_back(std::move(m));
    return e;
}

RepElement RepElement::character(int rank, std::uint32_t support) {
    return monomial(RepMonomial::from_supports(rank, {support}));
}

RepElement RepElement::from_monomials(int rank, std::vector<RepMonomial> monomials) {
    check_rank(rank);
    RepElement e(rank);
    for (const auto& m : monomials) check_same_rank(rank, m.rank());
    sort_cancel(monomials);
    e.monomials_ = std::move(monomials);
    return e;
}

bool RepElement::is_homogeneous() const {
    if (monomials_.empty()) return true;
    const unsigned d = monomials_.front().degree();
    for (const auto& m : monomials_)
        if (m.degree() != d) return false;
    return true;
}

unsigned RepElement::degree() const {
    if (monomials_.empty()) throw std::logic_error("degree of the zero element");
    const unsigned d = monomials_.front().degree();
    for (const auto& m : monomials_)
        if (m.degree() != d) throw std::logic_error("degree of an inhomogeneous element");
    return d;
}

RepElement& RepElement::operator+=(const RepElement& other) {
    check_same_rank(rank_, other.rank_);
    std::vector<RepMonomial> merged;
    merged.reserve(monomials_.size() + other.monomials_.size());
    auto a = monomials_.begin();
    auto b = other.monomials_.begin();
    while (a != monomials_.end() && b != other.monomials_.end()) {
        if (*a == *b) {
            ++a;
            ++b;
        } else if (*a < *b) {
            merged.push_back(*a++);
        } else {
            merged.push_back(*b++);
        }
    }
    merged.insert(merged.end(), a, monomials_.end());
    merged.insert(merged.end(), b, other.monomials_.end());
    monomials_ = std::move(merged);
    return *this;
}

RepElement RepElement::operator*(const RepElement& other) const {
    check_same_rank(rank_, other.rank_);
    std::vector<RepMonomial> prods;
    prods.reserve(monomials_.size() * other.monomials_.size());
    for (const auto& a : monomials_)
        for (const auto& b : other.monomials_) prods.push_back(a.times(b));
    sort_cancel(prods);
    RepElement out(rank_);
    out.monomials_ = std::move(prods);
    return out;
}

std::string RepElement::str() const {
    if (monomials_.empty()) return "0";
    std::string s;
    for (const auto& m : monomials_) {
        if (!s.empty()) s += " + ";
        s += m.str();
    }
    return s;
}

GroupHom::GroupHom(int domain_rank, std::vector<std::uint32_t> images)
    : domain_rank_(domain_rank), images_(std::move(images)) {
    check_rank(domain_rank);
    if (images_.empty()) throw std::invalid_argument("homomorphism needs at least one image");
    if (images_.size() > static_cast<std::size_t>(kMaxRank))
        throw std::invalid_argument("codomain rank exceeds 32");
    for (auto s : images_)
        if (domain_rank < kMaxRank && (s >> domain_rank) != 0)
            throw std::invalid_argument("image subset " + support_str(s) +
                                        " exceeds domain rank");
}

GroupHom GroupHom::identity(int n) {
    check_rank(n);
    std::vector<std::uint32_t> images;
    for (int i = 1; i <= n; ++i) images.push_back(std::uint32_t{1} << (i - 1));
    return GroupHom(n, std::move(images));
}

std::string GroupHom::str() const {
    std::string s;
    for (auto m : images_) {
        if (!s.empty()) s += ";";
        s += support_str(m);
    }
    return s;
}

RepMonomial pullback(const RepMonomial& m, const GroupHom& h) {
    check_same_rank(m.rank(), h.codomain_rank());
    std::vector<std::uint32_t> supports;
    supports.reserve(m.degree());
    for (const auto& [sup, mult] : m.factors()) {
        std::uint32_t image = 0;
        for (int t = 1; t <= m.rank(); ++t)
            if (sup & (std::uint32_t{1} << (t - 1))) image ^= h.images()[static_cast<std::size_t>(t - 1)];
        if (image == 0)
            throw EmptyCharacterError("pullback of Y" + support_str(sup) +
                                      " has empty support");
        for (unsigned t = 0; t < mult; ++t) supports.push_back(image);
    }
    return RepMonomial::from_supports(h.domain_rank(), supports);
}

RepElement pullback(const RepElement& e, const GroupHom& h) {
    check_same_rank(e.rank(), h.codomain_rank());
    std::vector<RepMonomial> out;
    out.reserve(e.monomial_count());
    for (const auto& m : e.monomials()) out.push_back(pullback(m, h));
    return RepElement::from_monomials(h.domain_rank(), std::move(out));
}

}  // namespace eqcob
