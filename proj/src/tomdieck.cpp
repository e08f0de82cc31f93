#include "eqcob/tomdieck.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqcob {

BMultiIndex BMultiIndex::single(unsigned k) {
    if (k < 1) throw std::invalid_argument("b-index must be >= 1");
    BMultiIndex b;
    b.mults_[k] = 1;
    return b;
}

BMultiIndex BMultiIndex::split(unsigned k) {
    if (k < 2) throw std::invalid_argument("split index must be >= 2");
    BMultiIndex b;
    b.mults_[k - 1] += 1;
    b.mults_[1] += 1;
    return b;
}

BMultiIndex BMultiIndex::from_parts(const std::vector<unsigned>& parts) {
    BMultiIndex b;
    for (unsigned p : parts) {
        if (p < 1) throw std::invalid_argument("b-index must be >= 1");
        b.mults_[p] += 1;
    }
    return b;
}

unsigned BMultiIndex::weight() const {
    unsigned w = 0;
    for (const auto& [r, m] : mults_) w += r * m;
    return w;
}

unsigned BMultiIndex::size() const {
    unsigned s = 0;
    for (const auto& [r, m] : mults_) s += m;
    return s;
}

std::vector<unsigned> BMultiIndex::parts_descending() const {
    std::vector<unsigned> out;
    for (auto it = mults_.rbegin(); it != mults_.rend(); ++it)
        for (unsigned t = 0; t < it->second; ++t) out.push_back(it->first);
    return out;
}

bool BMultiIndex::operator<(const BMultiIndex& other) const {
    if (weight() != other.weight()) return weight() < other.weight();
    const auto a = parts_descending();
    const auto b = other.parts_descending();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        std::greater<unsigned>{});
}

std::string BMultiIndex::str() const {
    if (mults_.empty()) return "1";
    std::string s;
    for (auto it = mults_.rbegin(); it != mults_.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += "b" + std::to_string(it->first);
        if (it->second > 1) s += "^" + std::to_string(it->second);
    }
    return s;
}

namespace {

// Enumerates distinct assignments of B's parts to slot positions: one
// position subset per distinct part value, values in fixed order, so every
// assignment appears exactly once and parity cancellation is left entirely
// to the polynomial XOR.
class PlacementSum {
public:
    PlacementSum(int nvars, const std::vector<std::uint32_t>& slots,
                 const std::vector<std::pair<unsigned, unsigned>>& groups)
        : nvars_(nvars), slots_(slots), groups_(groups),
          assigned_(slots.size(), 0u), total_(Gf2Poly::zero(nvars)) {}

    Gf2Poly run() {
        recurse(0);
        return total_;
    }

private:
    void recurse(std::size_t group_idx) {
        if (group_idx == groups_.size()) {
            Gf2Poly term = Gf2Poly::one(nvars_);
            for (std::size_t t = 0; t < slots_.size(); ++t)
                if (assigned_[t] > 0) term = term * sigma_power(slots_[t], assigned_[t]);
            total_ += term;
            return;
        }
        const auto [value, count] = groups_[group_idx];
        std::vector<std::size_t> free_positions;
        for (std::size_t t = 0; t < slots_.size(); ++t)
            if (assigned_[t] == 0) free_positions.push_back(t);
        if (free_positions.size() < count) return;
        std::vector<std::size_t> pick(count);
        choose(free_positions, pick, 0, 0, value, group_idx);
    }

    void choose(const std::vector<std::size_t>& pool, std::vector<std::size_t>& pick,
                std::size_t depth, std::size_t start, unsigned value, std::size_t group_idx) {
        if (depth == pick.size()) {
            for (auto p : pick) assigned_[p] = value;
            recurse(group_idx + 1);
            for (auto p : pick) assigned_[p] = 0;
            return;
        }
        for (std::size_t t = start; t + (pick.size() - depth) <= pool.size(); ++t) {
            pick[depth] = pool[t];
            choose(pool, pick, depth + 1, t + 1, value, group_idx);
        }
    }

    const Gf2Poly& sigma_power(std::uint32_t support, unsigned power) {
        const auto key = std::make_pair(support, power);
        auto it = power_cache_.find(key);
        if (it == power_cache_.end())
            it = power_cache_.emplace(key, linear_form_poly(nvars_, support).pow(power)).first;
        return it->second;
    }

    int nvars_;
    const std::vector<std::uint32_t>& slots_;
    const std::vector<std::pair<unsigned, unsigned>>& groups_;
    std::vector<unsigned> assigned_;
    Gf2Poly total_;
    std::map<std::pair<std::uint32_t, unsigned>, Gf2Poly> power_cache_;
};

}  // namespace

RationalFunction b_coefficient(const RepElement& e, const BMultiIndex& B) {
    const int nv = e.rank();
    if (e.is_zero()) return RationalFunction::zero(nv);
    if (!e.is_homogeneous())
        throw std::invalid_argument("coefficient extraction needs a homogeneous element");
    const unsigned d = e.degree();
    if (B.size() > d)
        throw std::invalid_argument("b-monomial has more factors (" + std::to_string(B.size()) +
                                    ") than the element degree " + std::to_string(d));

    std::vector<std::pair<unsigned, unsigned>> groups(B.multiplicities().begin(),
                                                      B.multiplicities().end());

    RationalFunction acc = RationalFunction::zero(nv);
    for (const RepMonomial& mono : e.monomials()) {
        const std::vector<std::uint32_t> slots = mono.expanded_supports();
        Gf2Poly num = PlacementSum(nv, slots, groups).run();
        acc += RationalFunction(std::move(num), FactoredDenominator::from_supports(slots));
    }
    return acc;
}

bool IntegralityReport::all_pass() const {
    for (const auto& entry : entries)
        if (!entry.pass) return false;
    return true;
}

IntegralityReport check_integrality(const RepElement& e, int d, unsigned max_weight) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != static_cast<unsigned>(d)))
        throw std::invalid_argument("element is not homogeneous of the stated degree");

    IntegralityReport report;
    report.degree = d;
    report.max_weight = max_weight;
    for (const BMultiIndex& B : enumerate_b_indices(max_weight, static_cast<unsigned>(d))) {
        const RationalFunction c = b_coefficient(e, B);
        IntegralityEntry entry{B, B.weight() < static_cast<unsigned>(d), false};
        entry.pass = entry.requires_zero ? c.is_zero() : c.to_polynomial().has_value();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, unsigned max_count,
                    std::vector<unsigned>& current, std::vector<BMultiIndex>& out) {
    if (remaining == 0) {
        out.push_back(BMultiIndex::from_parts(current));
        return;
    }
    if (max_count == 0) return;
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, max_count - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<BMultiIndex> enumerate_b_indices(unsigned max_weight, unsigned max_size) {
    std::vector<BMultiIndex> out;
    std::vector<unsigned> current;
    for (unsigned w = 0; w <= max_weight; ++w)
        partitions_rec(w, w, max_size, current, out);
    return out;
}

}  // namespace eqcob
