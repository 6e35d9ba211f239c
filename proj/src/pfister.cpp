#include "riglab/pfister.hpp"

namespace riglab::pfister {

void FieldProfile::validate() const {
    if (real != level.is_inf())
        throw invalid_instance("field profile: real iff level is infinite");
    if (!level.is_inf() && !level.is_power_of_two())
        throw invalid_instance("field profile: finite level must be a power of two");
    if (!real) {
        if (!(level <= pythagoras && pythagoras <= level + Bound(1)))
            throw invalid_instance("field profile: need s <= p <= s+1 for a nonreal field");
    }
    if (pythagoras == Bound(0))
        throw invalid_instance("field profile: pythagoras number must be positive");
    // stationarity: beyond the pythagoras number every index vanishes
    for (const auto& [ell, r] : rho) {
        if (!pythagoras.is_inf() && ell >= 1) {
            std::uint64_t two_ell = (ell < 63) ? (std::uint64_t{1} << ell) : UINT64_MAX;
            if (pythagoras <= Bound(two_ell) && !(r == Bound(0)))
                throw invalid_instance("field profile: rho_" + std::to_string(ell) +
                                       " must vanish once 2^ell >= p");
        }
    }
}

Bound FieldProfile::rho_at(std::uint32_t ell) const {
    auto it = rho.find(ell);
    return it == rho.end() ? Bound::infinity() : it->second;
}

HenselBranch henselian_branch(const FieldProfile& residue, std::uint32_t ell) {
    residue.validate();
    if (ell > 62) throw cap_exceeded("ell too large for exact level arithmetic");
    const Bound s = residue.level;
    const Bound p = residue.pythagoras;
    if (ell >= 1) {
        const Bound half = Bound(std::uint64_t{1} << (ell - 1));
        if (s <= half) return HenselBranch::vanish;
        if (s.is_inf() && p <= Bound(std::uint64_t{1} << ell)) return HenselBranch::vanish;
    }
    if (ell < 63 && s == Bound(std::uint64_t{1} << ell)) return HenselBranch::add_one;
    // remaining case: s >= 2^(ell+1), including infinite level
    return HenselBranch::carry_over;
}

Bound henselian_rho_bound(const FieldProfile& residue, std::uint32_t ell) {
    switch (henselian_branch(residue, ell)) {
        case HenselBranch::vanish: return Bound(0);
        case HenselBranch::add_one: return Bound(1) + residue.rho_at(ell);
        case HenselBranch::carry_over: return residue.rho_at(ell);
    }
    return Bound::infinity();
}

Bound localglobal_sum_bound(const std::vector<SumEntry>& entries) {
    Bound total(0);
    for (const auto& e : entries) {
        total = total + e.rho_w;
        if (e.cls == SumEntry::Class::at_ell) total = total + Bound(1);
    }
    return total;
}

RhoBoundResult rho_upper_bound(const CurveDescriptor& c, std::uint32_t ell) {
    if (ell < 1) throw invalid_instance("rho_upper_bound requires ell >= 1");
    RhoBoundResult out;
    const std::uint64_t budget = c.real ? c.genus : c.genus + 1;
    if (c.rank != 0 && budget > UINT64_MAX / c.rank)
        throw invalid_instance("rho bound overflows");
    for (std::uint64_t r = c.rank; r >= 1; --r) {
        RhoTraceStep step;
        step.rank = r;
        step.places = budget;
        step.per_place = r;  // 1 + (r-1)*(0+1): residue data has genus 0, nonreal
        step.subtotal = budget * r;
        out.trace.push_back(step);
    }
    out.value = c.rank * budget;
    return out;
}

bool audit_trace(const CurveDescriptor& c, const RhoBoundResult& r) {
    const std::uint64_t budget = c.real ? c.genus : c.genus + 1;
    if (r.trace.size() != c.rank) return false;
    for (std::uint64_t i = 0; i < c.rank; ++i) {
        const RhoTraceStep& step = r.trace[i];
        if (step.rank != c.rank - i) return false;
        // the genus budget admits at most `budget` places of residue level
        // 2^ell, each a genus-zero nonreal residue function field
        if (step.places != budget) return false;
        // legality of the per-place bound: 1 (at-level place) plus the
        // residual closed form at one rank lower
        CurveDescriptor residual{step.rank - 1, 0, false};
        const std::uint64_t residual_bound = residual.rank * (residual.genus + 1);
        if (step.per_place != 1 + residual_bound) return false;
        std::vector<SumEntry> entries(step.places,
                                      SumEntry{SumEntry::Class::at_ell, Bound(residual_bound)});
        if (!(localglobal_sum_bound(entries) == Bound(step.subtotal))) return false;
    }
    const std::uint64_t closed = c.rank * budget;
    if (r.value != closed) return false;
    if (!r.trace.empty() && r.trace.front().subtotal != closed) return false;
    return true;
}

std::string PowerOfTwo::to_string() const {
    std::string s = "2^" + std::to_string(exponent);
    if (value) s += " = " + std::to_string(*value);
    return s;
}

PowerOfTwo index_bound(const CurveDescriptor& c) {
    PowerOfTwo out;
    out.exponent = rho_upper_bound(c, 1).value;
    if (out.exponent < 63) out.value = std::uint64_t{1} << out.exponent;
    return out;
}

std::uint64_t WitnessTree::valuation_count() const {
    std::uint64_t n = 0;
    std::vector<const WitnessNode*> stack{&root};
    while (!stack.empty()) {
        const WitnessNode* cur = stack.back();
        stack.pop_back();
        if (cur->rank > 0) ++n;
        for (const auto& ch : cur->children) stack.push_back(&ch);
    }
    return n;
}

WitnessCount optimal_witness_count(std::uint64_t genus, std::uint64_t rank) {
    WitnessCount out;
    out.tree.root = WitnessNode{"F", 0, -1, {}};
    for (std::uint64_t j = 1; j <= genus && rank >= 1; ++j) {
        WitnessNode gauss{"w" + std::to_string(j), 1, 2, {}};
        WitnessNode* tip = &gauss;
        for (std::uint32_t d = 2; d <= rank; ++d) {
            tip->children.push_back(
                WitnessNode{"w" + std::to_string(j) + ".d" + std::to_string(d), d, 2, {}});
            tip = &tip->children.back();
        }
        out.tree.root.children.push_back(std::move(gauss));
    }
    out.count = out.tree.valuation_count();
    const std::uint64_t expected = rho_upper_bound(CurveDescriptor{rank, genus, true}, 1).value;
    if (out.count != expected)
        throw cross_check_error("witness count " + std::to_string(out.count) +
                                " does not match the closed-form bound " + std::to_string(expected));
    return out;
}

std::uint64_t nonreal_witness_count(std::uint64_t genus, std::uint64_t rank) {
    const std::uint64_t count = rank * (genus + 1);
    const std::uint64_t expected = rho_upper_bound(CurveDescriptor{rank, genus, false}, 1).value;
    if (count != expected)
        throw cross_check_error("nonreal witness count does not match the closed-form bound");
    return count;
}

bool lex_less(const LexValue& a, const LexValue& b) {
    if (a.rank() != b.rank())
        throw invalid_instance("lexicographic comparison of values of different rank");
    return a.parts < b.parts;
}

LexValue compose_valuation(const LexValue& outer, const LexValue& inner) {
    if (outer.rank() != 1)
        throw invalid_instance("composite valuation: outer value must have rank 1");
    LexValue out;
    out.parts.reserve(1 + inner.parts.size());
    out.parts.push_back(outer.parts.front());
    out.parts.insert(out.parts.end(), inner.parts.begin(), inner.parts.end());
    return out;
}

LexValue dominant_coarsening(const LexValue& v) {
    if (v.parts.empty())
        throw invalid_instance("coarsening of a rank-0 value");
    return LexValue{{v.parts.front()}};
}

} // namespace riglab::pfister
