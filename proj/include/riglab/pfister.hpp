#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riglab/errors.hpp"

namespace riglab::pfister {

/// Element of N ∪ {∞} with saturating arithmetic.
class Bound {
public:
    Bound() = default;
    Bound(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by design
    static Bound infinity() {
        Bound b;
        b.inf_ = true;
        return b;
    }

    bool is_inf() const { return inf_; }
    std::uint64_t value() const {
        if (inf_) throw invalid_instance("bound is infinite");
        return value_;
    }

    Bound operator+(const Bound& o) const {
        if (inf_ || o.inf_) return infinity();
        return Bound(value_ + o.value_);
    }
    friend bool operator==(const Bound& a, const Bound& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }
    /// Order with ∞ as the top element.
    friend bool operator<(const Bound& a, const Bound& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Bound& a, const Bound& b) { return a < b || a == b; }

    bool is_power_of_two() const { return !inf_ && value_ > 0 && (value_ & (value_ - 1)) == 0; }
    std::string to_string() const { return inf_ ? "inf" : std::to_string(value_); }

private:
    std::uint64_t value_ = 0;
    bool inf_ = false;
};

/// Declared arithmetic profile of a field: level s, Pythagoras number p, and
/// any known Pfister indices. Levels and Pythagoras numbers are input facts;
/// validation only rejects impossible combinations (level must be a power of
/// two when finite, s <= p <= s+1 for nonreal fields, real iff s = ∞).
struct FieldProfile {
    Bound level = Bound::infinity();
    Bound pythagoras = Bound::infinity();
    bool real = true;
    std::map<std::uint32_t, Bound> rho;

    void validate() const;
    /// Known index at ell; unknown values propagate as ∞.
    Bound rho_at(std::uint32_t ell) const;
};

/// Upper bound on the ell-th Pfister index of a field complete (or henselian)
/// with the given residue profile:
///   rho_ell(kappa)     if s(kappa) >= 2^(ell+1),
///   1 + rho_ell(kappa) if s(kappa)  = 2^ell,
///   0                  if ell >= 1 and s(kappa) <= 2^(ell-1), or
///                         s(kappa) = ∞ with p(kappa) <= 2^ell.
Bound henselian_rho_bound(const FieldProfile& residue, std::uint32_t ell);

/// Which of the three branches applies; used to test exclusivity.
enum class HenselBranch { carry_over, add_one, vanish };
HenselBranch henselian_branch(const FieldProfile& residue, std::uint32_t ell);

struct SumEntry {
    enum class Class { above_ell, at_ell } cls;  // s(kappa_w) >= 2^(ell+1) vs = 2^ell
    Bound rho_w;
};

/// Sum of the per-place index bounds: rho_w for the "above" class and
/// 1 + rho_w for the "at" class.
Bound localglobal_sum_bound(const std::vector<SumEntry>& entries);

/// Base data for the closed-form index bounds: rank of the henselian
/// valuation on the base field, genus of the function field, reality flag.
struct CurveDescriptor {
    std::uint64_t rank = 0;   // n
    std::uint64_t genus = 0;  // g
    bool real = false;
};

/// One level of the rank recursion: at rank r the bound is assembled from
/// `places` residually transcendental places of residue level 2^ell, each
/// contributing 1 + (residual bound at rank r-1 for a genus-zero nonreal
/// residue function field).
struct RhoTraceStep {
    std::uint64_t rank = 0;
    std::uint64_t places = 0;
    std::uint64_t per_place = 0;
    std::uint64_t subtotal = 0;
};

struct RhoBoundResult {
    std::uint64_t value = 0;
    std::vector<RhoTraceStep> trace;  // ranks n down to 1
};

/// n*(g+1) for nonreal instances, n*g for real ones, with the audit trace.
/// Assumes the residue-field hypothesis p(E) <= 2^ell for function fields
/// E over the rank-zero base.
RhoBoundResult rho_upper_bound(const CurveDescriptor& c, std::uint32_t ell);

/// Recheck every trace step against the recursion and the closed form.
bool audit_trace(const CurveDescriptor& c, const RhoBoundResult& r);

/// 2^exponent, with the numeric value materialized only when it fits.
struct PowerOfTwo {
    std::uint64_t exponent = 0;
    std::optional<std::uint64_t> value;
    std::string to_string() const;
};

/// Bound on the totally positive sum-of-two-squares index: 2^(n*(g+1)),
/// resp. 2^(n*g) for real function fields.
PowerOfTwo index_bound(const CurveDescriptor& c);

/// Tree of valuations witnessing optimality: nodes carry the rank of the
/// valuation and the level of its residue field; children have strictly
/// larger rank than their parent.
struct WitnessNode {
    std::string label;
    std::uint32_t rank = 0;
    int residue_level = -1;  // -1: not applicable (the root function field)
    std::vector<WitnessNode> children;
};

struct WitnessTree {
    WitnessNode root;
    std::uint64_t valuation_count() const;
};

struct WitnessCount {
    std::uint64_t count = 0;
    WitnessTree tree;
};

/// Witness family for the real curve Y^2 = (X-1) * prod_{i=1..g} (X^2 + t_n^{2i}):
/// g rank-1 Gauss extensions with residue level 2, each continued by a chain
/// of composite valuations of ranks 2..n; composition preserves the residue
/// field, so every node keeps level 2. Total count g*n, which matches
/// rho_upper_bound for real instances at ell = 1.
WitnessCount optimal_witness_count(std::uint64_t genus, std::uint64_t rank);

/// n*(g+1), the witness count for Y^2 = -prod_{i=0..g} (X^2 + t_n^{2i});
/// matches rho_upper_bound for nonreal instances at ell = 1.
std::uint64_t nonreal_witness_count(std::uint64_t genus, std::uint64_t rank);

/// Value in the lexicographically ordered group Z^rank.
struct LexValue {
    std::vector<long long> parts;
    std::size_t rank() const { return parts.size(); }
    friend bool operator==(const LexValue&, const LexValue&) = default;
};

bool lex_less(const LexValue& a, const LexValue& b);

/// Composite of a rank-1 value with a residual value: concatenation
/// (v(x), w(x * pi^{-v(x)} residue)).
LexValue compose_valuation(const LexValue& outer, const LexValue& inner);

/// Projection onto the lexicographically dominant component, recovering the
/// outer value of a composite.
LexValue dominant_coarsening(const LexValue& v);

} // namespace riglab::pfister
