#pragma once

#include <map>
#include <string>
#include <vector>

#include "riglab/ggraph.hpp"
#include "riglab/multigraph.hpp"

namespace riglab {

enum class Verdict {
    holds,           // inequality satisfied strictly
    holds_equality,  // inequality satisfied with equality
    not_applicable,  // hypothesis of the statement not met
    violated,
};

const char* to_string(Verdict v);
inline bool verdict_ok(Verdict v) { return v != Verdict::violated; }

struct CheckOutcome {
    Verdict verdict = Verdict::not_applicable;
    long long lhs = 0;
    long long rhs = 0;
    std::string note;
};

/// Quantities shared by all bound checks on one instance; computed once.
struct SymmetryAnalysis {
    long long betti = 0;
    RigidityOrbits ro;

    long long rigidity_count() const { return static_cast<long long>(ro.rigidities.size()); }
    long long orbit_count() const { return static_cast<long long>(ro.orbits.size()); }
    long long fixed_count() const { return static_cast<long long>(ro.fixed.size()); }
    bool all_fixed() const { return ro.fixed.size() == ro.rigidities.size(); }
};

SymmetryAnalysis analyze_symmetries(const GGraph& gg);

/// Trees carry at most one rigidity.
CheckOutcome check_tree_bound(const SymmetryAnalysis& a);

/// If some rigidity is fixed setwise by the whole group, the number of
/// rigidities is at most betti + 1.
CheckOutcome check_fixed_rigidity_bound(const SymmetryAnalysis& a);

/// Rigidities avoiding the orbit of v number at most betti + |Gv| - 1.
CheckOutcome check_orbit_avoidance_bound(const GGraph& gg, const SymmetryAnalysis& a, int v);
/// Worst case of the above over all vertices.
CheckOutcome check_orbit_avoidance_all(const GGraph& gg, const SymmetryAnalysis& a);

/// With d the minimal orbit size: |rigidities| <= betti + 2d - 1 and
/// d * |orbits| <= betti - 1 + 2d.
CheckOutcome check_rigidity_count_bound(const SymmetryAnalysis& a);

/// |orbits| <= betti + 1; on equality either every rigidity is fixed
/// setwise, or betti = 1 and none is.
CheckOutcome check_orbit_count_bound(const SymmetryAnalysis& a);

inline const std::vector<std::string>& symmetry_check_names() {
    static const std::vector<std::string> names{"tree", "fixpoint", "orbit-avoid", "main", "border"};
    return names;
}

/// All five checks keyed by name.
std::map<std::string, CheckOutcome> run_symmetry_checks(const GGraph& gg, const SymmetryAnalysis& a);

enum class EpiStatus {
    ok,
    vmap_invalid,        // not a total map into the target vertex set
    color_violation,
    not_morphism,        // some source edge has no image edge
    not_surjective,
    missing_edge_lift,   // some target edge has no preimage edge
    purple_degree,       // a purple vertex without degree exactly 2
    src_disconnected,
    hypothesis_violated, // i_x < e_gamma at some incidence
    conclusion_violated,
};

const char* to_string(EpiStatus s);

/// Result of checking betti(dst) <= betti(src) along a color-respecting
/// epimorphism src -> dst whose purple fibers dominate the incident cyan
/// fibers. Precondition failures are reported distinctly from a failure of
/// the conclusion.
struct EpiResult {
    EpiStatus status = EpiStatus::ok;
    Verdict verdict = Verdict::not_applicable;
    long long betti_src = 0;
    long long betti_dst = 0;
    std::map<std::string, long long> e_gamma;   // cyan fiber sizes, by dst id
    std::map<std::string, long long> i_x;       // purple fiber sizes, by dst id
    std::map<std::string, long long> e_x_twice; // e_gamma + e_gamma~ per purple
    std::string detail;
};

EpiResult check_betti_epimorphism(const BipartiteDualGraph& src, const BipartiteDualGraph& dst,
                                  const std::map<std::string, std::string>& vmap);

} // namespace riglab
