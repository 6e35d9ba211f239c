#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "riglab/ggraph.hpp"
#include "riglab/multigraph.hpp"
#include "riglab/perm.hpp"
#include "riglab/theorems.hpp"

namespace riglab {

/// Subgroup of the chosen finite Galois quotient, with the flag of a
/// going-up field property ("nonreal") for its fixed field. Smaller
/// subgroups correspond to larger fields, so the flag must be closed under
/// passing to smaller subgroups.
struct GaloisSubgroup {
    int id = 0;
    SubgroupElems elems;
    bool nonreal = false;
};

/// Finite quotient of the absolute Galois group of the residue field,
/// together with its complete subgroup list. Field extensions of the base
/// are modeled as subgroups; the degree of an extension is the subgroup
/// index.
class GaloisModel {
public:
    GaloisModel(PermGroup group, std::vector<GaloisSubgroup> subgroups);

    const PermGroup& group() const { return group_; }
    const ElementTable& table() const { return *table_; }
    std::size_t group_order() const { return group_.order(); }

    int subgroup_count() const { return static_cast<int>(subs_.size()); }
    int pos_of_id(int id) const;
    const GaloisSubgroup& at(int pos) const { return subs_.at(static_cast<std::size_t>(pos)); }
    int find_pos(const SubgroupElems& elems) const;

    long long index_of(int pos) const {
        return static_cast<long long>(group_order() / at(pos).elems.size());
    }
    bool is_subset(int a, int b) const;  // subgroup a contained in subgroup b
    int conjugate_pos(int pos, std::uint16_t g) const;
    /// Conjugacy class id of a subgroup position.
    int conjugacy_class(int pos) const { return conj_class_.at(static_cast<std::size_t>(pos)); }

    int trivial_pos() const { return trivial_pos_; }
    int full_pos() const { return full_pos_; }
    /// The base field is real iff the whole group is not flagged nonreal.
    bool ground_field_real() const { return !at(full_pos_).nonreal; }

private:
    PermGroup group_;
    std::shared_ptr<ElementTable> table_;
    std::vector<GaloisSubgroup> subs_;  // sorted by (order, elements)
    std::map<int, int> id_to_pos_;
    std::vector<int> conj_class_;
    int trivial_pos_ = 0;
    int full_pos_ = 0;
};

/// Irreducible component of the special fiber: the subgroup of its field of
/// global functions, its residual genus, and the set of subgroups whose
/// fixed fields are known to carry a point of the component.
struct RComponent {
    std::string id;
    int stab = 0;  // subgroup position
    long long genus = 0;
    std::vector<int> point_fields;  // subgroup positions, sorted
};

/// Intersection point of two distinct components with its residue field.
struct RIntersection {
    std::string id;
    int a = 0;  // component indices
    int b = 0;
    int residue = 0;  // subgroup position
};

struct Declared {
    std::optional<long long> g_F;
    bool real_F = false;
    bool henselian = false;
};

struct CopyOrigin {
    std::string source_id;
    bool cyan = true;
    int coset_index = 0;
    SubgroupElems coset;
};

/// Base change of a reduction graph along the full Galois quotient: every
/// component or intersection splits into one copy per coset of its subgroup
/// label, and the group acts by left translation.
struct BaseChange {
    GGraph ggraph;
    std::vector<CopyOrigin> origin;        // by vertex index of ggraph.graph()
    std::vector<Permutation> raw_action;   // per Galois element, before dedup
    std::vector<int> cyan_vertices;
    std::vector<int> purple_vertices;
};

/// Labeled dual reduction graph of a normal-crossing special fiber. Valid
/// instances keep residues inside both endpoint stabilizers, point-field
/// sets downward closed and containing the incident residues, the underlying
/// bipartite graph connected, and the base change connected.
class ReductionGraph {
public:
    ReductionGraph(GaloisModel galois, std::vector<RComponent> components,
                   std::vector<RIntersection> intersections, Declared declared);

    const GaloisModel& galois() const { return galois_; }
    const std::vector<RComponent>& components() const { return comps_; }
    const std::vector<RIntersection>& intersections() const { return ints_; }
    const Declared& declared() const { return declared_; }
    const BipartiteDualGraph& underlying() const { return underlying_; }
    int component_index(const std::string& id) const;

    const BaseChange& base_change() const { return *base_change_; }

private:
    GaloisModel galois_;
    std::vector<RComponent> comps_;
    std::vector<RIntersection> ints_;
    Declared declared_;
    BipartiteDualGraph underlying_;
    std::shared_ptr<const BaseChange> base_change_;
};

/// Components intersecting some other component in a point rational for
/// them: an incident residue equal to the component's own stabilizer.
std::vector<std::string> omega_rat_int(const ReductionGraph& rg);

enum class FieldProperty { always_true, nonreal };

/// Components all of whose known point fields satisfy the property.
std::vector<std::string> omega_with_property(const ReductionGraph& rg, FieldProperty prop);

struct CountCrossCheck {
    long long value = 0;
    long long from_labels = 0;
    long long from_orbits = 0;
    bool ok = false;
};

/// |components| - |omega_rat_int| computed from labels, cross-checked
/// against the number of orbits of singular cyan rigidities of the base
/// change.
CountCrossCheck singular_rigidity_orbit_count(const ReductionGraph& rg);

/// Connected set of components sharing one stabilizer label that stays
/// connected through its label-rational intersection points and is closed
/// under label-rational contact.
struct SubcurveCandidate {
    std::vector<std::string> components;  // sorted ids
    int label = 0;                        // subgroup position
    bool singular = false;                // single component
};

struct SubcurveResult {
    std::vector<SubcurveCandidate> candidates;
    long long orbit_count = 0;           // all rigidity orbits of the base change
    long long singular_orbit_count = 0;  // orbits of singular cyan rigidities
    bool ok = false;                     // candidates match the orbit counts
};

SubcurveResult rigidity_subcurves(const ReductionGraph& rg, bool accept_conjugate_labels = false);

struct NonratVerdict {
    Verdict verdict = Verdict::not_applicable;
    long long lhs = 0;  // |omega_P \ omega_rat_int|
    long long rhs = 0;  // betti(base change) + 1
    bool hyp_self_point = false;       // some counted component has a point over its own field
    bool hyp_minimal_meeting = false;  // two rational-intersecting components meet in a
                                       // point whose residue label is minimal without the property
    std::string note;
};

/// |omega_P \ omega_rat_int| <= betti(base change) + 1, with strictness
/// under the minimal-meeting hypothesis.
NonratVerdict check_nonrat_bound(const ReductionGraph& rg,
                                 FieldProperty prop = FieldProperty::nonreal);

struct MonotoneResult {
    EpiResult epi;
    bool fibers_match = false;  // cyan fibers equal [G:stab], purple fibers [G:residue]
    Verdict verdict = Verdict::not_applicable;
};

/// betti(underlying) <= betti(base change), established through the
/// epimorphism checker along the canonical projection.
MonotoneResult betti_monotone_check(const ReductionGraph& rg);

struct BudgetPart {
    std::string name;
    bool applicable = false;
    bool ok = true;
    long long lhs = 0;
    long long rhs = 0;
};

struct BudgetVerdict {
    Verdict verdict = Verdict::not_applicable;  // holds = consistent with the declared genus
    std::vector<BudgetPart> parts;
    std::string note;
};

/// Consistency of the labeled instance with a declared generic-fiber genus:
/// (a) betti' + sum of index-weighted genera <= g_F;
/// (b) |omega \ omega_rat_int| + the same sum <= g_F + 1;
/// (c) for real instances, the nonreal-property variant of (b), its strict
///     form when the minimal-meeting hypothesis is detected, and on a
///     henselian base the existence of a real-labeled point field.
BudgetVerdict genus_budget_check(const ReductionGraph& rg, long long g_F, bool real_F);

struct LocalSquareBound {
    long long beta_prime = 0;  // log2 of the local-square index bound
    std::optional<CheckOutcome> budget;  // betti' + weighted genera <= g_F when declared
};

/// Exact log2 of the kernel of the local-square restriction for the modeled
/// fiber, with the genus-budget consistency check when a budget is declared.
LocalSquareBound local_square_bound(const ReductionGraph& rg);

} // namespace riglab
