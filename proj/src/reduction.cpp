#include "riglab/reduction.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace riglab {

GaloisModel::GaloisModel(PermGroup group, std::vector<GaloisSubgroup> subgroups)
    : group_(std::move(group)), subs_(std::move(subgroups)) {
    table_ = std::make_shared<ElementTable>(group_);
    for (auto& s : subs_) {
        std::sort(s.elems.begin(), s.elems.end());
        s.elems.erase(std::unique(s.elems.begin(), s.elems.end()), s.elems.end());
        for (auto e : s.elems)
            if (e >= group_.order())
                throw invalid_instance("subgroup id " + std::to_string(s.id) +
                                       " references an element outside the group");
    }
    std::sort(subs_.begin(), subs_.end(), [](const GaloisSubgroup& a, const GaloisSubgroup& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    for (std::size_t i = 0; i < subs_.size(); ++i)
        if (!id_to_pos_.emplace(subs_[i].id, static_cast<int>(i)).second)
            throw invalid_instance("duplicate subgroup id " + std::to_string(subs_[i].id));

    // the list must be exactly the subgroup lattice of the group
    auto lattice = all_subgroups(*table_, group_.order());
    if (lattice.size() != subs_.size())
        throw invalid_instance("subgroup list is incomplete: expected " +
                               std::to_string(lattice.size()) + " subgroups, got " +
                               std::to_string(subs_.size()));
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (lattice[i] != subs_[i].elems)
            throw invalid_instance("subgroup list does not match the subgroup lattice");

    // flag closure: a flagged subgroup flags everything below it
    for (const auto& s : subs_) {
        if (!s.nonreal) continue;
        for (const auto& t : subs_)
            if (!t.nonreal && subgroup_subset(t.elems, s.elems))
                throw invalid_instance("going-up violation: subgroup id " + std::to_string(t.id) +
                                       " lies below flagged id " + std::to_string(s.id) +
                                       " but is not flagged");
    }

    conj_class_.assign(subs_.size(), -1);
    int next_class = 0;
    for (std::size_t i = 0; i < subs_.size(); ++i) {
        if (conj_class_[i] != -1) continue;
        conj_class_[i] = next_class;
        for (std::uint16_t g = 0; g < group_.order(); ++g) {
            int j = find_pos(conjugate_subgroup(*table_, subs_[i].elems, g));
            conj_class_[static_cast<std::size_t>(j)] = next_class;
        }
        ++next_class;
    }

    trivial_pos_ = find_pos(SubgroupElems{0});
    SubgroupElems all(group_.order());
    for (std::uint16_t e = 0; e < group_.order(); ++e) all[e] = e;
    full_pos_ = find_pos(all);
}

int GaloisModel::pos_of_id(int id) const {
    auto it = id_to_pos_.find(id);
    if (it == id_to_pos_.end())
        throw invalid_instance("unknown subgroup id " + std::to_string(id));
    return it->second;
}

int GaloisModel::find_pos(const SubgroupElems& elems) const {
    for (std::size_t i = 0; i < subs_.size(); ++i)
        if (subs_[i].elems == elems) return static_cast<int>(i);
    throw invalid_instance("element set is not in the subgroup list");
}

bool GaloisModel::is_subset(int a, int b) const {
    return subgroup_subset(at(a).elems, at(b).elems);
}

int GaloisModel::conjugate_pos(int pos, std::uint16_t g) const {
    return find_pos(conjugate_subgroup(*table_, at(pos).elems, g));
}

namespace {

std::string copy_label(const std::string& source, int coset_index) {
    return source + "#" + std::to_string(coset_index);
}

BaseChange build_base_change(const GaloisModel& galois, const std::vector<RComponent>& comps,
                             const std::vector<RIntersection>& ints) {
    const ElementTable& t = galois.table();
    const std::size_t order = galois.group_order();

    // cosets and element->coset maps, per subgroup position used
    std::map<int, std::vector<SubgroupElems>> cosets;
    std::map<int, std::vector<int>> coset_of;
    auto need = [&](int pos) {
        if (cosets.count(pos)) return;
        auto cs = left_cosets(t, galois.at(pos).elems);
        std::vector<int> byelem(order, -1);
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (auto e : cs[i]) byelem[e] = static_cast<int>(i);
        cosets.emplace(pos, std::move(cs));
        coset_of.emplace(pos, std::move(byelem));
    };
    for (const auto& c : comps) need(c.stab);
    for (const auto& x : ints) need(x.residue);

    std::vector<std::string> labels;
    std::vector<CopyOrigin> origins;
    auto add_copies = [&](const std::string& id, int pos, bool cyan) {
        const auto& cs = cosets.at(pos);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            labels.push_back(copy_label(id, static_cast<int>(i)));
            origins.push_back(CopyOrigin{id, cyan, static_cast<int>(i), cs[i]});
        }
    };
    for (const auto& c : comps) add_copies(c.id, c.stab, true);
    for (const auto& x : ints) add_copies(x.id, x.residue, false);

    // each purple copy gR joins the stab cosets containing g on both sides
    std::vector<std::tuple<std::string, std::string, long long>> edges;
    for (const auto& x : ints) {
        const auto& pc = cosets.at(x.residue);
        for (std::size_t i = 0; i < pc.size(); ++i) {
            const std::uint16_t rep = pc[i].front();
            for (int comp_idx : {x.a, x.b}) {
                const RComponent& c = comps[static_cast<std::size_t>(comp_idx)];
                int ci = coset_of.at(c.stab)[rep];
                edges.emplace_back(copy_label(x.id, static_cast<int>(i)), copy_label(c.id, ci), 1);
            }
        }
    }

    MultiGraph graph(labels, edges);
    if (!graph.connected())
        throw invalid_instance("base change of the fiber is disconnected; the labeled instance "
                               "cannot come from a connected special fiber");

    // reorder the per-label origin data to the graph's sorted vertex order
    std::vector<CopyOrigin> origin_sorted(origins.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        origin_sorted[static_cast<std::size_t>(graph.index_of(labels[i]))] = origins[i];

    // left-translation action
    std::map<std::string, int> label_pos;
    for (const auto& c : comps) label_pos.emplace(c.id, c.stab);
    for (const auto& x : ints) label_pos.emplace(x.id, x.residue);
    std::vector<Permutation> raw;
    raw.reserve(order);
    for (std::uint16_t h = 0; h < order; ++h) {
        Permutation p(static_cast<std::size_t>(graph.order()));
        for (int v = 0; v < graph.order(); ++v) {
            const CopyOrigin& o = origin_sorted[static_cast<std::size_t>(v)];
            const int pos = label_pos.at(o.source_id);
            const std::uint16_t moved = t.mul(h, o.coset.front());
            const int target_coset = coset_of.at(pos)[moved];
            p[static_cast<std::size_t>(v)] = graph.index_of(copy_label(o.source_id, target_coset));
        }
        raw.push_back(std::move(p));
    }

    std::vector<Permutation> elems = raw;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    PermGroup action;
    action.degree = graph.order();
    action.elements = elems;
    action.generators = elems;

    BaseChange bc{GGraph(std::move(graph), std::move(action)), std::move(origin_sorted),
                  std::move(raw), {}, {}};
    for (int v = 0; v < bc.ggraph.graph().order(); ++v) {
        if (bc.origin[static_cast<std::size_t>(v)].cyan)
            bc.cyan_vertices.push_back(v);
        else
            bc.purple_vertices.push_back(v);
    }
    return bc;
}

} // namespace

ReductionGraph::ReductionGraph(GaloisModel galois, std::vector<RComponent> components,
                               std::vector<RIntersection> intersections, Declared declared)
    : galois_(std::move(galois)), comps_(std::move(components)), ints_(std::move(intersections)),
      declared_(declared) {
    if (comps_.empty()) throw invalid_instance("reduction graph needs at least one component");
    std::set<std::string> ids;
    for (auto& c : comps_) {
        if (!ids.insert(c.id).second)
            throw invalid_instance("duplicate component id '" + c.id + "'");
        if (c.genus < 0) throw invalid_instance("negative genus on component '" + c.id + "'");
        if (c.stab < 0 || c.stab >= galois_.subgroup_count())
            throw invalid_instance("component '" + c.id + "' has an invalid stabilizer label");
        std::sort(c.point_fields.begin(), c.point_fields.end());
        c.point_fields.erase(std::unique(c.point_fields.begin(), c.point_fields.end()),
                             c.point_fields.end());
        for (int pf : c.point_fields) {
            if (pf < 0 || pf >= galois_.subgroup_count())
                throw invalid_instance("component '" + c.id + "' has an invalid point-field label");
            if (!galois_.is_subset(pf, c.stab))
                throw invalid_instance("point field of component '" + c.id +
                                       "' is not below its stabilizer");
        }
        // downward closure: a point over a field gives points over every
        // larger field, i.e. every smaller subgroup
        for (int pf : c.point_fields)
            for (int q = 0; q < galois_.subgroup_count(); ++q)
                if (galois_.is_subset(q, pf) &&
                    !std::binary_search(c.point_fields.begin(), c.point_fields.end(), q))
                    throw invalid_instance("point fields of component '" + c.id +
                                           "' are not closed under passing to smaller subgroups");
    }
    std::set<std::string> int_ids;
    for (const auto& x : ints_) {
        if (!int_ids.insert(x.id).second)
            throw invalid_instance("duplicate intersection id '" + x.id + "'");
        if (ids.count(x.id))
            throw invalid_instance("intersection id '" + x.id + "' collides with a component id");
        if (x.a < 0 || x.a >= static_cast<int>(comps_.size()) || x.b < 0 ||
            x.b >= static_cast<int>(comps_.size()))
            throw invalid_instance("intersection '" + x.id + "' references a missing component");
        if (x.a == x.b)
            throw invalid_instance("intersection '" + x.id + "' must join distinct components");
        if (x.residue < 0 || x.residue >= galois_.subgroup_count())
            throw invalid_instance("intersection '" + x.id + "' has an invalid residue label");
        for (int side : {x.a, x.b}) {
            const RComponent& c = comps_[static_cast<std::size_t>(side)];
            if (!galois_.is_subset(x.residue, c.stab))
                throw invalid_instance("residue of intersection '" + x.id +
                                       "' is not below the stabilizer of component '" + c.id + "'");
            if (!std::binary_search(c.point_fields.begin(), c.point_fields.end(), x.residue))
                throw invalid_instance("residue of intersection '" + x.id +
                                       "' is missing from the point fields of component '" + c.id +
                                       "'");
        }
    }
    if (declared_.g_F && *declared_.g_F < 0)
        throw invalid_instance("declared genus must be nonnegative");
    if (declared_.henselian && declared_.real_F) {
        if (!galois_.ground_field_real())
            throw invalid_instance("a real function field over a henselian base needs a real "
                                   "residue field, but the full group is flagged nonreal");
        bool witness = false;
        for (const auto& c : comps_)
            for (int pf : c.point_fields)
                if (!galois_.at(pf).nonreal) witness = true;
        if (!witness)
            throw invalid_instance("real function field over a henselian base: some component "
                                   "must have a point over a real-labeled field");
    }

    std::vector<std::string> vertex_ids;
    std::vector<std::string> cyan_ids, purple_ids;
    std::vector<std::tuple<std::string, std::string, long long>> edges;
    for (const auto& c : comps_) {
        vertex_ids.push_back(c.id);
        cyan_ids.push_back(c.id);
    }
    for (const auto& x : ints_) {
        vertex_ids.push_back(x.id);
        purple_ids.push_back(x.id);
        edges.emplace_back(x.id, comps_[static_cast<std::size_t>(x.a)].id, 1);
        edges.emplace_back(x.id, comps_[static_cast<std::size_t>(x.b)].id, 1);
    }
    underlying_ = BipartiteDualGraph(MultiGraph(vertex_ids, edges), cyan_ids, purple_ids);
    if (!underlying_.graph().connected())
        throw invalid_instance("underlying dual graph is not connected");

    base_change_ = std::make_shared<const BaseChange>(build_base_change(galois_, comps_, ints_));
}

int ReductionGraph::component_index(const std::string& id) const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (comps_[i].id == id) return static_cast<int>(i);
    throw invalid_instance("unknown component id '" + id + "'");
}

std::vector<std::string> omega_rat_int(const ReductionGraph& rg) {
    std::set<std::string> out;
    for (const auto& x : rg.intersections()) {
        for (int side : {x.a, x.b}) {
            const RComponent& c = rg.components()[static_cast<std::size_t>(side)];
            if (x.residue == c.stab) out.insert(c.id);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::string> omega_with_property(const ReductionGraph& rg, FieldProperty prop) {
    std::vector<std::string> out;
    for (const auto& c : rg.components()) {
        bool all = true;
        if (prop == FieldProperty::nonreal)
            for (int pf : c.point_fields)
                if (!rg.galois().at(pf).nonreal) {
                    all = false;
                    break;
                }
        if (all) out.push_back(c.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::string> set_difference_sorted(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct OrbitCounts {
    long long total = 0;
    long long singular_cyan = 0;
};

OrbitCounts base_change_orbit_counts(const ReductionGraph& rg) {
    const BaseChange& bc = rg.base_change();
    RigidityOrbits ro = rigidity_orbits(bc.ggraph);
    OrbitCounts out;
    out.total = static_cast<long long>(ro.orbits.size());
    for (const auto& orbit : ro.orbits) {
        const Rigidity& r = ro.rigidities[static_cast<std::size_t>(orbit.front())];
        if (r.singular && bc.origin[static_cast<std::size_t>(r.vertices.front())].cyan)
            ++out.singular_cyan;
    }
    return out;
}

} // namespace

CountCrossCheck singular_rigidity_orbit_count(const ReductionGraph& rg) {
    CountCrossCheck out;
    out.from_labels = static_cast<long long>(rg.components().size()) -
                      static_cast<long long>(omega_rat_int(rg).size());
    out.from_orbits = base_change_orbit_counts(rg).singular_cyan;
    out.ok = (out.from_labels == out.from_orbits);
    out.value = out.from_labels;
    return out;
}

SubcurveResult rigidity_subcurves(const ReductionGraph& rg, bool accept_conjugate_labels) {
    const auto& comps = rg.components();
    const int n = static_cast<int>(comps.size());
    if (n > 24) throw cap_exceeded("too many components for subset enumeration");

    SubcurveResult out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        auto in = [&](int i) { return (mask >> i) & 1u; };
        int first = -1;
        for (int i = 0; i < n; ++i)
            if (in(i)) {
                first = i;
                break;
            }
        const int label = comps[static_cast<std::size_t>(first)].stab;

        bool same_label = true;
        for (int i = 0; i < n && same_label; ++i) {
            if (!in(i)) continue;
            const int s = comps[static_cast<std::size_t>(i)].stab;
            if (accept_conjugate_labels
                    ? rg.galois().conjugacy_class(s) != rg.galois().conjugacy_class(label)
                    : s != label)
                same_label = false;
        }
        if (!same_label) continue;

        // connectivity through intersection points rational on both sides
        std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
        comp_of[static_cast<std::size_t>(first)] = 0;
        std::vector<int> stack{first};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& x : rg.intersections()) {
                if (!in(x.a) || !in(x.b)) continue;
                const int sa = comps[static_cast<std::size_t>(x.a)].stab;
                const int sb = comps[static_cast<std::size_t>(x.b)].stab;
                if (x.residue != sa || sa != sb) continue;  // residue strictly below the label
                int other = -1;
                if (x.a == v) other = x.b;
                if (x.b == v) other = x.a;
                if (other >= 0 && comp_of[static_cast<std::size_t>(other)] == -1) {
                    comp_of[static_cast<std::size_t>(other)] = 0;
                    stack.push_back(other);
                }
            }
        }
        bool connected = true;
        for (int i = 0; i < n; ++i)
            if (in(i) && comp_of[static_cast<std::size_t>(i)] == -1) connected = false;
        if (!connected) continue;

        // closure under label-rational contact with outside components
        bool closed = true;
        for (const auto& x : rg.intersections()) {
            if (in(x.a) == in(x.b)) continue;
            const int inside = in(x.a) ? x.a : x.b;
            if (x.residue == comps[static_cast<std::size_t>(inside)].stab) closed = false;
        }
        if (!closed) continue;

        SubcurveCandidate cand;
        cand.label = label;
        cand.singular = (std::popcount(mask) == 1);
        for (int i = 0; i < n; ++i)
            if (in(i)) cand.components.push_back(comps[static_cast<std::size_t>(i)].id);
        std::sort(cand.components.begin(), cand.components.end());
        out.candidates.push_back(std::move(cand));
    }
    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const SubcurveCandidate& a, const SubcurveCandidate& b) {
                  return a.components < b.components;
              });

    OrbitCounts oc = base_change_orbit_counts(rg);
    out.orbit_count = oc.total;
    out.singular_orbit_count = oc.singular_cyan;
    long long singleton = 0;
    for (const auto& c : out.candidates)
        if (c.singular) ++singleton;
    out.ok = (static_cast<long long>(out.candidates.size()) == out.orbit_count) &&
             (singleton == out.singular_orbit_count);
    return out;
}

namespace {

// A subgroup position is minimal-without-the-property when its fixed field
// fails the property, appears among the point fields, and no strictly larger
// subgroup (strictly smaller field) appears among any point fields.
std::vector<int> minimal_nonproperty_labels(const ReductionGraph& rg, FieldProperty prop) {
    std::vector<char> has_point(static_cast<std::size_t>(rg.galois().subgroup_count()), 0);
    for (const auto& c : rg.components())
        for (int pf : c.point_fields) has_point[static_cast<std::size_t>(pf)] = 1;
    std::vector<int> out;
    for (int h = 0; h < rg.galois().subgroup_count(); ++h) {
        if (!has_point[static_cast<std::size_t>(h)]) continue;
        const bool property = (prop == FieldProperty::always_true) || rg.galois().at(h).nonreal;
        if (property) continue;
        bool minimal = true;
        for (int k = 0; k < rg.galois().subgroup_count() && minimal; ++k)
            if (k != h && has_point[static_cast<std::size_t>(k)] && rg.galois().is_subset(h, k) &&
                rg.galois().at(k).elems.size() > rg.galois().at(h).elems.size())
                minimal = false;
        if (minimal) out.push_back(h);
    }
    return out;
}

} // namespace

NonratVerdict check_nonrat_bound(const ReductionGraph& rg, FieldProperty prop) {
    NonratVerdict out;
    const auto omega_p = omega_with_property(rg, prop);
    const auto omega_ri = omega_rat_int(rg);
    const auto counted = set_difference_sorted(omega_p, omega_ri);
    const long long beta_prime = rg.base_change().ggraph.graph().betti();
    out.lhs = static_cast<long long>(counted.size());
    out.rhs = beta_prime + 1;

    for (const auto& id : counted) {
        const RComponent& c = rg.components()[static_cast<std::size_t>(rg.component_index(id))];
        if (std::binary_search(c.point_fields.begin(), c.point_fields.end(), c.stab))
            out.hyp_self_point = true;
    }

    const auto minimal = minimal_nonproperty_labels(rg, prop);
    std::set<std::string> ri(omega_ri.begin(), omega_ri.end());
    for (const auto& x : rg.intersections()) {
        const RComponent& ca = rg.components()[static_cast<std::size_t>(x.a)];
        const RComponent& cb = rg.components()[static_cast<std::size_t>(x.b)];
        if (!ri.count(ca.id) || !ri.count(cb.id)) continue;
        if (std::find(minimal.begin(), minimal.end(), x.residue) != minimal.end())
            out.hyp_minimal_meeting = true;
    }

    if (out.lhs > out.rhs) {
        out.verdict = Verdict::violated;
        out.note = "count exceeds betti'+1";
    } else if (out.hyp_minimal_meeting && out.lhs >= out.rhs) {
        out.verdict = Verdict::violated;
        out.note = "minimal-meeting hypothesis demands a strict inequality";
    } else {
        out.verdict = (out.lhs == out.rhs) ? Verdict::holds_equality : Verdict::holds;
        if (out.hyp_self_point)
            out.note = "valuation-side count is strictly below " + std::to_string(out.lhs);
    }
    return out;
}

MonotoneResult betti_monotone_check(const ReductionGraph& rg) {
    const BaseChange& bc = rg.base_change();
    const MultiGraph& gp = bc.ggraph.graph();

    std::vector<std::string> cyan_ids, purple_ids;
    std::map<std::string, std::string> vmap;
    for (int v = 0; v < gp.order(); ++v) {
        const CopyOrigin& o = bc.origin[static_cast<std::size_t>(v)];
        (o.cyan ? cyan_ids : purple_ids).push_back(gp.id_of(v));
        vmap.emplace(gp.id_of(v), o.source_id);
    }
    BipartiteDualGraph src(gp, cyan_ids, purple_ids);

    MonotoneResult out;
    out.epi = check_betti_epimorphism(src, rg.underlying(), vmap);

    out.fibers_match = true;
    for (const auto& c : rg.components()) {
        auto it = out.epi.e_gamma.find(c.id);
        if (it == out.epi.e_gamma.end() || it->second != rg.galois().index_of(c.stab))
            out.fibers_match = false;
    }
    for (const auto& x : rg.intersections()) {
        auto it = out.epi.i_x.find(x.id);
        if (it == out.epi.i_x.end() || it->second != rg.galois().index_of(x.residue))
            out.fibers_match = false;
    }
    out.verdict = (out.epi.status == EpiStatus::ok && out.fibers_match) ? out.epi.verdict
                                                                        : Verdict::violated;
    return out;
}

BudgetVerdict genus_budget_check(const ReductionGraph& rg, long long g_F, bool real_F) {
    BudgetVerdict out;
    long long weighted = 0;
    for (const auto& c : rg.components())
        weighted += rg.galois().index_of(c.stab) * c.genus;
    const long long beta_prime = rg.base_change().ggraph.graph().betti();
    const long long nonrat =
        static_cast<long long>(rg.components().size()) -
        static_cast<long long>(omega_rat_int(rg).size());

    auto push = [&](std::string name, bool applicable, long long lhs, long long rhs) {
        out.parts.push_back(BudgetPart{std::move(name), applicable, !applicable || lhs <= rhs, lhs, rhs});
    };
    push("betti-genus", true, beta_prime + weighted, g_F);
    push("nonrat-genus", true, nonrat + weighted, g_F + 1);

    if (real_F) {
        const auto omega_nr = omega_with_property(rg, FieldProperty::nonreal);
        const auto counted = set_difference_sorted(omega_nr, omega_rat_int(rg));
        const long long lhs_real = static_cast<long long>(counted.size()) + weighted;
        push("real-chain", true, lhs_real, g_F + 1);
        const NonratVerdict nr = check_nonrat_bound(rg, FieldProperty::nonreal);
        push("real-chain-strict", nr.hyp_minimal_meeting, lhs_real, g_F);
        if (rg.declared().henselian) {
            bool witness = false;
            for (const auto& c : rg.components())
                for (int pf : c.point_fields)
                    if (!rg.galois().at(pf).nonreal) witness = true;
            out.parts.push_back(BudgetPart{"real-point-field", true, witness, witness ? 1 : 0, 1});
        }
    }

    bool ok = true;
    for (const auto& p : out.parts)
        if (!p.ok) ok = false;
    out.verdict = ok ? Verdict::holds : Verdict::violated;
    out.note = ok ? "consistent" : "inconsistent with the declared genus";
    return out;
}

LocalSquareBound local_square_bound(const ReductionGraph& rg) {
    LocalSquareBound out;
    out.beta_prime = rg.base_change().ggraph.graph().betti();
    if (rg.declared().g_F) {
        long long weighted = 0;
        for (const auto& c : rg.components())
            weighted += rg.galois().index_of(c.stab) * c.genus;
        CheckOutcome budget;
        budget.lhs = out.beta_prime;
        budget.rhs = *rg.declared().g_F - weighted;
        budget.verdict = budget.lhs < budget.rhs
                             ? Verdict::holds
                             : (budget.lhs == budget.rhs ? Verdict::holds_equality : Verdict::violated);
        budget.note = "betti' <= g_F - weighted genus sum";
        out.budget = budget;
    }
    return out;
}

} // namespace riglab
