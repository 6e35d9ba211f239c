#include <doctest.h>

#include "riglab/generate.hpp"
#include "riglab/reduction.hpp"

using namespace riglab;

namespace {

GaloisModel make_model(const PermGroup& g, const std::vector<int>& nonreal_ids = {}) {
    ElementTable t(g);
    std::vector<GaloisSubgroup> subs;
    int id = 0;
    for (const auto& s : all_subgroups(t, g.order())) {
        bool flag = std::find(nonreal_ids.begin(), nonreal_ids.end(), id) != nonreal_ids.end();
        subs.push_back(GaloisSubgroup{id++, s, flag});
    }
    return GaloisModel(g, std::move(subs));
}

GaloisModel order_two_model() { return make_model(PermGroup::enumerate(2, {{1, 0}})); }

// C2 with subgroup positions 0 = trivial, 1 = full.
// One component of full stabilizer, one of trivial stabilizer, meeting in a
// point with trivial residue: the base change is a five-vertex tree.
ReductionGraph gamma_delta() {
    GaloisModel gm = order_two_model();
    std::vector<RComponent> comps{RComponent{"Gamma", 0, 0, {0}}, RComponent{"Delta", 1, 0, {0}}};
    std::vector<RIntersection> ints{RIntersection{"P", 0, 1, 0}};
    return ReductionGraph(gm, comps, ints, Declared{});
}

// Both components with full stabilizer, trivial residue: a four-cycle.
ReductionGraph gamma_delta_cycle(Declared declared = {}) {
    GaloisModel gm = order_two_model();
    std::vector<RComponent> comps{RComponent{"Gamma", 1, 0, {0}}, RComponent{"Delta", 1, 0, {0}}};
    std::vector<RIntersection> ints{RIntersection{"P", 0, 1, 0}};
    return ReductionGraph(gm, comps, ints, declared);
}

} // namespace

TEST_CASE("galois model validation") {
    PermGroup c2 = PermGroup::enumerate(2, {{1, 0}});
    // incomplete subgroup list
    CHECK_THROWS_AS(GaloisModel(c2, {GaloisSubgroup{0, {0}, false}}), invalid_instance);
    // duplicate ids
    CHECK_THROWS_AS(GaloisModel(c2, {GaloisSubgroup{0, {0}, false}, GaloisSubgroup{0, {0, 1}, false}}),
                    invalid_instance);
    // flag not closed downward: full group flagged, trivial not
    CHECK_THROWS_AS(GaloisModel(c2, {GaloisSubgroup{0, {0}, false}, GaloisSubgroup{1, {0, 1}, true}}),
                    invalid_instance);
    CHECK_NOTHROW(GaloisModel(c2, {GaloisSubgroup{0, {0}, true}, GaloisSubgroup{1, {0, 1}, true}}));

    GaloisModel gm = order_two_model();
    CHECK(gm.subgroup_count() == 2);
    CHECK(gm.index_of(0) == 2);
    CHECK(gm.index_of(1) == 1);
    CHECK(gm.ground_field_real());
}

TEST_CASE("reduction graph validation") {
    GaloisModel gm = order_two_model();
    // residue not below the stabilizer is impossible here (trivial is below
    // everything), but a residue missing from point fields is rejected
    CHECK_THROWS_AS(
        ReductionGraph(gm, {RComponent{"A", 1, 0, {}}, RComponent{"B", 1, 0, {0}}},
                       {RIntersection{"P", 0, 1, 0}}, Declared{}),
        invalid_instance);
    // point field above the stabilizer
    CHECK_THROWS_AS(ReductionGraph(gm, {RComponent{"A", 0, 0, {1}}}, {}, Declared{}),
                    invalid_instance);
    // disconnected underlying graph
    CHECK_THROWS_AS(ReductionGraph(gm, {RComponent{"A", 1, 0, {}}, RComponent{"B", 1, 0, {}}}, {},
                                   Declared{}),
                    invalid_instance);
    // single component with a proper stabilizer: the base change splits
    CHECK_THROWS_AS(ReductionGraph(gm, {RComponent{"A", 0, 0, {}}}, {}, Declared{}),
                    invalid_instance);
    // two components with trivial stabilizers over C2: two disjoint copies
    CHECK_THROWS_AS(
        ReductionGraph(gm, {RComponent{"A", 0, 0, {0}}, RComponent{"B", 0, 0, {0}}},
                       {RIntersection{"P", 0, 1, 0}}, Declared{}),
        invalid_instance);
    // intersection endpoints must differ
    CHECK_THROWS_AS(ReductionGraph(gm, {RComponent{"A", 1, 0, {0}}},
                                   {RIntersection{"P", 0, 0, 0}}, Declared{}),
                    invalid_instance);
}

TEST_CASE("base change of the tree instance") {
    ReductionGraph rg = gamma_delta();
    const BaseChange& bc = rg.base_change();
    CHECK(bc.ggraph.graph().order() == 5);  // 2 Gamma + 1 Delta + 2 P copies
    CHECK(bc.cyan_vertices.size() == 3);
    CHECK(bc.purple_vertices.size() == 2);
    CHECK(bc.ggraph.graph().betti() == 0);
    CHECK(bc.ggraph.group().order() == 2);

    // copy counts match subgroup indices
    int gamma_copies = 0, delta_copies = 0;
    for (const auto& o : bc.origin) {
        if (o.source_id == "Gamma") ++gamma_copies;
        if (o.source_id == "Delta") ++delta_copies;
    }
    CHECK(gamma_copies == 2);
    CHECK(delta_copies == 1);

    // the raw action is a homomorphic image of the Galois group
    CHECK(bc.raw_action.size() == 2);
    CHECK(bc.raw_action[0] == identity_perm(5));
    CHECK(bc.raw_action[1] != identity_perm(5));
}

TEST_CASE("base change stabilizers are the coset conjugates") {
    // S3 with one component per conjugate stabilizer situation
    PermGroup s3 = PermGroup::enumerate(3, {{1, 0, 2}, {0, 2, 1}});
    GaloisModel gm = make_model(s3);
    const int full = gm.full_pos();
    // find an order-2 subgroup position
    int l = -1;
    for (int pos = 0; pos < gm.subgroup_count(); ++pos)
        if (gm.at(pos).elems.size() == 2) l = pos;
    REQUIRE(l >= 0);
    std::vector<RComponent> comps{RComponent{"G", l, 0, {gm.trivial_pos()}},
                                  RComponent{"D", full, 0, {gm.trivial_pos()}}};
    std::vector<RIntersection> ints{RIntersection{"Q", 0, 1, gm.trivial_pos()}};
    ReductionGraph rg(gm, comps, ints, Declared{});
    const BaseChange& bc = rg.base_change();
    CHECK(bc.ggraph.graph().order() == 3 + 1 + 6);
    for (int v = 0; v < bc.ggraph.graph().order(); ++v) {
        const CopyOrigin& o = bc.origin[static_cast<std::size_t>(v)];
        if (o.source_id != "G") continue;
        // stabilizer of the copy g*S is g*S*g^(-1)
        SubgroupElems stab = bc.ggraph.stabilizer_elems(v);
        SubgroupElems expected =
            conjugate_subgroup(gm.table(), gm.at(l).elems, o.coset.front());
        std::vector<Permutation> got, want;
        for (auto e : stab) got.push_back(bc.ggraph.group().elements[e]);
        for (auto e : expected) {
            // map the Galois element to its action permutation
            want.push_back(bc.raw_action[e]);
        }
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("omega sets on the frozen instances") {
    ReductionGraph rg = gamma_delta();
    CHECK(omega_rat_int(rg) == std::vector<std::string>{"Gamma"});
    CHECK(omega_with_property(rg, FieldProperty::always_true) ==
          std::vector<std::string>{"Delta", "Gamma"});
    // no flags: nothing is nonreal unless the point-field set is empty
    CHECK(omega_with_property(rg, FieldProperty::nonreal).empty());

    ReductionGraph cyc = gamma_delta_cycle();
    CHECK(omega_rat_int(cyc).empty());  // the residue is strictly below both stabilizers
}

TEST_CASE("omega_P with flags") {
    PermGroup c2 = PermGroup::enumerate(2, {{1, 0}});
    // flag everything nonreal (closed downward)
    GaloisModel gm = make_model(c2, {0, 1});
    std::vector<RComponent> comps{RComponent{"Gamma", 1, 0, {0}}, RComponent{"Delta", 1, 0, {0}}};
    std::vector<RIntersection> ints{RIntersection{"P", 0, 1, 0}};
    ReductionGraph rg(gm, comps, ints, Declared{});
    CHECK(omega_with_property(rg, FieldProperty::nonreal) ==
          std::vector<std::string>{"Delta", "Gamma"});
}

TEST_CASE("singular rigidity orbit count cross-check") {
    ReductionGraph rg = gamma_delta();
    CountCrossCheck cc = singular_rigidity_orbit_count(rg);
    CHECK(cc.ok);
    CHECK(cc.value == 1);  // Delta only

    ReductionGraph cyc = gamma_delta_cycle();
    CountCrossCheck c2 = singular_rigidity_orbit_count(cyc);
    CHECK(c2.ok);
    CHECK(c2.value == 2);

    // single full-stabilizer component: omega_rat_int empty, count 1
    GaloisModel gm = order_two_model();
    ReductionGraph one(gm, {RComponent{"A", 1, 0, {}}}, {}, Declared{});
    CountCrossCheck c3 = singular_rigidity_orbit_count(one);
    CHECK(c3.ok);
    CHECK(c3.value == 1);
}

TEST_CASE("subcurve candidates") {
    ReductionGraph rg = gamma_delta();
    SubcurveResult sc = rigidity_subcurves(rg);
    CHECK(sc.ok);
    REQUIRE(sc.candidates.size() == 1);
    CHECK(sc.candidates[0].components == std::vector<std::string>{"Delta"});
    CHECK(sc.candidates[0].singular);

    // two full-stabilizer components joined by a rational point merge into
    // one non-singular candidate
    GaloisModel gm = order_two_model();
    std::vector<RComponent> comps{RComponent{"A", 1, 0, {0, 1}}, RComponent{"B", 1, 0, {0, 1}}};
    std::vector<RIntersection> ints{RIntersection{"P", 0, 1, 1}};
    ReductionGraph merged(gm, comps, ints, Declared{});
    SubcurveResult sm = rigidity_subcurves(merged);
    CHECK(sm.ok);
    REQUIRE(sm.candidates.size() == 1);
    CHECK(sm.candidates[0].components == std::vector<std::string>{"A", "B"});
    CHECK(!sm.candidates[0].singular);
    CHECK(sm.orbit_count == 1);
    CHECK(sm.singular_orbit_count == 0);

    // the same pair joined by a non-rational point stays two singular
    // candidates
    SubcurveResult ss = rigidity_subcurves(gamma_delta_cycle());
    CHECK(ss.ok);
    CHECK(ss.candidates.size() == 2);
    CHECK(ss.singular_orbit_count == 2);

    // conjugate-label acceptance changes nothing on these instances
    CHECK(rigidity_subcurves(merged, true).candidates.size() == 1);
    CHECK(rigidity_subcurves(gamma_delta_cycle(), true).candidates.size() == 2);
}

TEST_CASE("subcurves on an S3 instance with conjugate stabilizers") {
    PermGroup s3 = PermGroup::enumerate(3, {{1, 0, 2}, {0, 2, 1}});
    GaloisModel gm = make_model(s3);
    int l1 = -1, l2 = -1;
    for (int pos = 0; pos < gm.subgroup_count(); ++pos)
        if (gm.at(pos).elems.size() == 2) (l1 < 0 ? l1 : l2) = pos;
    REQUIRE(l2 >= 0);
    // two components with conjugate but distinct order-2 stabilizers meeting
    // in a point with trivial residue
    std::vector<RComponent> comps{RComponent{"G1", l1, 0, {gm.trivial_pos()}},
                                  RComponent{"G2", l2, 0, {gm.trivial_pos()}}};
    std::vector<RIntersection> ints{RIntersection{"P", 0, 1, gm.trivial_pos()}};
    ReductionGraph rg(gm, comps, ints, Declared{});
    CHECK(singular_rigidity_orbit_count(rg).ok);
    CHECK(singular_rigidity_orbit_count(rg).value == 2);
    SubcurveResult sc = rigidity_subcurves(rg);
    CHECK(sc.ok);
    CHECK(sc.candidates.size() == 2);
    // conjugacy acceptance may not merge them: the meeting point is not
    // rational, so connectivity fails for the pair
    SubcurveResult scc = rigidity_subcurves(rg, true);
    CHECK(scc.candidates.size() == 2);
}

TEST_CASE("nonrat bound with strictness detection") {
    ReductionGraph rg = gamma_delta();
    NonratVerdict nv = check_nonrat_bound(rg, FieldProperty::always_true);
    CHECK(nv.verdict != Verdict::violated);
    CHECK(nv.lhs == 1);
    CHECK(nv.rhs == 1);

    // nonreal property with no flags: omega_P is empty unless point fields
    // are empty
    NonratVerdict nn = check_nonrat_bound(rg, FieldProperty::nonreal);
    CHECK(nn.lhs == 0);
    CHECK(nn.verdict != Verdict::violated);

    // hypothesis (self point): component in the counted set with a point
    // over its own field
    GaloisModel flagged = make_model(PermGroup::enumerate(2, {{1, 0}}), {0, 1});
    std::vector<RComponent> comps{RComponent{"A", 1, 0, {0, 1}}, RComponent{"B", 1, 0, {0}}};
    std::vector<RIntersection> ints{RIntersection{"P", 0, 1, 0}};
    ReductionGraph hp(flagged, comps, ints, Declared{});
    NonratVerdict hv = check_nonrat_bound(hp, FieldProperty::nonreal);
    CHECK(hv.hyp_self_point);  // A has a point over its own field
    CHECK(hv.verdict != Verdict::violated);
}

TEST_CASE("betti monotone through the projection") {
    for (auto rg : {gamma_delta(), gamma_delta_cycle()}) {
        MonotoneResult m = betti_monotone_check(rg);
        CHECK(m.epi.status == EpiStatus::ok);
        CHECK(m.fibers_match);
        CHECK(m.verdict != Verdict::violated);
    }
    // the tree instance: 0 <= 0; the cycle instance: 0 <= 1
    CHECK(betti_monotone_check(gamma_delta()).epi.betti_src == 0);
    ReductionGraph cyc = gamma_delta_cycle();
    CHECK(betti_monotone_check(cyc).epi.betti_dst == 0);
    CHECK(betti_monotone_check(cyc).epi.betti_src == 1);
}

TEST_CASE("genus budget consistency") {
    // betti' = 1, genus sum 0: g_F = 1 is consistent, g_F = 0 is not
    ReductionGraph cyc = gamma_delta_cycle();
    CHECK(genus_budget_check(cyc, 1, false).verdict == Verdict::holds);
    CHECK(genus_budget_check(cyc, 0, false).verdict == Verdict::violated);

    // weighted genus: one genus-1 component with index 1 and betti' 1 needs
    // g_F >= 2
    GaloisModel gm = order_two_model();
    std::vector<RComponent> comps{RComponent{"Gamma", 1, 1, {0}}, RComponent{"Delta", 1, 0, {0}}};
    std::vector<RIntersection> ints{RIntersection{"P", 0, 1, 0}};
    ReductionGraph rg(gm, comps, ints, Declared{});
    CHECK(genus_budget_check(rg, 2, false).verdict == Verdict::holds);
    CHECK(genus_budget_check(rg, 1, false).verdict == Verdict::violated);
}

TEST_CASE("local square bound") {
    CHECK(local_square_bound(gamma_delta()).beta_prime == 0);
    Declared d;
    d.g_F = 1;
    ReductionGraph cyc = gamma_delta_cycle(d);
    LocalSquareBound ls = local_square_bound(cyc);
    CHECK(ls.beta_prime == 1);
    REQUIRE(ls.budget.has_value());
    CHECK(ls.budget->verdict == Verdict::holds_equality);  // 1 <= 1 - 0
}

TEST_CASE("henselian real instances need a real point field") {
    GaloisModel flagged = make_model(PermGroup::enumerate(2, {{1, 0}}), {0});  // trivial flagged
    Declared d;
    d.real_F = true;
    d.henselian = true;
    // the only point field is the flagged trivial subgroup
    CHECK_THROWS_AS(ReductionGraph(flagged, {RComponent{"A", 1, 0, {0}},
                                             RComponent{"B", 1, 0, {0}}},
                                   {RIntersection{"P", 0, 1, 0}}, d),
                    invalid_instance);
    // with a real-labeled point field it validates
    GaloisModel gm = order_two_model();
    CHECK_NOTHROW(ReductionGraph(gm, {RComponent{"A", 1, 0, {0}}, RComponent{"B", 1, 0, {0}}},
                                 {RIntersection{"P", 0, 1, 0}}, d));
}

TEST_CASE("random reduction instances validate and cross-check") {
    RandomReductionParams p;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        CAPTURE(seed);
        ReductionGraph rg = random_reduction_graph(seed, p);
        // connected dual graphs with purple degree 2: betti = |P| - |C| + 1
        CHECK(rg.underlying().purple_degrees_two());
        CHECK(rg.underlying().graph().betti() ==
              static_cast<long long>(rg.intersections().size()) -
                  static_cast<long long>(rg.components().size()) + 1);
        CHECK(singular_rigidity_orbit_count(rg).ok);
        CHECK(rigidity_subcurves(rg).ok);
        CHECK(rigidity_subcurves(rg, true).ok);
        CHECK(betti_monotone_check(rg).verdict != Verdict::violated);
        CHECK(check_nonrat_bound(rg, FieldProperty::nonreal).verdict != Verdict::violated);
        CHECK(check_nonrat_bound(rg, FieldProperty::always_true).verdict != Verdict::violated);
        REQUIRE(rg.declared().g_F.has_value());
        CHECK(genus_budget_check(rg, *rg.declared().g_F, rg.declared().real_F).verdict ==
              Verdict::holds);
    }
}
