#include <doctest.h>

#include "riglab/generate.hpp"
#include "riglab/ggraph.hpp"

#include "oracle.hpp"

using namespace riglab;

namespace {

MultiGraph four_cycle() {
    return MultiGraph({"v1", "v2", "v3", "v4"},
                      {{"v1", "v2", 1}, {"v2", "v3", 1}, {"v3", "v4", 1}, {"v1", "v4", 1}});
}

GGraph four_cycle_reflection() {
    MultiGraph g = four_cycle();
    // (v1 v3)
    Permutation refl{2, 1, 0, 3};
    return GGraph(g, PermGroup::enumerate(4, {refl}));
}

} // namespace

TEST_CASE("validate_action") {
    MultiGraph path({"v1", "v2", "v3"}, {{"v1", "v2", 1}, {"v2", "v3", 1}});
    CHECK(!validate_action(path, PermGroup::trivial(3)));
    MultiGraph edge({"v1", "v2"}, {{"v1", "v2", 1}});
    CHECK(!validate_action(edge, PermGroup::enumerate(2, {{1, 0}})));

    // a 3-cycle is not an automorphism of the path: {v2,v3} maps onto the
    // non-edge {v1,v3}
    PermGroup rot = PermGroup::enumerate(3, {{1, 2, 0}});
    auto bad = validate_action(path, rot);
    REQUIRE(bad.has_value());
    CHECK(bad->image_mult != bad->mult);
    CHECK(bad->pair == std::make_pair(0, 2));  // the non-edge {v1,v3}
    CHECK_THROWS_AS(GGraph(path, rot), invalid_instance);
}

TEST_CASE("GGraph validation") {
    CHECK_THROWS_AS(GGraph(MultiGraph({"a", "b"}, {}), PermGroup::trivial(2)), invalid_instance);
    CHECK_THROWS_AS(GGraph(four_cycle(), PermGroup::trivial(3)), invalid_instance);
}

TEST_CASE("vertex stabilizers on the reflected 4-cycle") {
    GGraph gg = four_cycle_reflection();
    CHECK(gg.vertex_stabilizer("v2").order() == 2);  // the full group
    CHECK(gg.vertex_stabilizer("v1").order() == 1);
    CHECK(gg.vertex_stabilizer("v4").order() == 2);
    CHECK_THROWS_AS(gg.vertex_stabilizer("zz"), invalid_instance);
}

TEST_CASE("fixed subgraphs") {
    GGraph gg = four_cycle_reflection();
    MultiGraph whole = gg.fixed_subgraph(PermGroup::trivial(4));
    CHECK(whole == gg.graph());
    MultiGraph fixed = gg.fixed_subgraph(gg.group());
    CHECK(fixed.order() == 2);  // v2 and v4, no edges
    CHECK(fixed.size() == 0);

    // full symmetric group on a triangle fixes nothing
    MultiGraph tri({"v1", "v2", "v3"}, {{"v1", "v2", 1}, {"v2", "v3", 1}, {"v1", "v3", 1}});
    GGraph tg(tri, PermGroup::enumerate(3, {{1, 0, 2}, {0, 2, 1}}));
    CHECK(tg.fixed_subgraph(tg.group()).order() == 0);

    PermGroup other = PermGroup::enumerate(4, {{1, 0, 2, 3}});
    CHECK_THROWS_AS(gg.fixed_subgraph(other), invalid_instance);
}

TEST_CASE("rigidities of the frozen instances") {
    // trivial group: the whole graph is the unique rigidity
    GGraph triv(four_cycle(), PermGroup::trivial(4));
    auto r = triv.rigidities();
    REQUIRE(r.size() == 1);
    CHECK(r[0].vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(r[0].rigidifier == SubgroupElems{0});
    CHECK(!r[0].singular);

    // 4-cycle with (v1 v3): two singular rigidities {v2}, {v4}, rigidifier G
    GGraph gg = four_cycle_reflection();
    auto rr = gg.rigidities();
    REQUIRE(rr.size() == 2);
    CHECK(rr[0].vertices == std::vector<int>{1});
    CHECK(rr[1].vertices == std::vector<int>{3});
    CHECK(rr[0].singular);
    CHECK(rr[0].rigidifier.size() == 2);
    CHECK(rr[1].rigidifier.size() == 2);

    // path v1-v2-v3 with (v1 v3): only {v2}; the whole path is not a
    // rigidity because v2 has a larger stabilizer
    MultiGraph path({"v1", "v2", "v3"}, {{"v1", "v2", 1}, {"v2", "v3", 1}});
    GGraph pg(path, PermGroup::enumerate(3, {{2, 1, 0}}));
    auto pr = pg.rigidities();
    REQUIRE(pr.size() == 1);
    CHECK(pr[0].vertices == std::vector<int>{1});
    CHECK(pr[0].rigidifier.size() == 2);
}

TEST_CASE("rigidity orbits") {
    GGraph triv(four_cycle(), PermGroup::trivial(4));
    auto ro = rigidity_orbits(triv);
    CHECK(ro.orbits.size() == 1);
    CHECK(ro.min_orbit_size == 1);

    // reflection: two orbits of size one, both fixed
    auto ro2 = rigidity_orbits(four_cycle_reflection());
    CHECK(ro2.orbits.size() == 2);
    CHECK(ro2.fixed.size() == 2);
    CHECK(ro2.min_orbit_size == 1);

    // 6-cycle with the reflection through v2,v5 and the antipodal rotation:
    // {v2} and {v5} are swapped, one orbit of size 2
    MultiGraph hex({"v1", "v2", "v3", "v4", "v5", "v6"},
                   {{"v1", "v2", 1},
                    {"v2", "v3", 1},
                    {"v3", "v4", 1},
                    {"v4", "v5", 1},
                    {"v5", "v6", 1},
                    {"v1", "v6", 1}});
    Permutation refl{2, 1, 0, 5, 4, 3};  // (v1 v3)(v4 v6)
    Permutation rot{3, 4, 5, 0, 1, 2};   // (v1 v4)(v2 v5)(v3 v6)
    GGraph hg(hex, PermGroup::enumerate(6, {refl, rot}));
    CHECK(hg.group().order() == 4);
    auto hr = rigidity_orbits(hg);
    REQUIRE(hr.rigidities.size() == 2);
    CHECK(hr.rigidities[0].singular);
    CHECK(hr.orbits.size() == 1);
    CHECK(hr.orbits[0].size() == 2);
    CHECK(hr.min_orbit_size == 2);
    CHECK(hr.fixed.empty());
}

TEST_CASE("rigidities agree with the all-subgroups oracle on random instances") {
    RandomGGraphParams p;
    p.max_vertices = 7;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        GGraph gg = random_ggraph(seed, p);
        CAPTURE(seed);
        CHECK(gg.rigidities() == riglab_test::brute_force_rigidities(gg));
    }
}

TEST_CASE("structural rigidity properties on random instances") {
    RandomGGraphParams p;
    for (std::uint64_t seed = 1000; seed < 1150; ++seed) {
        GGraph gg = random_ggraph(seed, p);
        CAPTURE(seed);
        auto rigs = gg.rigidities();

        // pairwise disjoint vertex sets
        std::vector<char> used(static_cast<std::size_t>(gg.graph().order()), 0);
        for (const auto& r : rigs)
            for (int v : r.vertices) {
                CHECK(!used[static_cast<std::size_t>(v)]);
                used[static_cast<std::size_t>(v)] = 1;
            }

        // every component of the fixed subgraph of the whole group is a
        // rigidity with the whole group as rigidifier
        SubgroupElems whole;
        for (std::uint16_t e = 0; e < gg.group().order(); ++e) whole.push_back(e);
        auto fixed = gg.fixed_vertices(whole);
        if (!fixed.empty()) {
            MultiGraph sub = gg.graph().full_subgraph(fixed);
            for (const auto& block : sub.components()) {
                std::vector<int> orig;
                for (int v : block) orig.push_back(gg.graph().index_of(sub.id_of(v)));
                std::sort(orig.begin(), orig.end());
                bool found = false;
                for (const auto& r : rigs)
                    if (r.vertices == orig && r.rigidifier == whole) found = true;
                CHECK(found);
            }
        }

        // the image of a rigidity is a rigidity with conjugated rigidifier
        ElementTable table(gg.group());
        for (const auto& r : rigs) {
            for (std::uint16_t e = 0; e < gg.group().order(); ++e) {
                std::vector<int> image;
                for (int v : r.vertices)
                    image.push_back(gg.group().elements[e][static_cast<std::size_t>(v)]);
                std::sort(image.begin(), image.end());
                SubgroupElems conj = conjugate_subgroup(table, r.rigidifier, e);
                bool found = false;
                for (const auto& s : rigs)
                    if (s.vertices == image && s.rigidifier == conj) found = true;
                CHECK(found);
            }
        }

        // a singular rigidity fixed setwise has the whole group as rigidifier
        auto ro = rigidity_orbits(gg);
        for (int idx : ro.fixed)
            if (ro.rigidities[static_cast<std::size_t>(idx)].singular)
                CHECK(ro.rigidities[static_cast<std::size_t>(idx)].rigidifier.size() ==
                      gg.group().order());
    }
}
