#include <doctest.h>

#include "riglab/perm.hpp"

using namespace riglab;

TEST_CASE("closure enumeration") {
    CHECK(PermGroup::enumerate(3, {}).order() == 1);
    CHECK(PermGroup::enumerate(2, {{1, 0}}).order() == 2);
    // (v1 v2), (v2 v3) generate all of S3
    PermGroup s3 = PermGroup::enumerate(3, {{1, 0, 2}, {0, 2, 1}});
    CHECK(s3.order() == 6);
    CHECK(s3.elements.front() == identity_perm(3));
    CHECK_THROWS_AS(PermGroup::enumerate(3, {{1, 0, 2}, {0, 2, 1}}, 5), cap_exceeded);
    CHECK_THROWS_AS(PermGroup::enumerate(3, {{0, 0, 1}}), invalid_instance);
}

TEST_CASE("compose and inverse") {
    Permutation a{1, 2, 0};
    CHECK(compose(a, inverse(a)) == identity_perm(3));
    CHECK(compose(inverse(a), a) == identity_perm(3));
    Permutation b{1, 0, 2};
    CHECK(compose(a, b) == Permutation{2, 1, 0});
}

TEST_CASE("cycle notation") {
    CHECK(cycle_notation(identity_perm(3), {"a", "b", "c"}) == "()");
    CHECK(cycle_notation({1, 0, 2}, {"a", "b", "c"}) == "(a b)");
    CHECK(cycle_notation({1, 2, 0}, {"a", "b", "c"}) == "(a b c)");
}

TEST_CASE("subgroup lattice of S3") {
    PermGroup s3 = PermGroup::enumerate(3, {{1, 0, 2}, {0, 2, 1}});
    ElementTable t(s3);
    auto subs = all_subgroups(t, 6);
    CHECK(subs.size() == 6);  // trivial, three order-2, one order-3, S3
    std::size_t orders[7] = {0, 0, 0, 0, 0, 0, 0};
    for (const auto& s : subs) ++orders[s.size()];
    CHECK(orders[1] == 1);
    CHECK(orders[2] == 3);
    CHECK(orders[3] == 1);
    CHECK(orders[6] == 1);
    // order cap trims the list
    CHECK(all_subgroups(t, 3).size() == 5);

    for (const auto& s : subs) {
        CHECK(s3.order() % s.size() == 0);  // Lagrange
        auto cosets = left_cosets(t, s);
        CHECK(cosets.size() == s3.order() / s.size());
        // conjugates stay in the lattice
        for (std::uint16_t g = 0; g < t.order(); ++g) {
            auto c = conjugate_subgroup(t, s, g);
            bool found = false;
            for (const auto& other : subs) found = found || other == c;
            CHECK(found);
        }
    }
}

TEST_CASE("subgroup counts of known groups") {
    // S4 has 30 subgroups
    PermGroup s4 = PermGroup::enumerate(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
    CHECK(s4.order() == 24);
    CHECK(all_subgroups(ElementTable(s4), 24).size() == 30);
    // the cyclic group of order 6 has one subgroup per divisor
    PermGroup c6 = PermGroup::enumerate(5, {{1, 0, 3, 4, 2}});
    CHECK(c6.order() == 6);
    CHECK(all_subgroups(ElementTable(c6), 6).size() == 4);
    // D4 has 10 subgroups
    PermGroup d4 = PermGroup::enumerate(4, {{1, 2, 3, 0}, {1, 0, 3, 2}});
    CHECK(d4.order() == 8);
    CHECK(all_subgroups(ElementTable(d4), 8).size() == 10);
}

TEST_CASE("normality and intersection") {
    PermGroup s3 = PermGroup::enumerate(3, {{1, 0, 2}, {0, 2, 1}});
    ElementTable t(s3);
    auto subs = all_subgroups(t, 6);
    SubgroupElems full;
    for (std::uint16_t e = 0; e < 6; ++e) full.push_back(e);
    for (const auto& s : subs) {
        if (s.size() == 3) CHECK(is_normal_in(t, s, full));
        if (s.size() == 2) CHECK(!is_normal_in(t, s, full));
    }
    SubgroupElems a = subs[1], b = subs[2];  // two distinct order-2 subgroups
    CHECK(subgroup_intersection(a, b) == SubgroupElems{0});
}
