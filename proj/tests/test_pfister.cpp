#include <doctest.h>

#include "riglab/pfister.hpp"

using namespace riglab::pfister;
using riglab::invalid_instance;

namespace {

FieldProfile nonreal_profile(std::uint64_t level, std::uint64_t pyth) {
    FieldProfile f;
    f.real = false;
    f.level = Bound(level);
    f.pythagoras = Bound(pyth);
    return f;
}

FieldProfile real_profile(std::uint64_t pyth) {
    FieldProfile f;
    f.real = true;
    f.level = Bound::infinity();
    f.pythagoras = Bound(pyth);
    return f;
}

} // namespace

TEST_CASE("bound arithmetic saturates at infinity") {
    CHECK(Bound(2) + Bound(3) == Bound(5));
    CHECK((Bound(2) + Bound::infinity()).is_inf());
    CHECK(Bound(7) < Bound::infinity());
    CHECK(!(Bound::infinity() < Bound::infinity()));
    CHECK(Bound(4).is_power_of_two());
    CHECK(!Bound(6).is_power_of_two());
    CHECK(!Bound::infinity().is_power_of_two());
}

TEST_CASE("field profile validation") {
    CHECK_NOTHROW(real_profile(3).validate());
    CHECK_NOTHROW(nonreal_profile(4, 5).validate());
    FieldProfile bad = nonreal_profile(4, 5);
    bad.level = Bound(3);  // not a power of two
    CHECK_THROWS_AS(bad.validate(), invalid_instance);
    FieldProfile gap = nonreal_profile(2, 4);  // p > s + 1
    CHECK_THROWS_AS(gap.validate(), invalid_instance);
    FieldProfile realbad = real_profile(2);
    realbad.level = Bound(2);  // real but finite level
    CHECK_THROWS_AS(realbad.validate(), invalid_instance);
    FieldProfile stale = nonreal_profile(2, 2);
    stale.rho[3] = Bound(1);  // index must vanish beyond the pythagoras number
    CHECK_THROWS_AS(stale.validate(), invalid_instance);
}

TEST_CASE("henselian residue lift branches") {
    const std::uint32_t ell = 2;
    // s(kappa) >= 2^(ell+1): index carries over
    FieldProfile high = nonreal_profile(8, 8);
    high.rho[ell] = Bound(3);
    CHECK(henselian_rho_bound(high, ell) == Bound(3));
    CHECK(henselian_branch(high, ell) == HenselBranch::carry_over);

    // s(kappa) = 2^ell: one extra step
    FieldProfile at = nonreal_profile(4, 5);
    at.rho[ell] = Bound(3);
    CHECK(henselian_rho_bound(at, ell) == Bound(4));
    CHECK(henselian_branch(at, ell) == HenselBranch::add_one);

    // small level: the index vanishes
    FieldProfile low = nonreal_profile(1, 1);
    CHECK(henselian_rho_bound(low, 1) == Bound(0));
    CHECK(henselian_branch(low, 1) == HenselBranch::vanish);

    // real residue field with small pythagoras number: vanishes as well
    FieldProfile rp = real_profile(2);
    rp.rho[1] = Bound(0);
    CHECK(henselian_rho_bound(rp, 1) == Bound(0));
    // real residue field with large pythagoras number: carries over, and an
    // unknown residue index propagates as infinity
    FieldProfile rr = real_profile(100);
    CHECK(henselian_rho_bound(rr, 1).is_inf());
}

TEST_CASE("henselian branches are exclusive and exhaustive over valid profiles") {
    for (std::uint32_t ell = 0; ell <= 4; ++ell) {
        for (int lv = 0; lv <= 6; ++lv) {
            for (std::uint64_t dp = 0; dp <= 1; ++dp) {
                FieldProfile f = nonreal_profile(std::uint64_t{1} << lv,
                                                 (std::uint64_t{1} << lv) + dp);
                CHECK_NOTHROW(henselian_branch(f, ell));  // exactly one branch classifies it
            }
        }
        for (std::uint64_t p = 1; p <= 40; ++p) {
            FieldProfile f = real_profile(p);
            if (p <= (std::uint64_t{1} << ell)) f.rho[ell] = Bound(0);
            CHECK_NOTHROW(henselian_branch(f, ell));
            const bool vanish = henselian_branch(f, ell) == HenselBranch::vanish;
            if (ell >= 1)
                CHECK(vanish == (p <= (std::uint64_t{1} << ell)));
            else
                CHECK(!vanish);
        }
    }
}

TEST_CASE("residue index bound is monotone in the residue index") {
    for (std::uint64_t r1 = 0; r1 < 6; ++r1) {
        for (std::uint64_t r2 = r1; r2 < 6; ++r2) {
            FieldProfile a = nonreal_profile(4, 5);
            a.rho[2] = Bound(r1);
            FieldProfile b = nonreal_profile(4, 5);
            b.rho[2] = Bound(r2);
            CHECK(henselian_rho_bound(a, 2) <= henselian_rho_bound(b, 2));
        }
    }
}

TEST_CASE("place sum bound") {
    CHECK(localglobal_sum_bound({}) == Bound(0));
    CHECK(localglobal_sum_bound({{SumEntry::Class::at_ell, Bound(0)},
                                 {SumEntry::Class::at_ell, Bound(0)}}) == Bound(2));
    CHECK(localglobal_sum_bound({{SumEntry::Class::above_ell, Bound(2)},
                                 {SumEntry::Class::at_ell, Bound(1)}}) == Bound(4));
    CHECK(localglobal_sum_bound({{SumEntry::Class::above_ell, Bound::infinity()}}).is_inf());
}

TEST_CASE("closed-form index bounds") {
    CHECK(rho_upper_bound({5, 0, true}, 1).value == 0);
    CHECK(rho_upper_bound({2, 3, false}, 1).value == 8);
    CHECK(rho_upper_bound({3, 2, true}, 1).value == 6);
    CHECK_THROWS_AS(rho_upper_bound({3, 2, true}, 0), invalid_instance);

    CHECK(index_bound({1, 0, true}).value == 1);
    CHECK(index_bound({1, 1, false}).value == 4);
    CHECK(index_bound({3, 2, true}).value == 64);
    CHECK(index_bound({30, 9, false}).value.has_value() == false);  // 2^300 stays symbolic
    CHECK(index_bound({30, 9, false}).exponent == 300);
    CHECK(index_bound({30, 9, false}).to_string() == "2^300");
}

TEST_CASE("audit trace") {
    for (std::uint64_t n = 0; n <= 6; ++n) {
        for (std::uint64_t g = 0; g <= 6; ++g) {
            for (bool real : {false, true}) {
                CurveDescriptor c{n, g, real};
                auto r = rho_upper_bound(c, 1);
                CAPTURE(n);
                CAPTURE(g);
                CAPTURE(real);
                CHECK(audit_trace(c, r));
                // a tampered trace fails the audit
                if (!r.trace.empty()) {
                    auto broken = r;
                    broken.trace.front().per_place += 1;
                    CHECK(!audit_trace(c, broken));
                }
            }
        }
    }
}

TEST_CASE("witness counts match the closed forms") {
    CHECK(optimal_witness_count(0, 7).count == 0);
    CHECK(optimal_witness_count(1, 1).count == 1);
    CHECK(optimal_witness_count(2, 3).count == 6);
    CHECK(nonreal_witness_count(0, 1) == 1);
    CHECK(nonreal_witness_count(0, 0) == 0);
    CHECK(nonreal_witness_count(3, 2) == 8);

    auto w = optimal_witness_count(2, 3);
    CHECK(w.tree.root.children.size() == 2);  // one Gauss extension per factor
    for (const auto& gauss : w.tree.root.children) {
        CHECK(gauss.rank == 1);
        CHECK(gauss.residue_level == 2);
        // chain of composites with strictly increasing rank, level preserved
        const WitnessNode* cur = &gauss;
        while (!cur->children.empty()) {
            REQUIRE(cur->children.size() == 1);
            CHECK(cur->children[0].rank == cur->rank + 1);
            CHECK(cur->children[0].residue_level == 2);
            cur = &cur->children[0];
        }
        CHECK(cur->rank == 3);
    }
}

TEST_CASE("real and nonreal index bounds differ by 2^n") {
    for (std::uint64_t n = 0; n <= 8; ++n)
        for (std::uint64_t g = 0; g <= 6; ++g) {
            auto real = index_bound({n, g, true});
            auto nonreal = index_bound({n, g, false});
            CHECK(real.exponent + n == nonreal.exponent);
            if (real.value && nonreal.value)
                CHECK((*real.value << n) == *nonreal.value);
        }
}

TEST_CASE("composite values concatenate and coarsen back") {
    CHECK(compose_valuation({{5}}, {{}}) == LexValue{{5}});
    CHECK(compose_valuation({{2}}, {{5}}) == LexValue{{2, 5}});
    CHECK(compose_valuation({{2}}, {{5, -1}}) == LexValue{{2, 5, -1}});
    CHECK_THROWS_AS(compose_valuation({{1, 2}}, {{3}}), invalid_instance);

    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            CHECK(dominant_coarsening(compose_valuation({{a}}, {{b}})) == LexValue{{a}});

    // lexicographic comparison of composites agrees with stagewise comparison
    for (long long a1 = -2; a1 <= 2; ++a1)
        for (long long b1 = -2; b1 <= 2; ++b1)
            for (long long a2 = -2; a2 <= 2; ++a2)
                for (long long b2 = -2; b2 <= 2; ++b2) {
                    const bool stagewise = a1 < a2 || (a1 == a2 && b1 < b2);
                    CHECK(lex_less(compose_valuation({{a1}}, {{b1}}),
                                   compose_valuation({{a2}}, {{b2}})) == stagewise);
                }
    CHECK_THROWS_AS(lex_less(LexValue{{1}}, LexValue{{1, 2}}), invalid_instance);
}
