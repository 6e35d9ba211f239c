#include <doctest.h>

#include "riglab/batch.hpp"

using namespace riglab;

TEST_CASE("serial and parallel batches produce identical reports") {
    ExhaustiveParams p;
    p.max_vertices = 4;
    TheoremFilter all;
    BatchReport serial = run_exhaustive_batch(p, all, 1);
    BatchReport parallel = run_exhaustive_batch(p, all, 4);
    CHECK(serial.to_json().dump() == parallel.to_json().dump());
    CHECK(serial.ok());

    BatchReport rs = run_random_ggraph_batch(150, 11, {}, all, 1);
    BatchReport rp = run_random_ggraph_batch(150, 11, {}, all, 3);
    CHECK(rs.to_json().dump() == rp.to_json().dump());
    CHECK(rs.instances == 150);

    BatchReport ms = run_random_reduction_batch(40, 23, {}, all, 1);
    BatchReport mp = run_random_reduction_batch(40, 23, {}, all, 2);
    CHECK(ms.to_json().dump() == mp.to_json().dump());
    CHECK(ms.ok());
}

TEST_CASE("theorem filter restricts the checks") {
    TheoremFilter only_tree = TheoremFilter::parse("tree,border");
    BatchReport r = run_random_ggraph_batch(20, 3, {}, only_tree, 1);
    CHECK(r.counters.count("tree") == 1);
    CHECK(r.counters.count("border") == 1);
    CHECK(r.counters.count("main") == 0);
    CHECK_THROWS_AS(TheoremFilter::parse("unknown-theorem"), parse_error);
}

TEST_CASE("injected violation trips the harness") {
    TheoremFilter inject;
    inject.inject_violation = true;
    BatchReport r = run_random_ggraph_batch(5, 3, {}, inject, 1);
    CHECK(!r.ok());
    CHECK(!r.violations.empty());
    CHECK(!r.violations.front().reproducer.is_null());

    BatchReport m = run_random_reduction_batch(3, 3, {}, inject, 1);
    CHECK(!m.ok());
}

TEST_CASE("tight witnesses recorded for the fixed-rigidity and border bounds") {
    ExhaustiveParams p;
    p.max_vertices = 4;  // the reflected 4-cycle appears here
    BatchReport r = run_exhaustive_batch(p, {}, 2);
    CHECK(r.tight_witness.count("fixpoint") == 1);
    CHECK(r.tight_witness.count("border") == 1);
}
