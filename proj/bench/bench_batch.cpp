// Compares the serial reference batch driver against the OpenMP one on the
// same workloads and reports wall times and checksums.

#include <chrono>
#include <cstdio>
#include <string>

#include "riglab/batch.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double timed(riglab::BatchReport& out, int jobs, const std::string& which) {
    const auto start = Clock::now();
    if (which == "exhaustive") {
        riglab::ExhaustiveParams p;
        p.max_vertices = 5;
        out = riglab::run_exhaustive_batch(p, {}, jobs);
    } else if (which == "random") {
        out = riglab::run_random_ggraph_batch(4000, 99, {}, {}, jobs);
    } else {
        out = riglab::run_random_reduction_batch(600, 99, {}, {}, jobs);
    }
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

int main() {
    const int jobs = riglab::default_jobs();
    std::printf("%-12s %10s %10s %8s %8s  %s\n", "workload", "serial[s]", "omp[s]", "speedup",
                "workers", "match");
    bool all_match = true;
    for (const std::string which : {"exhaustive", "random", "reduction"}) {
        riglab::BatchReport serial, parallel;
        const double ts = timed(serial, 1, which);
        const double tp = timed(parallel, jobs, which);
        const bool match = serial.to_json().dump() == parallel.to_json().dump();
        all_match = all_match && match && serial.ok();
        std::printf("%-12s %10.3f %10.3f %8.2f %8d  %s\n", which.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, jobs, match ? "yes" : "NO");
    }
    return all_match ? 0 : 1;
}
