#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "riglab/generate.hpp"
#include "riglab/theorems.hpp"

namespace riglab {

inline constexpr const char* kVersionString = "riglab 0.1.0";

struct TheoremCounter {
    std::uint64_t checked = 0;
    std::uint64_t holds = 0;
    std::uint64_t holds_equality = 0;
    std::uint64_t not_applicable = 0;
    std::uint64_t violated = 0;

    void add(Verdict v);
    void merge(const TheoremCounter& o);
};

struct ViolationRecord {
    std::string instance_id;
    std::string theorem;
    long long lhs = 0;
    long long rhs = 0;
    std::string note;
    nlohmann::json reproducer;
};

/// Aggregated result of a verification batch. Reports are built from
/// per-chunk partials merged in enumeration order, so the output is
/// byte-identical regardless of the worker count.
struct BatchReport {
    std::string mode;
    nlohmann::json config;
    std::uint64_t instances = 0;
    std::map<std::string, TheoremCounter> counters;
    std::map<std::string, std::string> tight_witness;  // first instance with equality
    std::vector<ViolationRecord> violations;
    std::vector<nlohmann::json> records;  // per-instance records when requested

    bool ok() const { return violations.empty(); }
    void record(const std::string& theorem, const std::string& instance_id, const CheckOutcome& c,
                const nlohmann::json& reproducer);
    void merge(BatchReport&& chunk);
    nlohmann::json to_json() const;
};

/// Which checks a batch runs. Empty set = all.
struct TheoremFilter {
    std::vector<std::string> names;
    bool inject_violation = false;  // harness self-test: negate one verdict
    bool emit_records = false;      // per-instance records; meant for random batches

    bool enabled(const std::string& name) const;
    static TheoremFilter parse(const std::string& csv);
};

/// Names understood by the filter for the two instance families.
const std::vector<std::string>& ggraph_theorem_names();
const std::vector<std::string>& reduction_theorem_names();

/// Every connected multigraph within the caps, every subgroup of its
/// multiplicity-preserving permutations, all five bound checks.
BatchReport run_exhaustive_batch(const ExhaustiveParams& p, const TheoremFilter& filter, int jobs);

/// Seeded random group actions through the five bound checks.
BatchReport run_random_ggraph_batch(std::uint64_t count, std::uint64_t seed,
                                    const RandomGGraphParams& p, const TheoremFilter& filter,
                                    int jobs);

/// Seeded random reduction graphs through the base-change cross-checks,
/// the count bounds, and the genus-budget validators.
BatchReport run_random_reduction_batch(std::uint64_t count, std::uint64_t seed,
                                       const RandomReductionParams& p, const TheoremFilter& filter,
                                       int jobs);

/// Checks for one instance, recorded into a report (shared by the batch
/// drivers and the analyze command).
void check_ggraph_instance(const GGraph& gg, const std::string& id, const TheoremFilter& filter,
                           BatchReport& report);
void check_reduction_instance(const ReductionGraph& rg, const std::string& id,
                              const TheoremFilter& filter, BatchReport& report);

int default_jobs();

} // namespace riglab
