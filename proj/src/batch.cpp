#include "riglab/batch.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "riglab/json_io.hpp"

namespace riglab {

void TheoremCounter::add(Verdict v) {
    ++checked;
    switch (v) {
        case Verdict::holds: ++holds; break;
        case Verdict::holds_equality: ++holds_equality; break;
        case Verdict::not_applicable: ++not_applicable; break;
        case Verdict::violated: ++violated; break;
    }
}

void TheoremCounter::merge(const TheoremCounter& o) {
    checked += o.checked;
    holds += o.holds;
    holds_equality += o.holds_equality;
    not_applicable += o.not_applicable;
    violated += o.violated;
}

void BatchReport::record(const std::string& theorem, const std::string& instance_id,
                         const CheckOutcome& c, const nlohmann::json& reproducer) {
    counters[theorem].add(c.verdict);
    if (c.verdict == Verdict::holds_equality && !tight_witness.count(theorem))
        tight_witness.emplace(theorem, instance_id);
    if (c.verdict == Verdict::violated)
        violations.push_back(ViolationRecord{instance_id, theorem, c.lhs, c.rhs, c.note, reproducer});
}

void BatchReport::merge(BatchReport&& chunk) {
    instances += chunk.instances;
    for (auto& [name, counter] : chunk.counters) counters[name].merge(counter);
    for (auto& [name, id] : chunk.tight_witness) tight_witness.emplace(name, id);
    for (auto& v : chunk.violations) violations.push_back(std::move(v));
    for (auto& r : chunk.records) records.push_back(std::move(r));
    if (records.size() > 2000000)
        throw cap_exceeded("per-instance records requested on a batch that is too large");
}

nlohmann::json BatchReport::to_json() const {
    nlohmann::json out;
    out["version"] = kVersionString;
    out["mode"] = mode;
    out["config"] = config;
    out["instances"] = instances;
    nlohmann::json jc = nlohmann::json::object();
    for (const auto& [name, c] : counters)
        jc[name] = nlohmann::json{{"checked", c.checked},
                                  {"holds", c.holds},
                                  {"holds_equality", c.holds_equality},
                                  {"not_applicable", c.not_applicable},
                                  {"violated", c.violated}};
    out["theorems"] = std::move(jc);
    out["tight_witnesses"] = tight_witness;
    nlohmann::json jv = nlohmann::json::array();
    for (const auto& v : violations)
        jv.push_back(nlohmann::json{{"instance", v.instance_id},
                                    {"theorem", v.theorem},
                                    {"lhs", v.lhs},
                                    {"rhs", v.rhs},
                                    {"note", v.note},
                                    {"reproducer", v.reproducer}});
    out["violations"] = std::move(jv);
    if (!records.empty()) out["records"] = records;
    out["ok"] = ok();
    return out;
}

bool TheoremFilter::enabled(const std::string& name) const {
    if (names.empty()) return true;
    return std::find(names.begin(), names.end(), name) != names.end();
}

TheoremFilter TheoremFilter::parse(const std::string& csv) {
    TheoremFilter f;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto& g = ggraph_theorem_names();
        const auto& r = reduction_theorem_names();
        if (std::find(g.begin(), g.end(), item) == g.end() &&
            std::find(r.begin(), r.end(), item) == r.end())
            throw parse_error("unknown theorem name '" + item + "'");
        f.names.push_back(item);
    }
    return f;
}

const std::vector<std::string>& ggraph_theorem_names() { return symmetry_check_names(); }

const std::vector<std::string>& reduction_theorem_names() {
    static const std::vector<std::string> names{"cyan-count",     "subcurves", "betti-monotone",
                                                "nonrat",         "nonrat-empty",
                                                "betti-genus",    "genus-budget"};
    return names;
}

int default_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void check_ggraph_instance(const GGraph& gg, const std::string& id, const TheoremFilter& filter,
                           BatchReport& report) {
    ++report.instances;
    SymmetryAnalysis a = analyze_symmetries(gg);
    auto checks = run_symmetry_checks(gg, a);
    nlohmann::json reproducer;
    nlohmann::json verdicts = nlohmann::json::object();
    bool injected = filter.inject_violation && report.violations.empty();
    for (const auto& name : symmetry_check_names()) {
        if (!filter.enabled(name)) continue;
        CheckOutcome c = checks.at(name);
        if (injected && c.verdict != Verdict::violated) {
            c.verdict = Verdict::violated;
            c.note = "self-test: verdict negated by --selftest-inject";
            injected = false;
        }
        if (c.verdict == Verdict::violated && reproducer.is_null())
            reproducer = ggraph_to_json(gg);
        if (filter.emit_records) verdicts[name] = to_string(c.verdict);
        report.record(name, id, c, c.verdict == Verdict::violated ? reproducer : nlohmann::json());
    }
    if (filter.emit_records) {
        long long gv_min = gg.graph().order(), gv_max = 1;
        for (int v = 0; v < gg.graph().order(); ++v) {
            std::set<int> orbit;
            for (const auto& p : gg.group().elements) orbit.insert(p[static_cast<std::size_t>(v)]);
            gv_min = std::min(gv_min, static_cast<long long>(orbit.size()));
            gv_max = std::max(gv_max, static_cast<long long>(orbit.size()));
        }
        report.records.push_back(nlohmann::json{
            {"instance", id},
            {"quantities",
             nlohmann::json{{"betti", a.betti},
                            {"rigidities", a.rigidity_count()},
                            {"orbits", a.orbit_count()},
                            {"d", a.ro.min_orbit_size},
                            {"fixed", a.fixed_count()},
                            {"all_fixed", a.all_fixed()},
                            {"vertex_orbit_min", gv_min},
                            {"vertex_orbit_max", gv_max}}},
            {"verdicts", verdicts}});
    }
}

void check_reduction_instance(const ReductionGraph& rg, const std::string& id,
                              const TheoremFilter& filter, BatchReport& report) {
    ++report.instances;
    nlohmann::json reproducer;
    auto repro = [&]() {
        if (reproducer.is_null()) reproducer = reduction_to_json(rg);
        return reproducer;
    };
    bool injected = filter.inject_violation && report.violations.empty();
    nlohmann::json verdicts = nlohmann::json::object();
    auto record = [&](const std::string& name, CheckOutcome c) {
        if (!filter.enabled(name)) return;
        if (injected && c.verdict != Verdict::violated) {
            c.verdict = Verdict::violated;
            c.note = "self-test: verdict negated by --selftest-inject";
            injected = false;
        }
        if (filter.emit_records) verdicts[name] = to_string(c.verdict);
        report.record(name, id, c,
                      c.verdict == Verdict::violated ? repro() : nlohmann::json());
    };

    {
        CountCrossCheck cc = singular_rigidity_orbit_count(rg);
        CheckOutcome c;
        c.lhs = cc.from_labels;
        c.rhs = cc.from_orbits;
        c.verdict = cc.ok ? Verdict::holds_equality : Verdict::violated;
        c.note = cc.ok ? "" : "label count and orbit count disagree";
        record("cyan-count", c);
    }
    {
        SubcurveResult sc = rigidity_subcurves(rg);
        CheckOutcome c;
        c.lhs = static_cast<long long>(sc.candidates.size());
        c.rhs = sc.orbit_count;
        c.verdict = sc.ok ? Verdict::holds_equality : Verdict::violated;
        c.note = sc.ok ? "" : "subcurve candidates do not match rigidity orbits";
        record("subcurves", c);
    }
    {
        MonotoneResult m = betti_monotone_check(rg);
        CheckOutcome c;
        c.lhs = m.epi.betti_dst;
        c.rhs = m.epi.betti_src;
        c.verdict = m.verdict;
        if (m.epi.status != EpiStatus::ok) c.note = to_string(m.epi.status);
        if (!m.fibers_match) c.note += "; fiber sizes do not match subgroup indices";
        record("betti-monotone", c);
    }
    {
        NonratVerdict nr = check_nonrat_bound(rg, FieldProperty::nonreal);
        record("nonrat", CheckOutcome{nr.verdict, nr.lhs, nr.rhs, nr.note});
        NonratVerdict ne = check_nonrat_bound(rg, FieldProperty::always_true);
        record("nonrat-empty", CheckOutcome{ne.verdict, ne.lhs, ne.rhs, ne.note});
    }
    if (rg.declared().g_F) {
        LocalSquareBound ls = local_square_bound(rg);
        if (ls.budget) record("betti-genus", *ls.budget);
        BudgetVerdict b = genus_budget_check(rg, *rg.declared().g_F, rg.declared().real_F);
        CheckOutcome c;
        c.verdict = b.verdict;
        c.note = b.note;
        for (const auto& part : b.parts)
            if (part.applicable && !part.ok)
                c.note += "; " + part.name + ": " + std::to_string(part.lhs) + " > " +
                          std::to_string(part.rhs);
        record("genus-budget", c);
    }
    if (filter.emit_records) {
        long long weighted = 0;
        for (const auto& c : rg.components())
            weighted += rg.galois().index_of(c.stab) * c.genus;
        nlohmann::json q{{"betti", rg.underlying().graph().betti()},
                         {"betti_prime", rg.base_change().ggraph.graph().betti()},
                         {"components", rg.components().size()},
                         {"omega_rat_int", omega_rat_int(rg).size()},
                         {"weighted_genus", weighted},
                         {"group_order", rg.galois().group_order()}};
        if (rg.declared().g_F) q["g_F"] = *rg.declared().g_F;
        report.records.push_back(
            nlohmann::json{{"instance", id}, {"quantities", q}, {"verdicts", verdicts}});
    }
}

namespace {

template <typename MakeChunkReport>
BatchReport run_chunked(std::size_t nchunks, int jobs, MakeChunkReport&& make) {
    std::vector<BatchReport> partial(nchunks);
    // exceptions must not escape the parallel region; carry the first one out
    std::exception_ptr failure;
    auto guarded = [&](std::size_t i) {
        try {
            partial[i] = make(i);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(riglab_batch_failure)
#endif
            {
                if (failure == nullptr) failure = std::current_exception();
            }
        }
    };
#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (std::size_t i = 0; i < nchunks; ++i) guarded(i);
    } else {
        for (std::size_t i = 0; i < nchunks; ++i) guarded(i);
    }
#else
    (void)jobs;
    for (std::size_t i = 0; i < nchunks; ++i) guarded(i);
#endif
    if (failure) std::rethrow_exception(failure);
    BatchReport total;
    for (auto& p : partial) total.merge(std::move(p));
    return total;
}

} // namespace

BatchReport run_exhaustive_batch(const ExhaustiveParams& p, const TheoremFilter& filter, int jobs) {
    if (filter.emit_records) {
        std::uint64_t codes = 0;
        for (int n = 1; n <= p.max_vertices; ++n) codes += exhaustive_code_count(n, p.max_mult);
        if (codes > 1000000)
            throw cap_exceeded("per-instance records requested on an exhaustive sweep of " +
                               std::to_string(codes) + " graph codes; use a smaller cap");
    }
    const auto chunks = exhaustive_chunks(p, 1 << 13);
    BatchReport total = run_chunked(chunks.size(), jobs, [&](std::size_t i) {
        BatchReport part;
        for_each_in_chunk(p, chunks[i], [&](const GGraph& gg, const std::string& id) {
            check_ggraph_instance(gg, id, filter, part);
        });
        return part;
    });
    total.mode = "exhaustive";
    total.config = nlohmann::json{{"max_vertices", p.max_vertices},
                                  {"max_mult", p.max_mult},
                                  {"group_order_cap", p.group_order_cap}};
    return total;
}

BatchReport run_random_ggraph_batch(std::uint64_t count, std::uint64_t seed,
                                    const RandomGGraphParams& p, const TheoremFilter& filter,
                                    int jobs) {
    const std::uint64_t chunk_size = 64;
    const std::size_t nchunks = static_cast<std::size_t>((count + chunk_size - 1) / chunk_size);
    BatchReport total = run_chunked(nchunks, jobs, [&](std::size_t i) {
        BatchReport part;
        const std::uint64_t lo = static_cast<std::uint64_t>(i) * chunk_size;
        const std::uint64_t hi = std::min(count, lo + chunk_size);
        for (std::uint64_t k = lo; k < hi; ++k) {
            GGraph gg = random_ggraph(seed + k, p);
            check_ggraph_instance(gg, "r" + std::to_string(seed + k), filter, part);
        }
        return part;
    });
    total.mode = "random-ggraph";
    total.config = nlohmann::json{{"count", count},
                                  {"seed", seed},
                                  {"max_vertices", p.max_vertices},
                                  {"max_mult", p.max_mult},
                                  {"group_order_cap", p.group_order_cap}};
    return total;
}

BatchReport run_random_reduction_batch(std::uint64_t count, std::uint64_t seed,
                                       const RandomReductionParams& p, const TheoremFilter& filter,
                                       int jobs) {
    const std::uint64_t chunk_size = 16;
    const std::size_t nchunks = static_cast<std::size_t>((count + chunk_size - 1) / chunk_size);
    BatchReport total = run_chunked(nchunks, jobs, [&](std::size_t i) {
        BatchReport part;
        const std::uint64_t lo = static_cast<std::uint64_t>(i) * chunk_size;
        const std::uint64_t hi = std::min(count, lo + chunk_size);
        for (std::uint64_t k = lo; k < hi; ++k) {
            ReductionGraph rg = random_reduction_graph(seed + k, p);
            check_reduction_instance(rg, "m" + std::to_string(seed + k), filter, part);
        }
        return part;
    });
    total.mode = "random-reduction";
    total.config = nlohmann::json{{"count", count},
                                  {"seed", seed},
                                  {"group_order_cap", p.group_order_cap},
                                  {"max_components", p.max_components}};
    return total;
}

} // namespace riglab
