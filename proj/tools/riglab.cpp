// Command-line front end: instance analysis, verification batches, index
// bound calculators, instance generation.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "riglab/batch.hpp"
#include "riglab/json_io.hpp"
#include "riglab/pfister.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitViolation = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw riglab::parse_error("cannot write '" + out_path + "'");
        out << text << "\n";
    }
}

std::string verdict_line(const std::string& name, const riglab::CheckOutcome& c) {
    std::string line = name + ": " + riglab::to_string(c.verdict);
    if (c.verdict != riglab::Verdict::not_applicable)
        line += " (" + std::to_string(c.lhs) + " <= " + std::to_string(c.rhs) + ")";
    if (!c.note.empty()) line += " [" + c.note + "]";
    return line;
}

int analyze_ggraph(const riglab::GGraph& gg, const std::string& format, const std::string& out) {
    using namespace riglab;
    SymmetryAnalysis a = analyze_symmetries(gg);
    auto checks = run_symmetry_checks(gg, a);

    nlohmann::json j;
    j["kind"] = "ggraph";
    j["betti"] = a.betti;
    j["group_order"] = gg.group().order();
    nlohmann::json rig = nlohmann::json::array();
    for (const auto& r : a.ro.rigidities) {
        nlohmann::json one;
        std::vector<std::string> verts;
        for (int v : r.vertices) verts.push_back(gg.graph().id_of(v));
        one["vertices"] = verts;
        std::vector<std::string> gens;
        for (auto e : r.rigidifier)
            gens.push_back(cycle_notation(gg.group().elements[e], gg.graph().ids()));
        one["rigidifier"] = gens;
        one["rigidifier_order"] = r.rigidifier.size();
        one["singular"] = r.singular;
        rig.push_back(std::move(one));
    }
    j["rigidities"] = std::move(rig);
    j["orbits"] = a.ro.orbits;
    j["min_orbit_size"] = a.ro.min_orbit_size;
    j["fixed_rigidities"] = a.ro.fixed;
    nlohmann::json jc = nlohmann::json::object();
    bool violated = false;
    for (const auto& [name, c] : checks) {
        jc[name] = nlohmann::json{{"verdict", to_string(c.verdict)},
                                  {"lhs", c.lhs},
                                  {"rhs", c.rhs},
                                  {"note", c.note}};
        violated = violated || c.verdict == Verdict::violated;
    }
    j["checks"] = std::move(jc);

    if (format == "json") {
        emit(j.dump(2), out);
    } else {
        std::string text;
        text += "kind: ggraph\n";
        text += "betti: " + std::to_string(a.betti) + "\n";
        text += "group order: " + std::to_string(gg.group().order()) + "\n";
        text += "rigidities: " + std::to_string(a.ro.rigidities.size()) + "\n";
        for (const auto& r : a.ro.rigidities) {
            text += "  {";
            for (std::size_t i = 0; i < r.vertices.size(); ++i)
                text += (i ? "," : "") + gg.graph().id_of(r.vertices[i]);
            text += "} rigidifier order " + std::to_string(r.rigidifier.size());
            text += r.singular ? " (singular)\n" : "\n";
        }
        text += "orbits: " + std::to_string(a.ro.orbits.size()) +
                ", d: " + std::to_string(a.ro.min_orbit_size) +
                ", fixed: " + std::to_string(a.ro.fixed.size()) + "\n";
        for (const auto& [name, c] : checks) text += verdict_line(name, c) + "\n";
        text.pop_back();
        emit(text, out);
    }
    return violated ? kExitViolation : kExitOk;
}

int analyze_reduction(const riglab::ReductionGraph& rg, const std::string& format,
                      const std::string& out) {
    using namespace riglab;
    riglab::BatchReport report;
    riglab::TheoremFilter all;
    check_reduction_instance(rg, "instance", all, report);

    const auto& bc = rg.base_change();
    nlohmann::json j;
    j["kind"] = "reduction";
    j["betti"] = rg.underlying().graph().betti();
    j["betti_prime"] = bc.ggraph.graph().betti();
    j["omega_rat_int"] = omega_rat_int(rg);
    j["omega_nonreal"] = omega_with_property(rg, FieldProperty::nonreal);
    CountCrossCheck cc = singular_rigidity_orbit_count(rg);
    j["singular_rigidity_orbits"] =
        nlohmann::json{{"value", cc.value}, {"from_labels", cc.from_labels},
                       {"from_orbits", cc.from_orbits}, {"ok", cc.ok}};
    SubcurveResult sc = rigidity_subcurves(rg);
    nlohmann::json js = nlohmann::json::array();
    for (const auto& cand : sc.candidates)
        js.push_back(nlohmann::json{{"components", cand.components},
                                    {"label", rg.galois().at(cand.label).id},
                                    {"singular", cand.singular}});
    j["subcurves"] = nlohmann::json{{"candidates", js},
                                    {"orbit_count", sc.orbit_count},
                                    {"singular_orbit_count", sc.singular_orbit_count},
                                    {"ok", sc.ok}};
    j["base_change"] = nlohmann::json{{"vertices", bc.ggraph.graph().order()},
                                      {"cyan", bc.cyan_vertices.size()},
                                      {"purple", bc.purple_vertices.size()},
                                      {"group_order", bc.ggraph.group().order()}};
    LocalSquareBound ls = local_square_bound(rg);
    j["local_square_log2"] = ls.beta_prime;
    j["report"] = report.to_json();

    if (format == "json") {
        emit(j.dump(2), out);
    } else {
        auto joined = [](const std::vector<std::string>& ids) {
            std::string s;
            for (const auto& id : ids) s += (s.empty() ? "" : ",") + id;
            return s.empty() ? std::string("-") : s;
        };
        std::string text;
        text += "kind: reduction\n";
        text += "betti: " + std::to_string(rg.underlying().graph().betti()) +
                ", betti': " + std::to_string(bc.ggraph.graph().betti()) + "\n";
        text += "omega_rat_int: {" + joined(omega_rat_int(rg)) + "}, omega_nonreal: {" +
                joined(omega_with_property(rg, FieldProperty::nonreal)) + "}\n";
        text += "base change: " + std::to_string(bc.ggraph.graph().order()) + " vertices, group order " +
                std::to_string(bc.ggraph.group().order()) + "\n";
        text += "N (non-rational components): " + std::to_string(cc.value) +
                (cc.ok ? " (cross-check ok)\n" : " (CROSS-CHECK MISMATCH)\n");
        text += "subcurves: " + std::to_string(sc.candidates.size()) +
                (sc.ok ? " (matches orbits)\n" : " (MISMATCH)\n");
        text += "local square bound: 2^" + std::to_string(ls.beta_prime) + "\n";
        for (const auto& [name, counter] : report.counters)
            text += name + ": " + (counter.violated ? "violated" : "holds") + "\n";
        text.pop_back();
        emit(text, out);
    }
    return report.ok() ? kExitOk : kExitViolation;
}

int analyze_bipartite(const riglab::BipartiteDualGraph& bg, const std::string& format,
                      const std::string& out) {
    nlohmann::json j;
    j["kind"] = "bipartite";
    j["betti"] = bg.graph().betti();
    j["cyan"] = bg.cyan().size();
    j["purple"] = bg.purple().size();
    j["purple_degrees_two"] = bg.purple_degrees_two();
    if (format == "json")
        emit(j.dump(2), out);
    else
        emit("kind: bipartite\nbetti: " + std::to_string(bg.graph().betti()), out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"riglab: rigidity bounds of group actions on multigraphs, base-change "
                 "combinatorics of dual reduction graphs, and Pfister index bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    int jobs = riglab::default_jobs();
    app.add_option("--jobs", jobs, "Worker count for batch verification")
        ->envname("RIGLAB_JOBS")
        ->check(CLI::PositiveNumber);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Analyze one instance file");
    std::string analyze_path;
    analyze->add_option("path", analyze_path, "Instance JSON file")->required();
    std::string analyze_out;
    analyze->add_option("--out", analyze_out, "Write the report here instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "Run verification batches");
    int exhaustive_n = 0;
    verify->add_option("--exhaustive", exhaustive_n, "All connected multigraphs up to N vertices");
    long long max_mult = 2;
    verify->add_option("--max-mult", max_mult, "Edge multiplicity cap for --exhaustive");
    std::size_t group_cap = 0;
    auto* group_cap_opt =
        verify->add_option("--group-cap", group_cap,
                           "Group order cap (default 48 exhaustive, 24 random, 12 reduction)")
            ->check(CLI::PositiveNumber);
    std::uint64_t random_n = 0;
    verify->add_option("--random", random_n, "Seeded random group-action instances");
    std::uint64_t random_reduction_n = 0;
    verify->add_option("--random-reduction", random_reduction_n,
                       "Seeded random reduction-graph instances");
    std::uint64_t seed = 1;
    auto* seed_opt = verify->add_option("--seed", seed, "Seed, required for randomized batches");
    std::string theorems;
    verify->add_option("--theorems", theorems, "Comma-separated check names (default: all)");
    std::string report_path;
    verify->add_option("--report", report_path, "Write the JSON report here");
    bool selftest_inject = false;
    verify->add_flag("--selftest-inject", selftest_inject,
                     "Harness self-test: negate one verdict and expect a violation");
    bool emit_records = false;
    verify->add_flag("--records", emit_records,
                     "Include per-instance records in the report (meant for random batches)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Pfister index bound calculator");
    std::uint64_t bn = 0, bg = 0;
    bounds->add_option("--n", bn, "Rank of the henselian base valuation")->required();
    bounds->add_option("--genus", bg, "Genus of the function field");
    bool breal = false, bnonreal = false;
    bounds->add_flag("--real", breal, "Real function field");
    bounds->add_flag("--nonreal", bnonreal, "Nonreal function field");
    std::uint32_t bell = 1;
    bounds->add_option("--ell", bell, "Pfister index level (default 1)");
    bool bwitness = false;
    bounds->add_flag("--witness", bwitness, "Emit the optimality witness tree as JSON");
    bool bindex = false;
    bounds->add_flag("--index", bindex, "Emit the 2^rho index form");
    std::string bounds_out;
    bounds->add_option("--out", bounds_out, "Write output here instead of stdout");

    // generate
    auto* generate = app.add_subcommand("generate", "Emit random instances as JSON");
    std::string gen_kind = "ggraph";
    generate->add_option("--kind", gen_kind, "ggraph or reduction")
        ->check(CLI::IsMember({"ggraph", "reduction"}));
    std::uint64_t gen_seed = 1;
    generate->add_option("--seed", gen_seed, "Seed");
    std::uint64_t gen_count = 1;
    generate->add_option("--count", gen_count, "Instance count");
    std::string gen_out;
    generate->add_option("--out", gen_out, "Write instances here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            riglab::json j = riglab::load_json_file(analyze_path);
            switch (riglab::detect_instance_kind(j)) {
                case riglab::InstanceKind::reduction:
                    return analyze_reduction(riglab::reduction_from_json(j), format, analyze_out);
                case riglab::InstanceKind::bipartite:
                    return analyze_bipartite(riglab::bipartite_from_json(j), format, analyze_out);
                case riglab::InstanceKind::ggraph:
                    return analyze_ggraph(riglab::ggraph_from_json(j), format, analyze_out);
            }
        }

        if (*verify) {
            riglab::TheoremFilter filter = riglab::TheoremFilter::parse(theorems);
            filter.inject_violation = selftest_inject;
            filter.emit_records = emit_records;
            if ((random_n > 0 || random_reduction_n > 0) && seed_opt->count() == 0)
                throw riglab::parse_error("randomized runs require an explicit --seed");
            riglab::BatchReport total;
            total.mode = "verify";
            if (exhaustive_n > 0) {
                riglab::ExhaustiveParams p;
                p.max_vertices = exhaustive_n;
                p.max_mult = max_mult;
                if (group_cap_opt->count()) p.group_order_cap = group_cap;
                total.merge(riglab::run_exhaustive_batch(p, filter, jobs));
            }
            if (random_n > 0) {
                riglab::RandomGGraphParams p;
                if (group_cap_opt->count()) p.group_order_cap = group_cap;
                total.merge(riglab::run_random_ggraph_batch(random_n, seed, p, filter, jobs));
            }
            if (random_reduction_n > 0) {
                riglab::RandomReductionParams p;
                if (group_cap_opt->count()) p.group_order_cap = group_cap;
                total.merge(
                    riglab::run_random_reduction_batch(random_reduction_n, seed, p, filter, jobs));
            }
            total.config["seed"] = seed;
            const std::string text = total.to_json().dump(2);
            emit(text, report_path);
            if (!total.ok()) {
                std::cerr << "violations: " << total.violations.size() << "\n";
                for (const auto& v : total.violations) {
                    std::cerr << "reproducer for " << v.instance_id << " (" << v.theorem << "):\n"
                              << v.reproducer.dump(2) << "\n";
                    break;  // the first is enough to replay
                }
                return kExitViolation;
            }
            return kExitOk;
        }

        if (*bounds) {
            if (breal == bnonreal)
                throw riglab::parse_error("choose exactly one of --real / --nonreal");
            riglab::pfister::CurveDescriptor c{bn, bg, breal};
            riglab::pfister::RhoBoundResult r = riglab::pfister::rho_upper_bound(c, bell);
            riglab::pfister::PowerOfTwo idx = riglab::pfister::index_bound(c);
            std::string text;
            if (format == "json") {
                nlohmann::json j;
                j["rho_ell"] = bell;
                j["rho_bound"] = r.value;
                j["index_exponent"] = idx.exponent;
                if (idx.value) j["index_value"] = *idx.value;
                nlohmann::json steps = nlohmann::json::array();
                for (const auto& s : r.trace)
                    steps.push_back(nlohmann::json{{"rank", s.rank},
                                                   {"places", s.places},
                                                   {"per_place", s.per_place},
                                                   {"subtotal", s.subtotal}});
                j["trace"] = std::move(steps);
                if (bwitness) {
                    auto w = breal ? riglab::pfister::optimal_witness_count(bg, bn)
                                   : riglab::pfister::WitnessCount{};
                    if (breal) j["witness"] = riglab::witness_tree_to_json(w.tree);
                    else j["witness_count"] = riglab::pfister::nonreal_witness_count(bg, bn);
                }
                text = j.dump(2);
            } else {
                text = "rho_" + std::to_string(bell) + " <= " + std::to_string(r.value) +
                       ", index <= 2^" + std::to_string(idx.exponent);
                if (bindex && idx.value) text += " = " + std::to_string(*idx.value);
                if (bwitness && breal) {
                    auto w = riglab::pfister::optimal_witness_count(bg, bn);
                    text += "\n" + riglab::witness_tree_to_json(w.tree).dump(2);
                }
                if (bwitness && !breal)
                    text += "\nwitness count: " +
                            std::to_string(riglab::pfister::nonreal_witness_count(bg, bn));
            }
            emit(text, bounds_out);
            return kExitOk;
        }

        if (*generate) {
            nlohmann::json arr = nlohmann::json::array();
            for (std::uint64_t k = 0; k < gen_count; ++k) {
                if (gen_kind == "ggraph")
                    arr.push_back(riglab::ggraph_to_json(riglab::random_ggraph(gen_seed + k, {})));
                else
                    arr.push_back(
                        riglab::reduction_to_json(riglab::random_reduction_graph(gen_seed + k, {})));
            }
            emit(gen_count == 1 ? arr.front().dump(2) : arr.dump(2), gen_out);
            return kExitOk;
        }
    } catch (const riglab::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const riglab::invalid_instance& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const riglab::cross_check_error& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}
