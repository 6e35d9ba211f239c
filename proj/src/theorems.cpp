#include "riglab/theorems.hpp"

#include <algorithm>
#include <set>

namespace riglab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::holds_equality: return "holds-equality";
        case Verdict::not_applicable: return "not-applicable";
        case Verdict::violated: return "violated";
    }
    return "?";
}

const char* to_string(EpiStatus s) {
    switch (s) {
        case EpiStatus::ok: return "ok";
        case EpiStatus::vmap_invalid: return "vmap-invalid";
        case EpiStatus::color_violation: return "color-violation";
        case EpiStatus::not_morphism: return "not-morphism";
        case EpiStatus::not_surjective: return "not-surjective";
        case EpiStatus::missing_edge_lift: return "missing-edge-lift";
        case EpiStatus::purple_degree: return "purple-degree";
        case EpiStatus::src_disconnected: return "src-disconnected";
        case EpiStatus::hypothesis_violated: return "hypothesis-violated";
        case EpiStatus::conclusion_violated: return "conclusion-violated";
    }
    return "?";
}

namespace {

CheckOutcome bounded(long long lhs, long long rhs, std::string note = {}) {
    CheckOutcome out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.note = std::move(note);
    out.verdict = lhs < rhs ? Verdict::holds : (lhs == rhs ? Verdict::holds_equality : Verdict::violated);
    return out;
}

} // namespace

SymmetryAnalysis analyze_symmetries(const GGraph& gg) {
    SymmetryAnalysis a;
    a.betti = gg.graph().betti();
    a.ro = rigidity_orbits(gg);
    return a;
}

CheckOutcome check_tree_bound(const SymmetryAnalysis& a) {
    if (a.betti != 0) return CheckOutcome{Verdict::not_applicable, 0, 0, "not a tree"};
    return bounded(a.rigidity_count(), 1);
}

CheckOutcome check_fixed_rigidity_bound(const SymmetryAnalysis& a) {
    if (a.ro.fixed.empty())
        return CheckOutcome{Verdict::not_applicable, 0, 0, "no rigidity is fixed setwise"};
    return bounded(a.rigidity_count(), a.betti + 1);
}

CheckOutcome check_orbit_avoidance_bound(const GGraph& gg, const SymmetryAnalysis& a, int v) {
    if (v < 0 || v >= gg.graph().order())
        throw invalid_instance("vertex index out of range");
    std::set<int> orbit;
    for (const auto& p : gg.group().elements) orbit.insert(p[static_cast<std::size_t>(v)]);
    long long avoiding = 0;
    for (const auto& r : a.ro.rigidities) {
        bool meets = false;
        for (int w : r.vertices)
            if (orbit.count(w)) {
                meets = true;
                break;
            }
        if (!meets) ++avoiding;
    }
    return bounded(avoiding, a.betti + static_cast<long long>(orbit.size()) - 1,
                   "v=" + gg.graph().id_of(v));
}

CheckOutcome check_orbit_avoidance_all(const GGraph& gg, const SymmetryAnalysis& a) {
    CheckOutcome worst{Verdict::not_applicable, 0, 0, ""};
    bool tight = false;
    for (int v = 0; v < gg.graph().order(); ++v) {
        CheckOutcome c = check_orbit_avoidance_bound(gg, a, v);
        if (c.verdict == Verdict::violated) return c;
        if (c.verdict == Verdict::holds_equality) tight = true;
        if (worst.verdict == Verdict::not_applicable || c.rhs - c.lhs < worst.rhs - worst.lhs)
            worst = c;
    }
    if (worst.verdict != Verdict::not_applicable && tight) worst.verdict = Verdict::holds_equality;
    return worst;
}

CheckOutcome check_rigidity_count_bound(const SymmetryAnalysis& a) {
    if (a.ro.rigidities.empty())
        return CheckOutcome{Verdict::not_applicable, 0, 0, "no rigidities"};
    const long long d = static_cast<long long>(a.ro.min_orbit_size);
    CheckOutcome count = bounded(a.rigidity_count(), a.betti + 2 * d - 1, "d=" + std::to_string(d));
    // orbit form checked exactly: d*|orbits| <= betti - 1 + 2d
    if (d * a.orbit_count() > a.betti - 1 + 2 * d) {
        count.verdict = Verdict::violated;
        count.note += "; orbit form violated: d*orbits=" + std::to_string(d * a.orbit_count()) +
                      " > " + std::to_string(a.betti - 1 + 2 * d);
    }
    return count;
}

CheckOutcome check_orbit_count_bound(const SymmetryAnalysis& a) {
    CheckOutcome out = bounded(a.orbit_count(), a.betti + 1);
    if (out.verdict == Verdict::holds_equality) {
        const bool disjunction = a.all_fixed() || (a.betti == 1 && a.ro.fixed.empty());
        if (!disjunction) {
            out.verdict = Verdict::violated;
            out.note = "equality without the fixed-set disjunction";
        } else {
            out.note = a.all_fixed() ? "equality, all rigidities fixed" : "equality, betti=1, none fixed";
        }
    }
    return out;
}

std::map<std::string, CheckOutcome> run_symmetry_checks(const GGraph& gg, const SymmetryAnalysis& a) {
    std::map<std::string, CheckOutcome> out;
    out.emplace("tree", check_tree_bound(a));
    out.emplace("fixpoint", check_fixed_rigidity_bound(a));
    out.emplace("orbit-avoid", check_orbit_avoidance_all(gg, a));
    out.emplace("main", check_rigidity_count_bound(a));
    out.emplace("border", check_orbit_count_bound(a));
    return out;
}

EpiResult check_betti_epimorphism(const BipartiteDualGraph& src, const BipartiteDualGraph& dst,
                                  const std::map<std::string, std::string>& vmap) {
    EpiResult r;
    const MultiGraph& gs = src.graph();
    const MultiGraph& gd = dst.graph();
    r.betti_src = gs.betti();
    r.betti_dst = gd.betti();

    auto fail = [&](EpiStatus s, std::string detail) {
        r.status = s;
        r.verdict = (s == EpiStatus::conclusion_violated) ? Verdict::violated : Verdict::not_applicable;
        r.detail = std::move(detail);
        return r;
    };

    // total color-respecting vertex map
    std::vector<int> img(static_cast<std::size_t>(gs.order()), -1);
    for (int v = 0; v < gs.order(); ++v) {
        auto it = vmap.find(gs.id_of(v));
        if (it == vmap.end())
            return fail(EpiStatus::vmap_invalid, "no image for vertex '" + gs.id_of(v) + "'");
        if (!gd.has_vertex(it->second))
            return fail(EpiStatus::vmap_invalid, "image '" + it->second + "' is not a target vertex");
        int w = gd.index_of(it->second);
        if (src.is_cyan(v) != dst.is_cyan(w))
            return fail(EpiStatus::color_violation,
                        "'" + gs.id_of(v) + "' -> '" + it->second + "' crosses colors");
        img[static_cast<std::size_t>(v)] = w;
    }

    // morphism: source edges map onto target edges
    for (const auto& e : gs.edges()) {
        int a = img[static_cast<std::size_t>(e.u)];
        int b = img[static_cast<std::size_t>(e.v)];
        if (gd.mult(a, b) == 0)
            return fail(EpiStatus::not_morphism, "edge {" + gs.id_of(e.u) + "," + gs.id_of(e.v) +
                                                     "} has no image edge");
    }

    // surjectivity on vertices
    std::vector<long long> fiber(static_cast<std::size_t>(gd.order()), 0);
    for (int v = 0; v < gs.order(); ++v) ++fiber[static_cast<std::size_t>(img[static_cast<std::size_t>(v)])];
    for (int w = 0; w < gd.order(); ++w)
        if (fiber[static_cast<std::size_t>(w)] == 0)
            return fail(EpiStatus::not_surjective, "vertex '" + gd.id_of(w) + "' has empty fiber");

    // every target edge lifts to some source edge
    for (const auto& e : gd.edges()) {
        bool lifted = false;
        for (const auto& es : gs.edges()) {
            int a = img[static_cast<std::size_t>(es.u)];
            int b = img[static_cast<std::size_t>(es.v)];
            if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) {
                lifted = true;
                break;
            }
        }
        if (!lifted)
            return fail(EpiStatus::missing_edge_lift, "edge {" + gd.id_of(e.u) + "," + gd.id_of(e.v) +
                                                          "} has no preimage edge");
    }

    for (int v = 0; v < gs.order(); ++v)
        if (!src.is_cyan(v) && gs.degree(v) != 2)
            return fail(EpiStatus::purple_degree, "source purple '" + gs.id_of(v) + "' has degree " +
                                                      std::to_string(gs.degree(v)));
    for (int w = 0; w < gd.order(); ++w)
        if (!dst.is_cyan(w) && gd.degree(w) != 2)
            return fail(EpiStatus::purple_degree, "target purple '" + gd.id_of(w) + "' has degree " +
                                                      std::to_string(gd.degree(w)));

    if (!gs.connected())
        return fail(EpiStatus::src_disconnected, "source graph is not connected");

    for (int w = 0; w < gd.order(); ++w) {
        if (dst.is_cyan(w))
            r.e_gamma.emplace(gd.id_of(w), fiber[static_cast<std::size_t>(w)]);
        else
            r.i_x.emplace(gd.id_of(w), fiber[static_cast<std::size_t>(w)]);
    }
    for (int w = 0; w < gd.order(); ++w) {
        if (dst.is_cyan(w)) continue;
        long long twice = 0;
        for (const auto& [nb, m] : gd.adjacency()[static_cast<std::size_t>(w)]) twice += m * fiber[static_cast<std::size_t>(nb)];
        r.e_x_twice.emplace(gd.id_of(w), twice);
        for (const auto& [nb, m] : gd.adjacency()[static_cast<std::size_t>(w)]) {
            if (fiber[static_cast<std::size_t>(w)] < fiber[static_cast<std::size_t>(nb)])
                return fail(EpiStatus::hypothesis_violated,
                            "i_x=" + std::to_string(fiber[static_cast<std::size_t>(w)]) + " < e_gamma=" +
                                std::to_string(fiber[static_cast<std::size_t>(nb)]) + " at purple '" +
                                gd.id_of(w) + "', cyan '" + gd.id_of(nb) + "'");
        }
    }

    if (r.betti_dst > r.betti_src)
        return fail(EpiStatus::conclusion_violated,
                    "betti(dst)=" + std::to_string(r.betti_dst) + " > betti(src)=" +
                        std::to_string(r.betti_src));
    r.status = EpiStatus::ok;
    r.verdict = (r.betti_dst == r.betti_src) ? Verdict::holds_equality : Verdict::holds;
    return r;
}

} // namespace riglab
