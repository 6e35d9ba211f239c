#include "riglab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace riglab {

namespace {

const json& expect(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

long long expect_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw parse_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

std::string expect_str(const json& j, const char* what) {
    if (!j.is_string())
        throw parse_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

} // namespace

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

json multigraph_to_json(const MultiGraph& g) {
    json out;
    out["vertices"] = g.ids();
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back(json::array({g.id_of(e.u), g.id_of(e.v), e.mult}));
    out["edges"] = std::move(edges);
    return out;
}

MultiGraph multigraph_from_json(const json& j) {
    const json& jv = expect(j, "vertices");
    if (!jv.is_array()) throw parse_error("'vertices' must be an array");
    std::vector<std::string> ids;
    for (const auto& v : jv) ids.push_back(expect_str(v, "vertex id"));
    std::vector<std::tuple<std::string, std::string, long long>> edges;
    const json& je = expect(j, "edges");
    if (!je.is_array()) throw parse_error("'edges' must be an array");
    for (const auto& e : je) {
        if (!e.is_array() || e.size() != 3)
            throw parse_error("edge entries must be [id, id, multiplicity]");
        edges.emplace_back(expect_str(e.at(0), "edge endpoint"), expect_str(e.at(1), "edge endpoint"),
                           expect_int(e.at(2), "edge multiplicity"));
    }
    return MultiGraph(std::move(ids), edges);
}

json bipartite_to_json(const BipartiteDualGraph& g) {
    json out = multigraph_to_json(g.graph());
    std::vector<std::string> cy, pu;
    for (int v : g.cyan()) cy.push_back(g.graph().id_of(v));
    for (int v : g.purple()) pu.push_back(g.graph().id_of(v));
    out["cyan"] = cy;
    out["purple"] = pu;
    return out;
}

BipartiteDualGraph bipartite_from_json(const json& j) {
    MultiGraph g = multigraph_from_json(j);
    std::vector<std::string> cy, pu;
    for (const auto& v : expect(j, "cyan")) cy.push_back(expect_str(v, "cyan id"));
    for (const auto& v : expect(j, "purple")) pu.push_back(expect_str(v, "purple id"));
    return BipartiteDualGraph(std::move(g), cy, pu);
}

json ggraph_to_json(const GGraph& gg) {
    json out = multigraph_to_json(gg.graph());
    json gens = json::array();
    const auto& group = gg.group();
    const auto& gen_list = group.generators.empty() ? group.elements : group.generators;
    for (const auto& p : gen_list) {
        if (p == identity_perm(group.degree)) continue;
        json m = json::object();
        for (int v = 0; v < group.degree; ++v)
            if (p[static_cast<std::size_t>(v)] != v)
                m[gg.graph().id_of(v)] = gg.graph().id_of(p[static_cast<std::size_t>(v)]);
        gens.push_back(std::move(m));
    }
    out["generators"] = std::move(gens);
    return out;
}

GGraph ggraph_from_json(const json& j, std::size_t group_cap) {
    MultiGraph g = multigraph_from_json(j);
    std::vector<Permutation> gens;
    if (j.contains("generators")) {
        const json& jg = j.at("generators");
        if (!jg.is_array()) throw parse_error("'generators' must be an array");
        for (const auto& m : jg) {
            if (!m.is_object()) throw parse_error("generator entries must be objects");
            Permutation p = identity_perm(g.order());
            for (const auto& [from, to] : m.items())
                p[static_cast<std::size_t>(g.index_of(from))] =
                    g.index_of(expect_str(to, "generator image"));
            if (!is_permutation(p))
                throw invalid_instance("generator map is not a bijection on the vertex set");
            gens.push_back(std::move(p));
        }
    }
    PermGroup group = PermGroup::enumerate(g.order(), std::move(gens), group_cap);
    return GGraph(std::move(g), std::move(group));
}

json reduction_to_json(const ReductionGraph& rg) {
    const GaloisModel& gm = rg.galois();
    json out;
    json galois;
    galois["order"] = gm.group_order();
    json elems = json::array();
    for (const auto& p : gm.group().elements) elems.push_back(p);
    galois["elements"] = std::move(elems);
    json subs = json::array();
    for (int pos = 0; pos < gm.subgroup_count(); ++pos) {
        const GaloisSubgroup& s = gm.at(pos);
        subs.push_back(json{{"id", s.id}, {"elements", s.elems}, {"nonreal", s.nonreal}});
    }
    galois["subgroups"] = std::move(subs);
    out["galois"] = std::move(galois);

    json comps = json::array();
    for (const auto& c : rg.components()) {
        std::vector<int> pf_ids;
        for (int pf : c.point_fields) pf_ids.push_back(gm.at(pf).id);
        std::sort(pf_ids.begin(), pf_ids.end());
        comps.push_back(json{{"id", c.id},
                             {"stab", gm.at(c.stab).id},
                             {"genus", c.genus},
                             {"point_fields", pf_ids}});
    }
    out["components"] = std::move(comps);

    json ints = json::array();
    for (const auto& x : rg.intersections())
        ints.push_back(json{{"id", x.id},
                            {"between", json::array({rg.components()[static_cast<std::size_t>(x.a)].id,
                                                     rg.components()[static_cast<std::size_t>(x.b)].id})},
                            {"residue", gm.at(x.residue).id}});
    out["intersections"] = std::move(ints);

    json declared = json::object();
    if (rg.declared().g_F) declared["g_F"] = *rg.declared().g_F;
    declared["real_F"] = rg.declared().real_F;
    declared["henselian"] = rg.declared().henselian;
    out["declared"] = std::move(declared);
    return out;
}

ReductionGraph reduction_from_json(const json& j) {
    const json& jg = expect(j, "galois");
    const json& je = expect(jg, "elements");
    if (!je.is_array() || je.empty()) throw parse_error("'galois.elements' must be a nonempty array");
    std::vector<Permutation> elems;
    for (const auto& p : je) {
        if (!p.is_array()) throw parse_error("group elements must be arrays of images");
        Permutation q;
        for (const auto& x : p) q.push_back(static_cast<int>(expect_int(x, "permutation image")));
        if (!is_permutation(q)) throw invalid_instance("group element is not a permutation");
        elems.push_back(std::move(q));
    }
    const long long order = expect_int(expect(jg, "order"), "'galois.order'");
    if (order != static_cast<long long>(elems.size()))
        throw invalid_instance("'galois.order' does not match the element count");

    // element indices in the file refer to listing order; remap to sorted order
    std::vector<std::size_t> by_sorted(elems.size());
    std::iota(by_sorted.begin(), by_sorted.end(), std::size_t{0});
    std::sort(by_sorted.begin(), by_sorted.end(),
              [&](std::size_t a, std::size_t b) { return elems[a] < elems[b]; });
    std::vector<std::uint16_t> new_index(elems.size());
    std::vector<Permutation> sorted_elems(elems.size());
    for (std::size_t rank = 0; rank < by_sorted.size(); ++rank) {
        sorted_elems[rank] = elems[by_sorted[rank]];
        new_index[by_sorted[rank]] = static_cast<std::uint16_t>(rank);
    }
    for (std::size_t rank = 1; rank < sorted_elems.size(); ++rank)
        if (sorted_elems[rank - 1] == sorted_elems[rank])
            throw invalid_instance("duplicate group element");

    PermGroup group;
    group.degree = static_cast<int>(sorted_elems.front().size());
    for (const auto& e : sorted_elems)
        if (static_cast<int>(e.size()) != group.degree)
            throw invalid_instance("group elements act on point sets of different sizes");
    group.elements = std::move(sorted_elems);
    group.generators = group.elements;
    if (group.elements.front() != identity_perm(group.degree))
        throw invalid_instance("group element list must contain the identity");

    std::vector<GaloisSubgroup> subs;
    for (const auto& s : expect(jg, "subgroups")) {
        GaloisSubgroup gs;
        gs.id = static_cast<int>(expect_int(expect(s, "id"), "subgroup id"));
        for (const auto& x : expect(s, "elements")) {
            const long long e = expect_int(x, "subgroup element index");
            if (e < 0 || e >= static_cast<long long>(new_index.size()))
                throw invalid_instance("subgroup element index out of range");
            gs.elems.push_back(new_index[static_cast<std::size_t>(e)]);
        }
        if (s.contains("nonreal")) {
            if (!s.at("nonreal").is_boolean()) throw parse_error("'nonreal' must be a boolean");
            gs.nonreal = s.at("nonreal").get<bool>();
        }
        subs.push_back(std::move(gs));
    }
    GaloisModel gm(std::move(group), std::move(subs));

    std::vector<RComponent> comps;
    std::vector<std::string> comp_ids;
    for (const auto& c : expect(j, "components")) {
        RComponent rc;
        rc.id = expect_str(expect(c, "id"), "component id");
        rc.stab = gm.pos_of_id(static_cast<int>(expect_int(expect(c, "stab"), "component stab")));
        rc.genus = expect_int(expect(c, "genus"), "component genus");
        for (const auto& pf : expect(c, "point_fields"))
            rc.point_fields.push_back(
                gm.pos_of_id(static_cast<int>(expect_int(pf, "point field id"))));
        comp_ids.push_back(rc.id);
        comps.push_back(std::move(rc));
    }
    auto comp_index = [&](const std::string& id) {
        auto it = std::find(comp_ids.begin(), comp_ids.end(), id);
        if (it == comp_ids.end()) throw invalid_instance("unknown component id '" + id + "'");
        return static_cast<int>(it - comp_ids.begin());
    };

    std::vector<RIntersection> ints;
    if (j.contains("intersections")) {
        for (const auto& x : j.at("intersections")) {
            RIntersection rx;
            rx.id = expect_str(expect(x, "id"), "intersection id");
            const json& between = expect(x, "between");
            if (!between.is_array() || between.size() != 2)
                throw parse_error("'between' must list two component ids");
            rx.a = comp_index(expect_str(between.at(0), "component id"));
            rx.b = comp_index(expect_str(between.at(1), "component id"));
            rx.residue =
                gm.pos_of_id(static_cast<int>(expect_int(expect(x, "residue"), "residue id")));
            ints.push_back(std::move(rx));
        }
    }

    Declared declared;
    if (j.contains("declared")) {
        const json& d = j.at("declared");
        if (d.contains("g_F")) declared.g_F = expect_int(d.at("g_F"), "'g_F'");
        if (d.contains("real_F")) declared.real_F = d.at("real_F").get<bool>();
        if (d.contains("henselian")) declared.henselian = d.at("henselian").get<bool>();
    }
    return ReductionGraph(std::move(gm), std::move(comps), std::move(ints), declared);
}

json witness_tree_to_json(const pfister::WitnessTree& t) {
    std::function<json(const pfister::WitnessNode&)> conv = [&](const pfister::WitnessNode& n) {
        json out;
        out["label"] = n.label;
        out["rank"] = n.rank;
        if (n.residue_level >= 0)
            out["residue_level"] = n.residue_level;
        else
            out["residue_level"] = nullptr;
        json children = json::array();
        for (const auto& c : n.children) children.push_back(conv(c));
        out["children"] = std::move(children);
        return out;
    };
    json out;
    out["tree"] = conv(t.root);
    out["valuations"] = t.valuation_count();
    return out;
}

InstanceKind detect_instance_kind(const json& j) {
    if (j.is_object() && j.contains("galois")) return InstanceKind::reduction;
    if (j.is_object() && j.contains("cyan")) return InstanceKind::bipartite;
    return InstanceKind::ggraph;
}

} // namespace riglab
