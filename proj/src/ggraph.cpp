#include "riglab/ggraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace riglab {

std::string ActionViolation::describe(const MultiGraph& g) const {
    return "element #" + std::to_string(element_index) + " maps pair {" + g.id_of(pair.first) + "," +
           g.id_of(pair.second) + "} (mult " + std::to_string(mult) + ") onto {" +
           g.id_of(image_pair.first) + "," + g.id_of(image_pair.second) + "} (mult " +
           std::to_string(image_mult) + ")";
}

std::optional<ActionViolation> validate_action(const MultiGraph& g, const PermGroup& group) {
    const int n = g.order();
    for (std::size_t ei = 0; ei < group.elements.size(); ++ei) {
        const Permutation& p = group.elements[ei];
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                long long m = g.mult(u, v);
                long long im = g.mult(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
                if (m != im) {
                    int a = p[static_cast<std::size_t>(u)];
                    int b = p[static_cast<std::size_t>(v)];
                    if (a > b) std::swap(a, b);
                    return ActionViolation{ei, {u, v}, {a, b}, m, im};
                }
            }
        }
    }
    return std::nullopt;
}

GGraph::GGraph(MultiGraph graph, PermGroup group)
    : graph_(std::move(graph)), group_(std::move(group)) {
    if (group_.degree != graph_.order())
        throw invalid_instance("group degree " + std::to_string(group_.degree) +
                               " does not match vertex count " + std::to_string(graph_.order()));
    if (!graph_.connected())
        throw invalid_instance("graph of a group action instance must be connected and nonempty");
    if (group_.elements.empty() || group_.elements.front() != identity_perm(group_.degree))
        throw invalid_instance("group element list must contain the identity");
    if (auto bad = validate_action(graph_, group_))
        throw invalid_instance("group does not act by automorphisms: " + bad->describe(graph_));
}

SubgroupElems GGraph::stabilizer_elems(int v) const {
    if (v < 0 || v >= graph_.order())
        throw invalid_instance("vertex index out of range");
    SubgroupElems out;
    for (std::size_t i = 0; i < group_.elements.size(); ++i)
        if (group_.elements[i][static_cast<std::size_t>(v)] == v)
            out.push_back(static_cast<std::uint16_t>(i));
    return out;
}

PermGroup GGraph::vertex_stabilizer(const std::string& id) const {
    return subgroup_to_group(group_, stabilizer_elems(graph_.index_of(id)));
}

std::vector<int> GGraph::fixed_vertices(const SubgroupElems& h) const {
    std::vector<int> out;
    for (int v = 0; v < graph_.order(); ++v) {
        bool fixed = true;
        for (auto e : h)
            if (group_.elements[e][static_cast<std::size_t>(v)] != v) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(v);
    }
    return out;
}

MultiGraph GGraph::fixed_subgraph(const PermGroup& h) const {
    if (!h.is_subgroup_of(group_))
        throw invalid_instance("fixed_subgraph: h is not a subgroup of the acting group");
    SubgroupElems idx;
    for (const auto& e : h.elements) {
        auto it = std::lower_bound(group_.elements.begin(), group_.elements.end(), e);
        idx.push_back(static_cast<std::uint16_t>(it - group_.elements.begin()));
    }
    std::sort(idx.begin(), idx.end());
    return graph_.full_subgraph(fixed_vertices(idx));
}

namespace {

// Connected components of the subgraph induced by `verts`, blocks sorted.
std::vector<std::vector<int>> components_within(const MultiGraph& g, const std::vector<int>& verts) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int v : verts) in[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::vector<int>> blocks;
    std::vector<int> stack;
    for (int start : verts) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> block;
        stack.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            block.push_back(v);
            for (const auto& [w, m] : g.adjacency()[static_cast<std::size_t>(v)])
                if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

} // namespace

std::vector<Rigidity> GGraph::rigidities() const {
    const int n = graph_.order();
    std::vector<SubgroupElems> stab(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) stab[static_cast<std::size_t>(v)] = stabilizer_elems(v);

    std::set<SubgroupElems> candidates(stab.begin(), stab.end());
    std::vector<Rigidity> out;
    for (const SubgroupElems& h : candidates) {
        std::vector<int> fixed = fixed_vertices(h);
        for (auto& block : components_within(graph_, fixed)) {
            bool exact = true;
            for (int v : block)
                if (stab[static_cast<std::size_t>(v)] != h) {
                    exact = false;
                    break;
                }
            if (exact)
                out.push_back(Rigidity{std::move(block), h, false});
        }
    }
    for (auto& r : out) r.singular = (r.vertices.size() == 1);
    std::sort(out.begin(), out.end());
    return out;
}

RigidityOrbits rigidity_orbits(const GGraph& gg) {
    RigidityOrbits ro;
    ro.rigidities = gg.rigidities();
    const auto& elems = gg.group().elements;

    // rigidities are pairwise disjoint, so the smallest vertex identifies one
    std::map<std::vector<int>, int> index_of;
    for (std::size_t i = 0; i < ro.rigidities.size(); ++i)
        index_of.emplace(ro.rigidities[i].vertices, static_cast<int>(i));

    std::vector<char> used(ro.rigidities.size(), 0);
    for (std::size_t i = 0; i < ro.rigidities.size(); ++i) {
        if (used[i]) continue;
        std::set<int> orbit;
        for (const auto& p : elems) {
            std::vector<int> image;
            image.reserve(ro.rigidities[i].vertices.size());
            for (int v : ro.rigidities[i].vertices) image.push_back(p[static_cast<std::size_t>(v)]);
            std::sort(image.begin(), image.end());
            auto it = index_of.find(image);
            if (it == index_of.end())
                throw cross_check_error("image of a rigidity under the group action is not a rigidity");
            orbit.insert(it->second);
        }
        std::vector<int> block(orbit.begin(), orbit.end());
        for (int r : block) used[static_cast<std::size_t>(r)] = 1;
        ro.orbits.push_back(std::move(block));
    }

    ro.min_orbit_size = 0;
    for (const auto& o : ro.orbits) {
        if (o.size() == 1) ro.fixed.push_back(o.front());
        if (ro.min_orbit_size == 0 || o.size() < ro.min_orbit_size) ro.min_orbit_size = o.size();
    }
    std::sort(ro.fixed.begin(), ro.fixed.end());
    return ro;
}

} // namespace riglab
