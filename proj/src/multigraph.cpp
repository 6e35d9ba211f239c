#include "riglab/multigraph.hpp"

#include <algorithm>
#include <map>

namespace riglab {

MultiGraph::MultiGraph(std::vector<std::string> vertex_ids,
                       const std::vector<std::tuple<std::string, std::string, long long>>& edge_list)
    : ids_(std::move(vertex_ids)) {
    std::sort(ids_.begin(), ids_.end());
    for (std::size_t i = 1; i < ids_.size(); ++i) {
        if (ids_[i - 1] == ids_[i])
            throw invalid_instance("duplicate vertex id '" + ids_[i] + "'");
    }
    std::map<std::pair<int, int>, long long> seen;
    for (const auto& [a, b, m] : edge_list) {
        int u = index_of(a);
        int v = index_of(b);
        if (u == v)
            throw invalid_instance("self-loop at vertex '" + a + "'");
        if (m < 1)
            throw invalid_instance("edge multiplicity must be >= 1 for {" + a + "," + b + "}");
        if (u > v) std::swap(u, v);
        if (!seen.emplace(std::make_pair(u, v), m).second)
            throw invalid_instance("duplicate edge pair {" + a + "," + b + "}; use multiplicity");
    }
    edges_.reserve(seen.size());
    for (const auto& [pair, m] : seen)
        edges_.push_back(Edge{pair.first, pair.second, m});
    build_adjacency();
}

MultiGraph MultiGraph::from_indexed(std::vector<std::string> sorted_ids, std::vector<Edge> edge_list) {
    MultiGraph g;
    g.ids_ = std::move(sorted_ids);
    std::sort(edge_list.begin(), edge_list.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    g.edges_ = std::move(edge_list);
    g.build_adjacency();
    return g;
}

void MultiGraph::build_adjacency() {
    adj_.assign(ids_.size(), {});
    edge_total_ = 0;
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.mult);
        adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.mult);
        edge_total_ += e.mult;
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

bool MultiGraph::has_vertex(const std::string& id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

int MultiGraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        throw invalid_instance("unknown vertex '" + id + "'");
    return static_cast<int>(it - ids_.begin());
}

long long MultiGraph::mult(int u, int v) const {
    if (u == v) return 0;
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                               [](const Edge& e, const std::pair<int, int>& p) {
                                   return std::tie(e.u, e.v) < std::tie(p.first, p.second);
                               });
    if (it != edges_.end() && it->u == u && it->v == v) return it->mult;
    return 0;
}

long long MultiGraph::degree(int v) const {
    if (v < 0 || v >= order())
        throw invalid_instance("vertex index out of range");
    long long d = 0;
    for (const auto& [w, m] : adj_[static_cast<std::size_t>(v)]) d += m;
    return d;
}

std::vector<std::vector<int>> MultiGraph::components() const {
    std::vector<std::vector<int>> blocks;
    std::vector<char> seen(ids_.size(), 0);
    std::vector<int> stack;
    for (int start = 0; start < order(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> block;
        stack.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            block.push_back(v);
            for (const auto& [w, m] : adj_[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

int MultiGraph::component_count() const {
    int count = 0;
    std::vector<char> seen(ids_.size(), 0);
    std::vector<int> stack;
    for (int start = 0; start < order(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++count;
        stack.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [w, m] : adj_[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

MultiGraph MultiGraph::full_subgraph(const std::vector<int>& vertex_set) const {
    std::vector<char> keep(ids_.size(), 0);
    std::vector<std::string> sub_ids;
    std::vector<int> remap(ids_.size(), -1);
    std::vector<int> sorted(vertex_set);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= order())
            throw invalid_instance("vertex index out of range in subgraph selection");
        keep[static_cast<std::size_t>(v)] = 1;
        remap[static_cast<std::size_t>(v)] = static_cast<int>(sub_ids.size());
        sub_ids.push_back(ids_[static_cast<std::size_t>(v)]);
    }
    std::vector<Edge> sub_edges;
    for (const Edge& e : edges_)
        if (keep[static_cast<std::size_t>(e.u)] && keep[static_cast<std::size_t>(e.v)])
            sub_edges.push_back(Edge{remap[static_cast<std::size_t>(e.u)],
                                     remap[static_cast<std::size_t>(e.v)], e.mult});
    return from_indexed(std::move(sub_ids), std::move(sub_edges));
}

MultiGraph MultiGraph::full_subgraph_ids(const std::vector<std::string>& vertex_ids) const {
    std::vector<int> idx;
    idx.reserve(vertex_ids.size());
    for (const auto& id : vertex_ids) idx.push_back(index_of(id));
    return full_subgraph(idx);
}

BipartiteDualGraph::BipartiteDualGraph(MultiGraph graph, const std::vector<std::string>& cyan_ids,
                                       const std::vector<std::string>& purple_ids)
    : graph_(std::move(graph)), cyan_(static_cast<std::size_t>(graph_.order()), -1) {
    for (const auto& id : cyan_ids)
        cyan_[static_cast<std::size_t>(graph_.index_of(id))] = 1;
    for (const auto& id : purple_ids) {
        int v = graph_.index_of(id);
        if (cyan_[static_cast<std::size_t>(v)] == 1)
            throw invalid_instance("vertex '" + id + "' is both cyan and purple");
        cyan_[static_cast<std::size_t>(v)] = 0;
    }
    for (int v = 0; v < graph_.order(); ++v)
        if (cyan_[static_cast<std::size_t>(v)] == -1)
            throw invalid_instance("vertex '" + graph_.id_of(v) + "' has no color");
    for (const auto& e : graph_.edges())
        if (cyan_[static_cast<std::size_t>(e.u)] == cyan_[static_cast<std::size_t>(e.v)])
            throw invalid_instance("edge {" + graph_.id_of(e.u) + "," + graph_.id_of(e.v) +
                                   "} joins vertices of the same color");
}

std::vector<int> BipartiteDualGraph::cyan() const {
    std::vector<int> out;
    for (int v = 0; v < graph_.order(); ++v)
        if (is_cyan(v)) out.push_back(v);
    return out;
}

std::vector<int> BipartiteDualGraph::purple() const {
    std::vector<int> out;
    for (int v = 0; v < graph_.order(); ++v)
        if (!is_cyan(v)) out.push_back(v);
    return out;
}

bool BipartiteDualGraph::purple_degrees_two() const {
    for (int v = 0; v < graph_.order(); ++v)
        if (!is_cyan(v) && graph_.degree(v) != 2) return false;
    return true;
}

} // namespace riglab
