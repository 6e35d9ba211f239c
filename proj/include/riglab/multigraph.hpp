#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "riglab/errors.hpp"

namespace riglab {

/// Finite undirected multigraph: opaque string vertex identifiers plus a
/// positive multiplicity for each unordered pair of distinct endpoints.
/// Self-loops and duplicate pairs are rejected at construction. Immutable.
///
/// Internally vertices are the indices 0..order()-1 of the lexicographically
/// sorted identifier list, which fixes a deterministic iteration order.
class MultiGraph {
public:
    struct Edge {
        int u = 0;      // u < v, indices into ids()
        int v = 0;
        long long mult = 1;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    MultiGraph() = default;

    MultiGraph(std::vector<std::string> vertex_ids,
               const std::vector<std::tuple<std::string, std::string, long long>>& edge_list);

    /// Trusted constructor for generators: `sorted_ids` must already be
    /// sorted and unique, edges index-based with u < v.
    static MultiGraph from_indexed(std::vector<std::string> sorted_ids, std::vector<Edge> edge_list);

    int order() const { return static_cast<int>(ids_.size()); }
    /// Number of edges counted with multiplicity.
    long long size() const { return edge_total_; }

    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id_of(int v) const { return ids_.at(static_cast<std::size_t>(v)); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const;
    /// Throws invalid_instance on an unknown identifier.
    int index_of(const std::string& id) const;

    long long mult(int u, int v) const;

    /// Number of incident edges counted with multiplicity.
    long long degree(int v) const;
    long long degree(const std::string& id) const { return degree(index_of(id)); }

    /// (neighbor, multiplicity) lists, neighbors sorted ascending.
    const std::vector<std::vector<std::pair<int, long long>>>& adjacency() const { return adj_; }

    /// Partition into path-connected blocks. Blocks are ordered by their
    /// smallest member and sorted internally.
    std::vector<std::vector<int>> components() const;
    int component_count() const;
    bool connected() const { return order() > 0 && component_count() == 1; }

    /// size() - order() + component_count(). Equals 1 - |V| + |E| on a
    /// connected graph and is additive over components.
    long long betti() const { return size() - order() + component_count(); }

    /// Subgraph spanned by the given vertex indices, multiplicities kept.
    MultiGraph full_subgraph(const std::vector<int>& vertex_set) const;
    MultiGraph full_subgraph_ids(const std::vector<std::string>& vertex_ids) const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    void build_adjacency();

    std::vector<std::string> ids_;                                   // sorted, unique
    std::vector<Edge> edges_;                                        // sorted by (u, v)
    std::vector<std::vector<std::pair<int, long long>>> adj_;
    long long edge_total_ = 0;
};

/// Multigraph with a two-coloring; every edge must join a cyan vertex to a
/// purple one. In the dual-graph role purple vertices additionally have
/// degree exactly 2, which is checked separately by purple_degrees_two().
class BipartiteDualGraph {
public:
    BipartiteDualGraph() = default;
    BipartiteDualGraph(MultiGraph graph, const std::vector<std::string>& cyan_ids,
                       const std::vector<std::string>& purple_ids);

    const MultiGraph& graph() const { return graph_; }
    bool is_cyan(int v) const { return cyan_.at(static_cast<std::size_t>(v)) != 0; }
    std::vector<int> cyan() const;
    std::vector<int> purple() const;
    bool purple_degrees_two() const;

    friend bool operator==(const BipartiteDualGraph&, const BipartiteDualGraph&) = default;

private:
    MultiGraph graph_;
    std::vector<char> cyan_;
};

} // namespace riglab
