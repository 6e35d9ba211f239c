#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riglab/multigraph.hpp"
#include "riglab/perm.hpp"

namespace riglab {

/// First group element that fails to preserve edge multiplicities, together
/// with the witnessing vertex pair and its image.
struct ActionViolation {
    std::size_t element_index = 0;
    std::pair<int, int> pair;
    std::pair<int, int> image_pair;
    long long mult = 0;
    long long image_mult = 0;

    std::string describe(const MultiGraph& g) const;
};

/// std::nullopt iff every group element preserves all edge multiplicities.
std::optional<ActionViolation> validate_action(const MultiGraph& g, const PermGroup& group);

/// Full connected subgraph that is a connected component of the fixed
/// subgraph of its rigidifier, every vertex of which has exactly that
/// rigidifier as stabilizer. Vertices are indices into the host graph;
/// rigidifier elements are indices into the host group's element list.
struct Rigidity {
    std::vector<int> vertices;
    SubgroupElems rigidifier;
    bool singular = false;

    friend bool operator==(const Rigidity&, const Rigidity&) = default;
    friend bool operator<(const Rigidity& a, const Rigidity& b) { return a.vertices < b.vertices; }
};

/// Connected multigraph together with a validated action of a finite
/// permutation group by graph automorphisms.
class GGraph {
public:
    GGraph(MultiGraph graph, PermGroup group);

    const MultiGraph& graph() const { return graph_; }
    const PermGroup& group() const { return group_; }

    /// {g in G : g(v) = v} as element indices.
    SubgroupElems stabilizer_elems(int v) const;
    PermGroup vertex_stabilizer(const std::string& id) const;

    /// Vertices fixed by every listed element.
    std::vector<int> fixed_vertices(const SubgroupElems& h) const;

    /// Full subgraph spanned by the vertices fixed by every element of h;
    /// h must be a subgroup of the acting group.
    MultiGraph fixed_subgraph(const PermGroup& h) const;

    /// The complete set of rigidities, sorted by vertex set. Candidate
    /// rigidifiers are exactly the distinct vertex stabilizers: the
    /// rigidifier of a rigidity is the stabilizer of any of its vertices.
    std::vector<Rigidity> rigidities() const;

private:
    MultiGraph graph_;
    PermGroup group_;
};

/// Orbit decomposition of the rigidity set under the acting group.
struct RigidityOrbits {
    std::vector<Rigidity> rigidities;
    std::vector<std::vector<int>> orbits;  // indices into rigidities
    std::size_t min_orbit_size = 0;        // 0 when there are no rigidities
    std::vector<int> fixed;                // rigidities fixed setwise by the whole group
};

RigidityOrbits rigidity_orbits(const GGraph& gg);

} // namespace riglab
