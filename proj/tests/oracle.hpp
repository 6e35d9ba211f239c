#pragma once

// Test-side reference implementations, kept independent of the library's
// optimized paths. The rigidity oracle enumerates every subgroup of the
// acting group instead of restricting to vertex stabilizers, and walks the
// fixed subgraphs with its own traversal.

#include <algorithm>
#include <set>
#include <vector>

#include "riglab/ggraph.hpp"
#include "riglab/perm.hpp"

namespace riglab_test {

inline std::vector<riglab::Rigidity> brute_force_rigidities(const riglab::GGraph& gg) {
    using namespace riglab;
    const MultiGraph& g = gg.graph();
    const PermGroup& group = gg.group();
    const int n = g.order();

    ElementTable table(group);
    std::set<std::pair<std::vector<int>, SubgroupElems>> found;

    for (const SubgroupElems& h : all_subgroups(table, group.order())) {
        std::vector<char> fixed(static_cast<std::size_t>(n), 1);
        for (auto e : h)
            for (int v = 0; v < n; ++v)
                if (group.elements[e][static_cast<std::size_t>(v)] != v)
                    fixed[static_cast<std::size_t>(v)] = 0;

        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int start = 0; start < n; ++start) {
            if (!fixed[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)])
                continue;
            std::vector<int> block;
            std::vector<int> stack{start};
            seen[static_cast<std::size_t>(start)] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                block.push_back(v);
                for (int w = 0; w < n; ++w) {
                    if (w == v || !fixed[static_cast<std::size_t>(w)] ||
                        seen[static_cast<std::size_t>(w)] || g.mult(v, w) == 0)
                        continue;
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
            std::sort(block.begin(), block.end());

            bool exact = true;
            for (int v : block) {
                SubgroupElems stab;
                for (std::uint16_t e = 0; e < group.order(); ++e)
                    if (group.elements[e][static_cast<std::size_t>(v)] == v) stab.push_back(e);
                if (stab != h) {
                    exact = false;
                    break;
                }
            }
            if (exact) found.emplace(block, h);
        }
    }

    std::vector<riglab::Rigidity> out;
    for (const auto& [verts, h] : found)
        out.push_back(riglab::Rigidity{verts, h, verts.size() == 1});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace riglab_test
