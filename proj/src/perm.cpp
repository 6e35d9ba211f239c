#include "riglab/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace riglab {

bool is_permutation(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

Permutation identity_perm(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation c(b.size());
    for (std::size_t x = 0; x < b.size(); ++x)
        c[x] = a[static_cast<std::size_t>(b[x])];
    return c;
}

Permutation inverse(const Permutation& p) {
    Permutation q(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        q[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
    return q;
}

std::string cycle_notation(const Permutation& p, const std::vector<std::string>& names) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == static_cast<int>(start)) continue;
        out += '(';
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first) out += ' ';
            out += (x < names.size()) ? names[x] : std::to_string(x);
            first = false;
            x = static_cast<std::size_t>(p[x]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

PermGroup PermGroup::enumerate(int degree, std::vector<Permutation> gens, std::size_t cap) {
    for (const auto& g : gens) {
        if (g.size() != static_cast<std::size_t>(degree) || !is_permutation(g))
            throw invalid_instance("generator is not a permutation of the point set");
    }
    std::set<Permutation> elems;
    std::vector<Permutation> frontier;
    elems.insert(identity_perm(degree));
    frontier.push_back(identity_perm(degree));
    while (!frontier.empty()) {
        Permutation cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : gens) {
            Permutation next = compose(g, cur);
            if (elems.insert(next).second) {
                if (elems.size() > cap)
                    throw cap_exceeded("group order exceeds cap " + std::to_string(cap));
                frontier.push_back(std::move(next));
            }
        }
    }
    PermGroup out;
    out.degree = degree;
    out.generators = std::move(gens);
    out.elements.assign(elems.begin(), elems.end());
    return out;
}

PermGroup PermGroup::trivial(int degree) {
    PermGroup out;
    out.degree = degree;
    out.elements.push_back(identity_perm(degree));
    return out;
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    if (degree != other.degree) return false;
    for (const auto& e : elements)
        if (!other.contains(e)) return false;
    return true;
}

ElementTable::ElementTable(const PermGroup& g) : elems(g.elements) {
    const std::size_t n = g.elements.size();
    if (n > kMaxTableOrder)
        throw cap_exceeded("group too large for a dense element table: order " + std::to_string(n));
    table.resize(n * n);
    inverse.resize(n);
    std::map<Permutation, std::uint16_t> pos;
    for (std::size_t i = 0; i < n; ++i)
        pos.emplace(g.elements[i], static_cast<std::uint16_t>(i));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto it = pos.find(compose(g.elements[a], g.elements[b]));
            if (it == pos.end())
                throw invalid_instance("element list is not closed under composition");
            table[a * n + b] = it->second;
            if (it->second == 0) inverse[a] = static_cast<std::uint16_t>(b);
        }
    }
}

std::uint16_t ElementTable::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || *it != p)
        throw invalid_instance("permutation is not an element of the group");
    return static_cast<std::uint16_t>(it - elems.begin());
}

std::optional<SubgroupElems> subgroup_closure(const ElementTable& t, std::vector<std::uint16_t> seed,
                                              std::size_t cap) {
    std::vector<char> member(t.order(), 0);
    std::vector<std::uint16_t> list;
    auto add = [&](std::uint16_t x) {
        if (!member[x]) {
            member[x] = 1;
            list.push_back(x);
        }
    };
    add(0);
    for (auto s : seed) add(s);
    // products of every ordered pair; new elements extend the worklist
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = 0; j < list.size(); ++j) {
            add(t.mul(list[i], list[j]));
            add(t.mul(list[j], list[i]));
            if (list.size() > cap) return std::nullopt;
        }
    }
    std::sort(list.begin(), list.end());
    return list;
}

std::vector<SubgroupElems> all_subgroups(const ElementTable& t, std::size_t order_cap) {
    std::set<SubgroupElems> found;
    std::vector<SubgroupElems> worklist;
    SubgroupElems triv{0};
    found.insert(triv);
    worklist.push_back(triv);
    while (!worklist.empty()) {
        SubgroupElems h = std::move(worklist.back());
        worklist.pop_back();
        // <H, a> = <H, h1*a*h2>, so one extension per double coset HaH suffices
        std::vector<char> covered(t.order(), 0);
        for (auto x : h) covered[x] = 1;
        for (std::uint16_t a = 0; a < t.order(); ++a) {
            if (covered[a]) continue;
            for (auto h1 : h) {
                const std::uint16_t h1a = t.mul(h1, a);
                for (auto h2 : h) covered[t.mul(h1a, h2)] = 1;
            }
            SubgroupElems seed = h;
            seed.push_back(a);
            auto closed = subgroup_closure(t, std::move(seed), order_cap);
            if (closed && found.insert(*closed).second)
                worklist.push_back(std::move(*closed));
        }
    }
    std::vector<SubgroupElems> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const SubgroupElems& a, const SubgroupElems& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<SubgroupElems> left_cosets(const ElementTable& t, const SubgroupElems& h) {
    std::vector<char> covered(t.order(), 0);
    std::vector<SubgroupElems> cosets;
    for (std::uint16_t g = 0; g < t.order(); ++g) {
        if (covered[g]) continue;
        SubgroupElems coset;
        coset.reserve(h.size());
        for (auto x : h) coset.push_back(t.mul(g, x));
        std::sort(coset.begin(), coset.end());
        for (auto y : coset) covered[y] = 1;
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

SubgroupElems conjugate_subgroup(const ElementTable& t, const SubgroupElems& h, std::uint16_t g) {
    SubgroupElems out;
    out.reserve(h.size());
    const std::uint16_t gi = t.inv(g);
    for (auto x : h) out.push_back(t.mul(t.mul(g, x), gi));
    std::sort(out.begin(), out.end());
    return out;
}

bool subgroup_subset(const SubgroupElems& a, const SubgroupElems& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SubgroupElems subgroup_intersection(const SubgroupElems& a, const SubgroupElems& b) {
    SubgroupElems out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_normal_in(const ElementTable& t, const SubgroupElems& h, const SubgroupElems& parent) {
    for (auto g : parent)
        if (conjugate_subgroup(t, h, g) != h) return false;
    return true;
}

PermGroup subgroup_to_group(const PermGroup& parent, const SubgroupElems& h) {
    PermGroup out;
    out.degree = parent.degree;
    out.elements.reserve(h.size());
    for (auto x : h) out.elements.push_back(parent.elements[x]);
    std::sort(out.elements.begin(), out.elements.end());
    out.generators = out.elements;
    return out;
}

} // namespace riglab
