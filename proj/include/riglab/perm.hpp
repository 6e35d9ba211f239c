#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riglab/errors.hpp"

namespace riglab {

/// Permutation of {0..n-1} stored as its image vector: p[x] is the image of x.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
Permutation identity_perm(int n);
/// (a * b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// Cycle notation using the given point names, e.g. "(v1 v3)(v2 v4)"; "()"
/// for the identity.
std::string cycle_notation(const Permutation& p, const std::vector<std::string>& names);

inline constexpr std::size_t kDefaultGroupCap = 10080;

/// Finite permutation group given by generators, with the full element list
/// enumerated at construction. Elements are kept lexicographically sorted,
/// so elements[0] is always the identity and equal groups compare equal.
struct PermGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;

    /// Closure of the generators; throws cap_exceeded if the order would
    /// exceed `cap`.
    static PermGroup enumerate(int degree, std::vector<Permutation> gens,
                               std::size_t cap = kDefaultGroupCap);
    static PermGroup trivial(int degree);

    std::size_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;
    bool is_subgroup_of(const PermGroup& other) const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.degree == b.degree && a.elements == b.elements;
    }
};

/// Subgroup of an enumerated parent group as a sorted list of element
/// indices; index 0 (the identity) is always present.
using SubgroupElems = std::vector<std::uint16_t>;

/// Dense multiplication and inverse tables over a parent group's element
/// list (owned copy). Only intended for small groups; construction refuses
/// orders beyond kMaxTableOrder.
struct ElementTable {
    static constexpr std::size_t kMaxTableOrder = 4096;

    explicit ElementTable(const PermGroup& g);

    std::size_t order() const { return elems.size(); }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        return table[static_cast<std::size_t>(a) * elems.size() + b];
    }
    std::uint16_t inv(std::uint16_t a) const { return inverse[a]; }
    std::uint16_t index_of(const Permutation& p) const;

    std::vector<Permutation> elems;
    std::vector<std::uint16_t> table;
    std::vector<std::uint16_t> inverse;
};

/// Subgroup generated by `seed`; std::nullopt if the closure would exceed
/// `cap` elements.
std::optional<SubgroupElems> subgroup_closure(const ElementTable& t, std::vector<std::uint16_t> seed,
                                              std::size_t cap);

/// Every subgroup of the table's group with order <= cap, ordered by
/// (order, element list).
std::vector<SubgroupElems> all_subgroups(const ElementTable& t, std::size_t order_cap);

/// Left cosets gH, each sorted, listed in order of their minimal element.
std::vector<SubgroupElems> left_cosets(const ElementTable& t, const SubgroupElems& h);

SubgroupElems conjugate_subgroup(const ElementTable& t, const SubgroupElems& h, std::uint16_t g);

bool subgroup_subset(const SubgroupElems& a, const SubgroupElems& b);

/// Intersection of two subgroups (always itself a subgroup).
SubgroupElems subgroup_intersection(const SubgroupElems& a, const SubgroupElems& b);

bool is_normal_in(const ElementTable& t, const SubgroupElems& h, const SubgroupElems& parent);

/// Materialize a subgroup as a standalone PermGroup over the same points.
PermGroup subgroup_to_group(const PermGroup& parent, const SubgroupElems& h);

} // namespace riglab
