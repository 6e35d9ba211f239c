#include "riglab/generate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace riglab {

namespace {

constexpr int kMaxExhaustiveVertices = 6;

struct SymmetricContext {
    int n = 0;
    int npairs = 0;
    std::vector<std::array<int, 2>> pair_of;          // pair index -> (i, j)
    std::vector<std::vector<int>> pidx;               // (i, j) -> pair index
    std::vector<Permutation> perms;                   // all of S_n, sorted
    std::vector<std::vector<std::uint8_t>> pair_perm; // perm -> pair index image
    std::vector<std::string> vertex_ids;              // "v1".."vn"
};

const SymmetricContext& symmetric_context(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SymmetricContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto ctx = std::make_unique<SymmetricContext>();
    ctx->n = n;
    ctx->pidx.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ctx->pidx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<int>(ctx->pair_of.size());
            ctx->pidx[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                static_cast<int>(ctx->pair_of.size());
            ctx->pair_of.push_back({i, j});
        }
    ctx->npairs = static_cast<int>(ctx->pair_of.size());

    Permutation p = identity_perm(n);
    do {
        ctx->perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    ctx->pair_perm.resize(ctx->perms.size());
    for (std::size_t pi = 0; pi < ctx->perms.size(); ++pi) {
        auto& row = ctx->pair_perm[pi];
        row.resize(static_cast<std::size_t>(ctx->npairs));
        for (int k = 0; k < ctx->npairs; ++k) {
            int a = ctx->perms[pi][static_cast<std::size_t>(ctx->pair_of[static_cast<std::size_t>(k)][0])];
            int b = ctx->perms[pi][static_cast<std::size_t>(ctx->pair_of[static_cast<std::size_t>(k)][1])];
            row[static_cast<std::size_t>(k)] =
                static_cast<std::uint8_t>(ctx->pidx[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
    }
    for (int v = 1; v <= n; ++v) ctx->vertex_ids.push_back("v" + std::to_string(v));

    auto& slot = cache[n];
    slot = std::move(ctx);
    return *slot;
}

bool digits_connected(const SymmetricContext& ctx, const std::vector<std::uint8_t>& digits) {
    if (ctx.n == 1) return true;
    std::array<std::uint32_t, 8> adj{};
    for (int k = 0; k < ctx.npairs; ++k) {
        if (digits[static_cast<std::size_t>(k)] == 0) continue;
        const auto [i, j] = ctx.pair_of[static_cast<std::size_t>(k)];
        adj[static_cast<std::size_t>(i)] |= (1u << j);
        adj[static_cast<std::size_t>(j)] |= (1u << i);
    }
    std::uint32_t seen = 1, frontier = 1;
    const std::uint32_t all = (1u << ctx.n) - 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < ctx.n; ++v)
            if (frontier & (1u << v)) next |= adj[static_cast<std::size_t>(v)];
        frontier = next & ~seen;
        seen |= next;
        if (seen == all) return true;
    }
    return seen == all;
}

// Multiplicity-preserving vertex permutations, as indices into ctx.perms.
std::vector<std::uint16_t> multiplicity_preserving_perms(const SymmetricContext& ctx,
                                                         const std::vector<std::uint8_t>& digits) {
    // order-independent vertex fingerprint from incident multiplicities
    std::array<std::uint32_t, 8> inv{};
    for (int k = 0; k < ctx.npairs; ++k) {
        const std::uint32_t m = digits[static_cast<std::size_t>(k)];
        if (m == 0) continue;
        const std::uint32_t h = m * 2654435761u + (m << 7);
        inv[static_cast<std::size_t>(ctx.pair_of[static_cast<std::size_t>(k)][0])] += h;
        inv[static_cast<std::size_t>(ctx.pair_of[static_cast<std::size_t>(k)][1])] += h;
    }
    bool all_distinct = true;
    for (int a = 0; a < ctx.n && all_distinct; ++a)
        for (int b = a + 1; b < ctx.n; ++b)
            if (inv[static_cast<std::size_t>(a)] == inv[static_cast<std::size_t>(b)]) {
                all_distinct = false;
                break;
            }
    if (all_distinct) return {0};  // only the identity can respect the classes

    std::vector<std::uint16_t> aut;
    for (std::size_t pi = 0; pi < ctx.perms.size(); ++pi) {
        const Permutation& p = ctx.perms[pi];
        bool ok = true;
        for (int v = 0; v < ctx.n; ++v)
            if (inv[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] !=
                inv[static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        const auto& row = ctx.pair_perm[pi];
        for (int k = 0; k < ctx.npairs; ++k)
            if (digits[row[static_cast<std::size_t>(k)]] != digits[static_cast<std::size_t>(k)]) {
                ok = false;
                break;
            }
        if (ok) aut.push_back(static_cast<std::uint16_t>(pi));
    }
    return aut;
}

// Subgroups (as permutation lists) of the group spanned by `aut`, cached by
// element set. Thread-local: chunks processed by different threads rebuild
// a handful of entries instead of sharing a lock.
const std::vector<std::vector<Permutation>>& subgroups_of_aut(const SymmetricContext& ctx,
                                                              const std::vector<std::uint16_t>& aut,
                                                              std::size_t order_cap) {
    thread_local std::map<std::tuple<int, std::vector<std::uint16_t>, std::size_t>,
                          std::vector<std::vector<Permutation>>>
        cache;
    auto key = std::make_tuple(ctx.n, aut, order_cap);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    PermGroup g;
    g.degree = ctx.n;
    g.elements.reserve(aut.size());
    for (auto a : aut) g.elements.push_back(ctx.perms[a]);  // ctx.perms sorted => sorted
    ElementTable table(g);
    std::vector<std::vector<Permutation>> subs;
    for (const auto& s : all_subgroups(table, order_cap)) {
        std::vector<Permutation> elems;
        elems.reserve(s.size());
        for (auto e : s) elems.push_back(g.elements[e]);
        subs.push_back(std::move(elems));
    }
    return cache.emplace(std::move(key), std::move(subs)).first->second;
}

void decode_code(std::uint64_t code, long long radix, std::vector<std::uint8_t>& digits) {
    for (auto& d : digits) {
        d = static_cast<std::uint8_t>(code % static_cast<std::uint64_t>(radix));
        code /= static_cast<std::uint64_t>(radix);
    }
}

bool increment_digits(std::vector<std::uint8_t>& digits, long long radix) {
    for (auto& d : digits) {
        if (d + 1 < radix) {
            ++d;
            return true;
        }
        d = 0;
    }
    return false;
}

} // namespace

std::uint64_t exhaustive_code_count(int n, long long max_mult) {
    const int npairs = n * (n - 1) / 2;
    std::uint64_t total = 1;
    for (int k = 0; k < npairs; ++k) total *= static_cast<std::uint64_t>(max_mult + 1);
    return total;
}

std::vector<ExhaustiveChunk> exhaustive_chunks(const ExhaustiveParams& p, std::uint64_t chunk_size) {
    if (p.max_vertices < 1 || p.max_vertices > kMaxExhaustiveVertices)
        throw cap_exceeded("exhaustive enumeration supports 1 to " +
                           std::to_string(kMaxExhaustiveVertices) + " vertices");
    if (p.max_mult < 1) throw invalid_instance("max_mult must be >= 1");
    if (chunk_size == 0) chunk_size = 1;
    std::vector<ExhaustiveChunk> chunks;
    for (int n = 1; n <= p.max_vertices; ++n) {
        const std::uint64_t total = exhaustive_code_count(n, p.max_mult);
        for (std::uint64_t b = 0; b < total; b += chunk_size)
            chunks.push_back(ExhaustiveChunk{n, b, std::min(total, b + chunk_size)});
    }
    return chunks;
}

void for_each_in_chunk(const ExhaustiveParams& p, const ExhaustiveChunk& chunk,
                       const std::function<void(const GGraph&, const std::string&)>& visit) {
    const SymmetricContext& ctx = symmetric_context(chunk.n);
    const long long radix = p.max_mult + 1;
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(ctx.npairs));
    decode_code(chunk.begin, radix, digits);

    for (std::uint64_t code = chunk.begin; code < chunk.end; ++code) {
        if (code != chunk.begin) increment_digits(digits, radix);
        if (!digits_connected(ctx, digits)) continue;

        std::vector<MultiGraph::Edge> edges;
        for (int k = 0; k < ctx.npairs; ++k)
            if (digits[static_cast<std::size_t>(k)] != 0)
                edges.push_back(MultiGraph::Edge{ctx.pair_of[static_cast<std::size_t>(k)][0],
                                                 ctx.pair_of[static_cast<std::size_t>(k)][1],
                                                 digits[static_cast<std::size_t>(k)]});
        MultiGraph graph = MultiGraph::from_indexed(ctx.vertex_ids, std::move(edges));

        const auto aut = multiplicity_preserving_perms(ctx, digits);
        const auto& subs = subgroups_of_aut(ctx, aut, p.group_order_cap);
        for (std::size_t si = 0; si < subs.size(); ++si) {
            PermGroup g;
            g.degree = ctx.n;
            g.elements = subs[si];
            g.generators = subs[si];
            GGraph gg(graph, std::move(g));
            visit(gg, "n" + std::to_string(chunk.n) + "#" + std::to_string(code) + "#g" +
                          std::to_string(si));
        }
    }
}

void for_each_exhaustive_ggraph(const ExhaustiveParams& p,
                                const std::function<void(const GGraph&, const std::string&)>& visit) {
    for (const auto& chunk : exhaustive_chunks(p, 1 << 14))
        for_each_in_chunk(p, chunk, visit);
}

namespace {

Permutation random_perm(Rng& rng, int n) {
    Permutation p = identity_perm(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return p;
}

// Orbits of the group on unordered vertex pairs, as lists of (i, j) pairs.
std::vector<std::vector<std::array<int, 2>>> pair_orbits(const PermGroup& g) {
    const int n = g.degree;
    std::vector<std::vector<std::array<int, 2>>> orbits;
    std::set<std::array<int, 2>> seen;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (seen.count({i, j})) continue;
            std::set<std::array<int, 2>> orbit;
            for (const auto& p : g.elements) {
                int a = p[static_cast<std::size_t>(i)];
                int b = p[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                orbit.insert({a, b});
            }
            seen.insert(orbit.begin(), orbit.end());
            orbits.emplace_back(orbit.begin(), orbit.end());
        }
    }
    return orbits;
}

} // namespace

GGraph random_ggraph(std::uint64_t seed, const RandomGGraphParams& p) {
    Rng rng(seed);
    for (int attempt = 0; attempt < p.retries; ++attempt) {
        const int n = p.min_vertices +
                      static_cast<int>(rng.below(static_cast<std::uint64_t>(
                          p.max_vertices - p.min_vertices + 1)));
        std::vector<Permutation> gens;
        const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_generators) + 1));
        for (int i = 0; i < k; ++i) gens.push_back(random_perm(rng, n));
        PermGroup group;
        try {
            group = PermGroup::enumerate(n, std::move(gens), p.group_order_cap);
        } catch (const cap_exceeded&) {
            continue;
        }

        const auto orbits = pair_orbits(group);
        std::vector<long long> mult(orbits.size(), 0);
        for (std::size_t o = 0; o < orbits.size(); ++o)
            if (rng.chance(p.orbit_keep_prob))
                mult[o] = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(p.max_mult)));

        auto build = [&]() {
            std::vector<MultiGraph::Edge> edges;
            for (std::size_t o = 0; o < orbits.size(); ++o)
                if (mult[o] > 0)
                    for (const auto& pr : orbits[o])
                        edges.push_back(MultiGraph::Edge{pr[0], pr[1], mult[o]});
            std::vector<std::string> ids;
            for (int v = 1; v <= n; ++v) ids.push_back("v" + std::to_string(v));
            std::sort(ids.begin(), ids.end());
            // ids sorted lexicographically; map original numbering onto it
            std::vector<int> remap(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                const std::string name = "v" + std::to_string(v + 1);
                remap[static_cast<std::size_t>(v)] = static_cast<int>(
                    std::lower_bound(ids.begin(), ids.end(), name) - ids.begin());
            }
            for (auto& e : edges) {
                e.u = remap[static_cast<std::size_t>(e.u)];
                e.v = remap[static_cast<std::size_t>(e.v)];
                if (e.u > e.v) std::swap(e.u, e.v);
            }
            std::vector<Permutation> elems;
            for (const auto& g : group.elements) {
                Permutation q(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v)
                    q[static_cast<std::size_t>(remap[static_cast<std::size_t>(v)])] =
                        remap[static_cast<std::size_t>(g[static_cast<std::size_t>(v)])];
                elems.push_back(std::move(q));
            }
            std::sort(elems.begin(), elems.end());
            PermGroup relabeled;
            relabeled.degree = n;
            relabeled.elements = std::move(elems);
            relabeled.generators = relabeled.elements;
            return GGraph(MultiGraph::from_indexed(std::move(ids), std::move(edges)),
                          std::move(relabeled));
        };

        // grow by whole orbits until connected; the complete graph is the
        // worst case, so this terminates
        std::vector<std::size_t> shuffle(orbits.size());
        std::iota(shuffle.begin(), shuffle.end(), std::size_t{0});
        for (std::size_t i = shuffle.size(); i > 1; --i)
            std::swap(shuffle[i - 1], shuffle[rng.below(i)]);
        for (std::size_t tries = 0; tries <= orbits.size(); ++tries) {
            try {
                return build();
            } catch (const invalid_instance&) {
                bool grew = false;
                for (std::size_t o : shuffle)
                    if (mult[o] == 0) {
                        mult[o] = 1;
                        grew = true;
                        break;
                    }
                if (!grew) break;
            }
        }
    }
    throw invalid_instance("random graph generation failed after bounded retries");
}

namespace {

std::vector<int> positions_below(const GaloisModel& gm, int pos) {
    std::vector<int> out;
    for (int q = 0; q < gm.subgroup_count(); ++q)
        if (gm.is_subset(q, pos)) out.push_back(q);
    return out;
}

std::vector<int> close_downward(const GaloisModel& gm, std::vector<int> pf) {
    std::set<int> out;
    for (int p : pf)
        for (int q : positions_below(gm, p)) out.insert(q);
    return {out.begin(), out.end()};
}

} // namespace

ReductionGraph random_reduction_graph(std::uint64_t seed, const RandomReductionParams& p) {
    Rng rng(seed);
    for (int attempt = 0; attempt < p.retries; ++attempt) {
        const int degree = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_group_degree)));
        std::vector<Permutation> gens;
        const int ngens = 1 + static_cast<int>(rng.below(2));
        for (int i = 0; i < ngens; ++i) gens.push_back(random_perm(rng, degree));
        PermGroup group;
        try {
            group = PermGroup::enumerate(degree, std::move(gens), p.group_order_cap);
        } catch (const cap_exceeded&) {
            continue;
        }
        // keep a few trivial-action instances, but mostly nontrivial ones
        if (group.order() == 1 && !rng.chance(0.2)) continue;
        ElementTable table(group);
        auto lattice = all_subgroups(table, group.order());

        // raw flags, then going-up closure: anything below a flagged
        // subgroup is flagged
        std::vector<char> raw(lattice.size(), 0);
        for (std::size_t i = 0; i < lattice.size(); ++i)
            raw[i] = rng.chance(p.nonreal_prob) ? 1 : 0;
        std::vector<GaloisSubgroup> subs;
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            bool flag = false;
            for (std::size_t j = 0; j < lattice.size(); ++j)
                if (raw[j] && subgroup_subset(lattice[i], lattice[j])) flag = true;
            subs.push_back(GaloisSubgroup{static_cast<int>(i), lattice[i], flag});
        }
        GaloisModel gm(group, std::move(subs));

        const int ncomp = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_components)));
        std::vector<RComponent> comps;
        for (int c = 0; c < ncomp; ++c) {
            RComponent rc;
            rc.id = "C" + std::to_string(c + 1);
            const bool full = (ncomp == 1) || rng.chance(p.full_stab_prob);
            rc.stab = full ? gm.full_pos()
                           : static_cast<int>(rng.below(static_cast<std::uint64_t>(gm.subgroup_count())));
            rc.genus = rng.chance(0.5)
                           ? 0
                           : 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(p.max_genus)));
            comps.push_back(std::move(rc));
        }

        std::vector<RIntersection> ints;
        auto pick_residue = [&](int a, int b) {
            const RComponent& ca = comps[static_cast<std::size_t>(a)];
            const RComponent& cb = comps[static_cast<std::size_t>(b)];
            if (rng.chance(p.rational_residue_prob)) {
                // try to make the point rational for one endpoint
                if (gm.is_subset(ca.stab, cb.stab)) return ca.stab;
                if (gm.is_subset(cb.stab, ca.stab)) return cb.stab;
            }
            const int meet = gm.find_pos(
                subgroup_intersection(gm.at(ca.stab).elems, gm.at(cb.stab).elems));
            const auto below = positions_below(gm, meet);
            return below[rng.below(below.size())];
        };
        if (ncomp > 1) {
            for (int c = 1; c < ncomp; ++c) {
                const int other = static_cast<int>(rng.below(static_cast<std::uint64_t>(c)));
                ints.push_back(RIntersection{"P" + std::to_string(ints.size() + 1), other, c,
                                             pick_residue(other, c)});
            }
            const int extra =
                static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_extra_intersections) + 1));
            for (int e = 0; e < extra; ++e) {
                const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(ncomp)));
                int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(ncomp)));
                if (a == b) b = (b + 1) % ncomp;
                ints.push_back(
                    RIntersection{"P" + std::to_string(ints.size() + 1), a, b, pick_residue(a, b)});
            }
        }

        for (auto& c : comps) {
            std::vector<int> pf;
            for (const auto& x : ints)
                if (comps[static_cast<std::size_t>(x.a)].id == c.id ||
                    comps[static_cast<std::size_t>(x.b)].id == c.id)
                    pf.push_back(x.residue);
            if (rng.chance(p.stab_point_prob)) pf.push_back(c.stab);
            const auto below = positions_below(gm, c.stab);
            if (rng.chance(0.3)) pf.push_back(below[rng.below(below.size())]);
            c.point_fields = close_downward(gm, pf);
        }

        Declared declared;
        declared.henselian = rng.chance(p.henselian_prob);
        declared.real_F = rng.chance(p.real_prob);
        if (declared.real_F && declared.henselian) {
            bool witness = gm.ground_field_real();
            if (witness) {
                witness = false;
                for (const auto& c : comps)
                    for (int pf : c.point_fields)
                        if (!gm.at(pf).nonreal) witness = true;
            }
            if (!witness) declared.real_F = false;
        }

        try {
            ReductionGraph probe(gm, comps, ints, declared);
            long long weighted = 0;
            for (const auto& c : comps) weighted += gm.index_of(c.stab) * c.genus;
            const long long beta_prime = probe.base_change().ggraph.graph().betti();
            declared.g_F = beta_prime + weighted +
                           static_cast<long long>(rng.below(static_cast<std::uint64_t>(p.genus_slack_max) + 1));
            return ReductionGraph(std::move(gm), std::move(comps), std::move(ints), declared);
        } catch (const invalid_instance&) {
            continue;
        }
    }
    throw invalid_instance("random reduction instance generation failed after bounded retries");
}

} // namespace riglab
