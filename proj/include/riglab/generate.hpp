#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "riglab/ggraph.hpp"
#include "riglab/reduction.hpp"

namespace riglab {

/// Deterministic generator state; all sampling goes through this so that a
/// seed pins the produced instance exactly.
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next() { return eng(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
    std::mt19937_64 eng;
};

struct ExhaustiveParams {
    int max_vertices = 5;
    long long max_mult = 2;
    std::size_t group_order_cap = 48;
};

/// (max_mult+1)^(n choose 2): number of multiplicity assignments on n
/// labeled vertices.
std::uint64_t exhaustive_code_count(int n, long long max_mult);

struct ExhaustiveChunk {
    int n = 1;
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

/// The full code space split into chunks; processing chunks in order visits
/// instances in a canonical order.
std::vector<ExhaustiveChunk> exhaustive_chunks(const ExhaustiveParams& p, std::uint64_t chunk_size);

/// Visit every (connected multigraph, subgroup of its multiplicity-preserving
/// vertex permutations) pair whose graph code lies in the chunk. Instance ids
/// have the form "n<k>#<code>#g<j>" and reproduce the instance exactly.
void for_each_in_chunk(const ExhaustiveParams& p, const ExhaustiveChunk& chunk,
                       const std::function<void(const GGraph&, const std::string&)>& visit);

void for_each_exhaustive_ggraph(const ExhaustiveParams& p,
                                const std::function<void(const GGraph&, const std::string&)>& visit);

struct RandomGGraphParams {
    int min_vertices = 3;
    int max_vertices = 8;
    long long max_mult = 2;
    std::size_t group_order_cap = 24;
    int max_generators = 2;
    double orbit_keep_prob = 0.55;
    int retries = 64;
};

/// Random connected multigraph invariant under a random permutation group;
/// the action is valid by construction. Deterministic in the seed.
GGraph random_ggraph(std::uint64_t seed, const RandomGGraphParams& p);

struct RandomReductionParams {
    int max_group_degree = 4;
    std::size_t group_order_cap = 12;
    int max_components = 5;
    long long max_genus = 2;
    int max_extra_intersections = 3;
    double nonreal_prob = 0.3;
    double rational_residue_prob = 0.5;
    double stab_point_prob = 0.4;
    double full_stab_prob = 0.45;
    double henselian_prob = 0.5;
    double real_prob = 0.5;
    long long genus_slack_max = 2;
    int retries = 80;
};

/// Random valid labeled reduction graph with a consistent declared genus
/// budget. Deterministic in the seed.
ReductionGraph random_reduction_graph(std::uint64_t seed, const RandomReductionParams& p);

} // namespace riglab
