#pragma once

#include "scholnet/graph.hpp"

#include <cstdint>
#include <vector>

namespace scholnet {

struct CommunityResult {
    Partition partition;                      // dense community ids 0..C-1
    double modularity = 0.0;                  // equals evaluate_modularity(graph, partition)
    std::vector<std::size_t> community_sizes; // indexed by community id
    std::uint64_t seed = 0;
};

// Newman-Girvan modularity of a partition, evaluated exactly on the weighted
// undirected graph; directed input is symmetrized (weights of both directions
// summed) first. Throws on an edgeless graph or a partition missing a node.
double evaluate_modularity(const Graph& graph, const Partition& partition);

// Two-phase greedy modularity optimization (local moves, then community
// aggregation) repeated until no gain, resolution 1. Deterministic for a
// fixed seed: node visit order is shuffled once per level with the seeded
// generator and gain ties go to the smallest community id.
CommunityResult louvain(const Graph& graph, std::uint64_t seed);

enum class RewireMode {
    Uniform,         // endpoints resampled uniformly; |V| and |E| preserved
    DegreePreserving // double-edge swaps; unweighted degree sequence preserved
};

struct BootstrapResult {
    std::vector<double> sample_modularities;
    double mean = 0.0;
    double std_dev = 0.0; // unbiased (n-1); 0 when num_samples == 1
    std::size_t num_samples = 0;
};

// Link-randomization significance test: each sample rewires the graph
// (self-loops and duplicate edges rejected by resampling) and re-evaluates
// the ORIGINAL partition's modularity on the rewired edges. Sample s uses
// derived seed seed + s, so samples are order-independent and can run on any
// number of threads with identical results.
BootstrapResult bootstrap_significance(const Graph& graph, const Partition& partition,
                                       std::size_t num_samples, std::uint64_t seed,
                                       RewireMode mode = RewireMode::Uniform, int threads = 1);

} // namespace scholnet
