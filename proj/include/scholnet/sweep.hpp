#pragma once

#include "scholnet/semantic_network.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace scholnet {

struct SweepGrid {
    std::vector<std::uint32_t> k_max;
    std::vector<std::uint32_t> theta_w;
    std::vector<std::uint32_t> f_min;
    std::vector<std::uint32_t> f_max;
    std::uint64_t seed = 0;

    void validate() const; // nonempty positive value lists
};

struct SweepPoint {
    FilterParams params;
    std::size_t num_vertices = 0;
    std::size_t num_edges = 0;
    std::size_t num_communities = 0;
    std::optional<double> modularity;    // absent on an empty network
    std::optional<double> concentration; // sum s_k^2 / (sum s_k)^2
    std::uint64_t seed = 0;              // louvain seed used for this point
};

// Cartesian product in the order k_max x theta_w x f_min x f_max; point i
// gets louvain seed grid.seed + i (combination indices advance over invalid
// f_min > f_max combinations too, which are skipped and counted). Points are
// independent jobs; output order is grid order regardless of threads.
struct SweepResult {
    std::vector<SweepPoint> points;
    std::size_t skipped_invalid = 0;
};

SweepResult run_sweep(const CooccurrenceMatrix& matrix, const KeywordIndex& index,
                      const SweepGrid& grid, int threads = 1);

// Non-dominated set under: maximize modularity, maximize num_vertices,
// minimize concentration. Points without modularity (empty networks) are
// excluded; throws if nothing remains. Input order is preserved.
// Community count is a diagnostic, not an objective; community_band, when
// given, drops points whose count falls outside [first, second] before the
// dominance pass (a feasibility filter, conventionally [5, 50]).
std::vector<SweepPoint> pareto_front(
    const std::vector<SweepPoint>& points,
    std::optional<std::pair<std::size_t, std::size_t>> community_band = std::nullopt);

} // namespace scholnet
