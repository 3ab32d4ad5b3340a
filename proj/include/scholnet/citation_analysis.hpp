#pragma once

#include "scholnet/corpus.hpp"
#include "scholnet/graph.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scholnet {

// Directed graph with one node per reference (label = title, year attribute
// when present) and one weight-1 edge per citation link.
Graph build_citation_graph(const Corpus& corpus);

// Keeps exactly the nodes that are cited at least once OR cite at least two
// others, measured on the ORIGINAL graph (single pass, not iterated): cited
// nodes have no missing incoming edges in a depth-limited crawl, and nodes
// citing two or more can bridge sub-communities.
Graph core_filter(const Graph& graph);

struct NetworkStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t nodes_with_incoming = 0;
    // Over nodes with in-degree >= 1; absent when no node has citations.
    std::optional<double> mean_in_degree_all;
    // Over seed nodes present in the graph, zeros included; absent when the
    // seed set is empty.
    std::optional<double> mean_in_degree_seed;
};

NetworkStats network_stats(const Graph& graph, const std::set<std::string>& seed_ids);

struct RankSizeRegime {
    std::size_t rank_start = 0; // 1-based, inclusive
    std::size_t rank_end = 0;   // inclusive
    double alpha = 0.0;         // log y = intercept - alpha * log rank
    double intercept = 0.0;
    double r2 = 0.0;
};

struct RankSizeFit {
    std::vector<RankSizeRegime> regimes; // contiguous, covering ranks 1..N
    double total_sse = 0.0;
};

// Piecewise power-law fit of a positive series already sorted descending:
// per-segment OLS of log(value) on log(rank), breakpoints minimizing total
// squared residual. The global search runs on ~200 log-spaced candidate
// ranks and is then refined exhaustively around the chosen breakpoints.
RankSizeFit fit_rank_size(const std::vector<double>& sizes_desc, std::size_t num_regimes,
                          std::size_t min_points);

// Fit over in-degrees (citations received): nodes with in-degree >= 1,
// sorted by in-degree descending, ties by node id ascending.
struct RankSizeSeries {
    std::vector<std::string> node_ids; // rank order
    std::vector<double> citations;
};

RankSizeSeries citation_rank_series(const Graph& graph);

RankSizeFit rank_size_fit(const Graph& graph, std::size_t num_regimes, std::size_t min_points);

// All maximal cliques of size >= min_size in the undirected symmetrization
// (an edge exists if a citation exists in either direction). Bron-Kerbosch
// with pivoting over a degeneracy ordering. Each clique is sorted
// lexicographically; the list is sorted by (size desc, lexicographic).
std::vector<std::vector<std::string>> maximal_cliques(const Graph& graph, std::size_t min_size);

} // namespace scholnet
