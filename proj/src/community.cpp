#include "scholnet/community.hpp"

#include "scholnet/errors.hpp"
#include "scholnet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace scholnet {

namespace {

// Undirected weighted graph in adjacency-list form, with self-loops, used
// for the aggregated levels of the Louvain hierarchy.
struct LevelGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj; // neighbor, weight
    std::vector<double> self_loop;                        // w(i, i)
    std::vector<double> strength;                         // sum_j w(i, j) + 2 * self_loop
    double total_weight = 0.0;                            // m: edges + self-loops

    void init(std::size_t nodes) {
        n = nodes;
        adj.assign(n, {});
        self_loop.assign(n, 0.0);
        strength.assign(n, 0.0);
        total_weight = 0.0;
    }

    void add_undirected(int u, int v, double w) {
        if (u == v) {
            self_loop[static_cast<std::size_t>(u)] += w;
            strength[static_cast<std::size_t>(u)] += 2.0 * w;
        } else {
            adj[static_cast<std::size_t>(u)].push_back({v, w});
            adj[static_cast<std::size_t>(v)].push_back({u, w});
            strength[static_cast<std::size_t>(u)] += w;
            strength[static_cast<std::size_t>(v)] += w;
        }
        total_weight += w;
    }
};

// Symmetrized edge list (u < v, both directions summed) over dense indices.
std::vector<Graph::Edge> undirected_edges(const Graph& graph) {
    if (!graph.directed()) return graph.edges();
    std::unordered_map<std::uint64_t, double> acc;
    std::vector<std::pair<int, int>> order;
    for (const auto& e : graph.edges()) {
        int a = e.u, b = e.v;
        if (a > b) std::swap(a, b);
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
            static_cast<std::uint32_t>(b);
        auto [it, inserted] = acc.emplace(key, 0.0);
        if (inserted) order.push_back({a, b});
        it->second += e.weight;
    }
    std::vector<Graph::Edge> edges;
    edges.reserve(order.size());
    for (const auto& [a, b] : order) {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
            static_cast<std::uint32_t>(b);
        edges.push_back({a, b, acc.at(key)});
    }
    return edges;
}

std::vector<int> partition_labels(const Graph& graph, const Partition& partition) {
    std::vector<int> labels(graph.num_nodes());
    for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
        const std::string& id = graph.id_of(static_cast<int>(i));
        auto it = partition.assignment.find(id);
        if (it == partition.assignment.end())
            throw DataError("modularity: partition misses node '" + id + "'");
        labels[i] = it->second;
    }
    return labels;
}

double modularity_of_labels(const std::vector<Graph::Edge>& edges,
                            const std::vector<int>& labels, std::size_t n) {
    double m = 0.0;
    for (const auto& e : edges) m += e.weight;
    if (m <= 0.0) throw DataError("modularity: graph has no edges");
    std::unordered_map<int, double> internal; // sum over ordered internal pairs
    std::unordered_map<int, double> strength_by_comm;
    std::vector<double> strength(n, 0.0);
    for (const auto& e : edges) {
        strength[static_cast<std::size_t>(e.u)] += e.weight;
        strength[static_cast<std::size_t>(e.v)] += e.weight;
        if (labels[static_cast<std::size_t>(e.u)] == labels[static_cast<std::size_t>(e.v)])
            internal[labels[static_cast<std::size_t>(e.u)]] += 2.0 * e.weight;
    }
    for (std::size_t i = 0; i < n; ++i) strength_by_comm[labels[i]] += strength[i];
    const double two_m = 2.0 * m;
    double q = 0.0;
    for (const auto& [c, tot] : strength_by_comm) {
        auto it = internal.find(c);
        const double in_c = it == internal.end() ? 0.0 : it->second;
        q += in_c / two_m - (tot / two_m) * (tot / two_m);
    }
    return q;
}

// One Louvain local-move pass; returns true if any node changed community.
bool local_move_pass(const LevelGraph& g, std::vector<int>& community,
                     const std::vector<int>& order) {
    const double m = g.total_weight;
    std::vector<double> community_strength(g.n, 0.0);
    for (std::size_t i = 0; i < g.n; ++i)
        community_strength[static_cast<std::size_t>(community[i])] += g.strength[i];

    std::vector<double> neigh_weight(g.n, 0.0);
    std::vector<int> neigh_comms;
    bool moved_any = false;
    bool moved_this_sweep = true;
    while (moved_this_sweep) {
        moved_this_sweep = false;
        for (const int node : order) {
            const auto ni = static_cast<std::size_t>(node);
            const int old_comm = community[ni];

            neigh_comms.clear();
            neigh_weight[static_cast<std::size_t>(old_comm)] = 0.0;
            neigh_comms.push_back(old_comm);
            for (const auto& [nbr, w] : g.adj[ni]) {
                const int c = community[static_cast<std::size_t>(nbr)];
                if (neigh_weight[static_cast<std::size_t>(c)] == 0.0 && c != old_comm)
                    neigh_comms.push_back(c);
                neigh_weight[static_cast<std::size_t>(c)] += w;
            }

            community_strength[static_cast<std::size_t>(old_comm)] -= g.strength[ni];

            // gain(c) = k_{i,c} - k_i * tot_c / 2m, up to constants shared by
            // all candidates; ties go to the smallest community id
            int best_comm = old_comm;
            double best_gain = neigh_weight[static_cast<std::size_t>(old_comm)] -
                               g.strength[ni] *
                                   community_strength[static_cast<std::size_t>(old_comm)] /
                                   (2.0 * m);
            for (const int c : neigh_comms) {
                const double gain =
                    neigh_weight[static_cast<std::size_t>(c)] -
                    g.strength[ni] * community_strength[static_cast<std::size_t>(c)] / (2.0 * m);
                if (gain > best_gain + 1e-12 || (std::abs(gain - best_gain) <= 1e-12 && c < best_comm)) {
                    best_gain = gain;
                    best_comm = c;
                }
            }

            community_strength[static_cast<std::size_t>(best_comm)] += g.strength[ni];
            community[ni] = best_comm;
            if (best_comm != old_comm) {
                moved_any = true;
                moved_this_sweep = true;
            }
            for (const int c : neigh_comms) neigh_weight[static_cast<std::size_t>(c)] = 0.0;
        }
    }
    return moved_any;
}

} // namespace

double evaluate_modularity(const Graph& graph, const Partition& partition) {
    if (graph.num_edges() == 0) throw DataError("modularity: graph has no edges");
    const auto labels = partition_labels(graph, partition);
    return modularity_of_labels(undirected_edges(graph), labels, graph.num_nodes());
}

namespace {

std::vector<int> renumber_dense(const std::vector<int>& labels) {
    std::unordered_map<int, int> map;
    std::vector<int> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, ins] = map.emplace(labels[i], static_cast<int>(map.size()));
        out[i] = it->second;
        (void)ins;
    }
    return out;
}

// Super-graph of the labeled communities. Parallel adjacency entries are
// fine for the move pass, which accumulates per-community weights.
LevelGraph aggregate(const std::vector<Graph::Edge>& edges, const std::vector<int>& labels,
                     std::size_t num_comms) {
    LevelGraph agg;
    agg.init(num_comms);
    for (const auto& e : edges)
        agg.add_undirected(labels[static_cast<std::size_t>(e.u)],
                           labels[static_cast<std::size_t>(e.v)], e.weight);
    return agg;
}

// One full optimization run: node-level moves from the current labeling,
// then the aggregation cascade, repeated while modularity improves. The
// node-level restart doubles as a refinement pass over the coarse result,
// which plain coarsening cannot revisit.
std::vector<int> louvain_single(const LevelGraph& base, const std::vector<Graph::Edge>& edges,
                                std::size_t n, std::uint64_t seed, bool random_init) {
    SplitMix64 rng(seed);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    if (random_init) {
        // restarts explore from random partitions; plateaus of zero-gain
        // moves can wall off the optimum from the singleton start
        for (auto& label : labels) label = static_cast<int>(rng.bounded(n));
        labels = renumber_dense(labels);
    }
    double q = modularity_of_labels(edges, labels, n);
    for (;;) {
        {
            std::vector<int> community = labels;
            std::vector<int> order(static_cast<int>(n));
            std::iota(order.begin(), order.end(), 0);
            shuffle(order, rng);
            if (local_move_pass(base, community, order)) labels = renumber_dense(community);
        }
        for (;;) {
            int num_comms = 0;
            for (const int c : labels) num_comms = std::max(num_comms, c + 1);
            if (static_cast<std::size_t>(num_comms) == n) break;
            const LevelGraph agg =
                aggregate(edges, labels, static_cast<std::size_t>(num_comms));
            std::vector<int> community(static_cast<std::size_t>(num_comms));
            std::iota(community.begin(), community.end(), 0);
            std::vector<int> order(num_comms);
            std::iota(order.begin(), order.end(), 0);
            shuffle(order, rng);
            if (!local_move_pass(agg, community, order)) break;
            const std::vector<int> dense = renumber_dense(community);
            for (auto& label : labels) label = dense[static_cast<std::size_t>(label)];
        }
        const double q_new = modularity_of_labels(edges, labels, n);
        if (q_new <= q + 1e-12) break;
        q = q_new;
    }
    return labels;
}

} // namespace

CommunityResult louvain(const Graph& graph, std::uint64_t seed) {
    if (graph.num_edges() == 0) throw DataError("louvain: graph has no edges");
    const std::size_t n = graph.num_nodes();
    const auto edges = undirected_edges(graph);

    LevelGraph base;
    base.init(n);
    for (const auto& e : edges) base.add_undirected(e.u, e.v, e.weight);

    // a handful of restarts with derived sub-seeds; greedy single runs can
    // lodge in local optima on small graphs. Deterministic: the sub-seed
    // stream is fixed by the seed and the first best run wins ties.
    constexpr int kRestarts = 8;
    SplitMix64 seeder(seed);
    std::vector<int> best_labels;
    double best_q = -2.0;
    for (int r = 0; r < kRestarts; ++r) {
        std::vector<int> labels = louvain_single(base, edges, n, seeder.next(), r > 0);
        const double q = modularity_of_labels(edges, labels, n);
        if (q > best_q + 1e-12) {
            best_q = q;
            best_labels = std::move(labels);
        }
    }

    CommunityResult result;
    result.partition = Partition::densify(graph.node_ids(), best_labels);
    result.modularity = evaluate_modularity(graph, result.partition);
    result.community_sizes = result.partition.community_sizes();
    result.seed = seed;
    return result;
}

namespace {

double rewired_sample_modularity(const std::vector<Graph::Edge>& edges, std::size_t n,
                                 const std::vector<int>& labels, std::uint64_t sample_seed,
                                 RewireMode mode) {
    SplitMix64 rng(sample_seed);
    constexpr std::size_t kMaxTriesPerEdge = 10000;
    std::vector<Graph::Edge> rewired;

    if (mode == RewireMode::Uniform) {
        if (edges.size() > n * (n - 1) / 2)
            throw DataError("bootstrap: more edges than distinct node pairs");
        std::unordered_map<std::uint64_t, bool> used;
        used.reserve(edges.size() * 2);
        rewired.reserve(edges.size());
        for (const auto& e : edges) {
            std::size_t tries = 0;
            for (;;) {
                if (++tries > kMaxTriesPerEdge)
                    throw DataError("bootstrap: graph too dense to rewire without duplicates");
                int u = static_cast<int>(rng.bounded(n));
                int v = static_cast<int>(rng.bounded(n));
                if (u == v) continue;
                if (u > v) std::swap(u, v);
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
                    static_cast<std::uint32_t>(v);
                if (used.emplace(key, true).second) {
                    rewired.push_back({u, v, e.weight});
                    break;
                }
            }
        }
    } else {
        rewired = edges;
        auto key_of = [](int a, int b) {
            if (a > b) std::swap(a, b);
            return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
                   static_cast<std::uint32_t>(b);
        };
        std::unordered_map<std::uint64_t, bool> used;
        used.reserve(edges.size() * 2);
        for (const auto& e : rewired) used.emplace(key_of(e.u, e.v), true);
        const std::size_t swaps = 10 * rewired.size();
        for (std::size_t s = 0; s < swaps; ++s) {
            const std::size_t i = rng.bounded(rewired.size());
            const std::size_t j = rng.bounded(rewired.size());
            if (i == j) continue;
            auto& e1 = rewired[i];
            auto& e2 = rewired[j];
            // swap targets: (u1,v1),(u2,v2) -> (u1,v2),(u2,v1)
            const int nu1 = e1.u, nv1 = e2.v, nu2 = e2.u, nv2 = e1.v;
            if (nu1 == nv1 || nu2 == nv2) continue;
            const auto k1 = key_of(nu1, nv1), k2 = key_of(nu2, nv2);
            if (k1 == k2 || used.count(k1) || used.count(k2)) continue;
            used.erase(key_of(e1.u, e1.v));
            used.erase(key_of(e2.u, e2.v));
            e1 = {nu1, nv1, e1.weight};
            e2 = {nu2, nv2, e2.weight};
            used.emplace(k1, true);
            used.emplace(k2, true);
        }
    }
    return modularity_of_labels(rewired, labels, n);
}

} // namespace

BootstrapResult bootstrap_significance(const Graph& graph, const Partition& partition,
                                       std::size_t num_samples, std::uint64_t seed,
                                       RewireMode mode, int threads) {
    if (graph.num_edges() == 0) throw DataError("bootstrap: graph has no edges");
    if (num_samples == 0) throw DataError("bootstrap: num_samples must be positive");
    const auto labels = partition_labels(graph, partition);
    const auto edges = undirected_edges(graph);
    const std::size_t n = graph.num_nodes();

    BootstrapResult result;
    result.num_samples = num_samples;
    result.sample_modularities.assign(num_samples, 0.0);

    const int workers = std::max(1, threads);
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run_range = [&](std::size_t begin, std::size_t end) {
        try {
            for (std::size_t s = begin; s < end; ++s)
                result.sample_modularities[s] =
                    rewired_sample_modularity(edges, n, labels, seed + s, mode);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    if (workers == 1) {
        run_range(0, num_samples);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (num_samples + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
            const std::size_t begin = std::min(num_samples, static_cast<std::size_t>(t) * chunk);
            const std::size_t end = std::min(num_samples, begin + chunk);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    double sum = 0.0;
    for (const double q : result.sample_modularities) sum += q;
    result.mean = sum / static_cast<double>(num_samples);
    if (num_samples > 1) {
        double ss = 0.0;
        for (const double q : result.sample_modularities) {
            const double d = q - result.mean;
            ss += d * d;
        }
        result.std_dev = std::sqrt(ss / static_cast<double>(num_samples - 1));
    }
    return result;
}

} // namespace scholnet
