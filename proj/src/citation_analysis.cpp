#include "scholnet/citation_analysis.hpp"

#include "scholnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scholnet {

Graph build_citation_graph(const Corpus& corpus) {
    if (corpus.empty()) throw DataError("citation graph: corpus is empty");
    Graph g(true);
    for (const auto& ref : corpus.references()) {
        g.add_node(ref.id, ref.title);
        if (ref.year) g.set_attribute(ref.id, "year", std::to_string(*ref.year));
    }
    for (const auto& link : corpus.links()) g.add_edge(link.citing_id, link.cited_id, 1.0);
    return g;
}

Graph core_filter(const Graph& graph) {
    if (!graph.directed()) throw DataError("core filter: directed graph required");
    std::vector<bool> keep(graph.num_nodes(), false);
    for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
        const auto in = graph.degree_by_index(static_cast<int>(i), DegreeMode::In).count;
        const auto out = graph.degree_by_index(static_cast<int>(i), DegreeMode::Out).count;
        keep[i] = in >= 1 || out >= 2;
    }
    return induced_subgraph(graph, keep);
}

NetworkStats network_stats(const Graph& graph, const std::set<std::string>& seed_ids) {
    NetworkStats stats;
    stats.nodes = graph.num_nodes();
    stats.edges = graph.num_edges();
    double sum_cited = 0.0;
    for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
        const auto in = graph.degree_by_index(static_cast<int>(i), DegreeMode::In).count;
        if (in >= 1) {
            ++stats.nodes_with_incoming;
            sum_cited += static_cast<double>(in);
        }
    }
    if (stats.nodes_with_incoming > 0)
        stats.mean_in_degree_all = sum_cited / static_cast<double>(stats.nodes_with_incoming);
    double sum_seed = 0.0;
    std::size_t seed_in_graph = 0;
    for (const auto& id : seed_ids) {
        if (!graph.has_node(id)) continue;
        ++seed_in_graph;
        sum_seed += static_cast<double>(graph.degree(id, DegreeMode::In).count);
    }
    if (seed_in_graph > 0)
        stats.mean_in_degree_seed = sum_seed / static_cast<double>(seed_in_graph);
    return stats;
}

namespace {

// Prefix sums over (log rank, log value) enabling O(1) per-segment OLS.
struct LogPrefix {
    std::vector<double> sx, sy, sxx, sxy, syy;

    explicit LogPrefix(const std::vector<double>& values) {
        const std::size_t n = values.size();
        sx.assign(n + 1, 0.0);
        sy.assign(n + 1, 0.0);
        sxx.assign(n + 1, 0.0);
        sxy.assign(n + 1, 0.0);
        syy.assign(n + 1, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = std::log(static_cast<double>(i + 1));
            const double y = std::log(values[i]);
            sx[i + 1] = sx[i] + x;
            sy[i + 1] = sy[i] + y;
            sxx[i + 1] = sxx[i] + x * x;
            sxy[i + 1] = sxy[i] + x * y;
            syy[i + 1] = syy[i] + y * y;
        }
    }

    // Ranks [a, b] inclusive, 1-based.
    struct Ols {
        double slope = 0.0, intercept = 0.0, sse = 0.0, sst = 0.0;
    };
    Ols fit(std::size_t a, std::size_t b) const {
        const double n = static_cast<double>(b - a + 1);
        const double x = sx[b] - sx[a - 1];
        const double y = sy[b] - sy[a - 1];
        const double xx = sxx[b] - sxx[a - 1];
        const double xy = sxy[b] - sxy[a - 1];
        const double yy = syy[b] - syy[a - 1];
        const double vxx = xx - x * x / n;
        const double vxy = xy - x * y / n;
        const double vyy = yy - y * y / n;
        Ols o;
        o.slope = vxx > 0.0 ? vxy / vxx : 0.0;
        o.intercept = (y - o.slope * x) / n;
        o.sst = std::max(0.0, vyy);
        o.sse = std::max(0.0, vyy - (vxx > 0.0 ? vxy * vxy / vxx : 0.0));
        return o;
    }
};

std::vector<std::size_t> log_spaced_candidates(std::size_t n, std::size_t count) {
    std::vector<std::size_t> out;
    if (n == 0) return out;
    const double lo = 0.0, hi = std::log(static_cast<double>(n));
    for (std::size_t i = 0; i < count; ++i) {
        const double t = count == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        auto r = static_cast<std::size_t>(std::llround(std::exp(lo + t * (hi - lo))));
        r = std::min(std::max<std::size_t>(r, 1), n);
        out.push_back(r);
    }
    out.push_back(n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double total_cost(const LogPrefix& prefix, const std::vector<std::size_t>& ends) {
    double cost = 0.0;
    std::size_t start = 1;
    for (const std::size_t end : ends) {
        cost += prefix.fit(start, end).sse;
        start = end + 1;
    }
    return cost;
}

} // namespace

RankSizeFit fit_rank_size(const std::vector<double>& sizes_desc, std::size_t num_regimes,
                          std::size_t min_points) {
    const std::size_t n = sizes_desc.size();
    if (num_regimes == 0) throw DataError("rank-size: num_regimes must be positive");
    if (min_points < 2) throw DataError("rank-size: min_points must be at least 2");
    if (n < num_regimes * min_points)
        throw DataError("rank-size: need at least " + std::to_string(num_regimes * min_points) +
                        " ranked values, have " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (sizes_desc[i] <= 0.0) throw DataError("rank-size: values must be positive");
        if (i > 0 && sizes_desc[i] > sizes_desc[i - 1])
            throw DataError("rank-size: series must be sorted descending");
    }

    const LogPrefix prefix(sizes_desc);

    // Coarse stage: dynamic program over ~200 log-spaced candidate segment
    // ends (rank n always included).
    const auto candidates = log_spaced_candidates(n, 200);
    const std::size_t c = candidates.size();
    const double inf = std::numeric_limits<double>::infinity();
    // dp[r][j]: min cost covering ranks 1..candidates[j] with r+1 segments
    std::vector<std::vector<double>> dp(num_regimes, std::vector<double>(c, inf));
    std::vector<std::vector<std::size_t>> back(num_regimes, std::vector<std::size_t>(c, 0));
    for (std::size_t j = 0; j < c; ++j)
        if (candidates[j] >= min_points) dp[0][j] = prefix.fit(1, candidates[j]).sse;
    for (std::size_t r = 1; r < num_regimes; ++r) {
        for (std::size_t j = 0; j < c; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                if (dp[r - 1][i] == inf) continue;
                const std::size_t seg_start = candidates[i] + 1;
                const std::size_t seg_end = candidates[j];
                if (seg_end + 1 < seg_start + min_points) continue;
                const double cost = dp[r - 1][i] + prefix.fit(seg_start, seg_end).sse;
                if (cost < dp[r][j]) {
                    dp[r][j] = cost;
                    back[r][j] = i;
                }
            }
        }
    }
    const std::size_t last = c - 1; // candidates[last] == n
    if (dp[num_regimes - 1][last] == inf)
        throw DataError("rank-size: no valid segmentation under min_points constraint");

    std::vector<std::size_t> ends(num_regimes);
    {
        std::size_t j = last;
        for (std::size_t r = num_regimes; r-- > 0;) {
            ends[r] = candidates[j];
            if (r > 0) j = back[r][j];
        }
    }

    // Refinement: slide each internal breakpoint over its full feasible
    // range until no single-breakpoint move lowers the cost.
    if (num_regimes > 1) {
        bool changed = true;
        int guard = 0;
        while (changed && ++guard < 50) {
            changed = false;
            for (std::size_t k = 0; k + 1 < num_regimes; ++k) {
                const std::size_t seg_start = k == 0 ? 1 : ends[k - 1] + 1;
                const std::size_t next_end = ends[k + 1];
                const std::size_t lo = seg_start + min_points - 1;
                const std::size_t hi = next_end - min_points;
                double best_cost = prefix.fit(seg_start, ends[k]).sse +
                                   prefix.fit(ends[k] + 1, next_end).sse;
                std::size_t best_end = ends[k];
                for (std::size_t e = lo; e <= hi; ++e) {
                    const double cost =
                        prefix.fit(seg_start, e).sse + prefix.fit(e + 1, next_end).sse;
                    if (cost < best_cost) {
                        best_cost = cost;
                        best_end = e;
                    }
                }
                if (best_end != ends[k]) {
                    ends[k] = best_end;
                    changed = true;
                }
            }
        }
    }

    RankSizeFit fit;
    std::size_t start = 1;
    for (const std::size_t end : ends) {
        const auto ols = prefix.fit(start, end);
        RankSizeRegime regime;
        regime.rank_start = start;
        regime.rank_end = end;
        regime.alpha = -ols.slope;
        regime.intercept = ols.intercept;
        regime.r2 = ols.sst > 0.0 ? 1.0 - ols.sse / ols.sst : 1.0;
        fit.regimes.push_back(regime);
        start = end + 1;
    }
    fit.total_sse = total_cost(prefix, ends);
    return fit;
}

RankSizeSeries citation_rank_series(const Graph& graph) {
    std::vector<std::pair<std::size_t, std::string>> ranked;
    for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
        const auto in = graph.degree_by_index(static_cast<int>(i), DegreeMode::In).count;
        if (in >= 1) ranked.push_back({in, graph.id_of(static_cast<int>(i))});
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    RankSizeSeries series;
    for (const auto& [in, id] : ranked) {
        series.node_ids.push_back(id);
        series.citations.push_back(static_cast<double>(in));
    }
    return series;
}

RankSizeFit rank_size_fit(const Graph& graph, std::size_t num_regimes, std::size_t min_points) {
    return fit_rank_size(citation_rank_series(graph).citations, num_regimes, min_points);
}

namespace {

struct CliqueFinder {
    const std::vector<std::vector<int>>& adj; // sorted neighbor lists
    std::vector<std::vector<int>> cliques;

    bool connected(int u, int v) const {
        const auto& nu = adj[static_cast<std::size_t>(u)];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            cliques.push_back(r);
            return;
        }
        // pivot: vertex of P union X with most neighbors in P (smallest index on ties)
        int pivot = -1;
        std::size_t best = 0;
        auto consider = [&](int u) {
            std::size_t cnt = 0;
            for (const int v : p)
                if (connected(u, v)) ++cnt;
            if (pivot == -1 || cnt > best || (cnt == best && u < pivot)) {
                best = cnt;
                pivot = u;
            }
        };
        for (const int u : p) consider(u);
        for (const int u : x) consider(u);

        std::vector<int> ext;
        for (const int v : p)
            if (!connected(pivot, v)) ext.push_back(v);

        for (const int v : ext) {
            std::vector<int> np, nx;
            for (const int w : p)
                if (connected(v, w)) np.push_back(w);
            for (const int w : x)
                if (connected(v, w)) nx.push_back(w);
            r.push_back(v);
            expand(r, std::move(np), std::move(nx));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }
};

} // namespace

std::vector<std::vector<std::string>> maximal_cliques(const Graph& graph, std::size_t min_size) {
    const Graph und = graph.directed() ? symmetrized(graph) : graph;
    const std::size_t n = und.num_nodes();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : und.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    // degeneracy ordering: repeatedly remove a minimum-degree vertex
    // (smallest index on ties)
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    for (std::size_t i = 0; i < n; ++i) deg[i] = adj[i].size();
    std::vector<int> ordering;
    ordering.reserve(n);
    std::vector<std::size_t> position(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best_deg = std::numeric_limits<std::size_t>::max();
        int best = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!removed[i] && deg[i] < best_deg) {
                best_deg = deg[i];
                best = static_cast<int>(i);
            }
        }
        removed[static_cast<std::size_t>(best)] = true;
        position[static_cast<std::size_t>(best)] = step;
        ordering.push_back(best);
        for (const int v : adj[static_cast<std::size_t>(best)])
            if (!removed[static_cast<std::size_t>(v)]) --deg[static_cast<std::size_t>(v)];
    }

    CliqueFinder finder{adj, {}};
    for (const int v : ordering) {
        std::vector<int> p, x;
        for (const int u : adj[static_cast<std::size_t>(v)]) {
            if (position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(v)])
                p.push_back(u);
            else
                x.push_back(u);
        }
        std::vector<int> r{v};
        finder.expand(r, std::move(p), std::move(x));
    }

    std::vector<std::vector<std::string>> out;
    for (const auto& clique : finder.cliques) {
        if (clique.size() < min_size) continue;
        std::vector<std::string> ids;
        ids.reserve(clique.size());
        for (const int v : clique) ids.push_back(und.id_of(v));
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

} // namespace scholnet
