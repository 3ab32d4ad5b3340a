#include "scholnet/sweep.hpp"

#include "scholnet/errors.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace scholnet {

void SweepGrid::validate() const {
    auto check = [](const std::vector<std::uint32_t>& values, const char* name) {
        if (values.empty()) throw DataError(std::string("sweep grid: empty ") + name + " list");
        for (const auto v : values)
            if (v == 0) throw DataError(std::string("sweep grid: ") + name + " values must be positive");
    };
    check(k_max, "k_max");
    check(theta_w, "theta_w");
    check(f_min, "f_min");
    check(f_max, "f_max");
}

SweepResult run_sweep(const CooccurrenceMatrix& matrix, const KeywordIndex& index,
                      const SweepGrid& grid, int threads) {
    grid.validate();

    struct Job {
        FilterParams params;
        std::uint64_t seed = 0;
        bool valid = true;
    };
    std::vector<Job> jobs;
    std::uint64_t combo = 0;
    for (const auto km : grid.k_max)
        for (const auto th : grid.theta_w)
            for (const auto fm : grid.f_min)
                for (const auto fx : grid.f_max) {
                    Job job;
                    job.params = {km, th, fm, fx};
                    job.seed = grid.seed + combo;
                    job.valid = fm <= fx;
                    jobs.push_back(job);
                    ++combo;
                }

    SweepResult result;
    std::vector<std::optional<SweepPoint>> slots(jobs.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        try {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= jobs.size()) return;
                const Job& job = jobs[i];
                if (!job.valid) continue;
                SweepPoint point;
                point.params = job.params;
                point.seed = job.seed;
                const FilteredNetwork net = filter_network(matrix, index, job.params);
                point.num_vertices = net.graph.num_nodes();
                point.num_edges = net.graph.num_edges();
                if (!net.empty_warning) {
                    const CommunityResult communities = louvain(net.graph, job.seed);
                    point.modularity = communities.modularity;
                    point.num_communities = communities.community_sizes.size();
                    double sum = 0.0, sum_sq = 0.0;
                    for (const auto s : communities.community_sizes) {
                        sum += static_cast<double>(s);
                        sum_sq += static_cast<double>(s) * static_cast<double>(s);
                    }
                    point.concentration = sum_sq / (sum * sum);
                }
                slots[i] = point;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    const int workers = std::max(1, threads);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!jobs[i].valid) {
            ++result.skipped_invalid;
            continue;
        }
        result.points.push_back(*slots[i]);
    }
    return result;
}

std::vector<SweepPoint> pareto_front(
    const std::vector<SweepPoint>& points,
    std::optional<std::pair<std::size_t, std::size_t>> community_band) {
    if (points.empty()) throw DataError("pareto front: no sweep points");
    std::vector<const SweepPoint*> scored;
    for (const auto& p : points) {
        if (!p.modularity || !p.concentration) continue;
        if (community_band && (p.num_communities < community_band->first ||
                               p.num_communities > community_band->second))
            continue;
        scored.push_back(&p);
    }
    if (scored.empty())
        throw DataError(community_band
                            ? "pareto front: no sweep point inside the community band"
                            : "pareto front: all sweep points are empty networks");

    auto dominates = [](const SweepPoint& a, const SweepPoint& b) {
        const bool ge = a.modularity >= b.modularity && a.num_vertices >= b.num_vertices &&
                        a.concentration <= b.concentration;
        const bool gt = a.modularity > b.modularity || a.num_vertices > b.num_vertices ||
                        a.concentration < b.concentration;
        return ge && gt;
    };

    std::vector<SweepPoint> front;
    for (const auto* candidate : scored) {
        bool dominated = false;
        for (const auto* other : scored) {
            if (other == candidate) continue;
            if (dominates(*other, *candidate)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) front.push_back(*candidate);
    }
    return front;
}

} // namespace scholnet
