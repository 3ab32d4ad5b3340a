#include "scholnet/errors.hpp"
#include "scholnet/rng.hpp"
#include "scholnet/sweep.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

using namespace scholnet;
namespace ts = scholnet::testsupport;

namespace {

struct Fixture {
    KeywordIndex index;
    CooccurrenceMatrix matrix{0};
};

Fixture sweep_fixture(std::uint64_t seed = 12) {
    const auto planted = ts::make_planted_corpus({3, 40, 40, 0, 0, 0.0, 0.0, seed});
    KeywordParams kp;
    kp.min_candidate_freq = 3;
    Fixture f;
    f.index = score_keywords(planted.corpus, kp);
    f.matrix = build_cooccurrence(f.index);
    return f;
}

// quadratic reference for the non-dominated set
std::vector<SweepPoint> brute_force_front(const std::vector<SweepPoint>& points) {
    std::vector<SweepPoint> scored;
    for (const auto& p : points)
        if (p.modularity && p.concentration) scored.push_back(p);
    std::vector<SweepPoint> front;
    for (std::size_t i = 0; i < scored.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < scored.size() && !dominated; ++j) {
            if (i == j) continue;
            const auto& a = scored[j];
            const auto& b = scored[i];
            const bool ge = *a.modularity >= *b.modularity &&
                            a.num_vertices >= b.num_vertices &&
                            *a.concentration <= *b.concentration;
            const bool gt = *a.modularity > *b.modularity ||
                            a.num_vertices > b.num_vertices ||
                            *a.concentration < *b.concentration;
            if (ge && gt) dominated = true;
        }
        if (!dominated) front.push_back(scored[i]);
    }
    return front;
}

bool same_points(const std::vector<SweepPoint>& a, const std::vector<SweepPoint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].params.k_max != b[i].params.k_max || a[i].params.theta_w != b[i].params.theta_w ||
            a[i].params.f_min != b[i].params.f_min || a[i].params.f_max != b[i].params.f_max)
            return false;
    }
    return true;
}

} // namespace

TEST_SUITE("sweep") {

TEST_CASE("a 1x1x1x1 grid equals a direct run with the same seed") {
    const Fixture f = sweep_fixture();
    SweepGrid grid;
    grid.k_max = {500};
    grid.theta_w = {3};
    grid.f_min = {3};
    grid.f_max = {90};
    grid.seed = 42;
    const SweepResult result = run_sweep(f.matrix, f.index, grid);
    REQUIRE(result.points.size() == 1);
    const SweepPoint& point = result.points[0];

    const FilteredNetwork net = filter_network(f.matrix, f.index, {500, 3, 3, 90});
    REQUIRE_FALSE(net.empty_warning);
    const SemanticCommunities direct = semantic_communities(net.graph, 42);
    CHECK(point.num_vertices == net.graph.num_nodes());
    CHECK(*point.modularity == direct.communities.modularity);
    CHECK(point.num_communities == direct.communities.community_sizes.size());
    // concentration identity sum s_k^2 / (sum s_k)^2 and vertex count
    double sum = 0.0, sum_sq = 0.0;
    for (const auto s : direct.communities.community_sizes) {
        sum += static_cast<double>(s);
        sum_sq += static_cast<double>(s) * static_cast<double>(s);
    }
    CHECK(*point.concentration == doctest::Approx(sum_sq / (sum * sum)).epsilon(1e-12));
    CHECK(point.num_vertices == static_cast<std::size_t>(sum));
}

TEST_CASE("theta above the maximum edge weight empties every point") {
    const Fixture f = sweep_fixture();
    SweepGrid grid;
    grid.k_max = {1000};
    grid.theta_w = {1000000};
    grid.f_min = {1};
    grid.f_max = {1000000};
    const SweepResult result = run_sweep(f.matrix, f.index, grid);
    REQUIRE(result.points.size() == 1);
    CHECK(result.points[0].num_vertices == 0);
    CHECK_FALSE(result.points[0].modularity.has_value());
    CHECK_THROWS_AS(pareto_front(result.points), DataError);
}

TEST_CASE("vertex and edge counts are non-increasing along theta rows") {
    // theta/window monotonicity is guaranteed when the degree cap does not
    // bind (a binding k_max can resurrect hubs as theta rises, see the
    // semantic filter tests), so the cap values here sit above any degree
    const Fixture f = sweep_fixture();
    SweepGrid grid;
    grid.k_max = {10000, 50000, 100000};
    grid.theta_w = {2, 4, 8};
    grid.f_min = {3};
    grid.f_max = {100000};
    grid.seed = 7;
    const SweepResult result = run_sweep(f.matrix, f.index, grid);
    REQUIRE(result.points.size() == 9);
    // grid order: k_max outer, theta inner
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t t = 1; t < 3; ++t) {
            const auto& prev = result.points[k * 3 + t - 1];
            const auto& cur = result.points[k * 3 + t];
            CHECK(cur.num_vertices <= prev.num_vertices);
            CHECK(cur.num_edges <= prev.num_edges);
        }
    }
}

TEST_CASE("invalid window combinations are skipped and counted") {
    const Fixture f = sweep_fixture();
    SweepGrid grid;
    grid.k_max = {1000};
    grid.theta_w = {2};
    grid.f_min = {3, 50};
    grid.f_max = {10, 100};
    const SweepResult result = run_sweep(f.matrix, f.index, grid);
    CHECK(result.skipped_invalid == 1); // f_min=50 > f_max=10
    CHECK(result.points.size() == 3);
}

TEST_CASE("sweep output is deterministic and thread-independent") {
    const Fixture f = sweep_fixture();
    SweepGrid grid;
    grid.k_max = {100, 1000};
    grid.theta_w = {2, 4};
    grid.f_min = {3};
    grid.f_max = {60, 100000};
    grid.seed = 11;
    const SweepResult serial = run_sweep(f.matrix, f.index, grid, 1);
    const SweepResult parallel = run_sweep(f.matrix, f.index, grid, 4);
    REQUIRE(serial.points.size() == parallel.points.size());
    for (std::size_t i = 0; i < serial.points.size(); ++i) {
        CHECK(serial.points[i].num_vertices == parallel.points[i].num_vertices);
        CHECK(serial.points[i].modularity == parallel.points[i].modularity);
        CHECK(serial.points[i].concentration == parallel.points[i].concentration);
        CHECK(serial.points[i].seed == parallel.points[i].seed);
    }
}

TEST_CASE("pareto front equals the quadratic oracle") {
    // synthetic cloud of points exercises the dominance logic directly
    SplitMix64 rng(31);
    std::vector<SweepPoint> cloud;
    for (int i = 0; i < 50; ++i) {
        SweepPoint p;
        p.params = {1, 1, 1, 1};
        p.num_vertices = 50 + rng.bounded(200);
        p.num_communities = 2 + rng.bounded(20);
        p.modularity = rng.next_double();
        p.concentration = 0.05 + 0.95 * rng.next_double();
        cloud.push_back(p);
    }
    const auto front = pareto_front(cloud);
    const auto oracle = brute_force_front(cloud);
    CHECK(same_points(front, oracle));
    REQUIRE_FALSE(front.empty());

    // a point dominating everything is the whole front
    SweepPoint dominator;
    dominator.params = {9, 9, 9, 9};
    dominator.num_vertices = 10000;
    dominator.modularity = 2.0;
    dominator.concentration = 0.001;
    cloud.push_back(dominator);
    const auto single = pareto_front(cloud);
    REQUIRE(single.size() == 1);
    CHECK(single[0].params.k_max == 9);

    // two points trading objectives are both on the front
    std::vector<SweepPoint> pair;
    SweepPoint a, b;
    a.params = {1, 1, 1, 1};
    a.num_vertices = 100;
    a.modularity = 0.9;
    a.concentration = 0.5;
    b.params = {2, 2, 2, 2};
    b.num_vertices = 200;
    b.modularity = 0.5;
    b.concentration = 0.5;
    pair.push_back(a);
    pair.push_back(b);
    CHECK(pareto_front(pair).size() == 2);
}

TEST_CASE("the community band filters front candidates without touching points") {
    std::vector<SweepPoint> cloud;
    for (int i = 0; i < 10; ++i) {
        SweepPoint p;
        p.params = {static_cast<std::uint32_t>(i + 1), 1, 1, 1};
        p.num_vertices = 100 + 10 * static_cast<std::size_t>(i);
        p.num_communities = static_cast<std::size_t>(2 + i); // 2..11
        p.modularity = 0.5;
        p.concentration = 0.2;
        cloud.push_back(p);
    }
    // unbanded: the largest-vertex point dominates
    const auto free_front = pareto_front(cloud);
    REQUIRE(free_front.size() == 1);
    CHECK(free_front[0].num_communities == 11);
    // banded to [5, 8]: only in-band points compete
    const auto banded = pareto_front(cloud, std::pair<std::size_t, std::size_t>{5, 8});
    REQUIRE(banded.size() == 1);
    CHECK(banded[0].num_communities == 8);
    CHECK_THROWS_AS(pareto_front(cloud, std::pair<std::size_t, std::size_t>{40, 50}), DataError);
}

TEST_CASE("concentration lies in [1/C, 1] and hits 1 for one community") {
    const Fixture f = sweep_fixture();
    SweepGrid grid;
    grid.k_max = {100000};
    grid.theta_w = {2};
    grid.f_min = {3};
    grid.f_max = {100000};
    const SweepResult result = run_sweep(f.matrix, f.index, grid);
    for (const auto& p : result.points) {
        if (!p.concentration) continue;
        CHECK(*p.concentration <= 1.0);
        CHECK(*p.concentration >=
              1.0 / static_cast<double>(std::max<std::size_t>(1, p.num_communities)));
    }
}

} // TEST_SUITE
