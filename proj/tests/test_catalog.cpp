#include "scholnet/catalog_client.hpp"
#include "scholnet/errors.hpp"
#include "scholnet/text.hpp"

#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <thread>

using namespace scholnet;

namespace {

// in-process provider over a fixed fixture catalog keyed by normalized title
class StubProvider {
public:
    explicit StubProvider(std::map<std::string, nlohmann::json> catalog)
        : catalog_(std::move(catalog)) {
        server_.Get("/lookup", [this](const httplib::Request& req, httplib::Response& res) {
            ++request_count_;
            const auto now = std::chrono::steady_clock::now();
            {
                std::lock_guard<std::mutex> lock(mutex_);
                request_times_.push_back(now);
            }
            const std::string title = req.get_param_value("title");
            auto it = catalog_.find(title);
            if (it == catalog_.end()) {
                res.status = 404;
                return;
            }
            res.set_content(it->second.dump(), "application/json");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    ~StubProvider() {
        server_.stop();
        thread_.join();
    }

    int port() const { return port_; }
    std::size_t request_count() const { return request_count_; }

    double max_rate_per_second() const {
        std::lock_guard<std::mutex> lock(mutex_);
        if (request_times_.size() < 2) return 0.0;
        double max_rate = 0.0;
        for (std::size_t i = 0; i + 1 < request_times_.size(); ++i) {
            // widest window of consecutive requests over one second
            std::size_t j = i;
            while (j + 1 < request_times_.size() &&
                   request_times_[j + 1] - request_times_[i] <= std::chrono::seconds(1))
                ++j;
            max_rate = std::max(max_rate, static_cast<double>(j - i + 1));
        }
        return max_rate;
    }

private:
    std::map<std::string, nlohmann::json> catalog_;
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<std::size_t> request_count_{0};
    mutable std::mutex mutex_;
    mutable std::vector<std::chrono::steady_clock::time_point> request_times_;
};

Corpus corpus_with_titles(const std::vector<std::pair<std::string, bool>>& titles) {
    Corpus corpus;
    int i = 0;
    for (const auto& [title, has_abstract] : titles) {
        Reference ref;
        ref.id = "r" + std::to_string(i++);
        ref.title = title;
        if (has_abstract) ref.abstract = "existing abstract";
        corpus.add_reference(ref);
    }
    return corpus;
}

std::filesystem::path fresh_cache(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "scholnet_tests" / name;
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST_SUITE("catalog") {

TEST_CASE("all abstracts present: no requests at all") {
    const Corpus corpus = corpus_with_titles({{"Known Work", true}, {"Other Work", true}});
    StubProvider stub({});
    ProviderConfig provider;
    provider.base_url = "http://127.0.0.1:" + std::to_string(stub.port()) + "/lookup";
    provider.rate_limit = 1000;
    provider.cache_dir = fresh_cache("noop");
    const EnrichResult result = enrich(corpus, provider);
    CHECK(result.diagnostics.candidates == 0);
    CHECK(result.diagnostics.requests == 0);
    CHECK(stub.request_count() == 0);
}

TEST_CASE("cold cache fills records, warm cache issues zero requests") {
    std::map<std::string, nlohmann::json> catalog;
    catalog[text::normalize_title("The Growth Of Cities")] = {
        {"title", "The Growth of Cities"},
        {"abstract", "fetched abstract"},
        {"year", 2001},
        {"authors", {"A. Author"}},
    };
    StubProvider stub(catalog);
    const Corpus corpus = corpus_with_titles(
        {{"The Growth of Cities", false}, {"Unknown Elsewhere", false}, {"Has One", true}});
    ProviderConfig provider;
    provider.base_url = "http://127.0.0.1:" + std::to_string(stub.port()) + "/lookup";
    provider.rate_limit = 1000;
    provider.cache_dir = fresh_cache("warm");

    const EnrichResult cold = enrich(corpus, provider);
    CHECK(cold.diagnostics.candidates == 2);
    CHECK(cold.diagnostics.requests == 2);
    CHECK(cold.diagnostics.matched == 1);
    CHECK(cold.diagnostics.misses == 1);
    const Reference& enriched = cold.corpus.reference("r0");
    CHECK(*enriched.abstract == "fetched abstract");
    CHECK(*enriched.year == 2001);
    REQUIRE(enriched.authors.size() == 1);
    // untouched record
    CHECK(*cold.corpus.reference("r2").abstract == "existing abstract");

    const std::size_t after_cold = stub.request_count();
    const EnrichResult warm = enrich(corpus, provider);
    CHECK(stub.request_count() == after_cold); // second run: all from cache
    CHECK(warm.diagnostics.requests == 0);
    CHECK(warm.diagnostics.cache_hits == 2);
    CHECK(*warm.corpus.reference("r0").abstract == "fetched abstract");
}

TEST_CASE("enrich never overwrites an existing abstract") {
    std::map<std::string, nlohmann::json> catalog;
    catalog[text::normalize_title("Kept Intact")] = {{"abstract", "provider version"}};
    StubProvider stub(catalog);
    Corpus corpus = corpus_with_titles({{"Kept Intact", true}});
    ProviderConfig provider;
    provider.base_url = "http://127.0.0.1:" + std::to_string(stub.port()) + "/lookup";
    provider.cache_dir = fresh_cache("keep");
    const EnrichResult result = enrich(corpus, provider);
    CHECK(*result.corpus.reference("r0").abstract == "existing abstract");
}

TEST_CASE("issuance rate never exceeds the configured limit") {
    std::map<std::string, nlohmann::json> catalog;
    std::vector<std::pair<std::string, bool>> titles;
    for (int i = 0; i < 12; ++i) {
        const std::string title = "Record Number " + std::to_string(i);
        catalog[text::normalize_title(title)] = {{"abstract", "text"}};
        titles.push_back({title, false});
    }
    StubProvider stub(catalog);
    ProviderConfig provider;
    provider.base_url = "http://127.0.0.1:" + std::to_string(stub.port()) + "/lookup";
    provider.rate_limit = 40.0;
    provider.max_in_flight = 4; // concurrent lookups share the limiter
    provider.cache_dir = fresh_cache("rate");

    const auto start = std::chrono::steady_clock::now();
    const EnrichResult result = enrich(corpus_with_titles(titles), provider);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    CHECK(result.diagnostics.matched == 12);
    // 12 requests at 40/s paced from a capacity-one bucket: >= 11/40 s
    CHECK(elapsed.count() >= 11.0 / 40.0 - 0.01);
    CHECK(stub.max_rate_per_second() <= 41.0);
}

TEST_CASE("malformed provider responses are skipped and counted") {
    StubProvider stub({{text::normalize_title("Broken Json"), nlohmann::json()}});
    // the stub dumps "null" for this entry, which fails object validation
    Corpus corpus = corpus_with_titles({{"Broken Json", false}});
    ProviderConfig provider;
    provider.base_url = "http://127.0.0.1:" + std::to_string(stub.port()) + "/lookup";
    provider.cache_dir = fresh_cache("broken");
    const EnrichResult result = enrich(corpus, provider);
    CHECK(result.diagnostics.errors == 1);
    CHECK_FALSE(result.corpus.reference("r0").has_abstract());
}

TEST_CASE("unreachable provider degrades to a per-item error log") {
    Corpus corpus = corpus_with_titles({{"Nowhere", false}});
    ProviderConfig provider;
    provider.base_url = "http://127.0.0.1:9/lookup"; // discard port, refused
    provider.timeout = 1.0;
    provider.cache_dir = fresh_cache("down");
    const EnrichResult result = enrich(corpus, provider);
    CHECK(result.diagnostics.errors == 1);
    CHECK(result.corpus.size() == 1); // corpus intact
}

TEST_CASE("a mismatching response title is rejected") {
    std::map<std::string, nlohmann::json> catalog;
    catalog[text::normalize_title("Requested Title")] = {
        {"title", "A Completely Different Paper"},
        {"abstract", "should not be used"},
    };
    StubProvider stub(catalog);
    Corpus corpus = corpus_with_titles({{"Requested Title", false}});
    ProviderConfig provider;
    provider.base_url = "http://127.0.0.1:" + std::to_string(stub.port()) + "/lookup";
    provider.cache_dir = fresh_cache("mismatch");
    const EnrichResult result = enrich(corpus, provider);
    CHECK(result.diagnostics.misses == 1);
    CHECK_FALSE(result.corpus.reference("r0").has_abstract());
}

TEST_CASE("SCHOLNET_CACHE overrides the configured cache directory") {
    std::map<std::string, nlohmann::json> catalog;
    catalog[text::normalize_title("Env Cached")] = {{"abstract", "text"}};
    StubProvider stub(catalog);
    Corpus corpus = corpus_with_titles({{"Env Cached", false}});
    const auto env_dir = fresh_cache("env_override");
    setenv("SCHOLNET_CACHE", env_dir.c_str(), 1);
    ProviderConfig provider;
    provider.base_url = "http://127.0.0.1:" + std::to_string(stub.port()) + "/lookup";
    provider.cache_dir = fresh_cache("ignored");
    enrich(corpus, provider);
    unsetenv("SCHOLNET_CACHE");
    CHECK(std::filesystem::exists(
        cache_path_for_title(env_dir, text::normalize_title("Env Cached"))));
    CHECK_FALSE(std::filesystem::exists(provider.cache_dir));
}

TEST_CASE("stub coverage fixture raises abstract coverage to the expected level") {
    // provider knows 55% of the titles; coverage after enrichment ~ 0.55
    std::map<std::string, nlohmann::json> catalog;
    std::vector<std::pair<std::string, bool>> titles;
    for (int i = 0; i < 100; ++i) {
        const std::string title = "Catalogued Work " + std::to_string(i);
        titles.push_back({title, false});
        if (i < 55) catalog[text::normalize_title(title)] = {{"abstract", "text"}};
    }
    StubProvider stub(catalog);
    ProviderConfig provider;
    provider.base_url = "http://127.0.0.1:" + std::to_string(stub.port()) + "/lookup";
    provider.rate_limit = 5000;
    provider.max_in_flight = 8;
    provider.cache_dir = fresh_cache("coverage");
    const EnrichResult result = enrich(corpus_with_titles(titles), provider);
    const CorpusStats stats = corpus_stats(result.corpus);
    CHECK(stats.abstract_coverage == doctest::Approx(0.55));
}

} // TEST_SUITE
