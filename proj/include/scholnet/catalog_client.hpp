#pragma once

#include "scholnet/corpus.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <string>

namespace scholnet {

// External bibliographic catalog provider. Wire format:
//   GET {base_url}?title=<url-encoded normalized title>
// answered by a JSON object with optional abstract / year / authors (and
// optionally title, which is then verified), or HTTP 404 for a miss.
struct ProviderConfig {
    std::string name = "catalog";
    std::string base_url;      // http://host[:port]/path
    double rate_limit = 5.0;   // max requests per second, > 0
    double timeout = 10.0;     // seconds, > 0
    std::filesystem::path cache_dir; // overridden by $SCHOLNET_CACHE when set
    int max_in_flight = 1;     // concurrent lookups sharing one rate limiter

    void validate() const;
};

// Paces callers so issuance never exceeds rate requests per second
// (capacity-one token bucket: consecutive grants are at least 1/rate apart).
class RateLimiter {
public:
    explicit RateLimiter(double rate_per_sec);
    void acquire();

private:
    std::chrono::steady_clock::duration interval_;
    std::chrono::steady_clock::time_point next_;
    std::mutex mutex_;
};

struct EnrichDiagnostics {
    std::size_t candidates = 0;   // references missing an abstract
    std::size_t cache_hits = 0;
    std::size_t requests = 0;     // network requests actually issued
    std::size_t matched = 0;      // lookups that produced a usable record
    std::size_t misses = 0;       // provider had no record (404 / no match)
    std::size_t errors = 0;       // transport or malformed-response failures
    std::size_t filled_abstracts = 0;
    std::size_t filled_years = 0;
    std::size_t filled_authors = 0;
};

struct EnrichResult {
    Corpus corpus;
    EnrichDiagnostics diagnostics;
};

// Looks up every reference missing an abstract by normalized title, filling
// abstract/year/authors when absent. Existing nonempty abstracts are never
// touched. Every response (including 404) is cached on disk keyed by the
// normalized-title hash, so a warm rerun issues zero requests. Provider
// failures degrade to partial enrichment, never corrupt the corpus.
EnrichResult enrich(const Corpus& corpus, const ProviderConfig& provider);

// Cache file path for a normalized title (exposed for tests/inspection).
std::filesystem::path cache_path_for_title(const std::filesystem::path& cache_dir,
                                           const std::string& normalized_title);

} // namespace scholnet
