#include "scholnet/catalog_client.hpp"

#include "scholnet/errors.hpp"
#include "scholnet/text.hpp"

#include <httplib.h>
#include <json.hpp>

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

namespace scholnet {

void ProviderConfig::validate() const {
    if (base_url.empty()) throw DataError("provider: base_url is required");
    if (rate_limit <= 0.0) throw DataError("provider: rate_limit must be positive");
    if (timeout <= 0.0) throw DataError("provider: timeout must be positive");
    if (max_in_flight < 1) throw DataError("provider: max_in_flight must be at least 1");
}

RateLimiter::RateLimiter(double rate_per_sec)
    : interval_(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(1.0 / rate_per_sec))),
      next_(std::chrono::steady_clock::now()) {}

void RateLimiter::acquire() {
    std::chrono::steady_clock::time_point slot;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto now = std::chrono::steady_clock::now();
        slot = std::max(now, next_);
        next_ = slot + interval_;
    }
    std::this_thread::sleep_until(slot);
}

namespace {

struct ParsedUrl {
    std::string host;
    int port = 80;
    std::string path = "/";
};

ParsedUrl parse_base_url(const std::string& url) {
    std::string rest = url;
    const std::string http = "http://";
    if (text::starts_with(rest, "https://"))
        throw DataError("provider: https is not supported by this build, use http");
    if (text::starts_with(rest, http)) rest = rest.substr(http.size());
    ParsedUrl out;
    const auto slash = rest.find('/');
    std::string hostport = slash == std::string::npos ? rest : rest.substr(0, slash);
    if (slash != std::string::npos) out.path = rest.substr(slash);
    const auto colon = hostport.find(':');
    if (colon == std::string::npos) {
        out.host = hostport;
    } else {
        out.host = hostport.substr(0, colon);
        out.port = std::atoi(hostport.c_str() + colon + 1);
    }
    if (out.host.empty()) throw DataError("provider: cannot parse base_url '" + url + "'");
    return out;
}

std::string url_encode(const std::string& s) {
    std::string out;
    for (const char c : s) {
        const auto u = static_cast<unsigned char>(c);
        if ((u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || (u >= '0' && u <= '9') ||
            u == '-' || u == '_' || u == '.' || u == '~') {
            out.push_back(c);
        } else {
            char buf[4];
            std::snprintf(buf, sizeof(buf), "%%%02X", u);
            out += buf;
        }
    }
    return out;
}

struct CachedResponse {
    int status = 0;
    std::string body;
};

std::filesystem::path effective_cache_dir(const ProviderConfig& provider) {
    const char* env = std::getenv("SCHOLNET_CACHE");
    if (env && *env) return env;
    return provider.cache_dir;
}

bool read_cache(const std::filesystem::path& path, const std::string& normalized_title,
                CachedResponse& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return false; // treat a corrupt entry as a cache miss
    }
    if (!j.is_object() || !j.contains("status")) return false;
    if (j.value("title", normalized_title) != normalized_title) return false;
    out.status = j["status"].get<int>();
    out.body = j.value("body", "");
    return true;
}

void write_cache(const std::filesystem::path& path, const std::string& normalized_title,
                 const CachedResponse& response) {
    nlohmann::ordered_json j;
    j["title"] = normalized_title;
    j["status"] = response.status;
    j["body"] = response.body;
    // unique per process AND per call: concurrent lookups of duplicate
    // titles must not share a temp file
    static std::atomic<unsigned> counter{0};
    const auto tmp = path.string() + ".tmp" + std::to_string(::getpid()) + "." +
                     std::to_string(counter.fetch_add(1));
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw DataError("cache: cannot write " + tmp);
        os << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, path);
}

struct LookupOutcome {
    enum class Kind { Matched, Miss, Error } kind = Kind::Error;
    std::optional<std::string> abstract;
    std::optional<int> year;
    std::vector<std::string> authors;
};

LookupOutcome interpret_response(const CachedResponse& response,
                                 const std::string& normalized_title) {
    LookupOutcome out;
    if (response.status == 404) {
        out.kind = LookupOutcome::Kind::Miss;
        return out;
    }
    if (response.status != 200) {
        out.kind = LookupOutcome::Kind::Error;
        return out;
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(response.body);
    } catch (const nlohmann::json::exception&) {
        out.kind = LookupOutcome::Kind::Error;
        return out;
    }
    if (!j.is_object()) {
        out.kind = LookupOutcome::Kind::Error;
        return out;
    }
    // exact normalized-title match only; a response without a title field is
    // trusted because the query itself was keyed by the exact title
    if (j.contains("title") && j["title"].is_string() &&
        text::normalize_title(j["title"].get<std::string>()) != normalized_title) {
        out.kind = LookupOutcome::Kind::Miss;
        return out;
    }
    if (j.contains("abstract") && j["abstract"].is_string())
        out.abstract = j["abstract"].get<std::string>();
    if (j.contains("year") && j["year"].is_number_integer()) out.year = j["year"].get<int>();
    if (j.contains("authors") && j["authors"].is_array())
        for (const auto& a : j["authors"])
            if (a.is_string()) out.authors.push_back(a.get<std::string>());
    out.kind = LookupOutcome::Kind::Matched;
    return out;
}

} // namespace

std::filesystem::path cache_path_for_title(const std::filesystem::path& cache_dir,
                                           const std::string& normalized_title) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(text::fnv1a64(normalized_title)));
    return cache_dir / (std::string(buf) + ".json");
}

EnrichResult enrich(const Corpus& corpus, const ProviderConfig& provider) {
    provider.validate();
    const auto cache_dir = effective_cache_dir(provider);
    if (cache_dir.empty()) throw DataError("provider: cache_dir is required");
    std::filesystem::create_directories(cache_dir);
    const ParsedUrl url = parse_base_url(provider.base_url);

    EnrichResult result;
    result.corpus = corpus;

    std::vector<std::string> todo;
    for (const auto& ref : corpus.references())
        if (!ref.has_abstract()) todo.push_back(ref.id);
    result.diagnostics.candidates = todo.size();
    if (todo.empty()) return result;

    RateLimiter limiter(provider.rate_limit);
    std::mutex corpus_mutex;
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::size_t> cache_hits{0}, requests{0}, matched{0}, misses{0}, errors{0};
    std::atomic<std::size_t> filled_abstracts{0}, filled_years{0}, filled_authors{0};

    auto work = [&] {
        httplib::Client client(url.host, url.port);
        client.set_connection_timeout(std::chrono::duration<double>(provider.timeout));
        client.set_read_timeout(std::chrono::duration<double>(provider.timeout));
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= todo.size()) return;
            const std::string& id = todo[i];
            const std::string normalized =
                text::normalize_title(result.corpus.reference(id).title);
            const auto cache_file = cache_path_for_title(cache_dir, normalized);

            CachedResponse response;
            if (read_cache(cache_file, normalized, response)) {
                ++cache_hits;
            } else {
                limiter.acquire();
                ++requests;
                auto res = client.Get(url.path + "?title=" + url_encode(normalized));
                if (!res) {
                    ++errors;
                    continue; // provider unreachable: skip, never corrupt
                }
                response.status = res->status;
                response.body = res->body;
                if (response.status == 200 || response.status == 404)
                    write_cache(cache_file, normalized, response);
            }

            const LookupOutcome outcome = interpret_response(response, normalized);
            if (outcome.kind == LookupOutcome::Kind::Error) {
                ++errors;
                continue;
            }
            if (outcome.kind == LookupOutcome::Kind::Miss) {
                ++misses;
                continue;
            }
            ++matched;
            std::lock_guard<std::mutex> lock(corpus_mutex);
            Reference& ref = result.corpus.mutable_reference(id);
            if (!ref.has_abstract() && outcome.abstract && !outcome.abstract->empty()) {
                ref.abstract = outcome.abstract;
                ++filled_abstracts;
            }
            if (!ref.year && outcome.year) {
                ref.year = outcome.year;
                ++filled_years;
            }
            if (ref.authors.empty() && !outcome.authors.empty()) {
                ref.authors = outcome.authors;
                ++filled_authors;
            }
        }
    };

    const int workers = std::max(1, provider.max_in_flight);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    result.diagnostics.cache_hits = cache_hits;
    result.diagnostics.requests = requests;
    result.diagnostics.matched = matched;
    result.diagnostics.misses = misses;
    result.diagnostics.errors = errors;
    result.diagnostics.filled_abstracts = filled_abstracts;
    result.diagnostics.filled_years = filled_years;
    result.diagnostics.filled_authors = filled_authors;
    return result;
}

} // namespace scholnet
