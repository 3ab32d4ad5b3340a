#pragma once

#include "scholnet/graph.hpp"
#include "scholnet/meta.hpp"
#include "scholnet/semantic_network.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

// Subcommand implementations. The pipeline command runs these same entry
// points in order, so a pipeline run and the equivalent stage-by-stage runs
// produce identical artifacts.
namespace scholnet::cli {

struct IngestOptions {
    std::filesystem::path refs;
    std::filesystem::path links;
    std::filesystem::path store;
    bool dedup = false;
};

struct EnrichOptions {
    std::filesystem::path store;
    std::string base_url;
    double rate_limit = 5.0;
    double timeout = 10.0;
    std::filesystem::path cache_dir;
    int max_in_flight = 1;
};

struct CitationGraphOptions {
    std::filesystem::path store;
    std::filesystem::path out; // format from extension
    bool core = false;
};

struct CommunitiesOptions {
    std::filesystem::path graph;
    std::filesystem::path out; // partition csv
    std::uint64_t seed = 0;
    std::size_t bootstrap = 0;
    std::filesystem::path titles_out; // optional: top-cited titles per community
    std::size_t top_titles = 5;
    std::string rewire = "uniform"; // or "degree" for degree-preserving swaps
    int threads = 1;
};

struct RanksizeOptions {
    std::filesystem::path graph;
    std::filesystem::path out;     // rank,citations,regime,alpha
    std::filesystem::path fit_out; // defaults to <out>.fit.csv
    std::size_t regimes = 3;
    std::size_t min_points = 10;
};

struct CliquesOptions {
    std::filesystem::path graph;
    std::filesystem::path out;
    std::size_t min_size = 3;
};

struct KeywordsOptions {
    std::filesystem::path store;
    std::filesystem::path out;      // keywords csv
    std::filesystem::path postings; // defaults to <out dir>/keyword_postings.tsv
    std::uint32_t kw = 50000;
    std::uint32_t min_freq = 3;
    std::string tagger_cmd;
    int threads = 1;
};

struct SemanticGraphOptions {
    std::filesystem::path keywords;
    std::filesystem::path postings;
    std::filesystem::path out;            // gexf
    std::filesystem::path communities_out; // partition csv
    std::filesystem::path top_keywords_out;
    FilterParams params;
    std::uint64_t seed = 0;
    std::size_t noise_floor = 4;
};

struct SweepOptions {
    std::filesystem::path keywords;
    std::filesystem::path postings;
    std::filesystem::path grid; // json with four arrays
    std::filesystem::path out;  // sweep csv
    std::uint64_t seed = 0;
    int threads = 1;
    bool band = false; // feasibility filter on community counts for the front
    std::size_t band_min = 5;
    std::size_t band_max = 50;
};

struct MeasuresOptions {
    std::filesystem::path store;
    std::filesystem::path citation_partition;
    std::filesystem::path keywords;
    std::filesystem::path postings;
    std::filesystem::path semantic_partition;
    std::filesystem::path out_dir;
    bool multiplicity = false; // weight keywords by occurrence count
};

struct PipelineOptions {
    std::filesystem::path config;
    std::optional<std::uint64_t> seed;   // overrides config
    std::optional<int> threads;          // overrides config
    std::optional<std::filesystem::path> out; // overrides config
};

int run_ingest(const IngestOptions& opt);
int run_enrich(const EnrichOptions& opt);
int run_citation_graph(const CitationGraphOptions& opt);
int run_communities(const CommunitiesOptions& opt);
int run_ranksize(const RanksizeOptions& opt);
int run_cliques(const CliquesOptions& opt);
int run_keywords(const KeywordsOptions& opt);
int run_semantic_graph(const SemanticGraphOptions& opt);
int run_sweep_cmd(const SweepOptions& opt);
int run_measures(const MeasuresOptions& opt);
int run_pipeline(const PipelineOptions& opt);

// partition csv `node_id,community`, rows sorted by node id
void write_partition_csv(const Partition& partition, const std::filesystem::path& path,
                         const FileMeta& meta);
Partition read_partition_csv(const std::filesystem::path& path);

} // namespace scholnet::cli
