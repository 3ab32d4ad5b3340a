#include "commands.hpp"

#include "scholnet/errors.hpp"
#include "scholnet/version.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace scholnet;
using namespace scholnet::cli;

int main(int argc, char** argv) {
    CLI::App app{"scholnet: citation and semantic network analysis for bibliographic corpora"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion +
                                          " (store schema " +
                                          std::to_string(kStoreSchemaVersion) + ", gexf " +
                                          kGexfVersion + ", graphml " + kGraphmlVersion +
                                          ", rng " + kRngAlgorithm + ")");

    IngestOptions ingest_opt;
    auto* ingest_cmd = app.add_subcommand("ingest", "Build a corpus store from refs + links files");
    ingest_cmd->add_option("--refs", ingest_opt.refs, "References JSONL file")->required();
    ingest_cmd->add_option("--links", ingest_opt.links, "Links CSV file")->required();
    ingest_cmd->add_option("--store", ingest_opt.store, "Output store directory")->required();
    ingest_cmd->add_flag("--dedup", ingest_opt.dedup, "Merge references with equal normalized titles");

    EnrichOptions enrich_opt;
    auto* enrich_cmd = app.add_subcommand("enrich", "Fill missing abstracts from a catalog provider");
    enrich_cmd->add_option("--store", enrich_opt.store, "Corpus store directory")->required();
    enrich_cmd->add_option("--base-url", enrich_opt.base_url, "Provider base URL (http)")->required();
    enrich_cmd->add_option("--rate", enrich_opt.rate_limit, "Max requests per second");
    enrich_cmd->add_option("--timeout", enrich_opt.timeout, "Request timeout in seconds");
    enrich_cmd->add_option("--cache", enrich_opt.cache_dir,
                           "Cache directory (env SCHOLNET_CACHE overrides)");
    enrich_cmd->add_option("--threads", enrich_opt.max_in_flight, "Concurrent lookups");

    CitationGraphOptions graph_opt;
    auto* graph_cmd = app.add_subcommand("citation-graph", "Export the citation graph");
    graph_cmd->add_option("--store", graph_opt.store, "Corpus store directory")->required();
    graph_cmd->add_option("--out", graph_opt.out, "Output graph (.gexf/.graphml/.csv)")->required();
    graph_cmd->add_flag("--core-filter", graph_opt.core,
                        "Keep only nodes cited once or citing at least twice");

    CommunitiesOptions comm_opt;
    auto* comm_cmd = app.add_subcommand("communities", "Louvain community detection on a graph");
    comm_cmd->add_option("--graph", comm_opt.graph, "Input graph file")->required();
    comm_cmd->add_option("--out", comm_opt.out, "Partition CSV output")->required();
    comm_cmd->add_option("--seed", comm_opt.seed, "RNG seed");
    comm_cmd->add_option("--bootstrap", comm_opt.bootstrap,
                         "Number of link-randomization samples");
    comm_cmd->add_option("--titles-out", comm_opt.titles_out,
                         "Write top-cited member titles per community");
    comm_cmd->add_option("--top-titles", comm_opt.top_titles, "Titles per community");
    comm_cmd->add_option("--rewire", comm_opt.rewire,
                         "Bootstrap rewiring model: uniform or degree");
    comm_cmd->add_option("--threads", comm_opt.threads, "Bootstrap worker threads");

    RanksizeOptions rank_opt;
    auto* rank_cmd = app.add_subcommand("ranksize", "Piecewise power-law fit of citations by rank");
    rank_cmd->add_option("--graph", rank_opt.graph, "Input citation graph")->required();
    rank_cmd->add_option("--out", rank_opt.out, "Output CSV rank,citations,regime,alpha")->required();
    rank_cmd->add_option("--fit-out", rank_opt.fit_out, "Fitted-line CSV (default <out>.fit.csv)");
    rank_cmd->add_option("--regimes", rank_opt.regimes, "Number of regimes");
    rank_cmd->add_option("--min-points", rank_opt.min_points, "Minimum ranks per regime");

    CliquesOptions cliques_opt;
    auto* cliques_cmd = app.add_subcommand("cliques", "Enumerate maximal cliques");
    cliques_cmd->add_option("--graph", cliques_opt.graph, "Input graph")->required();
    cliques_cmd->add_option("--out", cliques_opt.out, "One clique per line output")->required();
    cliques_cmd->add_option("--min-size", cliques_opt.min_size, "Smallest clique to report");

    KeywordsOptions kw_opt;
    auto* kw_cmd = app.add_subcommand("keywords", "Extract and score relevant keywords");
    kw_cmd->add_option("--store", kw_opt.store, "Corpus store directory")->required();
    kw_cmd->add_option("--out", kw_opt.out, "Keywords CSV output")->required();
    kw_cmd->add_option("--postings", kw_opt.postings, "Postings TSV output");
    kw_cmd->add_option("--kw", kw_opt.kw, "Keywords to keep");
    kw_cmd->add_option("--min-freq", kw_opt.min_freq, "Minimum candidate document frequency");
    kw_cmd->add_option("--tagger-cmd", kw_opt.tagger_cmd, "External tagger command (French)");
    kw_cmd->add_option("--threads", kw_opt.threads, "Extraction worker threads");

    SemanticGraphOptions sem_opt;
    auto* sem_cmd = app.add_subcommand("semantic-graph",
                                       "Filter the co-occurrence network and detect communities");
    sem_cmd->add_option("--keywords", sem_opt.keywords, "Keywords CSV")->required();
    sem_cmd->add_option("--postings", sem_opt.postings, "Postings TSV")->required();
    sem_cmd->add_option("--out", sem_opt.out, "Output graph (.gexf)")->required();
    sem_cmd->add_option("--communities-out", sem_opt.communities_out, "Partition CSV");
    sem_cmd->add_option("--top-keywords-out", sem_opt.top_keywords_out, "Top keywords CSV");
    sem_cmd->add_option("--kmax", sem_opt.params.k_max, "Maximal unweighted degree");
    sem_cmd->add_option("--theta", sem_opt.params.theta_w, "Minimal edge weight");
    sem_cmd->add_option("--fmin", sem_opt.params.f_min, "Document frequency lower bound");
    sem_cmd->add_option("--fmax", sem_opt.params.f_max, "Document frequency upper bound");
    sem_cmd->add_option("--seed", sem_opt.seed, "RNG seed");
    sem_cmd->add_option("--noise-floor", sem_opt.noise_floor,
                        "Communities below this size are flagged as noise");

    SweepOptions sweep_opt;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sensitivity sweep over filter parameters");
    sweep_cmd->add_option("--keywords", sweep_opt.keywords, "Keywords CSV")->required();
    sweep_cmd->add_option("--postings", sweep_opt.postings, "Postings TSV")->required();
    sweep_cmd->add_option("--grid", sweep_opt.grid, "Grid JSON with k_max/theta_w/f_min/f_max arrays")
        ->required();
    sweep_cmd->add_option("--out", sweep_opt.out, "Sweep CSV output")->required();
    sweep_cmd->add_option("--seed", sweep_opt.seed, "Base RNG seed");
    sweep_cmd->add_option("--threads", sweep_opt.threads, "Worker threads");
    sweep_cmd->add_flag("--band", sweep_opt.band,
                        "Restrict the pareto front to a community-count band");
    sweep_cmd->add_option("--band-min", sweep_opt.band_min, "Band lower bound");
    sweep_cmd->add_option("--band-max", sweep_opt.band_max, "Band upper bound");

    MeasuresOptions measures_opt;
    auto* measures_cmd = app.add_subcommand("measures", "Interdisciplinarity measures");
    measures_cmd->add_option("--store", measures_opt.store, "Corpus store directory")->required();
    measures_cmd->add_option("--citation-partition", measures_opt.citation_partition,
                             "Citation partition CSV")->required();
    measures_cmd->add_option("--keywords", measures_opt.keywords, "Keywords CSV")->required();
    measures_cmd->add_option("--postings", measures_opt.postings, "Postings TSV")->required();
    measures_cmd->add_option("--semantic-partition", measures_opt.semantic_partition,
                             "Semantic partition CSV")->required();
    measures_cmd->add_option("--out", measures_opt.out_dir, "Output directory")->required();
    measures_cmd->add_flag("--multiplicity", measures_opt.multiplicity,
                           "Weight keywords by occurrence count instead of presence");

    PipelineOptions pipeline_opt;
    std::uint64_t pipeline_seed = 0;
    int pipeline_threads = 0;
    std::string pipeline_out;
    auto* pipeline_cmd = app.add_subcommand("pipeline", "Run all stages from a config file");
    pipeline_cmd->add_option("--config", pipeline_opt.config, "Pipeline config JSON")->required();
    auto* seed_opt = pipeline_cmd->add_option("--seed", pipeline_seed, "Override config seed");
    auto* threads_opt =
        pipeline_cmd->add_option("--threads", pipeline_threads, "Override config threads");
    auto* out_opt = pipeline_cmd->add_option("--out", pipeline_out, "Override config out dir");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return 1;
    }

    try {
        if (*ingest_cmd) return run_ingest(ingest_opt);
        if (*enrich_cmd) return run_enrich(enrich_opt);
        if (*graph_cmd) return run_citation_graph(graph_opt);
        if (*comm_cmd) return run_communities(comm_opt);
        if (*rank_cmd) return run_ranksize(rank_opt);
        if (*cliques_cmd) return run_cliques(cliques_opt);
        if (*kw_cmd) return run_keywords(kw_opt);
        if (*sem_cmd) return run_semantic_graph(sem_opt);
        if (*sweep_cmd) return run_sweep_cmd(sweep_opt);
        if (*measures_cmd) return run_measures(measures_opt);
        if (*pipeline_cmd) {
            if (seed_opt->count() > 0) pipeline_opt.seed = pipeline_seed;
            if (threads_opt->count() > 0) pipeline_opt.threads = pipeline_threads;
            if (out_opt->count() > 0) pipeline_opt.out = pipeline_out;
            return run_pipeline(pipeline_opt);
        }
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
