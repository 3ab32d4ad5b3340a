#include "commands.hpp"

#include "scholnet/catalog_client.hpp"
#include "scholnet/citation_analysis.hpp"
#include "scholnet/community.hpp"
#include "scholnet/corpus.hpp"
#include "scholnet/errors.hpp"
#include "scholnet/graph_io.hpp"
#include "scholnet/keywords.hpp"
#include "scholnet/measures.hpp"
#include "scholnet/sweep.hpp"
#include "scholnet/text.hpp"
#include "scholnet/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>

namespace scholnet::cli {

namespace {

namespace fs = std::filesystem;

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DataError("cannot write file: " + path.string());
    return os;
}

std::string fmt(double v) { return text::format_double(v); }

Graph load_graph(const fs::path& path) {
    if (!fs::exists(path)) throw DataError("graph file not found: " + path.string());
    return import_graph(path, graph_format_for_path(path));
}

nlohmann::json load_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path.string());
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

} // namespace

void write_partition_csv(const Partition& partition, const fs::path& path,
                         const FileMeta& meta) {
    auto os = open_out(path);
    os << meta.as_hash_comments();
    os << "node_id,community\n";
    for (const auto& [id, community] : partition.assignment)
        os << text::csv_row({id, std::to_string(community)}) << "\n";
}

Partition read_partition_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open partition file: " + path.string());
    Partition p;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const auto fields = text::parse_csv_line(line);
        if (fields.size() != 2)
            throw DataError("partition line " + std::to_string(line_no) +
                            ": expected node_id,community");
        p.assignment[fields[0]] = std::atoi(fields[1].c_str());
    }
    return p;
}

int run_ingest(const IngestOptions& opt) {
    IngestResult result = ingest(opt.refs, opt.links);
    DedupDiagnostics dedup_diag;
    if (opt.dedup) result.corpus = dedup_by_title(result.corpus, &dedup_diag);
    FileMeta meta{"ingest", "refs=" + opt.refs.filename().string() +
                                " links=" + opt.links.filename().string() +
                                (opt.dedup ? " dedup=1" : " dedup=0"),
                  std::nullopt};
    save_store(result.corpus, opt.store, meta);
    const CorpusStats stats = corpus_stats(result.corpus);
    std::cout << "ingested references=" << stats.references << " links=" << stats.links
              << " seed_references=" << stats.seed_references
              << " abstract_coverage=" << fmt(stats.abstract_coverage)
              << " duplicate_links=" << result.diagnostics.duplicate_links
              << " self_links=" << result.diagnostics.self_links
              << " missing_endpoints=" << result.diagnostics.missing_endpoint_links;
    if (opt.dedup) std::cout << " merged=" << dedup_diag.merged_references;
    std::cout << "\n";
    return 0;
}

int run_enrich(const EnrichOptions& opt) {
    const IngestResult loaded = load_store(opt.store);
    ProviderConfig provider;
    provider.base_url = opt.base_url;
    provider.rate_limit = opt.rate_limit;
    provider.timeout = opt.timeout;
    provider.cache_dir = opt.cache_dir.empty() ? opt.store / "cache" : opt.cache_dir;
    provider.max_in_flight = opt.max_in_flight;
    const EnrichResult result = enrich(loaded.corpus, provider);
    FileMeta meta{"enrich", "base_url=" + opt.base_url, std::nullopt};
    save_store(result.corpus, opt.store, meta);
    const auto& d = result.diagnostics;
    std::cout << "enrich candidates=" << d.candidates << " cache_hits=" << d.cache_hits
              << " requests=" << d.requests << " matched=" << d.matched
              << " misses=" << d.misses << " errors=" << d.errors
              << " filled_abstracts=" << d.filled_abstracts << "\n";
    return 0;
}

int run_citation_graph(const CitationGraphOptions& opt) {
    const IngestResult loaded = load_store(opt.store);
    Graph graph = build_citation_graph(loaded.corpus);
    const NetworkStats full_stats = network_stats(graph, loaded.corpus.seed_ids());
    if (opt.core) graph = core_filter(graph);
    FileMeta meta{"citation-graph", std::string("core=") + (opt.core ? "1" : "0"), std::nullopt};
    export_graph(graph, std::nullopt, graph_format_for_path(opt.out), opt.out, meta);
    const NetworkStats stats = network_stats(graph, loaded.corpus.seed_ids());
    std::cout << "citation-graph nodes=" << stats.nodes << " edges=" << stats.edges
              << " mean_in_degree="
              << (stats.mean_in_degree_all ? fmt(*stats.mean_in_degree_all) : "none")
              << " seed_mean_in_degree="
              << (full_stats.mean_in_degree_seed ? fmt(*full_stats.mean_in_degree_seed) : "none")
              << "\n";
    return 0;
}

int run_communities(const CommunitiesOptions& opt) {
    const Graph graph = load_graph(opt.graph);
    const CommunityResult result = louvain(graph, opt.seed);
    FileMeta meta{"communities", "graph=" + opt.graph.filename().string(), opt.seed};
    write_partition_csv(result.partition, opt.out, meta);

    std::string summary = "Q=" + fmt(result.modularity) +
                          " C=" + std::to_string(result.community_sizes.size());
    if (opt.bootstrap > 0) {
        if (opt.rewire != "uniform" && opt.rewire != "degree")
            throw DataError("communities: --rewire must be uniform or degree");
        const RewireMode mode =
            opt.rewire == "degree" ? RewireMode::DegreePreserving : RewireMode::Uniform;
        const BootstrapResult boot =
            bootstrap_significance(graph, result.partition, opt.bootstrap, opt.seed,
                                   mode, opt.threads);
        summary += " bootstrap_mean=" + fmt(boot.mean) + " bootstrap_std=" + fmt(boot.std_dev);
    }
    std::cout << summary << "\n";

    if (!opt.titles_out.empty()) {
        // top-cited member titles per community, the manual-naming support
        const int num = result.partition.num_communities();
        std::vector<std::vector<std::pair<std::size_t, std::string>>> per(num);
        for (const auto& id : graph.node_ids()) {
            std::size_t in = 0;
            if (graph.directed()) in = graph.degree(id, DegreeMode::In).count;
            per[static_cast<std::size_t>(result.partition.community_of(id))].push_back({in, id});
        }
        auto os = open_out(opt.titles_out);
        os << meta.as_hash_comments();
        os << "community,rank,in_degree,node_id,title\n";
        for (int c = 0; c < num; ++c) {
            auto& list = per[static_cast<std::size_t>(c)];
            std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            const std::size_t top = std::min(opt.top_titles, list.size());
            for (std::size_t r = 0; r < top; ++r) {
                os << text::csv_row({std::to_string(c), std::to_string(r + 1),
                                     std::to_string(list[r].first), list[r].second,
                                     graph.label(list[r].second)})
                   << "\n";
            }
        }
    }
    return 0;
}

int run_ranksize(const RanksizeOptions& opt) {
    const Graph graph = load_graph(opt.graph);
    const RankSizeSeries series = citation_rank_series(graph);
    const RankSizeFit fit = fit_rank_size(series.citations, opt.regimes, opt.min_points);
    FileMeta meta{"ranksize",
                  "regimes=" + std::to_string(opt.regimes) +
                      " min_points=" + std::to_string(opt.min_points),
                  std::nullopt};
    {
        auto os = open_out(opt.out);
        os << meta.as_hash_comments();
        os << "rank,citations,regime,alpha\n";
        std::size_t regime_idx = 0;
        for (std::size_t r = 1; r <= series.citations.size(); ++r) {
            while (r > fit.regimes[regime_idx].rank_end) ++regime_idx;
            os << r << "," << fmt(series.citations[r - 1]) << "," << regime_idx + 1 << ","
               << fmt(fit.regimes[regime_idx].alpha) << "\n";
        }
    }
    {
        const fs::path fit_path =
            opt.fit_out.empty() ? fs::path(opt.out.string() + ".fit.csv") : opt.fit_out;
        auto os = open_out(fit_path);
        os << meta.as_hash_comments();
        os << "rank,fitted_citations,regime\n";
        std::size_t regime_idx = 0;
        for (std::size_t r = 1; r <= series.citations.size(); ++r) {
            while (r > fit.regimes[regime_idx].rank_end) ++regime_idx;
            const auto& regime = fit.regimes[regime_idx];
            const double fitted =
                std::exp(regime.intercept - regime.alpha * std::log(static_cast<double>(r)));
            os << r << "," << fmt(fitted) << "," << regime_idx + 1 << "\n";
        }
    }
    std::cout << "ranksize n=" << series.citations.size();
    for (std::size_t i = 0; i < fit.regimes.size(); ++i) {
        const auto& regime = fit.regimes[i];
        std::cout << " regime" << i + 1 << "=[" << regime.rank_start << ".." << regime.rank_end
                  << "] alpha" << i + 1 << "=" << fmt(regime.alpha);
        // mean publication year of the regime's references, when known
        double year_sum = 0.0;
        std::size_t year_count = 0;
        for (std::size_t r = regime.rank_start; r <= regime.rank_end; ++r) {
            const auto& attrs = graph.attributes(series.node_ids[r - 1]);
            auto it = attrs.find("year");
            if (it == attrs.end()) continue;
            year_sum += std::atof(it->second.c_str());
            ++year_count;
        }
        if (year_count > 0)
            std::cout << " mean_year" << i + 1 << "="
                      << fmt(year_sum / static_cast<double>(year_count));
    }
    std::cout << "\n";
    return 0;
}

int run_cliques(const CliquesOptions& opt) {
    const Graph graph = load_graph(opt.graph);
    const auto cliques = maximal_cliques(graph, opt.min_size);
    FileMeta meta{"cliques", "min_size=" + std::to_string(opt.min_size), std::nullopt};
    auto os = open_out(opt.out);
    os << meta.as_hash_comments();
    for (const auto& clique : cliques) os << text::join(clique, ',') << "\n";
    std::cout << "cliques found=" << cliques.size() << " min_size=" << opt.min_size << "\n";
    return 0;
}

int run_keywords(const KeywordsOptions& opt) {
    const IngestResult loaded = load_store(opt.store);
    KeywordParams params;
    params.min_candidate_freq = opt.min_freq;
    params.tagger_cmd = opt.tagger_cmd;
    params.threads = opt.threads;
    const KeywordIndex scored = score_keywords(loaded.corpus, params);
    const KeywordIndex index = select_top(scored, opt.kw);
    const fs::path postings =
        opt.postings.empty() ? opt.out.parent_path() / "keyword_postings.tsv" : opt.postings;
    FileMeta meta{"keywords",
                  "kw=" + std::to_string(opt.kw) + " min_freq=" + std::to_string(opt.min_freq) +
                      " score=score_v1",
                  std::nullopt};
    if (opt.out.has_parent_path()) fs::create_directories(opt.out.parent_path());
    save_keyword_index(index, opt.out, postings, meta);
    std::cout << "keywords documents=" << index.num_documents()
              << " candidates=" << scored.keywords.size() << " kept=" << index.keywords.size()
              << "\n";
    return 0;
}

int run_semantic_graph(const SemanticGraphOptions& opt) {
    const KeywordIndex index = load_keyword_index(opt.keywords, opt.postings);
    const CooccurrenceMatrix matrix = build_cooccurrence(index);
    const FilteredNetwork net = filter_network(matrix, index, opt.params);
    FileMeta meta{"semantic-graph", opt.params.describe() + " filter_order=" + net.filter_order,
                  opt.seed};
    if (net.empty_warning) {
        export_graph(net.graph, std::nullopt, graph_format_for_path(opt.out), opt.out, meta);
        std::cout << "semantic-graph EMPTY (all keywords filtered out)\n";
        return 0;
    }
    const SemanticCommunities result = semantic_communities(net.graph, opt.seed, opt.noise_floor);
    export_graph(net.graph, result.communities.partition, graph_format_for_path(opt.out), opt.out,
                 meta);
    if (!opt.communities_out.empty())
        write_partition_csv(result.communities.partition, opt.communities_out, meta);
    if (!opt.top_keywords_out.empty()) {
        auto os = open_out(opt.top_keywords_out);
        os << meta.as_hash_comments();
        os << "community,size,noise,rank,keyword,surface,score\n";
        for (const auto& summary : result.summaries) {
            for (std::size_t r = 0; r < summary.top_keyword_ids.size(); ++r) {
                const std::string& id = summary.top_keyword_ids[r];
                const auto& attrs = net.graph.attributes(id);
                const auto score = attrs.count("score") ? attrs.at("score") : "";
                os << text::csv_row({std::to_string(summary.community),
                                     std::to_string(summary.size), summary.noise ? "1" : "0",
                                     std::to_string(r + 1), id, net.graph.label(id), score})
                   << "\n";
            }
        }
    }
    std::cout << "semantic-graph nodes=" << net.graph.num_nodes()
              << " edges=" << net.graph.num_edges() << " Q=" << fmt(result.communities.modularity)
              << " C=" << result.communities.community_sizes.size() << "\n";
    return 0;
}

int run_sweep_cmd(const SweepOptions& opt) {
    const KeywordIndex index = load_keyword_index(opt.keywords, opt.postings);
    const CooccurrenceMatrix matrix = build_cooccurrence(index);
    const nlohmann::json grid_json = load_json(opt.grid);
    SweepGrid grid;
    auto read_list = [&](const char* key, std::vector<std::uint32_t>& out) {
        if (!grid_json.contains(key) || !grid_json[key].is_array())
            throw DataError("sweep grid: missing array '" + std::string(key) + "' in " +
                            opt.grid.string());
        for (const auto& v : grid_json[key]) out.push_back(v.get<std::uint32_t>());
    };
    read_list("k_max", grid.k_max);
    read_list("theta_w", grid.theta_w);
    read_list("f_min", grid.f_min);
    read_list("f_max", grid.f_max);
    grid.seed = opt.seed;

    const SweepResult result = run_sweep(matrix, index, grid, opt.threads);
    std::optional<std::pair<std::size_t, std::size_t>> band;
    if (opt.band) band = {opt.band_min, opt.band_max};
    std::vector<SweepPoint> front;
    bool have_front = false;
    try {
        front = pareto_front(result.points, band);
        have_front = true;
    } catch (const DataError&) {
        // every point empty (or banded out): legitimate, pareto column all 0
    }
    auto on_front = [&](const SweepPoint& p) {
        if (!have_front) return false;
        for (const auto& f : front)
            if (f.params.k_max == p.params.k_max && f.params.theta_w == p.params.theta_w &&
                f.params.f_min == p.params.f_min && f.params.f_max == p.params.f_max)
                return true;
        return false;
    };
    FileMeta meta{"sweep", "grid=" + opt.grid.filename().string(), opt.seed};
    auto os = open_out(opt.out);
    os << meta.as_hash_comments();
    os << "kmax,theta,fmin,fmax,vertices,communities,modularity,concentration,pareto\n";
    for (const auto& p : result.points) {
        os << p.params.k_max << "," << p.params.theta_w << "," << p.params.f_min << ","
           << p.params.f_max << "," << p.num_vertices << "," << p.num_communities << ","
           << (p.modularity ? fmt(*p.modularity) : "") << ","
           << (p.concentration ? fmt(*p.concentration) : "") << "," << (on_front(p) ? 1 : 0)
           << "\n";
    }
    if (result.skipped_invalid > 0)
        std::cerr << "sweep: skipped " << result.skipped_invalid
                  << " invalid combinations (f_min > f_max)\n";
    std::cout << "sweep points=" << result.points.size()
              << " pareto=" << (have_front ? front.size() : 0) << "\n";
    return 0;
}

int run_measures(const MeasuresOptions& opt) {
    const IngestResult loaded = load_store(opt.store);
    const Partition citation_classes = read_partition_csv(opt.citation_partition);
    const Partition semantic_classes = read_partition_csv(opt.semantic_partition);
    const KeywordIndex index = load_keyword_index(opt.keywords, opt.postings);

    const ClassProbabilities sem_probs =
        semantic_probabilities(loaded.corpus, index, semantic_classes, opt.multiplicity);
    const ClassProbabilities cit_probs = citation_probabilities(loaded.corpus, citation_classes);
    const ClassProbabilities one_hot = one_hot_citation(citation_classes);

    const OriginalityTable sem_table = originality(sem_probs, &citation_classes);
    const OriginalityTable cit_table = originality(cit_probs, &citation_classes);
    const OriginalityDistributions sem_dists = originality_distributions(sem_table);
    const OriginalityDistributions cit_dists = originality_distributions(cit_table);
    const CompositionMatrix comp = composition(sem_probs, citation_classes);
    const CorrelationMatrix corr = correlation_matrix(sem_probs, one_hot);

    fs::create_directories(opt.out_dir);
    FileMeta meta{"measures", "store=" + opt.store.filename().string(), std::nullopt};

    auto write_table = [&](const OriginalityTable& table, const fs::path& path) {
        auto os = open_out(path);
        os << meta.as_hash_comments();
        os << "ref_id,citation_class,originality\n";
        for (const auto& [id, value] : table.values) {
            auto it = table.citation_class.find(id);
            os << text::csv_row({id, it == table.citation_class.end()
                                         ? std::string()
                                         : std::to_string(it->second),
                                 fmt(value)})
               << "\n";
        }
    };
    write_table(sem_table, opt.out_dir / "originality_semantic.csv");
    write_table(cit_table, opt.out_dir / "originality_citation.csv");

    {
        auto os = open_out(opt.out_dir / "densities.csv");
        os << meta.as_hash_comments();
        os << "classification,citation_class,x,density\n";
        auto dump = [&](const char* name, const OriginalityDistributions& dists) {
            for (const auto& curve : dists.classes) {
                if (!curve.has_density) continue;
                for (std::size_t g = 0; g < dists.grid.size(); ++g)
                    os << name << "," << curve.citation_class << "," << fmt(dists.grid[g]) << ","
                       << fmt(curve.density[g]) << "\n";
            }
        };
        dump("semantic", sem_dists);
        dump("citation", cit_dists);
    }
    {
        auto os = open_out(opt.out_dir / "composition.csv");
        os << meta.as_hash_comments();
        os << "citation_class,semantic_class,proportion\n";
        for (const auto& [cls, row] : comp.rows)
            for (std::size_t j = 0; j < row.size(); ++j)
                os << cls << "," << j << "," << fmt(row[j]) << "\n";
    }
    {
        auto os = open_out(opt.out_dir / "correlation.csv");
        os << meta.as_hash_comments();
        os << "semantic_class,citation_class,rho\n";
        for (std::size_t k = 0; k < corr.num_semantic_classes; ++k)
            for (std::size_t kp = 0; kp < corr.num_citation_classes; ++kp)
                os << k << "," << kp << "," << (corr.rho[k][kp] ? fmt(*corr.rho[k][kp]) : "")
                   << "\n";
    }
    {
        nlohmann::ordered_json j;
        nlohmann::ordered_json m;
        for (const auto& line : meta.lines()) m["header"].push_back(line);
        j["_meta"] = m;
        j["common_references"] = corr.common_references;
        j["correlation"] = {{"min", corr.summary.min},
                            {"mean", corr.summary.mean},
                            {"max", corr.summary.max},
                            {"decile_first", corr.summary.decile_first},
                            {"decile_last", corr.summary.decile_last},
                            {"undefined_entries", corr.undefined_entries}};
        j["excluded"] = {{"semantic_undefined", sem_probs.undefined_count()},
                         {"citation_undefined", cit_probs.undefined_count()}};
        auto means = [](const OriginalityDistributions& dists) {
            nlohmann::ordered_json out;
            for (const auto& curve : dists.classes)
                out[std::to_string(curve.citation_class)] = curve.mean;
            return out;
        };
        j["originality_means"] = {{"semantic", means(sem_dists)}, {"citation", means(cit_dists)}};
        auto os = open_out(opt.out_dir / "summary.json");
        os << j.dump(2) << "\n";
    }
    std::cout << "measures refs=" << corr.common_references
              << " correlation_mean=" << fmt(corr.summary.mean)
              << " correlation_min=" << fmt(corr.summary.min)
              << " correlation_max=" << fmt(corr.summary.max) << "\n";
    return 0;
}

int run_pipeline(const PipelineOptions& opt) {
    const nlohmann::json config = load_json(opt.config);
    auto get_or = [&](const char* key, const nlohmann::json& fallback) {
        return config.contains(key) ? config[key] : fallback;
    };
    const fs::path base = opt.config.parent_path();
    auto resolve = [&](const std::string& p) {
        const fs::path path(p);
        return path.is_absolute() ? path : base / path;
    };

    if (!config.contains("refs") || !config.contains("links") || !config.contains("out"))
        throw DataError("pipeline config needs refs, links and out paths");
    const fs::path out =
        opt.out ? *opt.out : resolve(config["out"].get<std::string>());
    const std::uint64_t seed = opt.seed ? *opt.seed : get_or("seed", 0).get<std::uint64_t>();
    const int threads = opt.threads ? *opt.threads : get_or("threads", 1).get<int>();
    fs::create_directories(out);

    IngestOptions ingest_opt;
    ingest_opt.refs = resolve(config["refs"].get<std::string>());
    ingest_opt.links = resolve(config["links"].get<std::string>());
    ingest_opt.store = out / "store";
    ingest_opt.dedup = get_or("dedup", false).get<bool>();
    run_ingest(ingest_opt);

    if (config.contains("enrich") && config["enrich"].contains("base_url")) {
        const auto& e = config["enrich"];
        EnrichOptions enrich_opt;
        enrich_opt.store = ingest_opt.store;
        enrich_opt.base_url = e["base_url"].get<std::string>();
        enrich_opt.rate_limit = e.value("rate_limit", 5.0);
        enrich_opt.timeout = e.value("timeout", 10.0);
        if (e.contains("cache_dir")) enrich_opt.cache_dir = resolve(e["cache_dir"]);
        enrich_opt.max_in_flight = e.value("max_in_flight", 1);
        run_enrich(enrich_opt);
    }

    const auto citation_cfg = get_or("citation", nlohmann::json::object());
    CitationGraphOptions graph_opt;
    graph_opt.store = ingest_opt.store;
    graph_opt.out = out / "citation_graph.gexf";
    graph_opt.core = citation_cfg.value("core_filter", true);
    run_citation_graph(graph_opt);

    CommunitiesOptions comm_opt;
    comm_opt.graph = graph_opt.out;
    comm_opt.out = out / "citation_partition.csv";
    comm_opt.seed = seed;
    comm_opt.bootstrap = citation_cfg.value("bootstrap", std::size_t{0});
    comm_opt.titles_out = out / "citation_top_titles.csv";
    comm_opt.top_titles = citation_cfg.value("top_titles", std::size_t{5});
    comm_opt.threads = threads;
    run_communities(comm_opt);

    const auto ranksize_cfg = get_or("ranksize", nlohmann::json::object());
    RanksizeOptions rank_opt;
    rank_opt.graph = graph_opt.out;
    rank_opt.out = out / "ranksize.csv";
    rank_opt.fit_out = out / "ranksize_fit.csv";
    rank_opt.regimes = ranksize_cfg.value("regimes", std::size_t{3});
    rank_opt.min_points = ranksize_cfg.value("min_points", std::size_t{10});
    run_ranksize(rank_opt);

    const auto cliques_cfg = get_or("cliques", nlohmann::json::object());
    CliquesOptions cliques_opt;
    cliques_opt.graph = graph_opt.out;
    cliques_opt.out = out / "cliques.txt";
    cliques_opt.min_size = cliques_cfg.value("min_size", std::size_t{3});
    run_cliques(cliques_opt);

    const auto keywords_cfg = get_or("keywords", nlohmann::json::object());
    KeywordsOptions kw_opt;
    kw_opt.store = ingest_opt.store;
    kw_opt.out = out / "keywords.csv";
    kw_opt.postings = out / "keyword_postings.tsv";
    kw_opt.kw = keywords_cfg.value("kw", 50000u);
    kw_opt.min_freq = keywords_cfg.value("min_freq", 3u);
    kw_opt.tagger_cmd = keywords_cfg.value("tagger_cmd", std::string());
    kw_opt.threads = threads;
    run_keywords(kw_opt);

    const auto semantic_cfg = get_or("semantic", nlohmann::json::object());
    SemanticGraphOptions sem_opt;
    sem_opt.keywords = kw_opt.out;
    sem_opt.postings = kw_opt.postings;
    sem_opt.out = out / "semantic_graph.gexf";
    sem_opt.communities_out = out / "semantic_partition.csv";
    sem_opt.top_keywords_out = out / "top_keywords.csv";
    sem_opt.params.k_max = semantic_cfg.value("k_max", 1200u);
    sem_opt.params.theta_w = semantic_cfg.value("theta_w", 100u);
    sem_opt.params.f_min = semantic_cfg.value("f_min", 50u);
    sem_opt.params.f_max = semantic_cfg.value("f_max", 10000u);
    sem_opt.seed = seed;
    sem_opt.noise_floor = semantic_cfg.value("noise_floor", std::size_t{4});
    run_semantic_graph(sem_opt);

    if (config.contains("sweep")) {
        // the grid block is materialized next to the outputs so the sweep
        // stage consumes exactly what a standalone run would
        const fs::path grid_path = out / "sweep_grid.json";
        {
            nlohmann::ordered_json grid_json = config["sweep"];
            FileMeta grid_meta{"pipeline", "materialized sweep grid", seed};
            for (const auto& line : grid_meta.lines()) grid_json["_meta"].push_back(line);
            auto os = open_out(grid_path);
            os << grid_json.dump(2) << "\n";
        }
        SweepOptions sweep_opt;
        sweep_opt.keywords = kw_opt.out;
        sweep_opt.postings = kw_opt.postings;
        sweep_opt.grid = grid_path;
        sweep_opt.out = out / "sweep.csv";
        sweep_opt.seed = seed;
        sweep_opt.threads = threads;
        run_sweep_cmd(sweep_opt);
    }

    MeasuresOptions measures_opt;
    measures_opt.store = ingest_opt.store;
    measures_opt.citation_partition = comm_opt.out;
    measures_opt.keywords = kw_opt.out;
    measures_opt.postings = kw_opt.postings;
    measures_opt.semantic_partition = sem_opt.communities_out;
    measures_opt.out_dir = out / "measures";
    run_measures(measures_opt);

    std::cout << "pipeline complete: " << out.string() << "\n";
    return 0;
}

} // namespace scholnet::cli
