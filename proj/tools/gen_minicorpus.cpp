// Regenerates the bundled synthetic mini-corpus under data/mini_corpus/:
// 234 references over 3 planted topics with planted citation blocks plus a
// few bridging references, a pipeline config and a manifest carrying the
// ground truth. The output is committed to the repository; rerunning this
// tool with the default seed reproduces it byte for byte.

#include "support/fixtures.hpp"

#include "scholnet/citation_analysis.hpp"
#include "scholnet/corpus.hpp"
#include "scholnet/meta.hpp"
#include "scholnet/text.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace scholnet;
namespace ts = scholnet::testsupport;

int main(int argc, char** argv) {
    const std::filesystem::path out_dir = argc > 1 ? argv[1] : "data/mini_corpus";

    ts::PlantedCorpusSpec spec;
    spec.num_topics = 3;
    spec.refs_per_topic = 72;
    spec.abstracts_per_topic = 40;
    spec.extra_refs = 9;
    spec.seeds_per_topic = 10;
    spec.p_cite_in = 0.08;
    spec.p_cite_out = 0.004;
    spec.seed = 20160927;
    spec.mixed_per_pair = 3; // 9 bridging refs; (120 + 9) / 234 ~ 0.55 coverage

    const ts::PlantedCorpus planted = ts::make_planted_corpus(spec);
    std::filesystem::create_directories(out_dir);
    save_store(planted.corpus, out_dir, FileMeta{"gen-minicorpus", "seed=20160927", spec.seed});

    const CorpusStats stats = corpus_stats(planted.corpus);
    const Graph graph = build_citation_graph(planted.corpus);

    nlohmann::ordered_json manifest;
    manifest["references"] = stats.references;
    manifest["links"] = stats.links;
    manifest["seed_references"] = stats.seed_references;
    manifest["with_abstract"] = stats.with_abstract;
    manifest["abstract_coverage"] = stats.abstract_coverage;
    manifest["citation_graph"] = {{"nodes", graph.num_nodes()}, {"edges", graph.num_edges()}};
    manifest["generator"] = {{"seed", spec.seed},
                             {"topics", spec.num_topics},
                             {"refs_per_topic", spec.refs_per_topic},
                             {"abstracts_per_topic", spec.abstracts_per_topic},
                             {"extra_refs", spec.extra_refs},
                             {"mixed_per_pair", spec.mixed_per_pair},
                             {"p_cite_in", spec.p_cite_in},
                             {"p_cite_out", spec.p_cite_out}};
    nlohmann::ordered_json blocks;
    for (const auto& [id, block] : planted.block_of_ref) blocks[id] = block;
    manifest["planted_blocks"] = blocks;
    nlohmann::ordered_json topics;
    for (const auto& [stem, topic] : planted.topic_of_stem) topics[stem] = topic;
    manifest["topic_of_stem"] = topics;
    {
        std::ofstream os(out_dir / "manifest.json", std::ios::binary);
        os << manifest.dump(2) << "\n";
    }

    // pipeline configuration scaled to the mini corpus
    nlohmann::ordered_json config;
    config["refs"] = "refs.jsonl";
    config["links"] = "links.csv";
    config["out"] = "out";
    config["seed"] = 42;
    config["threads"] = 1;
    config["dedup"] = true;
    config["citation"] = {{"core_filter", true}, {"bootstrap", 50}, {"top_titles", 5}};
    config["ranksize"] = {{"regimes", 2}, {"min_points", 10}};
    config["cliques"] = {{"min_size", 3}};
    config["keywords"] = {{"kw", 5000}, {"min_freq", 3}};
    config["semantic"] = {{"k_max", 500}, {"theta_w", 3}, {"f_min", 3}, {"f_max", 100},
                          {"noise_floor", 4}};
    config["sweep"] = {{"k_max", {200, 100000}}, {"theta_w", {3, 6}}, {"f_min", {3}},
                       {"f_max", {100}}};
    {
        std::ofstream os(out_dir / "pipeline.json", std::ios::binary);
        os << config.dump(2) << "\n";
    }

    std::cout << "mini corpus written to " << out_dir.string() << ": " << stats.references
              << " refs, " << stats.links << " links, coverage "
              << text::format_double(stats.abstract_coverage) << "\n";
    return 0;
}
