#pragma once

#include "scholnet/corpus.hpp"
#include "scholnet/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Generators and independent oracles used by the unit and acceptance suites.
// Everything here is deliberately brute-force: these are the references the
// fast implementations are checked against.
namespace scholnet::testsupport {

// G(n, p) with node ids n0..n{n-1}, each unordered pair drawn independently.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// G(n, m): exactly m distinct edges sampled uniformly.
Graph random_graph_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

struct PlantedGraph {
    Graph graph{false};
    Partition planted;
};

PlantedGraph planted_partition_graph(std::size_t blocks, std::size_t block_size, double p_in,
                                     double p_out, std::uint64_t seed);

// Chance-corrected agreement between two partitions over the same key set.
double adjusted_rand_index(const Partition& a, const Partition& b);

// Literal double sum over all ordered node pairs (including i == j):
// Q = (1/2m) sum_ij (A_ij - k_i k_j / 2m) delta(c_i, c_j).
double modularity_direct_sum(const Graph& g, const Partition& p);

// Best modularity over every partition of the node set (restricted growth
// string enumeration; practical for n <= 10).
double exhaustive_best_modularity(const Graph& g);

// Maximal cliques by enumerating all 2^n vertex subsets (n <= 20).
std::vector<std::vector<std::string>> brute_force_maximal_cliques(const Graph& g,
                                                                  std::size_t min_size);

// --- planted-topic corpus -------------------------------------------------

struct PlantedCorpusSpec {
    std::size_t num_topics = 3;
    std::size_t refs_per_topic = 100;
    std::size_t abstracts_per_topic = 100; // first k refs of each topic get abstracts
    std::size_t extra_refs = 0;            // abstract-free noise references
    std::size_t seeds_per_topic = 0;       // tagged source="seed"
    double p_cite_in = 0.0;  // probability a later ref cites an earlier one, same block
    double p_cite_out = 0.0; // across blocks
    std::uint64_t seed = 1;
    // interdisciplinary references drawing on two topic vocabularies, citing
    // into both parent blocks; their block is the first parent topic
    std::size_t mixed_per_pair = 0;
};

struct PlantedCorpus {
    Corpus corpus;
    std::map<std::string, int> topic_of_ref;  // references with abstracts
    std::map<std::string, int> block_of_ref;  // citation block of every topic ref
    std::map<std::string, int> topic_of_stem; // topic 1-gram stems -> topic
};

// Synthetic English abstracts built from disjoint per-topic vocabularies
// plus shared function words; a boilerplate opener puts a handful of generic
// nouns in every document so the document-frequency window has real work to
// do. Citation links form planted blocks aligned with the topics.
PlantedCorpus make_planted_corpus(const PlantedCorpusSpec& spec);

} // namespace scholnet::testsupport
