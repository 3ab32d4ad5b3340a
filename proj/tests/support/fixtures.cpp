#include "fixtures.hpp"

#include "scholnet/porter.hpp"
#include "scholnet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace scholnet::testsupport {

namespace {

std::string node_name(std::size_t i) { return "n" + std::to_string(i); }

} // namespace

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Graph g(false);
    for (std::size_t i = 0; i < n; ++i) g.add_node(node_name(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) g.add_edge(node_name(i), node_name(j));
    return g;
}

Graph random_graph_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m > n * (n - 1) / 2) throw std::invalid_argument("gnm: too many edges");
    SplitMix64 rng(seed);
    Graph g(false);
    for (std::size_t i = 0; i < n; ++i) g.add_node(node_name(i));
    std::set<std::pair<std::size_t, std::size_t>> used;
    while (used.size() < m) {
        std::size_t u = rng.bounded(n);
        std::size_t v = rng.bounded(n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (used.insert({u, v}).second) g.add_edge(node_name(u), node_name(v));
    }
    return g;
}

PlantedGraph planted_partition_graph(std::size_t blocks, std::size_t block_size, double p_in,
                                     double p_out, std::uint64_t seed) {
    SplitMix64 rng(seed);
    PlantedGraph out;
    const std::size_t n = blocks * block_size;
    for (std::size_t i = 0; i < n; ++i) {
        out.graph.add_node(node_name(i));
        out.planted.assignment[node_name(i)] = static_cast<int>(i / block_size);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same = i / block_size == j / block_size;
            if (rng.bernoulli(same ? p_in : p_out))
                out.graph.add_edge(node_name(i), node_name(j));
        }
    }
    return out;
}

double adjusted_rand_index(const Partition& a, const Partition& b) {
    // contingency table over shared keys
    std::unordered_map<int, std::unordered_map<int, double>> table;
    std::unordered_map<int, double> row_sums, col_sums;
    double n = 0.0;
    for (const auto& [id, ca] : a.assignment) {
        auto it = b.assignment.find(id);
        if (it == b.assignment.end()) continue;
        table[ca][it->second] += 1.0;
        row_sums[ca] += 1.0;
        col_sums[it->second] += 1.0;
        n += 1.0;
    }
    auto choose2 = [](double x) { return x * (x - 1.0) / 2.0; };
    double sum_cells = 0.0, sum_rows = 0.0, sum_cols = 0.0;
    for (const auto& [r, cols] : table)
        for (const auto& [c, count] : cols) sum_cells += choose2(count);
    for (const auto& [r, count] : row_sums) sum_rows += choose2(count);
    for (const auto& [c, count] : col_sums) sum_cols += choose2(count);
    const double total = choose2(n);
    const double expected = sum_rows * sum_cols / total;
    const double max_index = 0.5 * (sum_rows + sum_cols);
    if (max_index == expected) return 1.0; // both partitions trivial
    return (sum_cells - expected) / (max_index - expected);
}

double modularity_direct_sum(const Graph& g, const Partition& p) {
    const std::size_t n = g.num_nodes();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const auto& e : g.edges()) {
        const auto u = static_cast<std::size_t>(e.u);
        const auto v = static_cast<std::size_t>(e.v);
        if (g.directed()) {
            a[u][v] += e.weight;
            a[v][u] += e.weight;
        } else {
            a[u][v] += e.weight;
            a[v][u] += e.weight;
        }
    }
    std::vector<double> k(n, 0.0);
    double two_m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            k[i] += a[i][j];
            two_m += a[i][j];
        }
    std::vector<int> label(n);
    for (std::size_t i = 0; i < n; ++i) label[i] = p.community_of(g.id_of(static_cast<int>(i)));
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (label[i] != label[j]) continue;
            q += a[i][j] - k[i] * k[j] / two_m;
        }
    return q / two_m;
}

double exhaustive_best_modularity(const Graph& g) {
    const std::size_t n = g.num_nodes();
    if (n == 0) return -1.0;
    std::vector<int> labels(n, 0);
    double best = -1.0;
    auto evaluate = [&] {
        Partition p;
        for (std::size_t i = 0; i < n; ++i)
            p.assignment[g.id_of(static_cast<int>(i))] = labels[i];
        best = std::max(best, modularity_direct_sum(g, p));
    };
    // restricted growth strings enumerate every set partition exactly once
    std::function<void(std::size_t, int)> recurse = [&](std::size_t i, int max_used) {
        if (i == n) {
            evaluate();
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            labels[i] = c;
            recurse(i + 1, std::max(max_used, c));
        }
    };
    recurse(1, 0);
    return best;
}

std::vector<std::vector<std::string>> brute_force_maximal_cliques(const Graph& g,
                                                                  std::size_t min_size) {
    const std::size_t n = g.num_nodes();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    }
    std::vector<std::vector<std::string>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        // is it a clique?
        bool clique = true;
        for (std::size_t i = 0; i < n && clique; ++i) {
            if (!(mask & (1u << i))) continue;
            for (std::size_t j = i + 1; j < n && clique; ++j) {
                if (!(mask & (1u << j))) continue;
                if (!adj[i][j]) clique = false;
            }
        }
        if (!clique) continue;
        // maximal?
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v) {
            if (mask & (1u << v)) continue;
            bool adjacent_to_all = true;
            for (std::size_t i = 0; i < n && adjacent_to_all; ++i)
                if ((mask & (1u << i)) && !adj[v][i]) adjacent_to_all = false;
            if (adjacent_to_all) maximal = false;
        }
        if (!maximal) continue;
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) ids.push_back(g.id_of(static_cast<int>(i)));
        if (ids.size() < min_size) continue;
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

namespace {

struct TopicVocab {
    std::vector<std::string> nouns;
    std::vector<std::string> adjectives;
};

const std::vector<TopicVocab>& topic_vocabularies() {
    static const std::vector<TopicVocab> vocab = {
        {{"city", "district", "street", "housing", "settlement", "suburb", "transit",
          "transport", "mobility", "commuter", "pedestrian", "zoning", "sprawl", "downtown",
          "neighborhood", "infrastructure", "parcel", "census", "migration", "dwelling",
          "corridor", "tenure", "gentrification", "metropolis"},
         {"urban", "residential", "municipal", "polycentric", "compact", "walkable"}},
        {{"species", "habitat", "forest", "wetland", "vegetation", "biodiversity", "soil",
          "climate", "ecosystem", "watershed", "river", "floodplain", "sediment", "erosion",
          "rainfall", "drought", "canopy", "grassland", "wildlife", "conservation",
          "nutrient", "fauna", "flora", "restoration"},
         {"ecological", "hydrological", "fluvial", "alluvial", "endemic", "arid"}},
        {{"network", "node", "topology", "centrality", "percolation", "scaling", "fractal",
          "entropy", "attractor", "emergence", "hierarchy", "cluster", "connectivity",
          "robustness", "resilience", "threshold", "cascade", "lattice", "exponent",
          "degree", "motif", "assortativity", "criticality", "synchronization"},
         {"complex", "dynamic", "stochastic", "nonlinear", "critical", "universal"}},
    };
    return vocab;
}

const std::vector<std::string>& template_verbs() {
    static const std::vector<std::string> verbs = {
        "shows", "describes", "analyzes", "examines", "reveals", "suggests",
        "indicates", "provides", "uses", "develops", "proposes", "investigates",
    };
    return verbs;
}

std::string make_abstract(int topic, SplitMix64& rng) {
    const TopicVocab& vocab = topic_vocabularies()[static_cast<std::size_t>(topic)];
    auto noun = [&] { return vocab.nouns[rng.bounded(vocab.nouns.size())]; };
    auto adj = [&] { return vocab.adjectives[rng.bounded(vocab.adjectives.size())]; };
    auto verb = [&] { return template_verbs()[rng.bounded(template_verbs().size())]; };

    // generic nouns appear in every document, always fenced by stop words, so
    // the f_max window is what removes them
    std::string text = "This paper " + verb() + " a model of the data and " + verb() +
                       " the approach with the results of a method for the " + adj() + " " +
                       noun() + ".";
    const std::size_t sentences = 3 + rng.bounded(3);
    for (std::size_t s = 0; s < sentences; ++s) {
        switch (rng.bounded(4)) {
            case 0:
                text += " The " + adj() + " " + noun() + " of the " + noun() + " " + verb() +
                        " a " + adj() + " " + noun() + " in the " + noun() + ".";
                break;
            case 1:
                text += " We " + verb() + " the " + noun() + " " + noun() + " and " + verb() +
                        " its " + adj() + " " + noun() + ".";
                break;
            case 2:
                text += " The " + noun() + " " + verb() + " with the " + adj() + " " + noun() +
                        " across each " + noun() + ".";
                break;
            default:
                text += " This " + verb() + " how the " + noun() + " " + verb() + " under a " +
                        adj() + " " + noun() + " " + noun() + ".";
                break;
        }
    }
    return text;
}

} // namespace

PlantedCorpus make_planted_corpus(const PlantedCorpusSpec& spec) {
    if (spec.num_topics > topic_vocabularies().size())
        throw std::invalid_argument("planted corpus: at most 3 topics supported");
    SplitMix64 rng(spec.seed);
    PlantedCorpus out;

    std::vector<std::string> ids;
    for (std::size_t t = 0; t < spec.num_topics; ++t) {
        const TopicVocab& vocab = topic_vocabularies()[t];
        for (std::size_t i = 0; i < spec.refs_per_topic; ++i) {
            Reference ref;
            ref.id = "r" + std::to_string(t) + "-" +
                     (i < 10 ? "00" : i < 100 ? "0" : "") + std::to_string(i);
            const std::string& title_noun = vocab.nouns[i % vocab.nouns.size()];
            const std::string& title_adj = vocab.adjectives[i % vocab.adjectives.size()];
            ref.title = "On the " + title_adj + " " + title_noun + " (study " +
                        std::to_string(t) + "-" + std::to_string(i) + ")";
            ref.year = 1990 + static_cast<int>(rng.bounded(30));
            ref.authors = {"Author " + std::string(1, static_cast<char>('A' + rng.bounded(26)))};
            ref.language = "en";
            if (spec.seeds_per_topic > 0 && i < spec.seeds_per_topic) ref.source = "seed";
            else ref.source = "synthetic";
            if (i < spec.abstracts_per_topic) {
                ref.abstract = make_abstract(static_cast<int>(t), rng);
                out.topic_of_ref[ref.id] = static_cast<int>(t);
            }
            out.block_of_ref[ref.id] = static_cast<int>(t);
            ids.push_back(ref.id);
            out.corpus.add_reference(std::move(ref));
        }
    }
    for (std::size_t i = 0; i < spec.extra_refs; ++i) {
        Reference ref;
        ref.id = "x-" + std::to_string(i);
        ref.title = "Untraced record " + std::to_string(i);
        ref.source = "synthetic";
        ids.push_back(ref.id);
        out.corpus.add_reference(std::move(ref));
    }

    // planted citation blocks: later references cite earlier ones
    const std::size_t topical = spec.num_topics * spec.refs_per_topic;
    for (std::size_t j = 1; j < topical; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const bool same = out.block_of_ref.at(ids[i]) == out.block_of_ref.at(ids[j]);
            const double p = same ? spec.p_cite_in : spec.p_cite_out;
            if (p > 0.0 && rng.bernoulli(p)) out.corpus.add_link(ids[j], ids[i]);
        }
    }

    if (spec.mixed_per_pair > 0) {
        for (std::size_t a = 0; a < spec.num_topics; ++a) {
            for (std::size_t b = a + 1; b < spec.num_topics; ++b) {
                for (std::size_t i = 0; i < spec.mixed_per_pair; ++i) {
                    Reference ref;
                    ref.id = "m" + std::to_string(a) + std::to_string(b) + "-" +
                             std::to_string(i);
                    ref.title = "Bridging study " + std::to_string(a) + "-" +
                                std::to_string(b) + " no " + std::to_string(i);
                    ref.year = 2000 + static_cast<int>(rng.bounded(20));
                    ref.authors = {"Author " +
                                   std::string(1, static_cast<char>('A' + rng.bounded(26)))};
                    ref.language = "en";
                    ref.source = "synthetic";
                    // half the sentences from each parent topic
                    std::string abstract = make_abstract(static_cast<int>(a), rng);
                    abstract += " " + make_abstract(static_cast<int>(b), rng);
                    ref.abstract = abstract;
                    out.topic_of_ref[ref.id] = static_cast<int>(a);
                    out.block_of_ref[ref.id] = static_cast<int>(a);
                    const std::string id = ref.id;
                    out.corpus.add_reference(std::move(ref));
                    // cite a few references in both parent blocks
                    for (const std::size_t parent : {a, b}) {
                        for (int c = 0; c < 3; ++c) {
                            const std::size_t j =
                                parent * spec.refs_per_topic + rng.bounded(spec.refs_per_topic);
                            out.corpus.add_link(id, ids[j]);
                        }
                    }
                }
            }
        }
    }

    for (std::size_t t = 0; t < spec.num_topics; ++t) {
        const TopicVocab& vocab = topic_vocabularies()[t];
        for (const auto& w : vocab.nouns) out.topic_of_stem[porter_stem(w)] = static_cast<int>(t);
        for (const auto& w : vocab.adjectives)
            out.topic_of_stem[porter_stem(w)] = static_cast<int>(t);
    }
    return out;
}

} // namespace scholnet::testsupport
