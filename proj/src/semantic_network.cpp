#include "scholnet/semantic_network.hpp"

#include "scholnet/errors.hpp"
#include "scholnet/text.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace scholnet {

void FilterParams::validate() const {
    if (k_max == 0 || theta_w == 0 || f_min == 0 || f_max == 0)
        throw DataError("filter params: all parameters must be positive");
    if (f_min > f_max) throw DataError("filter params: f_min must not exceed f_max");
}

std::string FilterParams::describe() const {
    return "kmax=" + std::to_string(k_max) + " theta=" + std::to_string(theta_w) +
           " fmin=" + std::to_string(f_min) + " fmax=" + std::to_string(f_max);
}

std::uint32_t CooccurrenceMatrix::count(std::uint32_t i, std::uint32_t j) const {
    if (i == j) return 0;
    if (i > j) std::swap(i, j);
    const Entry probe{i, j, 0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), probe,
                               [](const Entry& a, const Entry& b) {
                                   return a.i != b.i ? a.i < b.i : a.j < b.j;
                               });
    if (it != entries_.end() && it->i == i && it->j == j) return it->count;
    return 0;
}

void CooccurrenceMatrix::set_entries(std::vector<Entry> entries) {
    entries_ = std::move(entries);
}

CooccurrenceMatrix build_cooccurrence(const KeywordIndex& index) {
    if (index.keywords.empty()) throw DataError("co-occurrence: empty keyword index");
    std::vector<std::vector<std::uint32_t>> by_doc(index.num_documents());
    for (std::size_t k = 0; k < index.keywords.size(); ++k)
        for (const std::uint32_t doc : index.postings[k])
            by_doc[doc].push_back(static_cast<std::uint32_t>(k));
    std::unordered_map<std::uint64_t, std::uint32_t> counts;
    for (auto& present : by_doc) {
        std::sort(present.begin(), present.end());
        for (std::size_t a = 0; a < present.size(); ++a)
            for (std::size_t b = a + 1; b < present.size(); ++b)
                ++counts[(static_cast<std::uint64_t>(present[a]) << 32) | present[b]];
    }
    std::vector<CooccurrenceMatrix::Entry> entries;
    entries.reserve(counts.size());
    for (const auto& [key, count] : counts)
        entries.push_back({static_cast<std::uint32_t>(key >> 32),
                           static_cast<std::uint32_t>(key & 0xffffffffu), count});
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    CooccurrenceMatrix matrix(index.keywords.size());
    matrix.set_entries(std::move(entries));
    return matrix;
}

FilteredNetwork filter_network(const CooccurrenceMatrix& matrix, const KeywordIndex& index,
                               const FilterParams& params) {
    params.validate();
    if (matrix.num_keywords() != index.keywords.size())
        throw DataError("filter: matrix and index keyword counts differ");
    const std::size_t k = index.keywords.size();

    // (1) document-frequency window
    std::vector<bool> keep(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t f = index.keywords[i].doc_freq;
        keep[i] = f >= params.f_min && f <= params.f_max;
    }

    // (2) minimal edge weight
    std::vector<CooccurrenceMatrix::Entry> edges;
    for (const auto& e : matrix.entries()) {
        if (!keep[e.i] || !keep[e.j]) continue;
        if (e.count < params.theta_w) continue;
        edges.push_back(e);
    }

    // (3) unweighted degree cap on the thresholded topology
    std::vector<std::uint32_t> degree(k, 0);
    for (const auto& e : edges) {
        ++degree[e.i];
        ++degree[e.j];
    }
    std::vector<bool> in_graph(k, false);
    for (std::size_t i = 0; i < k; ++i)
        in_graph[i] = keep[i] && degree[i] <= params.k_max;

    // (4) isolated vertices drop out with the edges removed around them
    std::vector<std::uint32_t> final_degree(k, 0);
    for (const auto& e : edges) {
        if (!in_graph[e.i] || !in_graph[e.j]) continue;
        ++final_degree[e.i];
        ++final_degree[e.j];
    }

    FilteredNetwork out;
    for (std::size_t i = 0; i < k; ++i) {
        if (!in_graph[i] || final_degree[i] == 0) continue;
        const Keyword& kw = index.keywords[i];
        const std::string id = keyword_node_id(kw);
        out.graph.add_node(id, kw.surface);
        out.graph.set_attribute(id, "doc_freq", std::to_string(kw.doc_freq));
        out.graph.set_attribute(id, "score", text::format_double(kw.score));
        out.graph.set_attribute(id, "lang", kw.language);
    }
    for (const auto& e : edges) {
        if (!in_graph[e.i] || !in_graph[e.j]) continue;
        out.graph.add_edge(keyword_node_id(index.keywords[e.i]),
                           keyword_node_id(index.keywords[e.j]),
                           static_cast<double>(e.count));
    }
    out.empty_warning = out.graph.num_nodes() == 0;
    return out;
}

SemanticCommunities semantic_communities(const Graph& graph, std::uint64_t seed,
                                         std::size_t noise_floor) {
    if (graph.num_nodes() == 0) throw DataError("semantic communities: empty graph");
    SemanticCommunities result;
    result.communities = louvain(graph, seed);

    const int num_comms = result.communities.partition.num_communities();
    std::vector<std::vector<std::pair<double, std::string>>> members(
        static_cast<std::size_t>(num_comms));
    for (const auto& id : graph.node_ids()) {
        const int c = result.communities.partition.community_of(id);
        double score = 0.0;
        const auto& attrs = graph.attributes(id);
        auto it = attrs.find("score");
        if (it != attrs.end()) score = std::strtod(it->second.c_str(), nullptr);
        members[static_cast<std::size_t>(c)].push_back({score, id});
    }
    for (int c = 0; c < num_comms; ++c) {
        auto& list = members[static_cast<std::size_t>(c)];
        std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        SemanticCommunitySummary summary;
        summary.community = c;
        summary.size = list.size();
        summary.noise = list.size() < noise_floor;
        const std::size_t top = std::min<std::size_t>(10, list.size());
        for (std::size_t i = 0; i < top; ++i) summary.top_keyword_ids.push_back(list[i].second);
        result.summaries.push_back(std::move(summary));
    }
    return result;
}

} // namespace scholnet
