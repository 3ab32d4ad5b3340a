#pragma once

#include "scholnet/community.hpp"
#include "scholnet/graph.hpp"
#include "scholnet/keywords.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scholnet {

// The four-parameter semantic-network filter: maximal unweighted degree,
// minimal edge weight, and the document-frequency window keywords must fall
// in. Applied in the order f-window, theta_w, k_max, isolates.
struct FilterParams {
    std::uint32_t k_max = 1200;
    std::uint32_t theta_w = 100;
    std::uint32_t f_min = 50;
    std::uint32_t f_max = 10000;

    void validate() const; // throws DataError on violation
    std::string describe() const;
};

// Sparse symmetric document co-occurrence counts over the keywords of an
// index; the diagonal is excluded and counts never exceed min(f_i, f_j).
class CooccurrenceMatrix {
public:
    struct Entry {
        std::uint32_t i = 0; // keyword indices, i < j
        std::uint32_t j = 0;
        std::uint32_t count = 0;
    };

    explicit CooccurrenceMatrix(std::size_t num_keywords) : n_(num_keywords) {}

    std::size_t num_keywords() const { return n_; }
    std::size_t num_pairs() const { return entries_.size(); }
    std::uint32_t count(std::uint32_t i, std::uint32_t j) const;
    const std::vector<Entry>& entries() const { return entries_; } // sorted by (i, j)

    void set_entries(std::vector<Entry> entries); // internal use by the builder

private:
    std::size_t n_;
    std::vector<Entry> entries_;
};

// Increments each unordered pair of distinct kept keywords once per shared
// document.
CooccurrenceMatrix build_cooccurrence(const KeywordIndex& index);

struct FilteredNetwork {
    Graph graph{false};
    bool empty_warning = false; // legitimate sweep outcome, not an error
    std::string filter_order = "fwindow,theta,kmax,isolates";
};

// Node ids come from keyword_node_id(); labels are the keyword surfaces and
// doc_freq / score / lang ride along as node attributes.
FilteredNetwork filter_network(const CooccurrenceMatrix& matrix, const KeywordIndex& index,
                               const FilterParams& params);

struct SemanticCommunitySummary {
    int community = 0;
    std::size_t size = 0;
    bool noise = false; // below the noise floor
    std::vector<std::string> top_keyword_ids; // up to 10, by score desc
};

struct SemanticCommunities {
    CommunityResult communities;
    std::vector<SemanticCommunitySummary> summaries;
};

// Community detection on the filtered keyword graph plus the per-community
// highest-scored keywords that support manual naming. Communities smaller
// than noise_floor keywords are flagged as noise.
SemanticCommunities semantic_communities(const Graph& graph, std::uint64_t seed,
                                         std::size_t noise_floor = 4);

} // namespace scholnet
