#pragma once

#include "scholnet/corpus.hpp"
#include "scholnet/graph.hpp"
#include "scholnet/keywords.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scholnet {

// Per-reference probability vectors over the classes of one classification.
// References with zero evidence (no kept keywords / no counted in-citations)
// are excluded and counted rather than imputed.
struct ClassProbabilities {
    std::string classification; // "semantic" or "citation"
    std::size_t num_classes = 0;
    std::map<std::string, std::vector<double>> vectors; // defined vectors only
    std::vector<std::string> undefined_ids;             // sorted

    std::size_t undefined_count() const { return undefined_ids.size(); }
};

// Proportion of the abstract's kept keywords falling in each semantic class.
// Only keywords that survived into the semantic graph (= the partition's
// domain) count. By default each distinct keyword counts once (binary, the
// same convention as the co-occurrence matrix); multiplicity weighting
// instead counts every occurrence window, re-parsing abstracts with the
// built-in English tagger (French keywords stay binary-only).
ClassProbabilities semantic_probabilities(const Corpus& corpus, const KeywordIndex& index,
                                          const Partition& keyword_partition,
                                          bool multiplicity = false);

// Proportion of in-citations received from each citation class, over the
// references of the partition; citing references outside the partition are
// ignored.
ClassProbabilities citation_probabilities(const Corpus& corpus,
                                          const Partition& reference_partition);

// Deterministic classification: a one at the index of the reference's class.
ClassProbabilities one_hot_citation(const Partition& reference_partition);

// Herfindahl-based originality o_i = 1 - sum_j p_ij^2, in [0, 1 - 1/C].
struct OriginalityTable {
    std::map<std::string, double> values;
    std::map<std::string, int> citation_class; // stratification labels, may be empty
    std::size_t undefined_excluded = 0;
};

OriginalityTable originality(const ClassProbabilities& probabilities,
                             const Partition* citation_classes = nullptr);

// Per citation class: mean plus a Gaussian-kernel density on a fixed
// 256-point grid over [0, 1] (Silverman bandwidth clipped to [0.01, 0.2]);
// classes with fewer than 2 members report the mean only.
struct DensityCurve {
    int citation_class = 0;
    std::size_t count = 0;
    double mean = 0.0;
    bool has_density = false;
    std::vector<double> density; // 256 values when has_density
};

struct OriginalityDistributions {
    std::vector<double> grid; // 256 points over [0, 1]
    std::vector<DensityCurve> classes;
    std::size_t unlabeled_excluded = 0;
};

OriginalityDistributions originality_distributions(const OriginalityTable& table);

// Average semantic probability vector per citation class; rows are convex
// combinations and sum to 1. Classes with no defined member are omitted.
struct CompositionMatrix {
    std::size_t num_semantic_classes = 0;
    std::map<int, std::vector<double>> rows;        // citation class -> averages
    std::map<int, std::size_t> members;             // defined members per row
    std::vector<int> omitted_classes;
};

CompositionMatrix composition(const ClassProbabilities& semantic_probs,
                              const Partition& citation_partition);

// Pearson correlation between every semantic-class column and every
// citation-class indicator column over the references holding both vectors,
// with unbiased covariance/variance estimators. Zero-variance series leave
// the entry undefined.
struct CorrelationSummary {
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
    double decile_first = 0.0; // empirical 10% quantile
    double decile_last = 0.0;  // empirical 90% quantile
};

struct CorrelationMatrix {
    std::size_t num_semantic_classes = 0;
    std::size_t num_citation_classes = 0;
    std::vector<std::vector<std::optional<double>>> rho; // [semantic][citation]
    std::size_t common_references = 0;
    std::size_t undefined_entries = 0;
    CorrelationSummary summary; // over defined entries
};

CorrelationMatrix correlation_matrix(const ClassProbabilities& semantic_probs,
                                     const ClassProbabilities& citation_one_hot);

} // namespace scholnet
