#include "scholnet/measures.hpp"

#include "scholnet/errors.hpp"

#include <algorithm>
#include <map>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace scholnet {

namespace {

int partition_class_count(const Partition& partition) {
    const int c = partition.num_communities();
    if (c <= 0) throw DataError("probabilities: empty partition");
    return c;
}

} // namespace

ClassProbabilities semantic_probabilities(const Corpus& corpus, const KeywordIndex& index,
                                          const Partition& keyword_partition,
                                          bool multiplicity) {
    ClassProbabilities out;
    out.classification = "semantic";
    out.num_classes = static_cast<std::size_t>(partition_class_count(keyword_partition));

    // keyword -> class, restricted to keywords present in the semantic graph
    std::vector<int> class_of(index.keywords.size(), -1);
    std::map<std::pair<std::string, std::string>, int> class_of_key; // (lang, stems)
    for (std::size_t k = 0; k < index.keywords.size(); ++k) {
        auto it = keyword_partition.assignment.find(keyword_node_id(index.keywords[k]));
        if (it == keyword_partition.assignment.end()) continue;
        class_of[k] = it->second;
        class_of_key[{index.keywords[k].language, index.keywords[k].stem_key()}] = it->second;
    }

    std::unordered_map<std::string, std::vector<double>> counts;
    if (multiplicity) {
        // re-extract per abstract and weight by occurrence windows
        for (const auto& ref : corpus.references()) {
            if (!ref.has_abstract()) continue;
            const Lang lang = detect_language(*ref.abstract);
            if (lang == Lang::Unknown) continue;
            const auto tokens = tag_and_stem(*ref.abstract, lang);
            for (const auto& cand : extract_candidates(tokens, lang)) {
                std::string stems;
                for (std::size_t i = 0; i < cand.stems.size(); ++i) {
                    if (i) stems.push_back(' ');
                    stems += cand.stems[i];
                }
                auto it = class_of_key.find({to_string(lang), stems});
                if (it == class_of_key.end()) continue;
                double occurrences = 0.0;
                for (const auto& [surface, n] : cand.surface_counts) occurrences += n;
                auto [cit, inserted] =
                    counts.emplace(ref.id, std::vector<double>(out.num_classes, 0.0));
                cit->second[static_cast<std::size_t>(it->second)] += occurrences;
            }
        }
    } else {
        for (std::size_t k = 0; k < index.keywords.size(); ++k) {
            if (class_of[k] < 0) continue;
            for (const std::uint32_t doc : index.postings[k]) {
                auto [it, inserted] = counts.emplace(index.doc_ids[doc],
                                                     std::vector<double>(out.num_classes, 0.0));
                it->second[static_cast<std::size_t>(class_of[k])] += 1.0;
            }
        }
    }

    for (const auto& ref : corpus.references()) {
        auto it = counts.find(ref.id);
        if (it == counts.end()) {
            out.undefined_ids.push_back(ref.id);
            continue;
        }
        double total = 0.0;
        for (const double c : it->second) total += c;
        std::vector<double> vec(out.num_classes, 0.0);
        for (std::size_t j = 0; j < out.num_classes; ++j) vec[j] = it->second[j] / total;
        out.vectors.emplace(ref.id, std::move(vec));
    }
    std::sort(out.undefined_ids.begin(), out.undefined_ids.end());
    return out;
}

ClassProbabilities citation_probabilities(const Corpus& corpus,
                                          const Partition& reference_partition) {
    ClassProbabilities out;
    out.classification = "citation";
    out.num_classes = static_cast<std::size_t>(partition_class_count(reference_partition));

    std::unordered_map<std::string, std::vector<double>> counts;
    for (const auto& link : corpus.links()) {
        auto citing = reference_partition.assignment.find(link.citing_id);
        if (citing == reference_partition.assignment.end()) continue; // outside the partition
        if (!reference_partition.contains(link.cited_id)) continue;
        auto [it, inserted] = counts.emplace(link.cited_id,
                                             std::vector<double>(out.num_classes, 0.0));
        it->second[static_cast<std::size_t>(citing->second)] += 1.0;
    }

    for (const auto& [id, cls] : reference_partition.assignment) {
        auto it = counts.find(id);
        if (it == counts.end()) {
            out.undefined_ids.push_back(id); // zero in-citations
            continue;
        }
        double total = 0.0;
        for (const double c : it->second) total += c;
        std::vector<double> vec(out.num_classes, 0.0);
        for (std::size_t j = 0; j < out.num_classes; ++j) vec[j] = it->second[j] / total;
        out.vectors.emplace(id, std::move(vec));
    }
    std::sort(out.undefined_ids.begin(), out.undefined_ids.end());
    return out;
}

ClassProbabilities one_hot_citation(const Partition& reference_partition) {
    ClassProbabilities out;
    out.classification = "citation";
    out.num_classes = static_cast<std::size_t>(partition_class_count(reference_partition));
    for (const auto& [id, cls] : reference_partition.assignment) {
        std::vector<double> vec(out.num_classes, 0.0);
        vec[static_cast<std::size_t>(cls)] = 1.0;
        out.vectors.emplace(id, std::move(vec));
    }
    return out;
}

OriginalityTable originality(const ClassProbabilities& probabilities,
                             const Partition* citation_classes) {
    OriginalityTable table;
    table.undefined_excluded = probabilities.undefined_count();
    for (const auto& [id, vec] : probabilities.vectors) {
        double sum_sq = 0.0;
        for (const double p : vec) sum_sq += p * p;
        table.values.emplace(id, 1.0 - sum_sq);
        if (citation_classes) {
            auto it = citation_classes->assignment.find(id);
            if (it != citation_classes->assignment.end())
                table.citation_class.emplace(id, it->second);
        }
    }
    return table;
}

OriginalityDistributions originality_distributions(const OriginalityTable& table) {
    if (table.values.empty()) throw DataError("originality distributions: empty table");
    constexpr std::size_t kGridSize = 256;
    OriginalityDistributions out;
    out.grid.reserve(kGridSize);
    for (std::size_t i = 0; i < kGridSize; ++i)
        out.grid.push_back(static_cast<double>(i) / static_cast<double>(kGridSize - 1));

    std::map<int, std::vector<double>> by_class;
    for (const auto& [id, value] : table.values) {
        auto it = table.citation_class.find(id);
        if (it == table.citation_class.end()) {
            ++out.unlabeled_excluded;
            continue;
        }
        by_class[it->second].push_back(value);
    }

    for (auto& [cls, values] : by_class) {
        DensityCurve curve;
        curve.citation_class = cls;
        curve.count = values.size();
        double sum = 0.0;
        for (const double v : values) sum += v;
        curve.mean = sum / static_cast<double>(values.size());
        if (values.size() >= 2) {
            std::sort(values.begin(), values.end());
            const double n = static_cast<double>(values.size());
            double ss = 0.0;
            for (const double v : values) {
                const double d = v - curve.mean;
                ss += d * d;
            }
            const double sd = std::sqrt(ss / (n - 1.0));
            auto quantile = [&](double q) {
                const double pos = q * (n - 1.0);
                const auto lo = static_cast<std::size_t>(pos);
                const std::size_t hi = std::min(lo + 1, values.size() - 1);
                const double frac = pos - static_cast<double>(lo);
                return values[lo] * (1.0 - frac) + values[hi] * frac;
            };
            const double iqr = quantile(0.75) - quantile(0.25);
            double spread = sd;
            if (iqr > 0.0) spread = std::min(sd, iqr / 1.34);
            double bandwidth = 0.9 * spread * std::pow(n, -0.2);
            bandwidth = std::clamp(bandwidth, 0.01, 0.2);
            curve.has_density = true;
            curve.density.resize(kGridSize, 0.0);
            const double norm = 1.0 / (n * bandwidth * std::sqrt(2.0 * M_PI));
            for (std::size_t g = 0; g < kGridSize; ++g) {
                double acc = 0.0;
                for (const double v : values) {
                    const double z = (out.grid[g] - v) / bandwidth;
                    acc += std::exp(-0.5 * z * z);
                }
                curve.density[g] = norm * acc;
            }
        }
        out.classes.push_back(std::move(curve));
    }
    return out;
}

CompositionMatrix composition(const ClassProbabilities& semantic_probs,
                              const Partition& citation_partition) {
    CompositionMatrix out;
    out.num_semantic_classes = semantic_probs.num_classes;
    const int num_citation = partition_class_count(citation_partition);

    std::map<int, std::vector<double>> sums;
    std::map<int, std::size_t> counts;
    for (const auto& [id, cls] : citation_partition.assignment) {
        auto it = semantic_probs.vectors.find(id);
        if (it == semantic_probs.vectors.end()) continue;
        auto [sit, inserted] =
            sums.emplace(cls, std::vector<double>(out.num_semantic_classes, 0.0));
        for (std::size_t j = 0; j < out.num_semantic_classes; ++j) sit->second[j] += it->second[j];
        ++counts[cls];
    }
    for (int c = 0; c < num_citation; ++c) {
        auto it = sums.find(c);
        if (it == sums.end()) {
            out.omitted_classes.push_back(c);
            continue;
        }
        const double n = static_cast<double>(counts.at(c));
        std::vector<double> row(out.num_semantic_classes, 0.0);
        for (std::size_t j = 0; j < out.num_semantic_classes; ++j) row[j] = it->second[j] / n;
        out.rows.emplace(c, std::move(row));
        out.members.emplace(c, counts.at(c));
    }
    return out;
}

CorrelationMatrix correlation_matrix(const ClassProbabilities& semantic_probs,
                                     const ClassProbabilities& citation_one_hot) {
    // common references holding both vectors, in sorted id order
    std::vector<const std::vector<double>*> sem_rows, cit_rows;
    for (const auto& [id, sem_vec] : semantic_probs.vectors) {
        auto it = citation_one_hot.vectors.find(id);
        if (it == citation_one_hot.vectors.end()) continue;
        sem_rows.push_back(&sem_vec);
        cit_rows.push_back(&it->second);
    }
    const std::size_t n = sem_rows.size();
    if (n < 2)
        throw DataError("correlation: need at least 2 references with both classifications");

    CorrelationMatrix out;
    out.num_semantic_classes = semantic_probs.num_classes;
    out.num_citation_classes = citation_one_hot.num_classes;
    out.common_references = n;
    out.rho.assign(out.num_semantic_classes,
                   std::vector<std::optional<double>>(out.num_citation_classes));

    const double dn = static_cast<double>(n);
    std::vector<double> defined;
    for (std::size_t k = 0; k < out.num_semantic_classes; ++k) {
        for (std::size_t kp = 0; kp < out.num_citation_classes; ++kp) {
            double mean_x = 0.0, mean_y = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                mean_x += (*sem_rows[i])[k];
                mean_y += (*cit_rows[i])[kp];
            }
            mean_x /= dn;
            mean_y /= dn;
            double cov = 0.0, var_x = 0.0, var_y = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double dx = (*sem_rows[i])[k] - mean_x;
                const double dy = (*cit_rows[i])[kp] - mean_y;
                cov += dx * dy;
                var_x += dx * dx;
                var_y += dy * dy;
            }
            // unbiased estimators: the (n-1) factors cancel in the ratio
            if (var_x <= 0.0 || var_y <= 0.0) {
                ++out.undefined_entries;
                continue;
            }
            const double rho = cov / std::sqrt(var_x * var_y);
            out.rho[k][kp] = rho;
            defined.push_back(rho);
        }
    }
    if (!defined.empty()) {
        std::sort(defined.begin(), defined.end());
        out.summary.min = defined.front();
        out.summary.max = defined.back();
        double sum = 0.0;
        for (const double r : defined) sum += r;
        out.summary.mean = sum / static_cast<double>(defined.size());
        auto quantile = [&](double q) {
            const double pos = q * (static_cast<double>(defined.size()) - 1.0);
            const auto lo = static_cast<std::size_t>(pos);
            const std::size_t hi = std::min(lo + 1, defined.size() - 1);
            const double frac = pos - static_cast<double>(lo);
            return defined[lo] * (1.0 - frac) + defined[hi] * frac;
        };
        out.summary.decile_first = quantile(0.1);
        out.summary.decile_last = quantile(0.9);
    }
    return out;
}

} // namespace scholnet
