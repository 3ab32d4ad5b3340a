#pragma once

#include "scholnet/meta.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace scholnet {

// One citable work: journal paper, book, chapter, communication... the
// atomic unit everything downstream operates on.
struct Reference {
    std::string id;
    std::string title;
    std::optional<std::string> abstract;
    std::optional<int> year; // calendar year, [1500, 2100] when present
    std::vector<std::string> authors;
    std::optional<std::string> language; // 2-letter code
    std::string source; // provenance tag; "seed" marks the origin corpus

    bool has_abstract() const { return abstract && !abstract->empty(); }
};

struct CitationLink {
    std::string citing_id;
    std::string cited_id;
};

enum class LinkAdd { Added, Duplicate, SelfLink, MissingEndpoint };

// Immutable once ingestion completes; analysis stages only read it.
// Invariants: unique ids, no duplicate (citing, cited) pairs, both link
// endpoints present, seed_ids derived from references tagged source="seed".
class Corpus {
public:
    // Throws DataError on duplicate id or invalid fields.
    void add_reference(Reference ref);

    LinkAdd add_link(const std::string& citing, const std::string& cited);

    bool has_reference(const std::string& id) const { return index_.count(id) > 0; }
    const Reference& reference(const std::string& id) const;
    Reference& mutable_reference(const std::string& id);

    const std::vector<Reference>& references() const { return refs_; }
    const std::vector<CitationLink>& links() const { return links_; }
    const std::set<std::string>& seed_ids() const { return seed_ids_; }

    std::size_t size() const { return refs_.size(); }
    bool empty() const { return refs_.empty(); }

private:
    std::vector<Reference> refs_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<CitationLink> links_;
    std::unordered_set<std::string> link_keys_;
    std::set<std::string> seed_ids_;
};

struct IngestDiagnostics {
    std::size_t references = 0;
    std::size_t links = 0;
    std::size_t duplicate_links = 0;
    std::size_t self_links = 0;
    std::size_t missing_endpoint_links = 0;
};

struct IngestResult {
    Corpus corpus;
    IngestDiagnostics diagnostics;
};

// References file: UTF-8 JSON lines with keys id, title, abstract, year,
// authors, language, source (id and title mandatory); '#' lines skipped.
// Links file: CSV with header citing_id,cited_id.
// Malformed records and duplicate ids raise DataError naming the line / id.
IngestResult ingest(const std::filesystem::path& refs_path,
                    const std::filesystem::path& links_path);

struct DedupDiagnostics {
    std::size_t merged_references = 0;
    std::size_t dropped_links = 0; // duplicates + self-links created by merging
};

// Merges references whose normalized titles coincide: smallest lexicographic
// id survives, longest abstract wins, links are re-targeted. Idempotent.
Corpus dedup_by_title(const Corpus& corpus, DedupDiagnostics* diag = nullptr);

struct CorpusStats {
    std::size_t references = 0;
    std::size_t links = 0;
    std::size_t with_abstract = 0;
    std::size_t seed_references = 0;
    double abstract_coverage = 0.0; // 0 on an empty corpus
};

CorpusStats corpus_stats(const Corpus& corpus);

// --- store ---------------------------------------------------------------
// Directory layout: refs.jsonl, links.csv, meta.json (schema version 1).
// Line-delimited and diff-friendly; the id index is rebuilt on load.

void save_store(const Corpus& corpus, const std::filesystem::path& dir,
                const FileMeta& meta = {});

IngestResult load_store(const std::filesystem::path& dir);

} // namespace scholnet
