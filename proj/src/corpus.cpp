#include "scholnet/corpus.hpp"

#include "scholnet/errors.hpp"
#include "scholnet/text.hpp"
#include "scholnet/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>

namespace scholnet {

namespace {

constexpr const char* kSeedTag = "seed";

std::string link_key(const std::string& citing, const std::string& cited) {
    return citing + "\x1f" + cited;
}

void validate_reference(const Reference& ref) {
    if (ref.id.empty()) throw DataError("reference: empty id");
    if (text::trim(ref.title).empty())
        throw DataError("reference '" + ref.id + "': empty title");
    if (ref.year && (*ref.year < 1500 || *ref.year > 2100))
        throw DataError("reference '" + ref.id + "': year " + std::to_string(*ref.year) +
                        " outside [1500, 2100]");
}

} // namespace

void Corpus::add_reference(Reference ref) {
    validate_reference(ref);
    if (index_.count(ref.id))
        throw DataError("duplicate reference id '" + ref.id + "'");
    index_.emplace(ref.id, refs_.size());
    if (ref.source == kSeedTag) seed_ids_.insert(ref.id);
    refs_.push_back(std::move(ref));
}

LinkAdd Corpus::add_link(const std::string& citing, const std::string& cited) {
    if (citing == cited) return LinkAdd::SelfLink;
    if (!has_reference(citing) || !has_reference(cited)) return LinkAdd::MissingEndpoint;
    if (!link_keys_.insert(link_key(citing, cited)).second) return LinkAdd::Duplicate;
    links_.push_back({citing, cited});
    return LinkAdd::Added;
}

const Reference& Corpus::reference(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw DataError("unknown reference id '" + id + "'");
    return refs_[it->second];
}

Reference& Corpus::mutable_reference(const std::string& id) {
    auto it = index_.find(id);
    if (it == index_.end()) throw DataError("unknown reference id '" + id + "'");
    return refs_[it->second];
}

namespace {

Reference reference_from_json(const nlohmann::json& j, std::size_t line_no) {
    auto fail = [&](const std::string& what) -> DataError {
        return DataError("refs line " + std::to_string(line_no) + ": " + what);
    };
    if (!j.is_object()) throw fail("record is not an object");
    Reference ref;
    if (!j.contains("id") || !j["id"].is_string()) throw fail("missing string field 'id'");
    ref.id = j["id"].get<std::string>();
    if (!j.contains("title") || !j["title"].is_string())
        throw fail("missing string field 'title'");
    ref.title = j["title"].get<std::string>();
    if (j.contains("abstract") && !j["abstract"].is_null()) {
        if (!j["abstract"].is_string()) throw fail("'abstract' must be a string");
        ref.abstract = j["abstract"].get<std::string>();
    }
    if (j.contains("year") && !j["year"].is_null()) {
        if (!j["year"].is_number_integer()) throw fail("'year' must be an integer");
        ref.year = j["year"].get<int>();
    }
    if (j.contains("authors") && !j["authors"].is_null()) {
        if (!j["authors"].is_array()) throw fail("'authors' must be an array");
        for (const auto& a : j["authors"]) {
            if (!a.is_string()) throw fail("'authors' entries must be strings");
            ref.authors.push_back(a.get<std::string>());
        }
    }
    if (j.contains("language") && !j["language"].is_null()) {
        if (!j["language"].is_string()) throw fail("'language' must be a string");
        ref.language = j["language"].get<std::string>();
    }
    if (j.contains("source") && !j["source"].is_null()) {
        if (!j["source"].is_string()) throw fail("'source' must be a string");
        ref.source = j["source"].get<std::string>();
    }
    return ref;
}

nlohmann::ordered_json reference_to_json(const Reference& ref) {
    nlohmann::ordered_json j;
    j["id"] = ref.id;
    j["title"] = ref.title;
    if (ref.abstract) j["abstract"] = *ref.abstract;
    if (ref.year) j["year"] = *ref.year;
    if (!ref.authors.empty()) j["authors"] = ref.authors;
    if (ref.language) j["language"] = *ref.language;
    if (!ref.source.empty()) j["source"] = ref.source;
    return j;
}

} // namespace

IngestResult ingest(const std::filesystem::path& refs_path,
                    const std::filesystem::path& links_path) {
    IngestResult result;
    std::ifstream refs_in(refs_path);
    if (!refs_in) throw DataError("cannot open references file: " + refs_path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(refs_in, line)) {
        ++line_no;
        const std::string trimmed = text::trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(trimmed);
        } catch (const nlohmann::json::exception& e) {
            throw DataError("refs line " + std::to_string(line_no) + ": invalid JSON (" +
                            e.what() + ")");
        }
        Reference ref = reference_from_json(j, line_no);
        try {
            result.corpus.add_reference(std::move(ref));
        } catch (const DataError& e) {
            throw DataError("refs line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    result.diagnostics.references = result.corpus.size();

    std::ifstream links_in(links_path);
    if (!links_in) throw DataError("cannot open links file: " + links_path.string());
    line_no = 0;
    bool header_seen = false;
    while (std::getline(links_in, line)) {
        ++line_no;
        const std::string trimmed = text::trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (!header_seen) {
            header_seen = true; // citing_id,cited_id
            continue;
        }
        const auto fields = text::parse_csv_line(trimmed);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
            throw DataError("links line " + std::to_string(line_no) +
                            ": expected citing_id,cited_id");
        switch (result.corpus.add_link(fields[0], fields[1])) {
            case LinkAdd::Added: break;
            case LinkAdd::Duplicate: ++result.diagnostics.duplicate_links; break;
            case LinkAdd::SelfLink: ++result.diagnostics.self_links; break;
            case LinkAdd::MissingEndpoint: ++result.diagnostics.missing_endpoint_links; break;
        }
    }
    result.diagnostics.links = result.corpus.links().size();
    return result;
}

Corpus dedup_by_title(const Corpus& corpus, DedupDiagnostics* diag) {
    // Group ids by normalized title; the smallest id in each group survives.
    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& ref : corpus.references())
        groups[text::normalize_title(ref.title)].push_back(ref.id);

    std::unordered_map<std::string, std::string> surviving; // any id -> survivor id
    for (auto& [title, ids] : groups) {
        std::sort(ids.begin(), ids.end());
        for (const auto& id : ids) surviving[id] = ids.front();
    }

    Corpus out;
    std::size_t merged = 0;
    for (const auto& ref : corpus.references()) {
        const std::string& survivor = surviving.at(ref.id);
        if (ref.id != survivor) {
            ++merged;
            continue;
        }
        Reference merged_ref = ref;
        const auto& group = groups.at(text::normalize_title(ref.title));
        for (const auto& other_id : group) {
            if (other_id == ref.id) continue;
            const Reference& other = corpus.reference(other_id);
            const std::size_t have = merged_ref.abstract ? merged_ref.abstract->size() : 0;
            const std::size_t theirs = other.abstract ? other.abstract->size() : 0;
            if (theirs > have) merged_ref.abstract = other.abstract;
            if (!merged_ref.year && other.year) merged_ref.year = other.year;
            if (merged_ref.authors.empty() && !other.authors.empty())
                merged_ref.authors = other.authors;
            if (!merged_ref.language && other.language) merged_ref.language = other.language;
            if (other.source == "seed") merged_ref.source = "seed";
        }
        out.add_reference(std::move(merged_ref));
    }

    std::size_t dropped = 0;
    for (const auto& link : corpus.links()) {
        const auto status =
            out.add_link(surviving.at(link.citing_id), surviving.at(link.cited_id));
        if (status != LinkAdd::Added) ++dropped;
    }
    if (diag) {
        diag->merged_references = merged;
        diag->dropped_links = dropped;
    }
    return out;
}

CorpusStats corpus_stats(const Corpus& corpus) {
    CorpusStats stats;
    stats.references = corpus.size();
    stats.links = corpus.links().size();
    stats.seed_references = corpus.seed_ids().size();
    for (const auto& ref : corpus.references())
        if (ref.has_abstract()) ++stats.with_abstract;
    stats.abstract_coverage =
        stats.references == 0
            ? 0.0
            : static_cast<double>(stats.with_abstract) / static_cast<double>(stats.references);
    return stats;
}

void save_store(const Corpus& corpus, const std::filesystem::path& dir, const FileMeta& meta) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream refs(dir / "refs.jsonl", std::ios::binary);
        if (!refs) throw DataError("cannot write " + (dir / "refs.jsonl").string());
        refs << meta.as_hash_comments();
        for (const auto& ref : corpus.references())
            refs << reference_to_json(ref).dump() << "\n";
    }
    {
        std::ofstream links(dir / "links.csv", std::ios::binary);
        if (!links) throw DataError("cannot write " + (dir / "links.csv").string());
        links << meta.as_hash_comments();
        links << "citing_id,cited_id\n";
        for (const auto& link : corpus.links())
            links << text::csv_row({link.citing_id, link.cited_id}) << "\n";
    }
    {
        const CorpusStats stats = corpus_stats(corpus);
        nlohmann::ordered_json j;
        j["schema_version"] = kStoreSchemaVersion;
        j["references"] = stats.references;
        j["links"] = stats.links;
        j["seed_references"] = stats.seed_references;
        j["with_abstract"] = stats.with_abstract;
        nlohmann::ordered_json m;
        m["tool"] = kToolName;
        m["version"] = kToolVersion;
        for (const auto& l : meta.lines()) m["header"].push_back(l);
        j["_meta"] = m;
        std::ofstream mf(dir / "meta.json", std::ios::binary);
        if (!mf) throw DataError("cannot write " + (dir / "meta.json").string());
        mf << j.dump(2) << "\n";
    }
}

IngestResult load_store(const std::filesystem::path& dir) {
    const auto meta_path = dir / "meta.json";
    if (std::filesystem::exists(meta_path)) {
        std::ifstream mf(meta_path);
        nlohmann::json j;
        try {
            mf >> j;
        } catch (const nlohmann::json::exception& e) {
            throw DataError("invalid meta.json in " + dir.string() + ": " + e.what());
        }
        if (j.contains("schema_version") && j["schema_version"].get<int>() != kStoreSchemaVersion)
            throw DataError("unsupported store schema version in " + dir.string());
    }
    return ingest(dir / "refs.jsonl", dir / "links.csv");
}

} // namespace scholnet
