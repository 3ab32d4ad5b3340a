#pragma once

#include "scholnet/corpus.hpp"
#include "scholnet/meta.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace scholnet {

enum class Lang { En, Fr, Unknown };
enum class Tag { Noun, Adj, Ger, Other };

std::string to_string(Lang lang);
std::string to_string(Tag tag);

// Embedded stop-word list (~150 words per language); also shipped under
// data/stopwords/ with a checksum test keeping both in sync.
const std::vector<std::string>& stopwords(Lang lang);
std::uint64_t stopwords_checksum(Lang lang);

// Stop-word voting: fraction of tokens found in each language's list,
// argmax wins if it reaches 0.05, ties go to English. Documents detected as
// Unknown are discarded by the keyword pipeline.
Lang detect_language(const std::string& text);

struct TaggedToken {
    std::string surface; // lowercased token
    std::string stem;    // nonempty lowercase
    Tag tag = Tag::Other;
};

// Line-oriented subprocess protocol for plugging an external POS tagger
// (e.g. a TreeTagger-class tool for French): one token per line on stdin, a
// blank line terminates the document; the tool answers `token<TAB>tag` per
// line. The first output field may be a lemma and is used as the stem; tags
// are mapped onto {NOUN, ADJ, GER, OTHER} (NOM/NN* -> NOUN, JJ* -> ADJ,
// VBG -> GER).
class ExternalTagger {
public:
    explicit ExternalTagger(std::string command);
    std::vector<TaggedToken> tag(const std::vector<std::string>& tokens) const;

private:
    std::string command_;
};

// English: Porter stems plus lexicon tags with suffix fallbacks (-ing -> GER
// unless the lexicon says NOUN; -ous/-al/-ive/-ic -> ADJ; default NOUN).
// French: requires the external tagger; without one, tokens pass through
// tagged OTHER and yield no candidates.
std::vector<TaggedToken> tag_and_stem(const std::string& text, Lang lang,
                                      const ExternalTagger* tagger = nullptr);

struct Candidate {
    std::vector<std::string> stems;
    std::map<std::string, std::uint32_t> surface_counts; // window occurrences
};

// Every contiguous window of 1..4 tokens whose tags all lie in the allowed
// set (en: NOUN/GER/ADJ, fr: NOUN/ADJ), distinct stem n-grams per document.
std::vector<Candidate> extract_candidates(const std::vector<TaggedToken>& tokens, Lang lang);

struct Keyword {
    std::vector<std::string> stems; // 1..4 stems
    std::string surface;            // most frequent original form
    std::string language;           // "en" or "fr"
    std::uint32_t doc_freq = 0;     // documents containing the n-gram
    double score = 0.0;

    std::string stem_key() const; // stems joined by spaces
};

struct KeywordIndex {
    std::vector<Keyword> keywords;
    // Sorted document indices (into doc_ids) per keyword, parallel to
    // keywords; |postings[k]| == keywords[k].doc_freq.
    std::vector<std::vector<std::uint32_t>> postings;
    // Processed documents in corpus order; its size is the D of the score
    // formula (documents with a detected language, even candidate-free ones).
    std::vector<std::string> doc_ids;

    std::size_t num_documents() const { return doc_ids.size(); }
};

struct KeywordParams {
    std::uint32_t min_candidate_freq = 3;
    std::string tagger_cmd; // external tagger for French; empty = none
    int threads = 1;
};

// Candidate scoring: score(t) = log(1 + f_t) * sum_{t' != t} of
// (c(t,t')/f_t - f_{t'}/D)^2 over the surviving candidates, all counts
// document-binary (score_v1). Keywords come back in canonical
// (language, stems) order, unsorted by score.
KeywordIndex score_keywords(const Corpus& corpus, const KeywordParams& params);

// Top kw keywords by (score desc, doc_freq desc, stems lexicographic) -- a
// deterministic total order.
KeywordIndex select_top(const KeywordIndex& index, std::uint32_t kw);

// Node id used for this keyword in the semantic graph: the stem key, with a
// "fr:" prefix for French keywords to keep ids unique across languages.
std::string keyword_node_id(const Keyword& kw);

// CSV `stems,surface,lang,doc_freq,score` plus a postings file
// `stems<TAB>doc_id[,doc_id...]` with rows aligned to the CSV.
void save_keyword_index(const KeywordIndex& index, const std::filesystem::path& csv_path,
                        const std::filesystem::path& postings_path, const FileMeta& meta = {});

KeywordIndex load_keyword_index(const std::filesystem::path& csv_path,
                                const std::filesystem::path& postings_path);

} // namespace scholnet
