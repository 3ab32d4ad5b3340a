#include "scholnet/keywords.hpp"

#include "scholnet/errors.hpp"
#include "scholnet/porter.hpp"
#include "scholnet/text.hpp"

#include <csignal>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace scholnet {

namespace detail {
const std::unordered_map<std::string, Tag>& tag_lexicon();
}

namespace {

const std::unordered_set<std::string>& stopword_set(Lang lang) {
    static const std::unordered_set<std::string> en(stopwords(Lang::En).begin(),
                                                    stopwords(Lang::En).end());
    static const std::unordered_set<std::string> fr(stopwords(Lang::Fr).begin(),
                                                    stopwords(Lang::Fr).end());
    return lang == Lang::En ? en : fr;
}

Tag map_external_tag(const std::string& tag) {
    if (tag.empty()) return Tag::Other;
    if (text::starts_with(tag, "NOM") || text::starts_with(tag, "NOUN") ||
        text::starts_with(tag, "NN") || tag == "N")
        return Tag::Noun;
    if (text::starts_with(tag, "ADJ") || text::starts_with(tag, "JJ") || tag == "A")
        return Tag::Adj;
    if (tag == "GER" || tag == "VBG") return Tag::Ger;
    return Tag::Other;
}

bool ends_with(const std::string& s, const char* suffix) {
    const std::size_t len = std::strlen(suffix);
    return s.size() >= len && s.compare(s.size() - len, len, suffix) == 0;
}

Tag tag_english(const std::string& token) {
    const auto& lexicon = detail::tag_lexicon();
    auto it = lexicon.find(token);
    if (it != lexicon.end()) return it->second;
    if (ends_with(token, "ing")) return Tag::Ger;
    if (ends_with(token, "ous") || ends_with(token, "al") || ends_with(token, "ive") ||
        ends_with(token, "ic"))
        return Tag::Adj;
    return Tag::Noun;
}

} // namespace

Lang detect_language(const std::string& text) {
    const auto tokens = text::tokenize(text);
    if (tokens.empty()) return Lang::Unknown;
    std::size_t hits_en = 0, hits_fr = 0;
    const auto& en = stopword_set(Lang::En);
    const auto& fr = stopword_set(Lang::Fr);
    for (const auto& token : tokens) {
        if (en.count(token)) ++hits_en;
        if (fr.count(token)) ++hits_fr;
    }
    const double total = static_cast<double>(tokens.size());
    const double score_en = static_cast<double>(hits_en) / total;
    const double score_fr = static_cast<double>(hits_fr) / total;
    if (std::max(score_en, score_fr) < 0.05) return Lang::Unknown;
    return score_fr > score_en ? Lang::Fr : Lang::En;
}

ExternalTagger::ExternalTagger(std::string command) : command_(std::move(command)) {
    if (command_.empty()) throw DataError("external tagger: empty command");
}

std::vector<TaggedToken> ExternalTagger::tag(const std::vector<std::string>& tokens) const {
    // a tagger that exits early must surface as an error, not kill us via
    // SIGPIPE on the write below
    static const bool sigpipe_ignored = [] {
        signal(SIGPIPE, SIG_IGN);
        return true;
    }();
    (void)sigpipe_ignored;

    int to_child[2], from_child[2];
    if (pipe(to_child) != 0) throw DataError("external tagger: pipe failed");
    if (pipe(from_child) != 0) {
        close(to_child[0]);
        close(to_child[1]);
        throw DataError("external tagger: pipe failed");
    }
    const pid_t pid = fork();
    if (pid < 0) throw DataError("external tagger: fork failed");
    if (pid == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        close(to_child[0]);
        close(to_child[1]);
        close(from_child[0]);
        close(from_child[1]);
        execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);

    std::string input;
    for (const auto& t : tokens) {
        input += t;
        input.push_back('\n');
    }
    input.push_back('\n'); // document terminator
    std::size_t written = 0;
    while (written < input.size()) {
        const ssize_t n = write(to_child[1], input.data() + written, input.size() - written);
        if (n <= 0) break;
        written += static_cast<std::size_t>(n);
    }
    close(to_child[1]);

    std::string output;
    char buf[4096];
    for (;;) {
        const ssize_t n = read(from_child[0], buf, sizeof(buf));
        if (n <= 0) break;
        output.append(buf, static_cast<std::size_t>(n));
    }
    close(from_child[0]);
    int status = 0;
    waitpid(pid, &status, 0);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw DataError("external tagger: command failed: " + command_);

    std::vector<TaggedToken> result;
    std::istringstream lines(output);
    std::string line;
    std::size_t i = 0;
    while (std::getline(lines, line) && i < tokens.size()) {
        if (line.empty()) break;
        const auto tab = line.find('\t');
        TaggedToken tt;
        tt.surface = tokens[i];
        if (tab == std::string::npos) {
            tt.stem = text::to_lower(line);
            tt.tag = Tag::Other;
        } else {
            tt.stem = text::to_lower(line.substr(0, tab));
            tt.tag = map_external_tag(line.substr(tab + 1));
        }
        if (tt.stem.empty()) tt.stem = tokens[i];
        result.push_back(std::move(tt));
        ++i;
    }
    if (result.size() != tokens.size())
        throw DataError("external tagger: expected " + std::to_string(tokens.size()) +
                        " tagged lines, got " + std::to_string(result.size()));
    return result;
}

std::vector<TaggedToken> tag_and_stem(const std::string& text_in, Lang lang,
                                      const ExternalTagger* tagger) {
    if (lang != Lang::En && lang != Lang::Fr)
        throw DataError("tag_and_stem: unsupported language");
    const auto tokens = text::tokenize(text_in);
    if (lang == Lang::Fr) {
        if (tagger) return tagger->tag(tokens);
        // no French tagger plugged in: pass through untaggable
        std::vector<TaggedToken> out;
        out.reserve(tokens.size());
        for (const auto& t : tokens) out.push_back({t, t, Tag::Other});
        return out;
    }
    std::vector<TaggedToken> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        TaggedToken tt;
        tt.surface = t;
        tt.stem = porter_stem(t);
        tt.tag = tag_english(t);
        out.push_back(std::move(tt));
    }
    return out;
}

std::vector<Candidate> extract_candidates(const std::vector<TaggedToken>& tokens, Lang lang) {
    auto allowed = [lang](Tag tag) {
        if (lang == Lang::Fr) return tag == Tag::Noun || tag == Tag::Adj;
        return tag == Tag::Noun || tag == Tag::Adj || tag == Tag::Ger;
    };
    std::map<std::vector<std::string>, std::map<std::string, std::uint32_t>> found;
    const std::size_t n = tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!allowed(tokens[i].tag)) continue;
        std::vector<std::string> stems;
        std::string surface;
        for (std::size_t len = 1; len <= 4 && i + len <= n; ++len) {
            const auto& tok = tokens[i + len - 1];
            if (!allowed(tok.tag)) break;
            stems.push_back(tok.stem);
            if (len > 1) surface.push_back(' ');
            surface += tok.surface;
            ++found[stems][surface];
        }
    }
    std::vector<Candidate> out;
    out.reserve(found.size());
    for (auto& [stems, surfaces] : found) out.push_back({stems, std::move(surfaces)});
    return out;
}

std::string Keyword::stem_key() const { return text::join(stems, ' '); }

std::string keyword_node_id(const Keyword& kw) {
    return kw.language == "fr" ? "fr:" + kw.stem_key() : kw.stem_key();
}

namespace {

struct DocCandidates {
    std::string doc_id;
    Lang lang = Lang::Unknown;
    std::vector<Candidate> candidates;
};

} // namespace

KeywordIndex score_keywords(const Corpus& corpus, const KeywordParams& params) {
    std::vector<const Reference*> docs;
    for (const auto& ref : corpus.references())
        if (ref.has_abstract()) docs.push_back(&ref);
    if (docs.size() < 2)
        throw DataError("keyword scoring: need at least 2 documents with abstracts");

    std::unique_ptr<ExternalTagger> tagger;
    if (!params.tagger_cmd.empty()) tagger = std::make_unique<ExternalTagger>(params.tagger_cmd);

    // per-document extraction, parallel over slots
    std::vector<DocCandidates> per_doc(docs.size());
    {
        const int workers = std::max(1, params.threads);
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&] {
            try {
                for (;;) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= docs.size()) return;
                    const Reference& ref = *docs[i];
                    DocCandidates dc;
                    dc.doc_id = ref.id;
                    dc.lang = detect_language(*ref.abstract);
                    if (dc.lang != Lang::Unknown) {
                        const auto tokens = tag_and_stem(*ref.abstract, dc.lang, tagger.get());
                        dc.candidates = extract_candidates(tokens, dc.lang);
                    }
                    per_doc[i] = std::move(dc);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        if (error) std::rethrow_exception(error);
    }

    // sequential merge in corpus order keeps everything deterministic
    KeywordIndex index;
    struct Accum {
        std::vector<std::uint32_t> doc_indices;
        std::map<std::string, std::uint32_t> surface_counts;
    };
    std::map<std::pair<std::string, std::string>, Accum> accum; // (lang, stem key)
    for (const auto& dc : per_doc) {
        if (dc.lang == Lang::Unknown) continue; // discarded documents
        const auto doc_index = static_cast<std::uint32_t>(index.doc_ids.size());
        index.doc_ids.push_back(dc.doc_id);
        const std::string lang_code = to_string(dc.lang);
        for (const auto& cand : dc.candidates) {
            auto& acc = accum[{lang_code, text::join(cand.stems, ' ')}];
            acc.doc_indices.push_back(doc_index);
            for (const auto& [surface, count] : cand.surface_counts)
                acc.surface_counts[surface] += count;
        }
    }

    const std::size_t d_docs = index.doc_ids.size();
    for (auto& [key, acc] : accum) {
        const std::uint32_t freq = static_cast<std::uint32_t>(acc.doc_indices.size());
        if (freq < params.min_candidate_freq) continue;
        Keyword kw;
        kw.language = key.first;
        {
            std::istringstream ss(key.second);
            std::string stem;
            while (ss >> stem) kw.stems.push_back(stem);
        }
        kw.doc_freq = freq;
        std::uint32_t best = 0;
        for (const auto& [surface, count] : acc.surface_counts) {
            if (count > best) {
                best = count;
                kw.surface = surface;
            }
        }
        index.keywords.push_back(std::move(kw));
        index.postings.push_back(std::move(acc.doc_indices));
    }
    if (index.keywords.empty())
        throw DataError("keyword scoring: no candidates survive min_candidate_freq=" +
                        std::to_string(params.min_candidate_freq));

    // co-occurrence neighbor lists over the surviving candidates
    const std::size_t k = index.keywords.size();
    std::vector<std::vector<std::uint32_t>> by_doc(d_docs);
    for (std::size_t i = 0; i < k; ++i)
        for (const std::uint32_t doc : index.postings[i])
            by_doc[doc].push_back(static_cast<std::uint32_t>(i));
    std::unordered_map<std::uint64_t, std::uint32_t> pair_counts;
    for (const auto& present : by_doc) {
        for (std::size_t a = 0; a < present.size(); ++a)
            for (std::size_t b = a + 1; b < present.size(); ++b) {
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(present[a]) << 32) | present[b];
                ++pair_counts[key];
            }
    }
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> neighbors(k);
    for (const auto& [key, count] : pair_counts) {
        const auto i = static_cast<std::uint32_t>(key >> 32);
        const auto j = static_cast<std::uint32_t>(key & 0xffffffffu);
        neighbors[i].push_back({j, count});
        neighbors[j].push_back({i, count});
    }
    for (auto& list : neighbors) std::sort(list.begin(), list.end());

    // score(t) = log(1 + f_t) * [ sum over co-occurring t' of
    //   (c/f_t - f_{t'}/D)^2 + sum over non-co-occurring t' of (f_{t'}/D)^2 ]
    // The second sum is carried exactly in integer arithmetic so a candidate
    // whose profile matches the background scores exactly 0.
    const double d = static_cast<double>(d_docs);
    std::uint64_t sum_freq_sq = 0;
    for (const auto& kw : index.keywords)
        sum_freq_sq += static_cast<std::uint64_t>(kw.doc_freq) * kw.doc_freq;
    {
        const int workers = std::max(1, params.threads);
        std::atomic<std::size_t> cursor{0};
        auto work = [&] {
            for (;;) {
                const std::size_t t = cursor.fetch_add(1);
                if (t >= k) return;
                const double ft = static_cast<double>(index.keywords[t].doc_freq);
                double dev = 0.0;
                std::uint64_t neighbor_freq_sq = 0;
                for (const auto& [j, c] : neighbors[t]) {
                    const double fj = static_cast<double>(index.keywords[j].doc_freq);
                    const double delta = static_cast<double>(c) / ft - fj / d;
                    dev += delta * delta;
                    neighbor_freq_sq += static_cast<std::uint64_t>(index.keywords[j].doc_freq) *
                                        index.keywords[j].doc_freq;
                }
                const std::uint64_t self_sq =
                    static_cast<std::uint64_t>(index.keywords[t].doc_freq) *
                    index.keywords[t].doc_freq;
                const std::uint64_t rest = sum_freq_sq - self_sq - neighbor_freq_sq;
                dev += static_cast<double>(rest) / (d * d);
                index.keywords[t].score = std::log1p(ft) * dev;
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
    }
    return index;
}

KeywordIndex select_top(const KeywordIndex& index, std::uint32_t kw) {
    std::vector<std::size_t> order(index.keywords.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Keyword& ka = index.keywords[a];
        const Keyword& kb = index.keywords[b];
        if (ka.score != kb.score) return ka.score > kb.score;
        if (ka.doc_freq != kb.doc_freq) return ka.doc_freq > kb.doc_freq;
        if (ka.stems != kb.stems) return ka.stems < kb.stems;
        return ka.language < kb.language;
    });
    if (order.size() > kw) order.resize(kw);
    KeywordIndex out;
    out.doc_ids = index.doc_ids;
    out.keywords.reserve(order.size());
    out.postings.reserve(order.size());
    for (const std::size_t i : order) {
        out.keywords.push_back(index.keywords[i]);
        out.postings.push_back(index.postings[i]);
    }
    return out;
}

void save_keyword_index(const KeywordIndex& index, const std::filesystem::path& csv_path,
                        const std::filesystem::path& postings_path, const FileMeta& meta) {
    {
        std::ofstream os(csv_path, std::ios::binary);
        if (!os) throw DataError("cannot write " + csv_path.string());
        os << meta.as_hash_comments();
        os << "stems,surface,lang,doc_freq,score\n";
        for (const auto& kw : index.keywords) {
            os << text::csv_row({kw.stem_key(), kw.surface, kw.language,
                                 std::to_string(kw.doc_freq), text::format_double(kw.score)})
               << "\n";
        }
    }
    {
        std::ofstream os(postings_path, std::ios::binary);
        if (!os) throw DataError("cannot write " + postings_path.string());
        os << meta.as_hash_comments();
        for (std::size_t i = 0; i < index.keywords.size(); ++i) {
            os << index.keywords[i].stem_key() << '\t';
            const auto& docs = index.postings[i];
            for (std::size_t j = 0; j < docs.size(); ++j) {
                if (j) os << ',';
                os << text::csv_escape(index.doc_ids[docs[j]]);
            }
            os << '\n';
        }
    }
}

KeywordIndex load_keyword_index(const std::filesystem::path& csv_path,
                                const std::filesystem::path& postings_path) {
    KeywordIndex index;
    std::unordered_map<std::string, std::uint32_t> doc_index;
    {
        std::ifstream in(csv_path);
        if (!in) throw DataError("cannot open " + csv_path.string());
        std::string line;
        bool header_seen = false;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            if (!header_seen) {
                header_seen = true;
                continue;
            }
            const auto fields = text::parse_csv_line(line);
            if (fields.size() != 5)
                throw DataError("keywords csv line " + std::to_string(line_no) +
                                ": expected 5 fields");
            Keyword kw;
            {
                std::istringstream ss(fields[0]);
                std::string stem;
                while (ss >> stem) kw.stems.push_back(stem);
            }
            if (kw.stems.empty() || kw.stems.size() > 4)
                throw DataError("keywords csv line " + std::to_string(line_no) +
                                ": stems must hold 1..4 stems");
            kw.surface = fields[1];
            kw.language = fields[2];
            kw.doc_freq = static_cast<std::uint32_t>(std::stoul(fields[3]));
            kw.score = std::strtod(fields[4].c_str(), nullptr);
            index.keywords.push_back(std::move(kw));
        }
    }
    {
        std::ifstream in(postings_path);
        if (!in) throw DataError("cannot open " + postings_path.string());
        std::string line;
        std::size_t row = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw DataError("postings: missing tab separator in " + postings_path.string());
            if (row >= index.keywords.size())
                throw DataError("postings: more rows than keywords");
            if (line.substr(0, tab) != index.keywords[row].stem_key())
                throw DataError("postings row " + std::to_string(row + 1) +
                                " does not match keywords csv order");
            std::vector<std::uint32_t> docs;
            for (const auto& id : text::parse_csv_line(line.substr(tab + 1))) {
                if (id.empty()) continue;
                auto [it, inserted] =
                    doc_index.emplace(id, static_cast<std::uint32_t>(index.doc_ids.size()));
                if (inserted) index.doc_ids.push_back(id);
                docs.push_back(it->second);
            }
            if (docs.size() != index.keywords[row].doc_freq)
                throw DataError("postings row " + std::to_string(row + 1) +
                                ": document count does not match doc_freq");
            index.postings.push_back(std::move(docs));
            ++row;
        }
        if (row != index.keywords.size())
            throw DataError("postings: fewer rows than keywords");
    }
    return index;
}

} // namespace scholnet
