#include "scholnet/corpus.hpp"
#include "scholnet/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace scholnet;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "scholnet_tests" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    os << content;
}

Reference make_ref(const std::string& id, const std::string& title) {
    Reference ref;
    ref.id = id;
    ref.title = title;
    return ref;
}

} // namespace

TEST_SUITE("corpus") {

TEST_CASE("ingest collapses duplicates, rejects self-links, drops dangling links") {
    const auto dir = temp_dir("ingest_basic");
    write_file(dir / "refs.jsonl",
               "{\"id\":\"a\",\"title\":\"A\"}\n"
               "{\"id\":\"b\",\"title\":\"B\"}\n"
               "{\"id\":\"c\",\"title\":\"C\"}\n");
    write_file(dir / "links.csv",
               "citing_id,cited_id\na,b\na,b\nb,c\na,a\na,ghost\n");
    const auto result = ingest(dir / "refs.jsonl", dir / "links.csv");
    CHECK(result.corpus.size() == 3);
    CHECK(result.corpus.links().size() == 2);
    CHECK(result.diagnostics.duplicate_links == 1);
    CHECK(result.diagnostics.self_links == 1);
    CHECK(result.diagnostics.missing_endpoint_links == 1);
}

TEST_CASE("malformed line and duplicate id errors carry context") {
    const auto dir = temp_dir("ingest_errors");
    write_file(dir / "refs.jsonl", "{\"id\":\"a\",\"title\":\"A\"}\nnot json\n");
    write_file(dir / "links.csv", "citing_id,cited_id\n");
    CHECK_THROWS_WITH_AS(ingest(dir / "refs.jsonl", dir / "links.csv"),
                         doctest::Contains("line 2"), DataError);

    write_file(dir / "refs.jsonl",
               "{\"id\":\"a\",\"title\":\"A\"}\n{\"id\":\"a\",\"title\":\"A2\"}\n");
    CHECK_THROWS_WITH_AS(ingest(dir / "refs.jsonl", dir / "links.csv"),
                         doctest::Contains("'a'"), DataError);

    write_file(dir / "refs.jsonl", "{\"id\":\"a\",\"title\":\"A\",\"year\":1200}\n");
    CHECK_THROWS_WITH_AS(ingest(dir / "refs.jsonl", dir / "links.csv"),
                         doctest::Contains("year"), DataError);
}

TEST_CASE("malformed links line names its position") {
    const auto dir = temp_dir("ingest_badlink");
    write_file(dir / "refs.jsonl", "{\"id\":\"a\",\"title\":\"A\"}\n");
    write_file(dir / "links.csv", "citing_id,cited_id\na\n");
    CHECK_THROWS_WITH_AS(ingest(dir / "refs.jsonl", dir / "links.csv"),
                         doctest::Contains("line 2"), DataError);
}

TEST_CASE("seed ids come from source tags") {
    Corpus corpus;
    Reference seed = make_ref("s1", "Seed");
    seed.source = "seed";
    corpus.add_reference(seed);
    corpus.add_reference(make_ref("o1", "Other"));
    CHECK(corpus.seed_ids() == std::set<std::string>{"s1"});
}

TEST_CASE("dedup merges normalized titles and keeps the longest abstract") {
    Corpus corpus;
    Reference a = make_ref("b2", "Urban Growth.");
    a.abstract = "short";
    Reference b = make_ref("a1", "urban growth");
    b.abstract = "a considerably longer abstract";
    Reference c = make_ref("c3", "Something Else");
    corpus.add_reference(a);
    corpus.add_reference(b);
    corpus.add_reference(c);
    corpus.add_link("c3", "b2");

    DedupDiagnostics diag;
    const Corpus merged = dedup_by_title(corpus, &diag);
    CHECK(merged.size() == 2);
    CHECK(diag.merged_references == 1);
    CHECK(merged.has_reference("a1")); // smallest id survives
    CHECK_FALSE(merged.has_reference("b2"));
    CHECK(*merged.reference("a1").abstract == "a considerably longer abstract");
    REQUIRE(merged.links().size() == 1);
    CHECK(merged.links()[0].cited_id == "a1"); // link re-targeted
}

TEST_CASE("dedup keeps the only abstract available") {
    Corpus corpus;
    Reference a = make_ref("x", "Title One");
    Reference b = make_ref("y", "title one");
    b.abstract = "the only abstract";
    corpus.add_reference(a);
    corpus.add_reference(b);
    const Corpus merged = dedup_by_title(corpus);
    CHECK(*merged.reference("x").abstract == "the only abstract");
}

TEST_CASE("dedup is idempotent and never increases counts") {
    Corpus corpus;
    corpus.add_reference(make_ref("a", "One Title"));
    corpus.add_reference(make_ref("b", "one title!"));
    corpus.add_reference(make_ref("c", "Another"));
    corpus.add_link("c", "a");
    corpus.add_link("c", "b");
    const Corpus once = dedup_by_title(corpus);
    const Corpus twice = dedup_by_title(once);
    CHECK(once.size() == twice.size());
    CHECK(once.links().size() == twice.links().size());
    CHECK(once.size() <= corpus.size());
    CHECK(once.links().size() <= corpus.links().size());

    // no duplicates at all: unchanged
    Corpus clean;
    clean.add_reference(make_ref("a", "Alpha"));
    clean.add_reference(make_ref("b", "Beta"));
    CHECK(dedup_by_title(clean).size() == 2);
}

TEST_CASE("corpus stats report coverage") {
    Corpus corpus;
    for (int i = 0; i < 4; ++i) {
        Reference ref = make_ref("r" + std::to_string(i), "T" + std::to_string(i));
        if (i < 2) ref.abstract = "text";
        corpus.add_reference(ref);
    }
    const CorpusStats stats = corpus_stats(corpus);
    CHECK(stats.references == 4);
    CHECK(stats.abstract_coverage == doctest::Approx(0.5));

    CHECK(corpus_stats(Corpus{}).references == 0);
    CHECK(corpus_stats(Corpus{}).abstract_coverage == 0.0);
}

TEST_CASE("store round-trip is idempotent on references and links") {
    Corpus corpus;
    Reference a = make_ref("a", "Alpha");
    a.abstract = "text with, comma and \"quotes\"";
    a.year = 2005;
    a.authors = {"First Author", "Second Author"};
    a.language = "en";
    a.source = "seed";
    corpus.add_reference(a);
    corpus.add_reference(make_ref("b", "Beta"));
    corpus.add_link("b", "a");

    const auto dir = temp_dir("store_rt");
    save_store(corpus, dir, FileMeta{"test", "", 7});
    const auto loaded = load_store(dir);
    CHECK(loaded.corpus.size() == 2);
    CHECK(loaded.corpus.links().size() == 1);
    CHECK(loaded.corpus.seed_ids() == std::set<std::string>{"a"});
    const Reference& back = loaded.corpus.reference("a");
    CHECK(back.title == "Alpha");
    CHECK(*back.abstract == *a.abstract);
    CHECK(*back.year == 2005);
    CHECK(back.authors == a.authors);

    // save(load(save(x))) produces identical bytes
    const auto dir2 = temp_dir("store_rt2");
    save_store(loaded.corpus, dir2, FileMeta{"test", "", 7});
    for (const auto* file : {"refs.jsonl", "links.csv", "meta.json"}) {
        std::ifstream f1(dir / file), f2(dir2 / file);
        const std::string s1((std::istreambuf_iterator<char>(f1)), {});
        const std::string s2((std::istreambuf_iterator<char>(f2)), {});
        CHECK(s1 == s2);
    }
}

} // TEST_SUITE
