#include "scholnet/porter.hpp"
#include "scholnet/text.hpp"

#include <doctest.h>

using namespace scholnet;

TEST_SUITE("text") {

TEST_CASE("title normalization lowercases, strips punctuation, collapses spaces") {
    CHECK(text::normalize_title("Urban Growth.") == "urban growth");
    CHECK(text::normalize_title("urban growth") == "urban growth");
    CHECK(text::normalize_title("  The   CITY:  a re-view! ") == "the city a re view");
    CHECK(text::normalize_title("ModÈle") == "modèle"); // Latin-1 uppercase
}

TEST_CASE("tokenizer splits on non-letters and drops short tokens") {
    const auto tokens = text::tokenize("Scale-free networks: a 2nd look, v2!");
    CHECK(tokens == std::vector<std::string>{"scale", "free", "networks", "nd", "look"});
    CHECK(text::tokenize("a I x") == std::vector<std::string>{});
    CHECK(text::tokenize("l'analyse spatiale") ==
          std::vector<std::string>{"analyse", "spatiale"});
}

TEST_CASE("csv escaping round-trips") {
    const std::vector<std::string> fields = {"plain", "with,comma", "with\"quote", "a b"};
    const std::string row = text::csv_row(fields);
    CHECK(text::parse_csv_line(row) == fields);
}

TEST_CASE("format_double round-trips exactly") {
    for (const double v : {0.1, 1.0 / 3.0, 121.6, 3.18, 1e-300, 0.0, -2.5e17}) {
        CHECK(std::strtod(text::format_double(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("porter stemmer matches the reference vocabulary") {
    // expected values from the published algorithm description
    const std::pair<const char*, const char*> cases[] = {
        {"caresses", "caress"}, {"ponies", "poni"},       {"ties", "ti"},
        {"caress", "caress"},   {"cats", "cat"},          {"feed", "feed"},
        {"agreed", "agre"},     {"plastered", "plaster"}, {"bled", "bled"},
        {"motoring", "motor"},  {"sing", "sing"},         {"conflated", "conflat"},
        {"troubled", "troubl"}, {"sized", "size"},        {"hopping", "hop"},
        {"tanned", "tan"},      {"falling", "fall"},      {"hissing", "hiss"},
        {"fizzed", "fizz"},     {"failing", "fail"},      {"filing", "file"},
        {"happy", "happi"},     {"sky", "sky"},           {"relational", "relat"},
        {"conditional", "condit"}, {"rational", "ration"}, {"valenci", "valenc"},
        {"hesitanci", "hesit"}, {"digitizer", "digit"},   {"radicalli", "radic"},
        {"differentli", "differ"}, {"vileli", "vile"},    {"analogousli", "analog"},
        {"vietnamization", "vietnam"}, {"predication", "predic"}, {"operator", "oper"},
        {"feudalism", "feudal"}, {"decisiveness", "decis"}, {"hopefulness", "hope"},
        {"callousness", "callous"}, {"formaliti", "formal"}, {"sensitiviti", "sensit"},
        {"sensibiliti", "sensibl"}, {"triplicate", "triplic"}, {"formative", "form"},
        {"formalize", "formal"}, {"electriciti", "electr"}, {"electrical", "electr"},
        {"hopeful", "hope"},    {"goodness", "good"},     {"revival", "reviv"},
        {"allowance", "allow"}, {"inference", "infer"},   {"airliner", "airlin"},
        {"gyroscopic", "gyroscop"}, {"adjustable", "adjust"}, {"defensible", "defens"},
        {"irritant", "irrit"},  {"replacement", "replac"}, {"adjustment", "adjust"},
        {"dependent", "depend"}, {"adoption", "adopt"},   {"communism", "commun"},
        {"activate", "activ"},  {"angulariti", "angular"}, {"homologous", "homolog"},
        {"effective", "effect"}, {"bowdlerize", "bowdler"}, {"probate", "probat"},
        {"rate", "rate"},       {"cease", "ceas"},        {"controll", "control"},
        {"roll", "roll"},       {"cities", "citi"},       {"analysis", "analysi"},
        {"modeling", "model"},  {"spatial", "spatial"},
    };
    for (const auto& [word, stem] : cases) {
        CAPTURE(word);
        CHECK(porter_stem(word) == stem);
    }
}

} // TEST_SUITE
