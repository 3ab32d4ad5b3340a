#include "scholnet/keywords.hpp"

#include <unordered_map>
#include <unordered_set>

namespace scholnet {
namespace detail {

// Hand-curated tags for common English words. Coverage matters most for
// OTHER entries (verbs, adverbs, connectives): those break candidate
// windows, while NOUN/ADJ/GER are all window-eligible. Nouns ending in -ing
// are listed explicitly to override the gerund suffix rule. Unknown words
// fall through to the suffix rules in tag_and_stem.
const std::unordered_map<std::string, Tag>& tag_lexicon() {
    // clang-format off
    static const std::unordered_map<std::string, Tag> lexicon = [] {
        std::unordered_map<std::string, Tag> lex;
        static const char* kOther[] = {
            // frequent verbs (base and 3rd person) and participles that
            // rarely act as noun modifiers
            "accept", "accepts", "achieve", "achieves", "adopt", "adopts", "agree", "agrees",
            "aim", "aims", "allow", "allows", "analyse", "analyze", "analyzes", "appear",
            "appears", "apply", "applies", "argue", "argues", "arise", "arises", "ask",
            "asks", "assess", "assesses", "assume", "assumes", "become", "becomes", "begin",
            "begins", "behave", "behaves", "belong", "belongs", "bring", "brings", "build",
            "builds", "calculate", "calculates", "capture", "captures", "carry", "carries",
            "cause", "causes", "choose", "chooses", "claim", "claims", "combine", "combines",
            "come", "comes", "compare", "compares", "compute", "computes", "conclude",
            "concludes", "confirm", "confirms", "connect", "connects", "consider",
            "considers", "consist", "consists", "constitute", "constitutes", "construct",
            "constructs", "contain", "contains", "contribute", "contributes", "correspond",
            "corresponds", "create", "creates", "define", "defines", "demonstrate",
            "demonstrates", "depend", "depends", "derive", "derives", "describe",
            "describes", "determine", "determines", "develop", "develops", "differ",
            "differs", "discuss", "discusses", "emerge", "emerges", "emphasize",
            "emphasizes", "enable", "enables", "estimate", "estimates", "evaluate",
            "evaluates", "examine", "examines", "exceed", "exceeds", "exhibit", "exhibits",
            "exist", "exists", "expect", "expects", "explain", "explains", "explore",
            "explores", "express", "expresses", "extend", "extends", "find", "finds",
            "focus", "focuses", "follow", "follows", "generate", "generates", "get",
            "gets", "give", "gives", "go", "goes", "happen", "happens", "help", "helps",
            "hold", "holds", "identify", "identifies", "illustrate", "illustrates",
            "imply", "implies", "improve", "improves", "include", "includes",
            "incorporate", "incorporates", "increase", "increases", "indicate",
            "indicates", "introduce", "introduces", "investigate", "investigates",
            "involve", "involves", "keep", "keeps", "know", "knows", "lead", "leads",
            "let", "lets", "lie", "lies", "look", "looks", "make", "makes", "mean",
            "means", "need", "needs", "observe", "observes", "obtain", "obtains",
            "occur", "occurs", "offer", "offers", "perform", "performs", "play",
            "plays", "predict", "predicts", "produce", "produces", "propose",
            "proposes", "prove", "proves", "provide", "provides", "quantify",
            "quantifies", "raise", "raises", "reach", "reaches", "reduce", "reduces",
            "refer", "refers", "reflect", "reflects", "relate", "relates", "rely",
            "relies", "remain", "remains", "report", "reports", "represent",
            "represents", "reproduce", "reproduces", "require", "requires", "reveal",
            "reveals", "run", "runs", "say", "says", "see", "sees", "seek", "seeks",
            "seem", "seems", "serve", "serves", "show", "shows", "simulate",
            "simulates", "solve", "solves", "stem", "stems", "suggest", "suggests",
            "summarize", "summarizes", "take", "takes", "tend", "tends", "test",
            "tests", "treat", "treats", "try", "tries", "turn", "turns", "underline",
            "underlines", "use", "uses", "validate", "validates", "vary", "varies",
            "yield", "yields",
            // adverbs and connectives beyond the stop-word list
            "accordingly", "across", "actually", "almost", "already", "always",
            "approximately", "around", "clearly", "consequently", "currently",
            "despite", "directly", "especially", "even", "finally", "first",
            "firstly", "formerly", "furthermore", "generally", "hence", "here",
            "highly", "indeed", "instead", "largely", "likely", "mainly", "meanwhile",
            "moreover", "mostly", "namely", "nearly", "nevertheless", "never",
            "nonetheless", "otherwise", "overall", "particularly", "previously",
            "quite", "rather", "recently", "respectively", "roughly", "second",
            "secondly", "significantly", "sometimes", "soon", "still", "strongly",
            "therefore", "thereby", "though", "together", "toward", "towards",
            "typically", "unless", "usually", "via", "well", "whereas", "widely",
        };
        static const char* kAdj[] = {
            "average", "big", "broad", "certain", "cheap", "close", "coarse", "common",
            "complete", "complex", "deep", "dense", "different", "difficult", "distant",
            "distinct", "diverse", "early", "easy", "fast", "fine", "flat", "fresh",
            "future", "good", "great", "heavy", "high", "human", "important", "key",
            "large", "late", "light", "likely", "linear", "long", "low", "main", "major",
            "mean", "minor", "mixed", "modern", "narrow", "nearby", "new", "nonlinear",
            "novel", "old", "open", "particular", "past", "poor", "possible", "present",
            "prior", "pure", "raw", "recent", "rich", "relevant", "remote", "robust",
            "rural", "several", "shallow", "sharp", "short", "similar", "simple",
            "single", "slow", "small", "smooth", "sparse", "stable", "standard",
            "strange", "strong", "suitable", "true", "unable", "unique", "unknown",
            "unstable", "urban", "useful", "weak", "wide", "young",
        };
        static const char* kNoun[] = {
            // nouns ending in -ing (override the gerund suffix rule)
            "beginning", "building", "buildings", "evening", "everything", "finding",
            "findings", "housing", "king", "meaning", "meanings", "morning", "ring",
            "setting", "settings", "spring", "string", "strings", "thing", "things",
            "wing",
            // common academic vocabulary
            "analyses", "analysis", "approach", "area", "areas", "article", "author",
            "authors", "behavior", "behaviour", "case", "cases", "change", "changes",
            "city", "cities", "class", "classes", "community", "communities", "context",
            "data", "dataset", "datasets", "distribution", "distributions", "dynamics",
            "effect", "effects", "evidence", "example", "examples", "factor", "factors",
            "field", "fields", "figure", "framework", "function", "functions", "growth",
            "impact", "impacts", "index", "indices", "information", "issue", "issues",
            "knowledge", "level", "levels", "literature", "measure", "measures",
            "method", "methods", "model", "models", "network", "networks", "number",
            "numbers", "paper", "papers", "pattern", "patterns", "population",
            "populations", "problem", "problems", "process", "processes", "property",
            "properties", "question", "questions", "range", "rate", "rates", "region",
            "regions", "relation", "relations", "research", "result", "results",
            "scale", "scales", "science", "sciences", "space", "spaces", "structure",
            "structures", "study", "studies", "system", "systems", "term", "terms",
            "theory", "time", "type", "types", "value", "values", "variable",
            "variables", "work", "works", "world",
        };
        for (const char* w : kOther) lex.emplace(w, Tag::Other);
        for (const char* w : kAdj) lex.emplace(w, Tag::Adj);
        for (const char* w : kNoun) lex.emplace(w, Tag::Noun);
        // stop words tag OTHER unless listed above
        for (const auto& w : stopwords(Lang::En)) lex.emplace(w, Tag::Other);
        return lex;
    }();
    // clang-format on
    return lexicon;
}

} // namespace detail
} // namespace scholnet
