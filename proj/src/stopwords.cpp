#include "scholnet/keywords.hpp"

#include "scholnet/errors.hpp"
#include "scholnet/text.hpp"

namespace scholnet {

namespace {

// clang-format off
const std::vector<std::string> kStopwordsEn = {
    "about", "above", "after", "again", "against", "all", "along", "also", "although",
    "among", "an", "and", "another", "any", "are", "as", "at", "back", "be", "because",
    "been", "before", "being", "below", "between", "both", "but", "by", "can", "cannot",
    "could", "did", "do", "does", "doing", "down", "during", "each", "either", "else",
    "ever", "every", "few", "for", "from", "further", "had", "has", "have", "having",
    "he", "her", "here", "hers", "herself", "him", "himself", "his", "how", "however",
    "if", "in", "into", "is", "it", "its", "itself", "just", "less", "may", "me",
    "might", "more", "most", "much", "must", "my", "myself", "neither", "no", "nor",
    "not", "now", "of", "off", "often", "on", "once", "one", "only", "onto", "or",
    "other", "our", "ours", "ourselves", "out", "over", "own", "per", "same", "shall",
    "she", "should", "since", "so", "some", "such", "than", "that", "the", "their",
    "theirs", "them", "themselves", "then", "there", "these", "they", "this", "those",
    "through", "thus", "to", "too", "under", "until", "up", "upon", "us", "very",
    "was", "we", "were", "what", "when", "where", "whether", "which", "while", "who",
    "whom", "whose", "why", "will", "with", "within", "without", "would", "yet", "you",
    "your", "yours", "yourself", "yourselves",
};

const std::vector<std::string> kStopwordsFr = {
    "ai", "ainsi", "alors", "après", "au", "aucun", "aussi", "autre", "autres",
    "aux", "avant", "avec", "avoir", "beaucoup", "car", "ce", "ceci", "cela", "celle",
    "celles", "celui", "cependant", "ces", "cet", "cette", "ceux", "chaque", "chez",
    "comme", "comment", "contre", "dans", "de", "depuis", "des", "deux", "doit",
    "donc", "dont", "du", "elle", "elles", "en", "encore", "enfin", "entre", "envers",
    "est", "et", "été", "être", "eux", "fait", "faire", "fois", "ici",
    "il", "ils", "je", "jusqu", "la", "laquelle", "le", "lequel", "les", "lesquelles",
    "lesquels", "leur", "leurs", "lors", "lorsque", "lui", "ma", "mais", "malgré",
    "me", "même", "mêmes", "mes", "moi", "moins", "mon", "ne", "ni", "non",
    "nos", "notamment", "notre", "nous", "on", "ont", "ou", "où", "par", "parce",
    "parfois", "parmi", "pas", "pendant", "peu", "peut", "plus", "plusieurs", "pour",
    "pourquoi", "pourtant", "près", "puis", "puisque", "qu", "quand", "que",
    "quel", "quelle", "quelles", "quelques", "quels", "qui", "sa", "sans", "se",
    "selon", "ses", "si", "sinon", "son", "sont", "sous", "souvent", "sur", "surtout",
    "ta", "tandis", "te", "tes", "toi", "ton", "toujours", "tous", "tout", "toute",
    "toutes", "très", "trop", "tu", "un", "une", "vers", "voici", "voilà",
    "vos", "votre", "vous",
};
// clang-format on

} // namespace

const std::vector<std::string>& stopwords(Lang lang) {
    switch (lang) {
        case Lang::En: return kStopwordsEn;
        case Lang::Fr: return kStopwordsFr;
        default: throw DataError("stopwords: unsupported language");
    }
}

std::uint64_t stopwords_checksum(Lang lang) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& w : stopwords(lang)) {
        h ^= text::fnv1a64(w);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_string(Lang lang) {
    switch (lang) {
        case Lang::En: return "en";
        case Lang::Fr: return "fr";
        default: return "unknown";
    }
}

std::string to_string(Tag tag) {
    switch (tag) {
        case Tag::Noun: return "NOUN";
        case Tag::Adj: return "ADJ";
        case Tag::Ger: return "GER";
        default: return "OTHER";
    }
}

} // namespace scholnet
