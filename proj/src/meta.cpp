#include "scholnet/meta.hpp"

#include "scholnet/version.hpp"

namespace scholnet {

std::vector<std::string> FileMeta::lines() const {
    std::vector<std::string> out;
    out.push_back(std::string(kToolName) + " " + kToolVersion);
    std::string line = "cmd=" + (command.empty() ? std::string("-") : command);
    if (seed) line += " seed=" + std::to_string(*seed) + " rng=" + kRngAlgorithm;
    out.push_back(line);
    if (!params.empty()) out.push_back("params: " + params);
    return out;
}

std::string FileMeta::as_hash_comments() const {
    std::string out;
    for (const auto& l : lines()) out += "# " + l + "\n";
    return out;
}

std::string FileMeta::as_xml_comment() const {
    std::string out = "<!--\n";
    for (const auto& l : lines()) out += "  " + l + "\n";
    out += "-->\n";
    return out;
}

} // namespace scholnet
