#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scholnet {

// Provenance header written at the top of every output file. Line-oriented
// formats get '#' comment lines, XML gets a comment element, JSON documents
// embed the same fields under a "_meta" key. Deliberately timestamp-free so
// repeated runs are byte-identical.
struct FileMeta {
    std::string command;
    std::string params;
    std::optional<std::uint64_t> seed;

    std::vector<std::string> lines() const;
    std::string as_hash_comments() const; // "# ..." per line
    std::string as_xml_comment() const;
};

} // namespace scholnet
