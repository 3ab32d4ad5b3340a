#pragma once

#include "scholnet/graph.hpp"
#include "scholnet/meta.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace scholnet {

enum class GraphFormat { Gexf, Graphml, EdgeCsv };

// Deduced from the file extension (.gexf, .graphml, .csv).
GraphFormat graph_format_for_path(const std::filesystem::path& path);

// Round-trip safe on our own output: node set, edge set, weights (exact
// decimal round-trip), labels and attributes are all reproduced. A partition,
// when given, is written as node attribute "community".
void export_graph(const Graph& g, const std::optional<Partition>& partition,
                  GraphFormat format, const std::filesystem::path& path,
                  const FileMeta& meta = {});

// Edge CSV carries no direction flag, so the caller chooses.
Graph import_graph(const std::filesystem::path& path, GraphFormat format,
                   bool edge_csv_directed = true);

// Reads the "community" node attribute back as a partition; nodes without
// the attribute are absent from the result.
Partition partition_from_attributes(const Graph& g);

} // namespace scholnet
