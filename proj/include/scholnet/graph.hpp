#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace scholnet {

enum class DegreeMode { In, Out, Total };

struct Degree {
    std::size_t count = 0; // distinct incident edges
    double weight = 0.0;   // accumulated edge weight
};

// Weighted graph shared by the citation and semantic layers. Node ids are
// opaque strings mapped to dense indices internally; algorithm outputs always
// report the original ids. Inserting an existing edge accumulates its weight,
// so co-occurrence counting composes naturally. Parallel edges and self-loops
// are not representable. Construction is single-writer; a finished Graph is
// immutable and safe for concurrent reads.
class Graph {
public:
    struct Edge {
        int u = 0;
        int v = 0;
        double weight = 0.0;
    };

    explicit Graph(bool directed) : directed_(directed) {}

    bool directed() const { return directed_; }

    // Returns the dense index; idempotent on the id.
    int add_node(const std::string& id);
    int add_node(const std::string& id, const std::string& label);

    // Adds weight w (> 0) to edge (u, v), creating missing endpoints.
    // For undirected graphs (u, v) and (v, u) are the same edge.
    void add_edge(const std::string& u, const std::string& v, double w = 1.0);

    bool has_node(const std::string& id) const { return index_.count(id) > 0; }
    bool has_edge(const std::string& u, const std::string& v) const;
    double edge_weight(const std::string& u, const std::string& v) const;

    std::size_t num_nodes() const { return ids_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    double total_weight() const { return total_weight_; }

    // Dense-index access, insertion order.
    const std::vector<std::string>& node_ids() const { return ids_; }
    const std::string& id_of(int idx) const { return ids_.at(static_cast<std::size_t>(idx)); }
    int index_of(const std::string& id) const; // throws DataError if unknown
    const std::vector<Edge>& edges() const { return edges_; }

    const std::string& label(const std::string& id) const;
    void set_label(const std::string& id, const std::string& label);

    // Free-form node attributes; exported and re-imported verbatim.
    void set_attribute(const std::string& id, const std::string& key, const std::string& value);
    const std::map<std::string, std::string>& attributes(const std::string& id) const;

    Degree degree(const std::string& id, DegreeMode mode) const;
    Degree degree_by_index(int idx, DegreeMode mode) const;

    // Neighbor lists as (node index, edge index), in edge insertion order.
    // out/in are only valid for directed graphs; adjacency covers both
    // directions for directed graphs and is the only list for undirected.
    const std::vector<std::pair<int, std::size_t>>& out_edges(int idx) const;
    const std::vector<std::pair<int, std::size_t>>& in_edges(int idx) const;
    const std::vector<std::pair<int, std::size_t>>& adjacency(int idx) const;

private:
    static std::uint64_t edge_key(int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }
    std::uint64_t canonical_key(int a, int b) const;

    bool directed_;
    std::vector<std::string> ids_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> edge_index_;
    std::vector<std::vector<std::pair<int, std::size_t>>> out_;
    std::vector<std::vector<std::pair<int, std::size_t>>> in_;  // directed only
    std::vector<std::map<std::string, std::string>> attrs_;
    double total_weight_ = 0.0;
};

// Undirected copy: weight(u, v) = sum of both directions. Node order, labels
// and attributes are preserved. Undirected input is copied as-is.
Graph symmetrized(const Graph& g);

// Subgraph induced by the given node indices (original ids kept).
Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

// Node id -> community id. Community ids are expected to be dense 0..C-1 in
// finished results; evaluation helpers accept any integer labels.
struct Partition {
    std::map<std::string, int> assignment;

    std::size_t size() const { return assignment.size(); }
    int community_of(const std::string& id) const;
    bool contains(const std::string& id) const { return assignment.count(id) > 0; }

    // Number of communities assuming dense labels (max + 1); 0 when empty.
    int num_communities() const;

    // Community sizes indexed by dense community id.
    std::vector<std::size_t> community_sizes() const;

    // Relabels communities to dense ids 0..C-1 by first appearance over the
    // given node order.
    static Partition densify(const std::vector<std::string>& node_order,
                             const std::vector<int>& labels);
};

} // namespace scholnet
