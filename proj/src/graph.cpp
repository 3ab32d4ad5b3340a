#include "scholnet/graph.hpp"

#include "scholnet/errors.hpp"

#include <algorithm>

namespace scholnet {

int Graph::add_node(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    const int idx = static_cast<int>(ids_.size());
    index_.emplace(id, idx);
    ids_.push_back(id);
    labels_.push_back(id);
    attrs_.emplace_back();
    out_.emplace_back();
    in_.emplace_back();
    return idx;
}

int Graph::add_node(const std::string& id, const std::string& label) {
    const int idx = add_node(id);
    labels_[static_cast<std::size_t>(idx)] = label;
    return idx;
}

std::uint64_t Graph::canonical_key(int a, int b) const {
    if (!directed_ && a > b) std::swap(a, b);
    return edge_key(a, b);
}

void Graph::add_edge(const std::string& u, const std::string& v, double w) {
    if (u == v) throw DataError("graph: self-loop rejected on node '" + u + "'");
    if (w <= 0.0) throw DataError("graph: edge weight must be positive");
    const int ui = add_node(u);
    const int vi = add_node(v);
    const std::uint64_t key = canonical_key(ui, vi);
    auto it = edge_index_.find(key);
    if (it != edge_index_.end()) {
        edges_[it->second].weight += w;
        total_weight_ += w;
        return;
    }
    const std::size_t e = edges_.size();
    int a = ui, b = vi;
    if (!directed_ && a > b) std::swap(a, b);
    edges_.push_back({a, b, w});
    edge_index_.emplace(key, e);
    total_weight_ += w;
    if (directed_) {
        out_[static_cast<std::size_t>(ui)].push_back({vi, e});
        in_[static_cast<std::size_t>(vi)].push_back({ui, e});
    } else {
        out_[static_cast<std::size_t>(a)].push_back({b, e});
        if (a != b) out_[static_cast<std::size_t>(b)].push_back({a, e});
    }
}

bool Graph::has_edge(const std::string& u, const std::string& v) const {
    auto ui = index_.find(u);
    auto vi = index_.find(v);
    if (ui == index_.end() || vi == index_.end()) return false;
    return edge_index_.count(canonical_key(ui->second, vi->second)) > 0;
}

double Graph::edge_weight(const std::string& u, const std::string& v) const {
    auto it = edge_index_.find(canonical_key(index_of(u), index_of(v)));
    return it == edge_index_.end() ? 0.0 : edges_[it->second].weight;
}

int Graph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw DataError("graph: unknown node '" + id + "'");
    return it->second;
}

const std::string& Graph::label(const std::string& id) const {
    return labels_[static_cast<std::size_t>(index_of(id))];
}

void Graph::set_label(const std::string& id, const std::string& label) {
    labels_[static_cast<std::size_t>(index_of(id))] = label;
}

void Graph::set_attribute(const std::string& id, const std::string& key,
                          const std::string& value) {
    attrs_[static_cast<std::size_t>(index_of(id))][key] = value;
}

const std::map<std::string, std::string>& Graph::attributes(const std::string& id) const {
    return attrs_[static_cast<std::size_t>(index_of(id))];
}

Degree Graph::degree(const std::string& id, DegreeMode mode) const {
    return degree_by_index(index_of(id), mode);
}

Degree Graph::degree_by_index(int idx, DegreeMode mode) const {
    const auto i = static_cast<std::size_t>(idx);
    if (idx < 0 || i >= ids_.size()) throw DataError("graph: node index out of range");
    if (!directed_ && mode != DegreeMode::Total)
        throw DataError("graph: in/out degree undefined on undirected graph");
    Degree d;
    auto accumulate = [&](const std::vector<std::pair<int, std::size_t>>& adj) {
        d.count += adj.size();
        for (const auto& [nbr, e] : adj) {
            (void)nbr;
            d.weight += edges_[e].weight;
        }
    };
    if (!directed_) {
        accumulate(out_[i]);
        return d;
    }
    if (mode == DegreeMode::Out || mode == DegreeMode::Total) accumulate(out_[i]);
    if (mode == DegreeMode::In || mode == DegreeMode::Total) accumulate(in_[i]);
    return d;
}

const std::vector<std::pair<int, std::size_t>>& Graph::out_edges(int idx) const {
    if (!directed_) throw DataError("graph: out_edges undefined on undirected graph");
    return out_[static_cast<std::size_t>(idx)];
}

const std::vector<std::pair<int, std::size_t>>& Graph::in_edges(int idx) const {
    if (!directed_) throw DataError("graph: in_edges undefined on undirected graph");
    return in_[static_cast<std::size_t>(idx)];
}

const std::vector<std::pair<int, std::size_t>>& Graph::adjacency(int idx) const {
    if (directed_) throw DataError("graph: adjacency is for undirected graphs; use out/in_edges");
    return out_[static_cast<std::size_t>(idx)];
}

Graph symmetrized(const Graph& g) {
    Graph out(false);
    for (const auto& id : g.node_ids()) {
        out.add_node(id, g.label(id));
        for (const auto& [k, v] : g.attributes(id)) out.set_attribute(id, k, v);
    }
    for (const auto& e : g.edges())
        out.add_edge(g.id_of(e.u), g.id_of(e.v), e.weight);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
    Graph out(g.directed());
    const auto& ids = g.node_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!keep[i]) continue;
        out.add_node(ids[i], g.label(ids[i]));
        for (const auto& [k, v] : g.attributes(ids[i])) out.set_attribute(ids[i], k, v);
    }
    for (const auto& e : g.edges()) {
        if (keep[static_cast<std::size_t>(e.u)] && keep[static_cast<std::size_t>(e.v)])
            out.add_edge(g.id_of(e.u), g.id_of(e.v), e.weight);
    }
    return out;
}

int Partition::community_of(const std::string& id) const {
    auto it = assignment.find(id);
    if (it == assignment.end()) throw DataError("partition: node '" + id + "' not assigned");
    return it->second;
}

int Partition::num_communities() const {
    int max_id = -1;
    for (const auto& [id, c] : assignment) max_id = std::max(max_id, c);
    return max_id + 1;
}

std::vector<std::size_t> Partition::community_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(num_communities()), 0);
    for (const auto& [id, c] : assignment) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
}

Partition Partition::densify(const std::vector<std::string>& node_order,
                             const std::vector<int>& labels) {
    Partition p;
    std::unordered_map<int, int> relabel;
    for (std::size_t i = 0; i < node_order.size(); ++i) {
        auto [it, inserted] = relabel.emplace(labels[i], static_cast<int>(relabel.size()));
        p.assignment[node_order[i]] = it->second;
        (void)inserted;
    }
    return p;
}

} // namespace scholnet
