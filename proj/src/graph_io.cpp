#include "scholnet/graph_io.hpp"

#include "scholnet/errors.hpp"
#include "scholnet/text.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace scholnet {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string xml_unescape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '&') {
            out.push_back(s[i]);
            continue;
        }
        const auto end = s.find(';', i);
        const std::string ent = end == std::string::npos ? "" : s.substr(i + 1, end - i - 1);
        if (ent == "amp") out.push_back('&');
        else if (ent == "lt") out.push_back('<');
        else if (ent == "gt") out.push_back('>');
        else if (ent == "quot") out.push_back('"');
        else if (ent == "apos") out.push_back('\'');
        else { out.push_back('&'); continue; }
        i = end;
    }
    return out;
}

// Minimal pull scanner covering the subset of XML our exporters emit:
// tags with quoted attributes, text content, comments, declarations.
struct XmlTag {
    std::string name;
    std::map<std::string, std::string> attrs;
    bool closing = false;
    bool self_closing = false;
    std::string text_before; // character data preceding this tag
};

class XmlScanner {
public:
    explicit XmlScanner(std::string content) : s_(std::move(content)) {}

    bool next(XmlTag& tag) {
        tag = XmlTag{};
        std::string text;
        for (;;) {
            const auto lt = s_.find('<', pos_);
            if (lt == std::string::npos) return false;
            text += s_.substr(pos_, lt - pos_);
            if (s_.compare(lt, 4, "<!--") == 0) {
                const auto end = s_.find("-->", lt);
                if (end == std::string::npos) throw DataError("xml: unterminated comment");
                pos_ = end + 3;
                continue;
            }
            if (s_.compare(lt, 2, "<?") == 0 || s_.compare(lt, 2, "<!") == 0) {
                const auto end = s_.find('>', lt);
                if (end == std::string::npos) throw DataError("xml: unterminated declaration");
                pos_ = end + 1;
                continue;
            }
            const auto gt = find_tag_end(lt);
            parse_tag(s_.substr(lt + 1, gt - lt - 1), tag);
            tag.text_before = xml_unescape(text);
            pos_ = gt + 1;
            return true;
        }
    }

private:
    std::size_t find_tag_end(std::size_t lt) const {
        bool in_quote = false;
        char quote = 0;
        for (std::size_t i = lt + 1; i < s_.size(); ++i) {
            const char c = s_[i];
            if (in_quote) {
                if (c == quote) in_quote = false;
            } else if (c == '"' || c == '\'') {
                in_quote = true;
                quote = c;
            } else if (c == '>') {
                return i;
            }
        }
        throw DataError("xml: unterminated tag");
    }

    static void parse_tag(std::string body, XmlTag& tag) {
        if (!body.empty() && body.front() == '/') {
            tag.closing = true;
            body.erase(body.begin());
        }
        if (!body.empty() && body.back() == '/') {
            tag.self_closing = true;
            body.pop_back();
        }
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        };
        skip_ws();
        const std::size_t name_start = i;
        while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        tag.name = body.substr(name_start, i - name_start);
        for (;;) {
            skip_ws();
            if (i >= body.size()) break;
            const std::size_t key_start = i;
            while (i < body.size() && body[i] != '=' &&
                   !std::isspace(static_cast<unsigned char>(body[i])))
                ++i;
            const std::string key = body.substr(key_start, i - key_start);
            skip_ws();
            if (i >= body.size() || body[i] != '=') {
                tag.attrs[key] = "";
                continue;
            }
            ++i;
            skip_ws();
            if (i >= body.size() || (body[i] != '"' && body[i] != '\''))
                throw DataError("xml: attribute value must be quoted");
            const char quote = body[i++];
            const auto end = body.find(quote, i);
            if (end == std::string::npos) throw DataError("xml: unterminated attribute value");
            tag.attrs[key] = xml_unescape(body.substr(i, end - i));
            i = end + 1;
        }
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::vector<std::string> sorted_attribute_keys(const Graph& g,
                                               const std::optional<Partition>& partition) {
    std::set<std::string> keys;
    for (const auto& id : g.node_ids())
        for (const auto& [k, v] : g.attributes(id)) keys.insert(k);
    if (partition) keys.insert("community");
    return {keys.begin(), keys.end()};
}

std::string node_attr_or_partition(const Graph& g, const std::string& id, const std::string& key,
                                   const std::optional<Partition>& partition, bool& present) {
    if (key == "community" && partition) {
        present = partition->contains(id);
        return present ? std::to_string(partition->assignment.at(id)) : "";
    }
    const auto& attrs = g.attributes(id);
    auto it = attrs.find(key);
    present = it != attrs.end();
    return present ? it->second : "";
}

void write_gexf(const Graph& g, const std::optional<Partition>& partition, std::ostream& os,
                const FileMeta& meta) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" << meta.as_xml_comment();
    os << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n";
    os << "  <graph defaultedgetype=\"" << (g.directed() ? "directed" : "undirected") << "\">\n";
    const auto keys = sorted_attribute_keys(g, partition);
    if (!keys.empty()) {
        os << "    <attributes class=\"node\">\n";
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const char* type = keys[i] == "community" ? "integer" : "string";
            os << "      <attribute id=\"" << i << "\" title=\"" << xml_escape(keys[i])
               << "\" type=\"" << type << "\"/>\n";
        }
        os << "    </attributes>\n";
    }
    os << "    <nodes>\n";
    for (const auto& id : g.node_ids()) {
        os << "      <node id=\"" << xml_escape(id) << "\" label=\"" << xml_escape(g.label(id))
           << "\"";
        std::string attvalues;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            bool present = false;
            const std::string value = node_attr_or_partition(g, id, keys[i], partition, present);
            if (present)
                attvalues += "          <attvalue for=\"" + std::to_string(i) + "\" value=\"" +
                             xml_escape(value) + "\"/>\n";
        }
        if (attvalues.empty()) {
            os << "/>\n";
        } else {
            os << ">\n        <attvalues>\n" << attvalues << "        </attvalues>\n      </node>\n";
        }
    }
    os << "    </nodes>\n    <edges>\n";
    std::size_t eid = 0;
    for (const auto& e : g.edges()) {
        os << "      <edge id=\"" << eid++ << "\" source=\"" << xml_escape(g.id_of(e.u))
           << "\" target=\"" << xml_escape(g.id_of(e.v)) << "\" weight=\""
           << text::format_double(e.weight) << "\"/>\n";
    }
    os << "    </edges>\n  </graph>\n</gexf>\n";
}

void write_graphml(const Graph& g, const std::optional<Partition>& partition, std::ostream& os,
                   const FileMeta& meta) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" << meta.as_xml_comment();
    os << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    const auto keys = sorted_attribute_keys(g, partition);
    os << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const char* type = keys[i] == "community" ? "int" : "string";
        os << "  <key id=\"d" << i << "\" for=\"node\" attr.name=\"" << xml_escape(keys[i])
           << "\" attr.type=\"" << type << "\"/>\n";
    }
    os << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
    os << "  <graph id=\"G\" edgedefault=\"" << (g.directed() ? "directed" : "undirected")
       << "\">\n";
    for (const auto& id : g.node_ids()) {
        os << "    <node id=\"" << xml_escape(id) << "\">";
        os << "<data key=\"label\">" << xml_escape(g.label(id)) << "</data>";
        for (std::size_t i = 0; i < keys.size(); ++i) {
            bool present = false;
            const std::string value = node_attr_or_partition(g, id, keys[i], partition, present);
            if (present)
                os << "<data key=\"d" << i << "\">" << xml_escape(value) << "</data>";
        }
        os << "</node>\n";
    }
    for (const auto& e : g.edges()) {
        os << "    <edge source=\"" << xml_escape(g.id_of(e.u)) << "\" target=\""
           << xml_escape(g.id_of(e.v)) << "\"><data key=\"weight\">"
           << text::format_double(e.weight) << "</data></edge>\n";
    }
    os << "  </graph>\n</graphml>\n";
}

void write_edge_csv(const Graph& g, std::ostream& os, const FileMeta& meta) {
    os << meta.as_hash_comments();
    os << "source,target,weight\n";
    for (const auto& e : g.edges()) {
        os << text::csv_row({g.id_of(e.u), g.id_of(e.v), text::format_double(e.weight)}) << "\n";
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph import_gexf(const std::string& content) {
    XmlScanner scanner(content);
    XmlTag tag;
    bool directed = true;
    std::map<std::string, std::string> attr_titles; // attribute id -> title
    Graph g(true);
    bool graph_seen = false;
    std::vector<std::tuple<std::string, std::string, double>> pending_edges;
    std::string current_node;
    std::vector<std::array<std::string, 2>> node_order; // id, label
    std::vector<std::map<std::string, std::string>> node_attrs;
    while (scanner.next(tag)) {
        if (tag.closing) {
            if (tag.name == "node") current_node.clear();
            continue;
        }
        if (tag.name == "graph") {
            graph_seen = true;
            auto it = tag.attrs.find("defaultedgetype");
            directed = it == tag.attrs.end() || it->second != "undirected";
        } else if (tag.name == "attribute") {
            attr_titles[tag.attrs["id"]] = tag.attrs["title"];
        } else if (tag.name == "node") {
            const std::string id = tag.attrs.at("id");
            auto lbl = tag.attrs.find("label");
            node_order.push_back({id, lbl == tag.attrs.end() ? id : lbl->second});
            node_attrs.emplace_back();
            current_node = id;
        } else if (tag.name == "attvalue" && !current_node.empty()) {
            auto title = attr_titles.find(tag.attrs["for"]);
            if (title != attr_titles.end())
                node_attrs.back()[title->second] = tag.attrs["value"];
        } else if (tag.name == "edge") {
            const double w = tag.attrs.count("weight")
                                 ? std::strtod(tag.attrs["weight"].c_str(), nullptr)
                                 : 1.0;
            pending_edges.emplace_back(tag.attrs.at("source"), tag.attrs.at("target"), w);
        }
    }
    if (!graph_seen) throw DataError("gexf: no <graph> element");
    Graph out(directed);
    for (std::size_t i = 0; i < node_order.size(); ++i) {
        out.add_node(node_order[i][0], node_order[i][1]);
        for (const auto& [k, v] : node_attrs[i]) out.set_attribute(node_order[i][0], k, v);
    }
    for (const auto& [u, v, w] : pending_edges) out.add_edge(u, v, w);
    return out;
}

Graph import_graphml(const std::string& content) {
    XmlScanner scanner(content);
    XmlTag tag;
    bool directed = true;
    std::map<std::string, std::string> key_names; // key id -> attr.name
    bool graph_seen = false;
    std::string current_node;
    std::string current_data_key;
    std::vector<std::array<std::string, 2>> node_order;
    std::vector<std::map<std::string, std::string>> node_attrs;
    struct PendingEdge {
        std::string u, v;
        double w = 1.0;
    };
    std::vector<PendingEdge> pending_edges;
    bool in_edge = false;
    while (scanner.next(tag)) {
        if (tag.closing) {
            if (tag.name == "data" && !current_data_key.empty()) {
                const std::string value = tag.text_before;
                const auto name_it = key_names.find(current_data_key);
                const std::string name =
                    name_it == key_names.end() ? current_data_key : name_it->second;
                if (in_edge) {
                    if (name == "weight" && !pending_edges.empty())
                        pending_edges.back().w = std::strtod(value.c_str(), nullptr);
                } else if (!current_node.empty()) {
                    if (name == "label") node_order.back()[1] = value;
                    else node_attrs.back()[name] = value;
                }
                current_data_key.clear();
            } else if (tag.name == "node") {
                current_node.clear();
            } else if (tag.name == "edge") {
                in_edge = false;
            }
            continue;
        }
        if (tag.name == "graph") {
            graph_seen = true;
            auto it = tag.attrs.find("edgedefault");
            directed = it == tag.attrs.end() || it->second != "undirected";
        } else if (tag.name == "key") {
            key_names[tag.attrs["id"]] = tag.attrs["attr.name"];
        } else if (tag.name == "node") {
            const std::string id = tag.attrs.at("id");
            node_order.push_back({id, id});
            node_attrs.emplace_back();
            current_node = id;
            if (tag.self_closing) current_node.clear();
        } else if (tag.name == "edge") {
            pending_edges.push_back({tag.attrs.at("source"), tag.attrs.at("target"), 1.0});
            in_edge = !tag.self_closing;
        } else if (tag.name == "data") {
            current_data_key = tag.attrs["key"];
            if (tag.self_closing) current_data_key.clear();
        }
    }
    if (!graph_seen) throw DataError("graphml: no <graph> element");
    Graph out(directed);
    for (std::size_t i = 0; i < node_order.size(); ++i) {
        out.add_node(node_order[i][0], node_order[i][1]);
        for (const auto& [k, v] : node_attrs[i]) out.set_attribute(node_order[i][0], k, v);
    }
    for (const auto& e : pending_edges) out.add_edge(e.u, e.v, e.w);
    return out;
}

Graph import_edge_csv(const std::filesystem::path& path, bool directed) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path.string());
    Graph g(directed);
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = text::parse_csv_line(line);
        if (!header_seen) {
            header_seen = true; // "source,target,weight"
            continue;
        }
        if (fields.size() < 2)
            throw DataError("edge csv: malformed line " + std::to_string(line_no) + " in " +
                            path.string());
        const double w = fields.size() > 2 ? std::strtod(fields[2].c_str(), nullptr) : 1.0;
        g.add_edge(fields[0], fields[1], w);
    }
    return g;
}

} // namespace

GraphFormat graph_format_for_path(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".gexf") return GraphFormat::Gexf;
    if (ext == ".graphml") return GraphFormat::Graphml;
    if (ext == ".csv") return GraphFormat::EdgeCsv;
    throw DataError("unknown graph format for path: " + path.string());
}

void export_graph(const Graph& g, const std::optional<Partition>& partition, GraphFormat format,
                  const std::filesystem::path& path, const FileMeta& meta) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DataError("cannot write file: " + path.string());
    switch (format) {
        case GraphFormat::Gexf: write_gexf(g, partition, os, meta); break;
        case GraphFormat::Graphml: write_graphml(g, partition, os, meta); break;
        case GraphFormat::EdgeCsv: write_edge_csv(g, os, meta); break;
    }
    if (!os) throw DataError("write failed: " + path.string());
}

Graph import_graph(const std::filesystem::path& path, GraphFormat format,
                   bool edge_csv_directed) {
    switch (format) {
        case GraphFormat::Gexf: return import_gexf(read_file(path));
        case GraphFormat::Graphml: return import_graphml(read_file(path));
        case GraphFormat::EdgeCsv: return import_edge_csv(path, edge_csv_directed);
    }
    throw DataError("unreachable graph format");
}

Partition partition_from_attributes(const Graph& g) {
    Partition p;
    for (const auto& id : g.node_ids()) {
        const auto& attrs = g.attributes(id);
        auto it = attrs.find("community");
        if (it != attrs.end()) p.assignment[id] = std::atoi(it->second.c_str());
    }
    return p;
}

} // namespace scholnet
