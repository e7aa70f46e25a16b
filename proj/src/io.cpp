#include "ieff/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ieff {

namespace {

using nlohmann::json;

int require_int(const json &node, const std::string &path) {
    if (!node.is_number_integer()) throw SchemaError(path + ": expected an integer");
    return node.get<int>();
}

const json &require_array(const json &node, const std::string &path, int size = -1) {
    if (!node.is_array()) throw SchemaError(path + ": expected an array");
    if (size >= 0 && static_cast<int>(node.size()) != size) {
        throw SchemaError(path + ": expected " + std::to_string(size) + " entries, got " +
                          std::to_string(node.size()));
    }
    return node;
}

std::string require_string(const json &node, const std::string &path) {
    if (!node.is_string()) throw SchemaError(path + ": expected a string");
    return node.get<std::string>();
}

}  // namespace

std::vector<std::string> default_object_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(object_name(i, n));
    return names;
}

ProfileDocument parse_profile_document(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("document: expected a JSON object");
    if (!doc.contains("n")) throw SchemaError("document: missing field 'n'");
    if (!doc.contains("objects")) throw SchemaError("document: missing field 'objects'");
    if (!doc.contains("agents")) throw SchemaError("document: missing field 'agents'");

    const int n = require_int(doc["n"], "n");
    if (n < kMinObjects || n > kMaxObjects) {
        throw SchemaError("n: must be between " + std::to_string(kMinObjects) + " and " +
                          std::to_string(kMaxObjects));
    }

    ProfileDocument out;
    out.profile.n = n;
    std::set<std::string> seen_names;
    for (const json &name : require_array(doc["objects"], "objects", n)) {
        std::string s = require_string(name, "objects[]");
        if (s.empty()) throw SchemaError("objects[]: names must be nonempty");
        if (!seen_names.insert(s).second) throw SchemaError("objects: duplicate name '" + s + "'");
        out.objects.push_back(s);
    }
    auto object_index = [&](const std::string &name, const std::string &path) {
        for (int i = 0; i < n; ++i) {
            if (out.objects[i] == name) return i;
        }
        throw SchemaError(path + ": unknown object name '" + name + "'");
    };

    const json &agents = require_array(doc["agents"], "agents", -1);
    if (static_cast<int>(agents.size()) != n) {
        throw SchemaError("agents: length must equal n (" + std::to_string(n) + "), got " +
                          std::to_string(agents.size()));
    }
    const int k = pair_count(n);
    for (int i = 0; i < n; ++i) {
        const std::string path = "agents[" + std::to_string(i) + "]";
        const json &agent = agents[i];
        if (!agent.is_object()) throw SchemaError(path + ": expected an object");
        if (agent.contains("id") && require_int(agent["id"], path + ".id") != i + 1) {
            throw SchemaError(path + ".id: expected " + std::to_string(i + 1));
        }
        if (!agent.contains("ranking")) throw SchemaError(path + ": missing field 'ranking'");

        std::vector<OrderedPair> pairs;
        int entry = 0;
        for (const json &item : require_array(agent["ranking"], path + ".ranking", k)) {
            const std::string ipath = path + ".ranking[" + std::to_string(entry++) + "]";
            require_array(item, ipath, 2);
            pairs.push_back({object_index(require_string(item[0], ipath), ipath),
                             object_index(require_string(item[1], ipath), ipath)});
        }
        try {
            out.profile.agents.push_back(intensity_from_ranking(pairs, n));
        } catch (const ValidationError &e) {
            throw ValidationError(path + ": " + e.what(), e.report);
        } catch (const std::invalid_argument &e) {
            throw SchemaError(path + ".ranking: " + e.what());
        }
    }
    return out;
}

std::string serialize_profile_document(const ProfileDocument &doc) {
    const int n = doc.profile.n;
    std::ostringstream out;
    out << "{\n";
    out << "  \"n\": " << n << ",\n";
    out << "  \"objects\": [";
    for (int i = 0; i < n; ++i) out << (i ? ", " : "") << json(doc.objects[i]).dump();
    out << "],\n";
    out << "  \"agents\": [\n";
    for (int i = 0; i < n; ++i) {
        out << "    { \"id\": " << i + 1 << ", \"ranking\": [";
        const std::vector<OrderedPair> pairs = ranking_of(doc.profile.agents[i]);
        for (size_t p = 0; p < pairs.size(); ++p) {
            out << (p ? ", " : "") << "[" << json(doc.objects[pairs[p].first]).dump() << ","
                << json(doc.objects[pairs[p].second]).dump() << "]";
        }
        out << "] }" << (i + 1 < n ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

Profile parse_profile(const std::string &text) { return parse_profile_document(text).profile; }

std::string serialize_profile(const Profile &profile) {
    return serialize_profile_document({default_object_names(profile.n), profile});
}

std::string emit_dot(const DominanceDigraph &graph) {
    const std::vector<int> deg = graph.in_degree();
    std::ostringstream out;
    out << "digraph dominance {\n";
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        out << "  \"" << allocation_name(graph.nodes[i]) << "\"";
        if (deg[i] == 0) out << " [peripheries=2]";
        out << ";\n";
    }
    for (const auto &[from, to] : graph.edges) {
        out << "  \"" << allocation_name(graph.nodes[from]) << "\" -> \""
            << allocation_name(graph.nodes[to]) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace ieff
