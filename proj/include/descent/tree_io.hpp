#pragma once

// Structured (JSON) tree serialization and the format-dispatching entry
// points used by the CLI.
//
// Structured record: {"parents": [p_0, ..., p_{s-1}], "descents": [...]},
// parents 0-based with -1 for the root, descents sorted.

#include <string>
#include <string_view>

#include "json.hpp"

#include "descent/tree.hpp"

namespace descent {

enum class TreeFormat { Compact, Structured };

inline std::string serialize_structured(const MarkedTree& t) {
    nlohmann::ordered_json j;
    j["parents"] = nlohmann::json::array();
    for (int v = 0; v < t.size(); ++v) j["parents"].push_back(t.parent(v));
    j["descents"] = t.descent_vertices();
    return j.dump();
}

inline std::string serialize_tree(const MarkedTree& t, TreeFormat format) {
    return format == TreeFormat::Compact ? serialize_compact(t) : serialize_structured(t);
}

inline MarkedTree parse_structured(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("structured tree: ") + e.what(), 0);
    }
    if (!j.is_object() || !j.contains("parents") || !j.contains("descents"))
        throw ParseError("structured tree: expected {\"parents\": ..., \"descents\": ...}", 0);
    std::vector<int> parents;
    for (const auto& p : j.at("parents")) parents.push_back(p.get<int>());
    std::vector<int> descents;
    for (const auto& d : j.at("descents")) descents.push_back(d.get<int>());
    return MarkedTree::from_parents(std::move(parents), descents);
}

// Accepts either format: structured records start with '{'.
inline MarkedTree parse_tree_any(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r'))
        ++i;
    if (i < text.size() && text[i] == '{') return parse_structured(text);
    return parse_tree(text);
}

}  // namespace descent
