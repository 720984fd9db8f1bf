#pragma once

// On-disk formats: graph and diagram files are strict JSON with a fixed
// key set; unknown keys are rejected. Writing goes through
// canonical_serialize so equal graphs produce identical bytes.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ribbon/diagram.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                                const char* what) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok) throw ParseError(std::string(what) + ": unknown key \"" + key + "\"");
    }
}

inline int require_int(const nlohmann::json& obj, const char* key, const char* what) {
    if (!obj.contains(key)) throw ParseError(std::string(what) + ": missing key \"" + key + "\"");
    const nlohmann::json& v = obj.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": key \"" + key + "\" must be an integer");
    return v.get<int>();
}

inline const nlohmann::json& require_array(const nlohmann::json& obj, const char* key, const char* what) {
    if (!obj.contains(key)) throw ParseError(std::string(what) + ": missing key \"" + key + "\"");
    const nlohmann::json& v = obj.at(key);
    if (!v.is_array()) throw ParseError(std::string(what) + ": key \"" + key + "\" must be an array");
    return v;
}

inline nlohmann::json parse_object(const std::string& text, const char* what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string(what) + ": not valid JSON");
    if (!j.is_object()) throw ParseError(std::string(what) + ": top level must be an object");
    return j;
}

}  // namespace detail

/// Parses {"genus": G, "vertices": G+1, "edges": [{"tail": a, "head": b},
/// ...], "singularity": [...]}. Shape errors throw ParseError; the result
/// still has to pass validate().
inline RibbonGraph parse_graph(const std::string& text) {
    const char* what = "graph file";
    nlohmann::json j = detail::parse_object(text, what);
    detail::reject_unknown_keys(j, {"genus", "vertices", "edges", "singularity"}, what);

    RibbonGraph g;
    int genus = detail::require_int(j, "genus", what);
    if (genus < 0) throw ParseError("graph file: genus must be nonnegative");
    g.vertex_count = detail::require_int(j, "vertices", what);
    if (g.vertex_count != genus + 1) throw ParseError("graph file: vertices must equal genus + 1");

    const auto& edges = detail::require_array(j, "edges", what);
    if (static_cast<int>(edges.size()) != genus) throw ParseError("graph file: edges must have genus entries");
    for (const auto& e : edges) {
        if (!e.is_object()) throw ParseError("graph file: each edge must be an object");
        detail::reject_unknown_keys(e, {"tail", "head"}, what);
        g.edges.push_back({detail::require_int(e, "tail", what), detail::require_int(e, "head", what)});
    }

    const auto& sing = detail::require_array(j, "singularity", what);
    if (static_cast<int>(sing.size()) != genus) throw ParseError("graph file: singularity must have genus entries");
    for (const auto& s : sing) {
        if (!s.is_number_integer()) throw ParseError("graph file: singularity entries must be integers");
        g.singularity.push_back(s.get<int>());
    }
    return g;
}

/// Parses {"genus": G, "gamma": [[a,b],...], "mark_arc": [...],
/// "beta_arc": [...]}.
inline RibbonDiagram parse_diagram(const std::string& text) {
    const char* what = "diagram file";
    nlohmann::json j = detail::parse_object(text, what);
    detail::reject_unknown_keys(j, {"genus", "gamma", "mark_arc", "beta_arc"}, what);

    RibbonDiagram d;
    d.genus = detail::require_int(j, "genus", what);
    if (d.genus < 0) throw ParseError("diagram file: genus must be nonnegative");

    const auto& gamma = detail::require_array(j, "gamma", what);
    if (static_cast<int>(gamma.size()) != d.genus) throw ParseError("diagram file: gamma must have genus entries");
    for (const auto& c : gamma) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            throw ParseError("diagram file: each chord must be a pair of integers");
        d.gamma.push_back({c[0].get<int>(), c[1].get<int>()});
    }

    for (const char* key : {"mark_arc", "beta_arc"}) {
        const auto& arr = detail::require_array(j, key, what);
        if (static_cast<int>(arr.size()) != d.genus)
            throw ParseError(std::string("diagram file: ") + key + " must have genus entries");
        for (const auto& v : arr) {
            if (!v.is_number_integer()) throw ParseError(std::string("diagram file: ") + key + " entries must be integers");
            (key[0] == 'm' ? d.mark_arc : d.beta_arc).push_back(v.get<int>());
        }
    }
    return d;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

inline RibbonGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }
inline RibbonDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }

}  // namespace ribbon
