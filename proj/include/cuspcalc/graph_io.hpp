#pragma once

#include <string>

#include <json.hpp>

#include "cuspcalc/dual_graph.hpp"
#include "cuspcalc/errors.hpp"

namespace cuspcalc {

/// {"vertices":[{"id":..,"weight":..,"label":..?}],"edges":[[a,b],...]}
/// Vertices sorted by id, edges sorted pairs; round trip is lossless.
inline nlohmann::json to_json(const DualGraph& g) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : g.vertices()) {
        nlohmann::json jv = {{"id", v.id}, {"weight", v.weight}};
        if (!v.label.empty()) jv["label"] = v.label;
        verts.push_back(std::move(jv));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    return {{"vertices", std::move(verts)}, {"edges", std::move(edges)}};
}

inline DualGraph graph_from_json(const nlohmann::json& j) {
    try {
        DualGraph g;
        for (const auto& jv : j.at("vertices")) {
            g.add_vertex_with_id(jv.at("id").get<int>(), jv.at("weight").get<int>(),
                                 jv.value("label", std::string{}));
        }
        for (const auto& je : j.at("edges")) {
            if (!je.is_array() || je.size() != 2)
                throw InvalidArgument("graph json: each edge must be a pair of ids");
            g.add_edge(je.at(0).get<int>(), je.at(1).get<int>());
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("graph json: ") + e.what());
    }
}

inline DualGraph graph_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidArgument("graph json: parse error");
    return graph_from_json(j);
}

/// Undirected DOT with the weight as node label; (-1)-curves are rendered
/// with the * marker used in resolution figures.
inline std::string to_dot(const DualGraph& g, const std::string& name = "dual_graph") {
    std::string out = "graph " + name + " {\n";
    for (const auto& v : g.vertices()) {
        std::string text = v.weight == -1 ? "*" : std::to_string(v.weight);
        if (!v.label.empty()) text = v.label + " " + text;
        out += "  v" + std::to_string(v.id) + " [label=\"" + text + "\"];\n";
    }
    for (const auto& [a, b] : g.edges())
        out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

} // namespace cuspcalc
