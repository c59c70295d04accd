#pragma once

#include <nlohmann/json.hpp>

#include "tensor.hpp"
#include "towers.hpp"

namespace qyb {

using nlohmann::json;

// { "N":..., "sites":..., "entries":[[row, col, "scalar"], ...] } sorted by (row, col)
inline json tensor_to_json(const TensorOp& t) {
    json j;
    j["N"] = t.N();
    j["sites"] = t.sites();
    json entries = json::array();
    for (const auto& [rc, v] : t.entries()) entries.push_back({rc.first, rc.second, v.str()});
    j["entries"] = std::move(entries);
    return j;
}

inline TensorOp tensor_from_json(const json& j) {
    TensorOp t(j.at("N").get<int>(), j.at("sites").get<int>());
    for (const auto& e : j.at("entries"))
        t.set(e.at(0).get<Index>(), e.at(1).get<Index>(), frac_parse(e.at(2).get<std::string>()));
    return t;
}

inline json graph_to_json(const BranchGraph& g) {
    json j;
    j["algebra"] = g.bmw ? "bmw" : "hecke";
    json levels = json::array();
    for (const auto& lvl : g.levels) {
        json vs = json::array();
        for (const auto& p : lvl) vs.push_back(p);
        levels.push_back(std::move(vs));
    }
    j["levels"] = std::move(levels);
    json edges = json::array();
    for (size_t l = 0; l < g.edges.size(); ++l)
        for (const auto& e : g.edges[l]) {
            Scalar col = Scalar::q_pow(2 * e.color.z);
            if (e.color.nu2) col *= Scalar::v_pow(2);
            edges.push_back({{"level", l}, {"from", e.from}, {"to", e.to}, {"color", col.str()}});
        }
    j["edges"] = std::move(edges);
    return j;
}

}  // namespace qyb
