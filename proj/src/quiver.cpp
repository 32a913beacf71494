#include "nakayama/quiver.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace nakayama {

QuiverGraph build_quiver(const Algebra& alg)
{
    QuiverGraph g;
    g.algebra = alg;
    g.vertices = indecomposables(alg);
    for (ModCoord v : g.vertices) {
        const ModCoord up = clamp_coord(alg, v.i, v.j + 1);
        if (!up.is_zero()) g.arrows.emplace_back(v, up);
        const ModCoord down = clamp_coord(alg, v.i + 1, v.j - 1);
        if (!down.is_zero()) g.arrows.emplace_back(v, down);
    }
    return g;
}

QuiverGraph build_quiver(const Algebra& alg, const ModSet& highlights)
{
    QuiverGraph g = build_quiver(alg);
    g.highlights = highlights.members;
    return g;
}

namespace {

std::string node_name(ModCoord v)
{
    return "M_" + std::to_string(v.i) + "_" + std::to_string(v.j);
}

// x-position i + (j-1)/2, printed exactly as halves
std::string half_string(int twice)
{
    return std::to_string(twice / 2) + "." + (twice % 2 ? "5" : "0");
}

}  // namespace

std::string export_dot(const QuiverGraph& g)
{
    std::ostringstream os;
    os << "digraph ar_quiver {\n";
    os << "  graph [label=\"Lambda(" << g.algebra.m << "," << g.algebra.l << ")\"];\n";
    for (ModCoord v : g.vertices) {
        const bool hl = std::binary_search(g.highlights.begin(), g.highlights.end(), v);
        os << "  " << node_name(v) << " [label=\"" << to_string(v) << "\" row=" << v.j
           << " col=" << v.i << " pos=\"" << half_string(2 * v.i + (v.j - 1)) << ","
           << half_string(2 * v.j) << "!\"";
        if (hl) os << " shape=doublecircle";
        os << "];\n";
    }
    for (const auto& [src, dst] : g.arrows)
        os << "  " << node_name(src) << " -> " << node_name(dst) << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

nlohmann::ordered_json coord_json(ModCoord v)
{
    return nlohmann::ordered_json::array({v.i, v.j});
}

ModCoord coord_from_json(const nlohmann::json& j)
{
    return ModCoord{j.at(0).get<int>(), j.at(1).get<int>()};
}

}  // namespace

std::string export_json(const QuiverGraph& g)
{
    nlohmann::ordered_json j;
    j["algebra"] = {{"m", g.algebra.m}, {"l", g.algebra.l}};
    j["vertices"] = nlohmann::ordered_json::array();
    for (ModCoord v : g.vertices) j["vertices"].push_back(coord_json(v));
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& [src, dst] : g.arrows)
        j["arrows"].push_back(nlohmann::ordered_json::array({coord_json(src), coord_json(dst)}));
    j["highlights"] = nlohmann::ordered_json::array();
    for (ModCoord v : g.highlights) j["highlights"].push_back(coord_json(v));
    return j.dump();
}

QuiverGraph parse_quiver_json(const std::string& text)
{
    const nlohmann::json j = nlohmann::json::parse(text);
    QuiverGraph g;
    g.algebra = make_algebra(j.at("algebra").at("m").get<int>(), j.at("algebra").at("l").get<int>());
    for (const auto& v : j.at("vertices")) g.vertices.push_back(coord_from_json(v));
    for (const auto& a : j.at("arrows"))
        g.arrows.emplace_back(coord_from_json(a.at(0)), coord_from_json(a.at(1)));
    if (j.contains("highlights"))
        for (const auto& v : j.at("highlights")) g.highlights.push_back(coord_from_json(v));
    return g;
}

}  // namespace nakayama
