#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nakayama/cluster.hpp"

namespace nakayama {

// Auslander-Reiten quiver of Lambda_{m,l}: vertices are the indecomposables,
// arrows the irreducible maps M(i,j) -> M(i,j+1) and M(i,j) -> M(i+1,j-1).
struct QuiverGraph {
    Algebra algebra;
    std::vector<ModCoord> vertices;
    std::vector<std::pair<ModCoord, ModCoord>> arrows;
    std::vector<ModCoord> highlights;

    friend bool operator==(const QuiverGraph&, const QuiverGraph&) = default;
};

QuiverGraph build_quiver(const Algebra& alg);
QuiverGraph build_quiver(const Algebra& alg, const ModSet& highlights);

// Byte-stable exports.  DOT names vertices M_i_j and carries row/col layout
// hints; highlighted vertices get shape=doublecircle.  The JSON schema is
// {"algebra":{"m":..,"l":..},"vertices":[[i,j],..],"arrows":[[[i,j],[i',j']],..],
//  "highlights":[[i,j],..]}.
std::string export_dot(const QuiverGraph& g);
std::string export_json(const QuiverGraph& g);

QuiverGraph parse_quiver_json(const std::string& text);

}  // namespace nakayama
