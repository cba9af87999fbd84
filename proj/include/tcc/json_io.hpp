#pragma once

#include <json.hpp>

#include "tcc/czindex.hpp"
#include "tcc/lens.hpp"
#include "tcc/toric.hpp"

namespace tcc {

using nlohmann::json;

// Integers ride as JSON numbers while they fit in 53 bits and as decimal
// strings beyond that, so arbitrary precision survives serialization.
json int_json(const Int& v);
Int parse_int(const json& j);

json intvec_json(const VecZ& v);
VecZ parse_intvec(const json& j);

json rat_json(const Rat& v);  // "p/q" string, or int encoding when integral

struct ParsedInput {
    std::optional<std::vector<VecZ>> diagram_points;  // {"dim", "vertices"}
    std::optional<std::vector<VecZ>> cone_normals;    // {"normals"}
};
// Accepts either the diagram format {"dim": n, "vertices": [[..]]} or the
// cone format {"normals": [[..]]}.
ParsedInput parse_input_json(const json& j);

json diagram_json(const ToricDiagram& d);
json cone_json(const MomentCone& c);
json betti_json(const BettiTable& t);
json lens_form_json(const LensNormalForm& f);

}  // namespace tcc
