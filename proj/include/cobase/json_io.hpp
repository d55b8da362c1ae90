#pragma once

// JSON matroid descriptions, report serialization, DOT export, and the
// textual model-vertex format used on the command line.

#include <string>

#include "cobase/bcgraph.hpp"
#include "cobase/ham.hpp"
#include "cobase/matroid.hpp"
#include "cobase/wheels.hpp"

#include "json.hpp"

namespace cobase {

// {"type": "uniform"|"gf2"|"graphic"|"transversal"|"lpm"|"wheel"|"whirl"|
//  "necklace"|"r10"|"dual"|"sum"|"minor"|"series_ext"|"parallel_ext"|
//  "explicit", ...parameters per type}
Matroid matroid_from_json(const nlohmann::json& j);
Matroid matroid_from_string(const std::string& text);

nlohmann::json report_to_json(const PropertyReport& rep);

std::string graph_to_dot(const BCGraph& g);
std::string model_to_dot(const StitchedModel& model);

// "+0110" / "-0110"; shared whirl vertices print with '=' and parse with
// any sign.
std::string model_vertex_to_string(int n, ModelVertex v);
ModelVertex model_vertex_from_string(const std::string& text);

nlohmann::json certificate_to_json(int n, WWKind kind, const HamCertificate& cert);

}  // namespace cobase
