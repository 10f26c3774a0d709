#pragma once

#include <json.hpp>

#include "fraccover/fhw.hpp"
#include "fraccover/support_reduction.hpp"

namespace fraccover {

using Json = nlohmann::json;

// Rationals cross every serialized boundary as exact "p" / "p/q" strings.

Json weight_function_to_json(const EdgeWeightFunction& gamma);
Json weight_function_to_json(const VertexWeightFunction& beta);
EdgeWeightFunction edge_weight_function_from_json(const Hypergraph& h, const Json& j);
VertexWeightFunction vertex_weight_function_from_json(const Hypergraph& h, const Json& j);

Json td_to_json(const Hypergraph& h, const TreeDecomposition& td, const Rat& width);
TreeDecomposition td_from_json(const Hypergraph& h, const Json& j);

Json trace_to_json(const TransformationTrace& trace);

}  // namespace fraccover
