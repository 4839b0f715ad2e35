#pragma once

// JSON encoding of the report payload types. Every encoder has a matching
// decoder with from_json(to_json(x)) == x.

#include <json.hpp>

#include "kronface/pipeline.hpp"

namespace kronface {

using Json = nlohmann::json;

void to_json(Json& j, const Partition& p);
void from_json(const Json& j, Partition& p);
void to_json(Json& j, const Permutation& p);
void from_json(const Json& j, Permutation& p);
void to_json(Json& j, const GridIndex& c);
void from_json(const Json& j, GridIndex& c);
void to_json(Json& j, const WeylPair& v);
void from_json(const Json& j, WeylPair& v);
void to_json(Json& j, const OrderMatrix& m);
void from_json(const Json& j, OrderMatrix& m);
void to_json(Json& j, const ConfigAnchor& a);
void from_json(const Json& j, ConfigAnchor& a);
void to_json(Json& j, const PairDescriptor& p);
void from_json(const Json& j, PairDescriptor& p);
void to_json(Json& j, const FaceEquation& e);
void from_json(const Json& j, FaceEquation& e);
void to_json(Json& j, const LatticeTriple& t);
void from_json(const Json& j, LatticeTriple& t);
void to_json(Json& j, const PairRef& r);
void from_json(const Json& j, PairRef& r);
void to_json(Json& j, const StabilityReport& r);
void from_json(const Json& j, StabilityReport& r);
void to_json(Json& j, const FaceDescriptor& f);
void from_json(const Json& j, FaceDescriptor& f);

/// Rationals as "p" or "p/q".
Json rational_matrix_to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const Json& j);

/// {"parameters", "order_matrices", "pairs", "faces"}.
Json result_to_json(const PipelineResult& r);

}  // namespace kronface
