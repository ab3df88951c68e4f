#pragma once

// JSON encodings.
//
//   element   [c0, c1, ...]                      coefficients, low degree first
//   cubic     {"field": "p^m", "coeffs": {"002": [1], ...}}   nonzero entries
//             or {"field": ..., "form": "X^2Z + ..."}; optional "modulus"
//   rep       {"field": ..., "m0": M, "m1": M, "m2": M}, M a 3x3 array of
//             elements; or {"field": ..., "matrix": "[[0, Z, Y], ...]"}
//   witness   {"a": M, "b": M}

#include <nlohmann/json.hpp>

#include "cubicdet/counting.hpp"
#include "cubicdet/detrep.hpp"
#include "cubicdet/gf.hpp"
#include "cubicdet/oracle.hpp"
#include "cubicdet/plane.hpp"

namespace cubicdet {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& field);
/// Reads "field" (and "modulus" if present) from an object.
const FieldSpec& field_from_json(const Json& j);

Json element_to_json(const FieldElement& a);
FieldElement element_from_json(const FieldSpec& field, const Json& j);

Json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const FieldSpec& field, const Json& j);

Json mat3_to_json(const Mat3& m);
Mat3 mat3_from_json(const FieldSpec& field, const Json& j);

Json cubic_to_json(const TernaryCubic& f);
TernaryCubic cubic_from_json(const Json& j);

Json rep_to_json(const LinearMatrixRep& m);
LinearMatrixRep rep_from_json(const Json& j);

Json witness_to_json(const EquivalenceWitness& w);
EquivalenceWitness witness_from_json(const FieldSpec& field, const Json& j);

Json report_to_json(const CountReport& r);
Json census_to_json(const OrbitCensus& c);

}  // namespace cubicdet
