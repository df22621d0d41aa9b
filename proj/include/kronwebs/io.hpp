#pragma once

// JSON forms of the library types. Rationals are strings "p" or "p/q".
// Missing or mistyped fields raise SchemaError; malformed rationals ParseError.

#include <json.hpp>

#include "kronwebs/lie_poisson.hpp"
#include "kronwebs/relations.hpp"
#include "kronwebs/skew_pairs.hpp"

namespace kronwebs::io {

using json = nlohmann::json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json to_json(const Vec& v);
Vec vec_from_json(const json& j);
json to_json(const Mat& m);  // {"rows", "cols", "entries"}
Mat mat_from_json(const json& j);
json to_json(const Subspace& s);
json to_json(const UniPoly& p, const std::string& var);
json to_json(const BinaryForm& f);
json to_json(const ProjPoint& p);
ProjPoint point_from_json(const json& j);

json to_json(const LinearRelation& r);  // {"dim_v", "basis"}
LinearRelation relation_from_json(const json& j);
json to_json(const Pencil& p);
Pencil pencil_from_json(const json& j);
json to_json(const SkewPair& p);  // {"n", "h1", "h2"}
SkewPair pair_from_json(const json& j);
json to_json(const BlockSpec& b);
json to_json(const Decomposition& d);

json to_json(const LieAlgebraData& g);  // {"n", "brackets"}
LieAlgebraData lie_from_json(const json& j);  // validates Jacobi
json to_json(const MPoly& p);  // [[exponents, "coef"], ...]
MPoly mpoly_from_json(std::size_t nvars, const json& j);
// Table with optional names, c1, invariants, cartan.
LieTable table_from_json(const json& j);

json parse(const std::string& text);
json read_file(const std::string& path);

// Field access with schema errors.
const json& field(const json& j, const char* name);

}  // namespace kronwebs::io
