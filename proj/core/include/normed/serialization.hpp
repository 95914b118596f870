#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "normed/category.hpp"
#include "normed/counterexamples.hpp"
#include "normed/free_algebra.hpp"
#include "normed/free_space.hpp"
#include "normed/normed_map.hpp"
#include "normed/normed_set.hpp"
#include "normed/scalar.hpp"

/// JSON text formats. Rationals are strings "n" or "p/q"; scalars are
/// ["re", "im"] pairs. Structural problems raise ParseError; references to
/// labels that do not exist raise DomainError.
namespace normed::serialization {

using Json = nlohmann::json;

enum class ScalarMode { real, complex };

/// Parses text; throws ParseError on invalid JSON.
Json parse_json(const std::string& text);
/// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& value);

Json to_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json to_json(const Scalar& value);
/// In real mode a nonzero imaginary part is a ParseError.
Scalar scalar_from_json(const Json& value, ScalarMode mode);

/// {"elements":[{"label":"a","norm":"3/2"}, ...]}
Json to_json(const NormedSet& set);
NormedSet normed_set_from_json(const Json& value);

/// {"domain":..., "codomain":..., "map":[["a","x"], ...]}
Json to_json(const NormedMap& map);
NormedMap normed_map_from_json(const Json& value);

/// {"base":..., "coeffs":[["a","2","0"], ...]}
Json to_json(const free_space::FreeVector& v);
free_space::FreeVector free_vector_from_json(const Json& value, ScalarMode mode);

/// {"base":..., "terms":[{"word":["a","b"],"coeff":["1","0"]}, ...]}
Json to_json(const free_algebra::TensorElement& x);
free_algebra::TensorElement tensor_from_json(const Json& value, ScalarMode mode);

/// [[["re","im"], ...], ...] rows.
Json to_json(const free_algebra::MatrixAlgebra::Matrix& m);

Json to_json(const category::MorphismFlags& flags);
Json to_json(const category::MorphismReport& report);
/// {"kind":..., "object":..., "legs":[map, ...]}
Json to_json(const category::ConstructionResult& result);
Json to_json(const counterexamples::Witness& witness);

}  // namespace normed::serialization
