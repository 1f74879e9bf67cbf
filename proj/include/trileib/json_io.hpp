#pragma once

#include <string>

#include <json.hpp>

#include "trileib/algebra.hpp"
#include "trileib/catalog.hpp"
#include "trileib/extension.hpp"
#include "trileib/symbolic.hpp"

namespace trileib {

using nlohmann::json;

// Raised for unreadable or schema-violating input; message carries the
// parse location when one is known.
struct JsonInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses text, translating parse failures into JsonInputError with the
// byte offset.
json parse_json(const std::string& text);
json load_json_file(const std::string& path);

// {"dim": d, "basis": [...], "brackets": [[i, j, k, "c"], ...]} with 1-based
// indices and only nonzero entries; rationals as "p/q" strings.
json algebra_to_json(const StructureConstants& L);
StructureConstants algebra_from_json(const json& j);

// {"n": .., "f": .., "A": [[row-major rationals]], "B": [...],
//  "sigma": {"a,b": {"ik": "value"}}}
json spec_to_json(const ExtensionSpec& spec);
ExtensionSpec spec_from_json(const json& j);

// {"mu": [{"ik": "value", ...}  per generator]}
ShiftParams shift_from_json(std::size_t n, std::size_t f, const json& j);
// {"G": [row-major rationals]}
BasisTransform basis_transform_from_json(std::size_t n, const json& j);
// {"M": [row-major rationals]}
RatMatrix recombine_from_json(std::size_t f, const json& j);

json signature_to_json(const InvariantSignature& sig);
json residual_report_to_json(const ResidualReport& rep);
json reduction_to_json(const LinearReduction& red);
json entry_report_to_json(const EntryReport& rep);
json distinctness_to_json(const DistinctnessReport& rep);

// Versioned export of the classified families (shipped in data/catalog.json).
json catalog_to_json();

bool looks_like_spec(const json& j);

}  // namespace trileib
