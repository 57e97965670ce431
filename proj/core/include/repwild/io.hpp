#pragma once

#include <string>

#include <json.hpp>

#include "repwild/combinatorics.hpp"
#include "repwild/module.hpp"

namespace repwild {

using json = nlohmann::json;

// Scalar literals: rationals "a" / "a/b"; prime fields integers; extension
// and cyclotomic elements as coefficient arrays.
json scalar_to_json(const Field& f, const Scalar& s);
Scalar scalar_from_json(const Field& f, const json& j, const std::string& where);

json field_to_json(const FieldDescriptor& d);
FieldDescriptor field_from_json(const json& j, const std::string& where);

// Algebra files: {"schema":1, "field":..., "dim":d, "basis":[...],
//   "sc":[[i,j,k,scalar]...] sorted by (i,j,k), "unit":[...],
//   "augmentation":[...]?, "generators":[[...]]?, "name":?, "family":?}
// Unknown fields are rejected.
json algebra_to_json(const AlgebraTable& A);
AlgebraPtr algebra_from_json(const json& j);
void store_algebra_file(const AlgebraTable& A, const std::string& path);
AlgebraPtr load_algebra_file(const std::string& path);

// Module files: {"schema":1, "algebra": path-or-inline, "dim":d,
//   "actions":[ [[row]...] per basis element ], "name":?}
json module_to_json(const ModuleRep& M, const std::string& algebra_ref);
ModuleRep module_from_json(const json& j, AlgebraPtr A);
void store_module_file(const ModuleRep& M, const std::string& algebra_ref,
                       const std::string& path);
// A may be null: then the file must carry an inline algebra or a path.
ModuleRep load_module_file(const std::string& path, AlgebraPtr A = nullptr);

// Pointed datum files mirror the PointedDatum fields.
PointedDatum datum_from_json(const json& j);
PointedDatum load_datum_file(const std::string& path);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);
json parse_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// SchemaError unless j's keys are within allowed and required are present.
void require_keys(const json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where);

}  // namespace repwild
