#ifndef WHA_JSON_IO_HPP
#define WHA_JSON_IO_HPP

#include <json.hpp>

#include "wha/equivalence.hpp"

namespace wha::io {

using json = nlohmann::ordered_json;

// FieldSpec: {"kind":"Q"} or {"kind":"Fp","p":3}.
json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

// Matrices are arrays of rows; entries are strings ("3/2" over Q, decimal
// residues over Fp).
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldSpec& field);

// Mor: {"dom":..,"cod":..,"field":..,"mat":..}.
json mor_to_json(const Mor& m);
Mor mor_from_json(const json& j);

json groupoid_to_json(const Groupoid& g);
Groupoid groupoid_from_json(const json& j);

// Weak Hopf data: either raw structure maps
//   {"dim":..,"field":..,"eta":..,"mu":..,"eps":..,"delta":..,"lambda":..}
// or a groupoid algebra {"groupoid":..,"field":..}.
HopfData hopf_data_from_json(const json& j);
json hopf_data_to_json(const HopfData& d);

// Module algebra: {"hopf":..,"algebra":{"eta":..,"mu":..},"phi":..}.
// An optional field override reinterprets every matrix entry.
ModuleAlgebra module_algebra_from_json(const json& j,
                                       const std::optional<FieldSpec>& field_override = {});

json cochain_to_json(const ModuleAlgebra& ctx, const Cochain& c);
Cochain cochain_from_json(const ModuleAlgebra& ctx, const json& j);

json axiom_report_to_json(const AxiomReport& r);
json module_algebra_report_to_json(const ModuleAlgebraReport& r);
json h2_to_json(const ModuleAlgebra& ctx, const H2Result& r);
json crossed_to_json(const CrossedProductData& cp);
json classification_to_json(const ModuleAlgebra& ctx, const ClassificationReport& r);

json load_file(const std::string& path); // throws IOErr / ParseErr

} // namespace wha::io

#endif
