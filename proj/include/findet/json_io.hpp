// Wire formats. Field: "Q" or {"Fp": p}. Poly: [[c, [e1,...,es]], ...]
// with c an integer over F_p and a "n" / "n/d" string over Q. Matrix:
// {"m", "n", "s", "field", "entries"} with a row-major entry grid.
#pragma once

#include <nlohmann/json.hpp>

#include "findet/determinacy.hpp"
#include "findet/experiments.hpp"
#include "findet/gaction.hpp"

namespace findet {

using nlohmann::json;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json elem_to_json(const FieldElem& e);
FieldElem elem_from_json(const json& j, const Field& f);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, const Field& f, std::size_t nvars);

json matrix_to_json(const PolyMatrix& m);
// Accepts a bare matrix object or any object carrying one under "matrix".
PolyMatrix matrix_from_json(const json& j);

json codim_to_json(const CodimResult& r);
json report_to_json(const DeterminacyReport& r);
json scan_to_json(const ScanResult& r);

json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const json& j);

}  // namespace findet
