#pragma once

#include "nvl/census.hpp"
#include "nvl/hilbert_fiber.hpp"
#include "nvl/normal_forms.hpp"
#include "nvl/s_variety.hpp"
#include "nvl/slices.hpp"

#include <json.hpp>

namespace nvl {

using Json = nlohmann::json;

/// {"kind":"Q"} or {"kind":"Fp","p":5}.
Json to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

/// Scalars are strings; plain JSON integers are accepted on input.
Scalar scalar_from_json(const Json& j, FieldSpec f);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, FieldSpec f);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, FieldSpec f, std::size_t rows, std::size_t cols);

/// Adds "variety":"S" when variety is S.
Json to_json(const Quadruple& q, Variety variety = Variety::N);
Quadruple quadruple_from_json(const Json& j);
/// "N" unless the object carries "variety":"S".
Variety variety_of(const Json& j);

Json to_json(const StratumLabel& l);
Json to_json(const SLabel& l);
Json to_json(const PsiImage& p);
PsiImage psi_from_json(const Json& j);
Json to_json(const CanonicalParams& p);
CanonicalParams canonical_params_from_json(const Json& j);
Json to_json(const StabilizerReport& rep);
Json to_json(const Staircase& s);

/// {"field", "r", "X1", "Y1", "i", "X2", "Y2", "alpha": {"a,b": [...]}, "beta": {...}}.
SliceData slice_data_from_json(const Json& j);
/// {"field", "n", "r", "c", "d", "alpha_rows", "beta_top"}.
RegularSliceParams regular_slice_params_from_json(const Json& j);

} // namespace nvl
