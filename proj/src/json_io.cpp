#include "nvl/json_io.hpp"

#include "nvl/errors.hpp"

namespace nvl {

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("json: missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t size_of(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw PreconditionError(std::string("json: \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

FieldSpec field_or_q(const Json& j) { return j.contains("field") ? field_from_json(j.at("field")) : FieldSpec::rationals(); }

std::vector<Scalar> scalars_from_json(const Json& j, FieldSpec f) {
  if (!j.is_array()) throw PreconditionError("json: expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& e : j) out.push_back(scalar_from_json(e, f));
  return out;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Cell parse_cell(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw PreconditionError("json: cell key must look like \"a,b\": " + key);
  try {
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
  } catch (const std::exception&) {
    throw PreconditionError("json: bad cell key " + key);
  }
}

std::map<Cell, Vector> cell_map(const Json& j, FieldSpec f, std::size_t len) {
  std::map<Cell, Vector> out;
  if (!j.is_object()) throw PreconditionError("json: alpha/beta must be objects keyed by \"a,b\"");
  for (const auto& [key, val] : j.items()) {
    Vector v = vector_from_json(val, f);
    if (v.size() != len) throw PreconditionError("json: covector for cell " + key + " has the wrong length");
    out[parse_cell(key)] = std::move(v);
  }
  return out;
}

std::string axis_name(Axis a) { return a == Axis::YRegular ? "YRegular" : "XRegular"; }

Axis parse_axis(const Json& j) {
  std::string s = j.get<std::string>();
  if (s == "YRegular") return Axis::YRegular;
  if (s == "XRegular") return Axis::XRegular;
  throw PreconditionError("json: orientation must be YRegular or XRegular");
}

} // namespace

Json to_json(const FieldSpec& f) {
  if (!f.is_prime_field()) return {{"kind", "Q"}};
  return {{"kind", "Fp"}, {"p", f.modulus()}};
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return FieldSpec::rationals();
    throw PreconditionError("json: unknown field " + s);
  }
  std::string kind = field_of(j, "kind").get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") return FieldSpec::prime(size_of(j, "p"));
  throw PreconditionError("json: field kind must be Q or Fp");
}

Scalar scalar_from_json(const Json& j, FieldSpec f) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  throw PreconditionError("json: scalars must be strings or integers");
}

Json to_json(const Vector& v) { return scalars_to_json(v.entries()); }

Vector vector_from_json(const Json& j, FieldSpec f) { return Vector(f, scalars_from_json(j, f)); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, FieldSpec f, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw PreconditionError("json: matrix has the wrong number of rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector v = vector_from_json(j[r], f);
    if (v.size() != cols) throw PreconditionError("json: matrix row has the wrong length");
    m.set_row(r, v);
  }
  return m;
}

Json to_json(const Quadruple& q, Variety variety) {
  Json out = {{"n", q.n}, {"field", to_json(q.field)}, {"X", to_json(q.X)}, {"Y", to_json(q.Y)},
              {"i", to_json(q.i)}, {"j", to_json(q.j)}};
  if (variety == Variety::S) out["variety"] = "S";
  return out;
}

Variety variety_of(const Json& j) {
  if (j.is_object() && j.contains("variety")) return parse_variety(j.at("variety").get<std::string>());
  return Variety::N;
}

Quadruple quadruple_from_json(const Json& j) {
  const std::size_t n = size_of(j, "n");
  const FieldSpec f = field_or_q(j);
  Quadruple q{n, f, matrix_from_json(field_of(j, "X"), f, n, n), matrix_from_json(field_of(j, "Y"), f, n, n),
              vector_from_json(field_of(j, "i"), f), vector_from_json(field_of(j, "j"), f)};
  q.validate();
  return q;
}

Json to_json(const StratumLabel& l) { return {{"r", l.r}, {"s", l.s}, {"commuting", l.commuting}}; }

Json to_json(const SLabel& l) { return {{"r", l.r}, {"s", l.s}}; }

Json to_json(const PsiImage& p) {
  return {{"t", p.t},
          {"right_orientation", axis_name(p.right_orientation)},
          {"a", scalars_to_json(p.a)},
          {"left_orientation", axis_name(p.left_orientation)},
          {"b", scalars_to_json(p.b)},
          {"ideals", format_psi(p)}};
}

PsiImage psi_from_json(const Json& j) {
  const FieldSpec f = field_or_q(j);
  PsiImage p;
  p.t = size_of(j, "t");
  p.right_orientation = j.contains("right_orientation") ? parse_axis(j.at("right_orientation")) : Axis::YRegular;
  p.left_orientation = j.contains("left_orientation") ? parse_axis(j.at("left_orientation")) : Axis::XRegular;
  p.a = scalars_from_json(field_of(j, "a"), f);
  p.b = scalars_from_json(field_of(j, "b"), f);
  return p;
}

Json to_json(const CanonicalParams& p) {
  return {{"n", p.n}, {"t", p.t}, {"a", scalars_to_json(p.a)}, {"b", scalars_to_json(p.b)}, {"field", to_json(p.field)}};
}

CanonicalParams canonical_params_from_json(const Json& j) {
  CanonicalParams p;
  p.field = field_or_q(j);
  p.n = size_of(j, "n");
  p.t = size_of(j, "t");
  p.a = scalars_from_json(field_of(j, "a"), p.field);
  p.b = scalars_from_json(field_of(j, "b"), p.field);
  p.validate();
  return p;
}

Json to_json(const StabilizerReport& rep) {
  Json basis = Json::array();
  for (const auto& m : rep.basis) basis.push_back(to_json(m));
  return {{"dim", rep.dim}, {"basis", basis}};
}

Json to_json(const Staircase& s) {
  Json cells = Json::array();
  for (Cell c : s.cells()) cells.push_back({c.a, c.b});
  return {{"size", s.size()}, {"cells", cells}, {"text", s.to_string()}};
}

SliceData slice_data_from_json(const Json& j) {
  SliceData s;
  s.field = field_or_q(j);
  s.r = size_of(j, "r");
  s.X1 = matrix_from_json(field_of(j, "X1"), s.field, s.r, s.r);
  s.Y1 = matrix_from_json(field_of(j, "Y1"), s.field, s.r, s.r);
  s.i1 = vector_from_json(field_of(j, "i"), s.field);
  const Json& x2 = field_of(j, "X2");
  if (!x2.is_array()) throw PreconditionError("json: X2 must be a matrix");
  const std::size_t m = x2.size();
  s.X2 = matrix_from_json(x2, s.field, m, m);
  s.Y2 = matrix_from_json(field_of(j, "Y2"), s.field, m, m);
  if (s.i1.size() == s.r + m) {
    // Length-n form: support must lie in the first r coordinates.
    for (std::size_t k = s.r; k < s.i1.size(); ++k) {
      if (!s.i1[k].is_zero()) throw PreconditionError("json: i must be supported on the first r coordinates");
    }
    s.i1 = s.i1.slice(0, s.r);
  }
  s.alpha = j.contains("alpha") ? cell_map(j.at("alpha"), s.field, m) : std::map<Cell, Vector>{};
  s.beta = j.contains("beta") ? cell_map(j.at("beta"), s.field, m) : std::map<Cell, Vector>{};
  return s;
}

RegularSliceParams regular_slice_params_from_json(const Json& j) {
  RegularSliceParams p;
  p.field = field_or_q(j);
  p.n = size_of(j, "n");
  p.r = size_of(j, "r");
  p.c = j.contains("c") ? scalars_from_json(j.at("c"), p.field) : std::vector<Scalar>{};
  p.d = j.contains("d") ? scalars_from_json(j.at("d"), p.field) : std::vector<Scalar>{};
  for (const auto& row : field_of(j, "alpha_rows")) p.alpha_rows.push_back(vector_from_json(row, p.field));
  p.beta_top = vector_from_json(field_of(j, "beta_top"), p.field);
  return p;
}

} // namespace nvl
