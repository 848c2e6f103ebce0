#include "pencilaid/serialize.hpp"

#include <set>

namespace pencilaid {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) parse_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

RatMatrix matrix_from_json(const json& j, std::size_t n, const char* name) {
  if (!j.is_array() || j.size() != n)
    throw Error(ErrorCode::InvalidInput, std::string(name) + " must have n rows");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorCode::InvalidInput, std::string(name) + " must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rat_from_json(row[k]);
  }
  return m;
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rat_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json rat_vector_to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) parse_error("modulus must be an array of coefficients");
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(rat_from_json(x));
  return Poly(std::move(c));
}

Pencil pencil_from_brackets(const json& j) {
  const int n = int_field(j, "dim_x");
  if (n <= 0) throw Error(ErrorCode::InvalidInput, "dim_x must be positive");
  const json& list = field(j, "brackets");
  if (!list.is_array()) parse_error("brackets must be an array");
  const auto un = static_cast<std::size_t>(n);
  RatMatrix a(un, un), b(un, un);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : list) {
    const int i = int_field(e, "i"), k = int_field(e, "j");
    if (i < 1 || i > n || k < 1 || k > n)
      throw Error(ErrorCode::InvalidInput, "bracket index out of range 1..dim_x");
    if (i == k) throw Error(ErrorCode::InvalidInput, "bracket [x_i, x_i] must not be listed");
    if (!seen.insert({std::min(i, k), std::max(i, k)}).second)
      throw Error(ErrorCode::InvalidInput, "bracket listed twice");
    const Rat y1 = rat_from_json(field(e, "y1"));
    const Rat y2 = rat_from_json(field(e, "y2"));
    const auto r = static_cast<std::size_t>(i - 1), c = static_cast<std::size_t>(k - 1);
    a(r, c) = y1;
    a(c, r) = -y1;
    b(r, c) = y2;
    b(c, r) = -y2;
  }
  return Pencil(std::move(a), std::move(b));
}

}  // namespace

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  parse_error("rational must be a string such as \"3/4\"");
}

json rat_to_json(const Rat& r) { return r.str(); }

json pencil_to_json(const Pencil& p) {
  return json{{"n", p.size()}, {"A", matrix_to_json(p.a())}, {"B", matrix_to_json(p.b())}};
}

Pencil pencil_from_json(const json& j) {
  if (!j.is_object()) parse_error("expected a JSON object");
  if (j.contains("pencil")) return pencil_from_json(j.at("pencil"));
  if (j.contains("brackets")) return pencil_from_brackets(j);
  const int n = int_field(j, "n");
  if (n <= 0) throw Error(ErrorCode::InvalidInput, "n must be positive");
  const auto un = static_cast<std::size_t>(n);
  return Pencil(matrix_from_json(field(j, "A"), un, "A"), matrix_from_json(field(j, "B"), un, "B"));
}

json invariants_to_json(const PencilInvariants& inv) {
  json pairs = json::array();
  for (const auto& d : inv.pairs) {
    json e;
    switch (d.kind) {
      case ElementaryDivisor::Kind::Infinity: e["type"] = "inf"; break;
      case ElementaryDivisor::Kind::Finite:
        e["type"] = "finite";
        e["alpha"] = rat_to_json(d.alpha);
        break;
      case ElementaryDivisor::Kind::Quadratic:
        e["type"] = "quad";
        e["modulus"] = rat_vector_to_json(d.modulus.coeffs());
        break;
    }
    e["exp"] = d.exponent;
    pairs.push_back(std::move(e));
  }
  return json{{"n", inv.n}, {"pairs", pairs}, {"minimal_indices", inv.minimal_indices}};
}

PencilInvariants invariants_from_json(const json& j) {
  PencilInvariants inv;
  const int n = int_field(j, "n");
  if (n <= 0) throw Error(ErrorCode::InvalidInput, "n must be positive");
  inv.n = static_cast<std::size_t>(n);
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) parse_error("pairs must be an array");
  for (const auto& e : pairs) {
    const json& t = field(e, "type");
    if (!t.is_string()) parse_error("pair type must be a string");
    const std::string type = t.get<std::string>();
    const int exp = int_field(e, "exp");
    if (exp < 1) throw Error(ErrorCode::InvalidInput, "exponent must be at least 1");
    if (type == "inf") {
      inv.pairs.push_back(ElementaryDivisor::infinity(exp));
    } else if (type == "finite") {
      inv.pairs.push_back(ElementaryDivisor::finite(rat_from_json(field(e, "alpha")), exp));
    } else if (type == "quad") {
      const Poly m = poly_from_json(field(e, "modulus"));
      QuadField::make(m);
      inv.pairs.push_back(ElementaryDivisor::quadratic(m, exp));
    } else {
      parse_error("unknown pair type \"" + type + "\"");
    }
  }
  const json& eps = field(j, "minimal_indices");
  if (!eps.is_array()) parse_error("minimal_indices must be an array");
  for (const auto& e : eps) {
    if (!e.is_number_integer() || e.get<int>() < 0)
      throw Error(ErrorCode::InvalidInput, "minimal indices must be non-negative integers");
    inv.minimal_indices.push_back(e.get<int>());
  }
  canonicalize(inv);
  return inv;
}

json spec_to_json(const CanonicalSpec& spec) {
  json blocks = json::array();
  for (const auto& b : spec.blocks) {
    json e;
    switch (b.kind) {
      case BlockSpec::Kind::Inf:
        e = {{"kind", "inf"}, {"e", b.exponent}};
        break;
      case BlockSpec::Kind::Finite:
        e = {{"kind", "finite"}, {"alpha", rat_to_json(b.alpha)}, {"f", b.exponent}};
        break;
      case BlockSpec::Kind::Complex:
        e = {{"kind", "complex"}, {"a", rat_to_json(b.a)}, {"b", rat_to_json(b.b)}, {"m", b.exponent}};
        break;
      case BlockSpec::Kind::MinIdx:
        e = {{"kind", "minidx"}, {"eps", b.exponent}};
        break;
      case BlockSpec::Kind::Quadratic:
        e = {{"kind", "quad"}, {"modulus", rat_vector_to_json(b.modulus.coeffs())}, {"m", b.exponent}};
        break;
    }
    blocks.push_back(std::move(e));
  }
  return json{{"blocks", blocks}};
}

CanonicalSpec spec_from_json(const json& j) {
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) parse_error("blocks must be an array");
  CanonicalSpec spec;
  for (const auto& e : blocks) {
    const json& k = field(e, "kind");
    if (!k.is_string()) parse_error("block kind must be a string");
    const std::string kind = k.get<std::string>();
    if (kind == "inf")
      spec.blocks.push_back(BlockSpec::inf(int_field(e, "e")));
    else if (kind == "finite")
      spec.blocks.push_back(BlockSpec::finite(rat_from_json(field(e, "alpha")), int_field(e, "f")));
    else if (kind == "complex")
      spec.blocks.push_back(BlockSpec::complex(rat_from_json(field(e, "a")),
                                               rat_from_json(field(e, "b")), int_field(e, "m")));
    else if (kind == "minidx")
      spec.blocks.push_back(BlockSpec::min_index(int_field(e, "eps")));
    else if (kind == "quad")
      spec.blocks.push_back(BlockSpec::quadratic(poly_from_json(field(e, "modulus")), int_field(e, "m")));
    else
      throw Error(ErrorCode::InvalidSpec, "unknown block kind \"" + kind + "\"");
  }
  return spec;
}

json aid_result_to_json(const AidResult& r) {
  json basis = json::array();
  for (const auto& d : r.aid_basis.basis)
    basis.push_back(json{{"d1", rat_vector_to_json(d.d1)}, {"d2", rat_vector_to_json(d.d2)}});
  return json{{"mode", field_mode_name(r.mode)}, {"dim_inn", r.dim_inn}, {"dim_c", r.dim_c},
              {"dim_aid", r.dim_aid}, {"aid_basis", basis}};
}

json formula_to_json(const FormulaDims& dims, FieldMode mode) {
  return json{{"mode", field_mode_name(mode)}, {"dim_inn", dims.dim_inn}, {"dim_aid", dims.dim_aid}};
}

FieldMode field_mode_from_string(const std::string& s) {
  if (s == "real") return FieldMode::Real;
  if (s == "closed") return FieldMode::AlgebraicallyClosed;
  throw Error(ErrorCode::InvalidInput, "field must be \"real\" or \"closed\"");
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pencilaid
