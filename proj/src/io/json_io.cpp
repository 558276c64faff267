#include "rigid/json_io.hpp"

namespace rigid::io {

namespace {

std::string child(const std::string& at, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return at + "/" + escaped;
}

std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const json& member(const json& j, const std::string& at, const std::string& key) {
  if (!j.is_object()) throw SchemaError(at, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(at, key), "missing required field '" + key + "'");
  return *it;
}

const json& array(const json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "expected an array");
  return j;
}

std::size_t read_count(const json& j, const std::string& at) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(at, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

long read_long(const json& j, const std::string& at) {
  if (!j.is_number_integer()) throw SchemaError(at, "expected an integer");
  return j.get<long>();
}

bool read_bool(const json& j, const std::string& at) {
  if (!j.is_boolean()) throw SchemaError(at, "expected a boolean");
  return j.get<bool>();
}

// Rewraps library validation errors raised while building a value.
template <typename F>
auto validated(const std::string& at, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const SchemaError&) {
    throw;
  } catch (const NotSemisimple&) {
    throw;  // well-formed input that fails a check
  } catch (const Error& e) {
    throw SchemaError(at, e.what());
  }
}

}  // namespace

Rational read_rational(const json& j, const std::string& at) {
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (!j.is_string()) throw SchemaError(at, "expected a rational as a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(at, e.what());
  }
}

Vector read_vector(const json& j, const std::string& at) {
  Vector out;
  for (std::size_t i = 0; i < array(j, at).size(); ++i) out.push_back(read_rational(j[i], child(at, i)));
  return out;
}

Matrix read_matrix(const json& j, const std::string& at) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < array(j, at).size(); ++i) {
    rows.push_back(read_vector(j[i], child(at, i)));
    if (rows.back().size() != rows.front().size()) throw SchemaError(child(at, i), "ragged matrix row");
  }
  if (rows.empty()) return Matrix(0, 0);
  return Matrix::from_rows(rows);
}

Polynomial read_polynomial(const json& j, const std::string& at) { return Polynomial(read_vector(j, at)); }

Algebra read_algebra(const json& j, const std::string& at) {
  const std::size_t n = read_count(member(j, at, "dim"), child(at, "dim"));
  const std::string mul_at = child(at, "mul");
  const json& mul = array(member(j, at, "mul"), mul_at);
  if (mul.size() != n) throw SchemaError(mul_at, "expected " + std::to_string(n) + " rows");
  Vector constants(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_at = child(mul_at, i);
    if (array(mul[i], row_at).size() != n) throw SchemaError(row_at, "expected " + std::to_string(n) + " products");
    for (std::size_t k = 0; k < n; ++k) {
      const std::string prod_at = child(row_at, k);
      const Vector v = read_vector(mul[i][k], prod_at);
      if (v.size() != n) throw SchemaError(prod_at, "expected " + std::to_string(n) + " coordinates");
      for (std::size_t l = 0; l < n; ++l) constants[(i * n + k) * n + l] = v[l];
    }
  }
  const Vector unit = read_vector(member(j, at, "unit"), child(at, "unit"));
  if (unit.size() != n) throw SchemaError(child(at, "unit"), "expected " + std::to_string(n) + " coordinates");
  return validated(at, [&] { return Algebra(n, constants, unit); });
}

ObjectDatum read_object(const json& j, const std::string& at) {
  Algebra a = read_algebra(member(j, at, "algebra"), child(at, "algebra"));
  const Vector trace = read_vector(member(j, at, "trace"), child(at, "trace"));
  if (trace.size() != a.dim()) throw SchemaError(child(at, "trace"), "trace length differs from the algebra dimension");
  return validated(at, [&] { return ObjectDatum(a, trace); });
}

CategoryDatum read_category(const json& j, const std::string& at) {
  const std::string list_at = child(at, "simples");
  const json& list = array(member(j, at, "simples"), list_at);
  std::vector<SimpleClass> simples;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string s_at = child(list_at, i);
    const json& s = list[i];
    SimpleClass c;
    const json& name = member(s, s_at, "name");
    if (!name.is_string()) throw SchemaError(child(s_at, "name"), "expected a string");
    c.name = name.get<std::string>();
    c.delta = static_cast<unsigned>(read_count(member(s, s_at, "delta"), child(s_at, "delta")));
    c.d = static_cast<unsigned>(read_count(member(s, s_at, "d"), child(s_at, "d")));
    c.mu = read_long(member(s, s_at, "mu"), child(s_at, "mu"));
    c.minpoly = read_polynomial(member(s, s_at, "minpoly"), child(s_at, "minpoly"));
    c.is_unit = s.contains("unit") ? read_bool(s["unit"], child(s_at, "unit")) : false;
    simples.push_back(std::move(c));
  }
  return validated(at, [&] { return CategoryDatum(std::move(simples)); });
}

RealizedObject read_realized(const json& j, const std::string& at) {
  Matrix fp = read_matrix(member(j, at, "fplus"), child(at, "fplus"));
  Matrix fm = read_matrix(member(j, at, "fminus"), child(at, "fminus"));
  std::vector<Vector> image;
  const std::string img_at = child(at, "hom_image");
  const json& img = array(member(j, at, "hom_image"), img_at);
  for (std::size_t i = 0; i < img.size(); ++i) image.push_back(read_vector(img[i], child(img_at, i)));
  const std::size_t nil = read_count(member(j, at, "nil_dim"), child(at, "nil_dim"));
  return validated(at, [&] { return RealizedObject(fp, fm, image, nil); });
}

json write(const Rational& r) { return to_string(r); }

json write(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(write(x));
  return out;
}

json write(const Polynomial& p) { return write(p.coefficients()); }

json write(const RationalFunction& f) {
  return {{"num", write(f.num())}, {"den", write(f.den())}, {"text", f.to_string()}};
}

json write(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(write(m.row(i)));
  return out;
}

json write_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  json mul = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(write(a.multiply(a.basis(i), a.basis(k))));
    mul.push_back(row);
  }
  return {{"dim", n}, {"mul", mul}, {"unit", write(a.unit())}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace rigid::io
