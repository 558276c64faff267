#ifndef RIGID_JSON_IO_HPP_
#define RIGID_JSON_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "rigid/errors.hpp"
#include "rigid/homological.hpp"
#include "rigid/object.hpp"
#include "rigid/series.hpp"
#include "rigid/tate.hpp"

namespace rigid::io {

using json = nlohmann::json;

// Input that does not match a schema; pointer() is the JSON pointer of the
// offending value.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what) : Error(what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// Readers. `at` is the pointer of j inside the document, used in errors.
// Rationals are strings "p/q" or JSON integers; polynomials are coefficient
// lists, lowest degree first; matrices are lists of rows.
Rational read_rational(const json& j, const std::string& at);
Vector read_vector(const json& j, const std::string& at);
Matrix read_matrix(const json& j, const std::string& at);
Polynomial read_polynomial(const json& j, const std::string& at);
Algebra read_algebra(const json& j, const std::string& at = "");
ObjectDatum read_object(const json& j, const std::string& at = "");
CategoryDatum read_category(const json& j, const std::string& at = "");
RealizedObject read_realized(const json& j, const std::string& at = "");

// Writers.
json write(const Rational& r);
json write(const Vector& v);
json write(const Polynomial& p);
json write(const RationalFunction& f);  // {"num": [...], "den": [...], "text": "..."}
json write(const Matrix& m);
json write_algebra(const Algebra& a);

// Parses text; throws SchemaError at "" on malformed JSON.
json parse(const std::string& text);

}  // namespace rigid::io

#endif  // RIGID_JSON_IO_HPP_
