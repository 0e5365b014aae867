#pragma once

#include "k3pol/integer.hpp"
#include "k3pol/lattice.hpp"
#include "k3pol/matrix.hpp"
#include "k3pol/zlinalg.hpp"

#include <nlohmann/json.hpp>

namespace k3pol {

struct BeauvilleMukaiWitness;
struct Certificate;
class InvariantClass;
struct MonodromyInvariant;
class MukaiVector;

// Integers are written as decimal strings. Readers also accept JSON
// integers; anything else throws Error(invalid_argument).
nlohmann::json to_json(const Integer& x);
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const RationalVector& v);
nlohmann::json to_json(const IntegerMatrix& m);
nlohmann::json to_json(const Lattice& l);
nlohmann::json to_json(const LatticeVector& v);
nlohmann::json to_json(const Signature& s);
nlohmann::json to_json(const PolarizationType& t);
nlohmann::json to_json(const MukaiVector& v);
nlohmann::json to_json(const InvariantClass& c);
nlohmann::json to_json(const MonodromyInvariant& m);
nlohmann::json to_json(const BeauvilleMukaiWitness& w);
nlohmann::json to_json(const Certificate& c);

Integer integer_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);
IntVector int_vector_from_json(const nlohmann::json& j);
RationalVector rational_vector_from_json(const nlohmann::json& j);
// [[...], ...]; an object with a "matrix" or "gram" member is also accepted.
IntegerMatrix matrix_from_json(const nlohmann::json& j);
// {"rank": r, "gram": [[...]]}; rank must match the Gram matrix.
Lattice lattice_from_json(const nlohmann::json& j);

// Parses text; malformed JSON throws Error(invalid_argument).
nlohmann::json parse_json(std::string_view text);

}  // namespace k3pol
