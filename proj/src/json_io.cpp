#include "k3pol/json_io.hpp"

#include "k3pol/certificate.hpp"
#include "k3pol/error.hpp"
#include "k3pol/mukai.hpp"

namespace k3pol {

using nlohmann::json;

json to_json(const Integer& x) { return to_string(x); }
json to_json(const Rational& q) { return to_string(q); }

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const IntegerMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    out.push_back(to_json(IntVector(r.begin(), r.end())));
  }
  return out;
}

json to_json(const Lattice& l) { return {{"rank", l.rank()}, {"gram", to_json(l.gram())}}; }

json to_json(const LatticeVector& v) { return to_json(v.coords()); }

json to_json(const Signature& s) {
  return json::array({s.positive, s.zero, s.negative});
}

json to_json(const PolarizationType& t) { return to_json(t.chain()); }

json to_json(const MukaiVector& v) {
  return {{"r", to_json(v.r())}, {"c", to_json(v.c())}, {"s", to_json(v.s())}};
}

json to_json(const InvariantClass& c) {
  return {{"n", std::to_string(c.n())},
          {"d", std::to_string(c.d())},
          {"b_star", std::to_string(c.b_star())}};
}

json to_json(const MonodromyInvariant& m) {
  json sat = json::array(), witness = json::array();
  for (const auto& v : m.saturation_basis) sat.push_back(to_json(v));
  for (const auto& v : m.witness_basis) witness.push_back(to_json(v));
  return {{"d", to_json(m.divisibility)},
          {"b", std::to_string(m.b)},
          {"b_star", std::to_string(m.invariant.b_star())},
          {"invariant", to_json(m.invariant)},
          {"saturation_basis", sat},
          {"witness_basis", witness},
          {"gram_H", to_json(m.gram)}};
}

json to_json(const BeauvilleMukaiWitness& w) {
  json checks = json::array();
  bool all = true;
  for (const auto& c : w.checks) {
    checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    all = all && c.passed;
  }
  auto status = [&](const char* name) {
    for (const auto& c : w.checks)
      if (c.name == name) return c.passed ? "pass" : "fail";
    return "missing";
  };
  return {{"n", std::to_string(w.n)},
          {"d", std::to_string(w.d)},
          {"b", std::to_string(w.b)},
          {"k", to_json(w.k)},
          {"beta", to_json(w.beta)},
          {"s", to_json(w.s)},
          {"v", to_json(w.v)},
          {"alpha", to_json(w.alpha)},
          {"(v,v)", to_json(w.self_pairing)},
          {"moduli_dimension", to_json(w.dimension)},
          {"(alpha,v)", to_json(w.alpha_dot_v)},
          {"div_alpha", to_json(w.div_alpha)},
          {"div_check", status("div_check")},
          {"alpha_invariant", to_json(w.alpha_invariant)},
          {"checks", checks},
          {"status", all ? "pass" : "fail"}};
}

json to_json(const Certificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"step", s.step},
                     {"claim", s.claim},
                     {"paper_tag", s.tag},
                     {"status", std::string(to_string(s.status))},
                     {"witness", s.witness}});
  json out = {{"n", std::to_string(c.n)}, {"lambda", to_json(c.lambda)}, {"steps", steps}};
  if (c.conclusion) {
    out["conclusion"] = {{"polarization_type", to_json(*c.conclusion)},
                         {"principal", c.conclusion->is_principal()},
                         {"justified_by", json::array({"deformation_invariance",
                                                       "beauville_mukai_principal"})}};
    out["status"] = "complete";
  } else {
    out["conclusion"] = nullptr;
    out["status"] = "failed";
  }
  return out;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::invalid_argument, what); }

const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be a JSON array");
  return j;
}

}  // namespace

Integer integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  bad("expected an integer or a decimal string, got " + j.dump());
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(integer_from_json(j));
}

IntVector int_vector_from_json(const json& j) {
  IntVector out;
  for (const auto& e : array_of(j, "vector")) out.push_back(integer_from_json(e));
  return out;
}

RationalVector rational_vector_from_json(const json& j) {
  RationalVector out;
  for (const auto& e : array_of(j, "vector")) out.push_back(rational_from_json(e));
  return out;
}

IntegerMatrix matrix_from_json(const json& j) {
  if (j.is_object()) {
    if (j.contains("matrix")) return matrix_from_json(j.at("matrix"));
    if (j.contains("gram")) return matrix_from_json(j.at("gram"));
    bad("matrix object needs a \"matrix\" or \"gram\" member");
  }
  std::vector<IntVector> rows;
  for (const auto& r : array_of(j, "matrix")) rows.push_back(int_vector_from_json(r));
  if (rows.empty()) bad("matrix must have at least one row");
  const std::size_t cols = rows.front().size();
  if (cols == 0) bad("matrix must have at least one column");
  for (const auto& r : rows)
    if (r.size() != cols) bad("matrix rows have different lengths");
  return IntegerMatrix::from_rows(rows, cols);
}

Lattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gram")) bad("lattice must be an object with a \"gram\" member");
  IntegerMatrix gram = matrix_from_json(j.at("gram"));
  if (j.contains("rank")) {
    const Integer rank = integer_from_json(j.at("rank"));
    if (rank != gram.rows()) bad("lattice rank does not match the Gram matrix");
  }
  return Lattice(std::move(gram));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace k3pol
