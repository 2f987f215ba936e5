#include "hermdiag/json_io.hpp"

#include <stdexcept>

namespace hermdiag::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw std::invalid_argument(std::string("field \"") + key + "\" must be an array");
  return v;
}

}  // namespace

json to_json(const Rational& value) { return to_fraction_string(value); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : array_field(j, "coeffs")) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

json to_json(const HermiteExpansion& e) {
  json coeffs = json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(to_json(c));
  return {{"alpha", to_json(e.alpha().value())}, {"coeffs", coeffs}};
}

HermiteExpansion expansion_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : array_field(j, "coeffs")) coeffs.push_back(rational_from_json(c));
  return HermiteExpansion(HermiteParam(rational_from_json(field(j, "alpha"))), std::move(coeffs));
}

json to_json(const HermiteDiffOp& op) {
  json q = json::array();
  for (const auto& p : op.Q) q.push_back(to_json(p));
  return {{"alpha", to_json(op.alpha.value())}, {"p_shift", op.p_shift}, {"Q", q}};
}

HermiteDiffOp operator_from_json(const json& j) {
  const json& shift = field(j, "p_shift");
  if (!shift.is_number_unsigned()) throw std::invalid_argument("p_shift must be a nonnegative integer");
  HermiteDiffOp op{HermiteParam(rational_from_json(field(j, "alpha"))), shift.get<std::size_t>(), {}};
  for (const auto& p : array_field(j, "Q")) op.Q.push_back(polynomial_from_json(p));
  return op;
}

json to_json(const RealityTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) rows.push_back({{"k", r.k}, {"real_rooted", r.real_rooted}});
  return {{"alpha", to_json(table.alpha)}, {"p", table.p}, {"rows", rows}};
}

json to_json(const Witness& w) {
  return {{"family", w.family}, {"input", to_json(w.input)}, {"output", to_json(w.output)}};
}

json to_json(const Verdict& v) {
  json out = {{"status", to_string(v.status)}, {"reason", v.reason}};
  if (v.bound) out["bound"] = *v.bound;
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

json to_json(const std::vector<LaguerreDemoRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json item = {{"a", to_json(row.a)}, {"status", row.status}};
    if (row.witness_input && row.witness_output) {
      item["witness"] = {{"input", to_json(*row.witness_input)}, {"output", to_json(*row.witness_output)}};
    }
    out.push_back(std::move(item));
  }
  return out;
}

GammaSeq sequence_from_json(const json& j) {
  std::vector<Rational> head;
  for (const auto& g : array_field(j, "gammas")) head.push_back(rational_from_json(g));
  Rational tail = j.contains("tail") ? rational_from_json(field(j, "tail")) : Rational(0);
  return GammaSeq::explicit_list(std::move(head), std::move(tail));
}

}  // namespace hermdiag::io
