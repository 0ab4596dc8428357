#include "cyclojones/json_io.hpp"

#include <string>

namespace cyclojones {

using nlohmann::json;

json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, c.get_str()}));
  return {{"variable", std::string(1, variable_name(p.variable()))}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variable") || !j.contains("terms"))
    throw ParseError("polynomial JSON needs \"variable\" and \"terms\"", 0);
  const auto& var = j.at("variable");
  if (!var.is_string() || (var != "t" && var != "A"))
    throw ParseError("variable must be \"t\" or \"A\"", 0);
  const Variable v = var == "t" ? Variable::t : Variable::A;
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array", 0);

  std::vector<LaurentPoly::Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
      throw ParseError("term must be [exponent, \"coefficient\"]", i);
    const Exponent e = t[0].get<Exponent>();
    if (!out.empty() && e <= out.back().first)
      throw ParseError("exponents must be strictly ascending", i);
    BigInt c;
    if (c.set_str(t[1].get<std::string>(), 10) != 0)
      throw ParseError("coefficient is not a decimal integer", i);
    if (c == 0) throw ParseError("zero coefficient stored", i);
    out.emplace_back(e, std::move(c));
  }
  return LaurentPoly(std::move(out), v);
}

json summary_to_json(const ArrowDiagramSummary& s) {
  json arrows = json::array();
  for (const auto& r : s.arrows) arrows.push_back(json::array({r.sign, r.winding}));
  return {{"bare_writhe", s.bare_writhe}, {"arrows", arrows}};
}

ArrowDiagramSummary summary_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bare_writhe") || !j.contains("arrows") ||
      !j.at("bare_writhe").is_number_integer() || !j.at("arrows").is_array())
    throw ParseError("summary JSON needs integer \"bare_writhe\" and array \"arrows\"", 0);
  ArrowDiagramSummary s;
  s.bare_writhe = j.at("bare_writhe").get<std::int64_t>();
  const auto& arrows = j.at("arrows");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
        !a[1].is_number_integer())
      throw ParseError("arrow must be [sign, winding]", i);
    const int sign = a[0].get<int>();
    if (sign != 1 && sign != -1) throw ParseError("arrow sign must be +1 or -1", i);
    s.arrows.emplace_back(sign, a[1].get<std::int64_t>());
  }
  return s;
}

json table_row_to_json(const TableRow& row) {
  const auto& cls = row.classification;
  return {{"n", row.params.n},
          {"k", row.params.k},
          {"family", family_name(cls.family)},
          {"m", cls.m ? json(*cls.m) : json(nullptr)},
          {"polynomial", row.polynomial_name},
          {"crossing_bound", row.crossing_bound},
          {"jones", poly_to_json(row.jones)}};
}

}  // namespace cyclojones
