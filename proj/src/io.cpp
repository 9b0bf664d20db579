#include "ncurve/io.hpp"

#include <fstream>
#include <sstream>

#include "ncurve/error.hpp"

namespace ncurve {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const ojson& member(const ojson& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + "." + key, "missing");
  return *it;
}

int int_member(const ojson& j, const char* key, const std::string& where) {
  const ojson& v = member(j, key, where);
  if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
  return v.get<int>();
}

}  // namespace

ojson field_to_json(const Field& F) {
  if (F.is_prime_field()) return ojson{{"kind", "Fp"}, {"p", F.modulus()}};
  return ojson{{"kind", "Q"}};
}

Field field_from_json(const ojson& j, const std::string& where) {
  const ojson& kind = member(j, "kind", where);
  if (!kind.is_string()) bad(where + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "Q") return Field::rationals();
  if (k != "Fp") bad(where + ".kind", "expected \"Q\" or \"Fp\"");
  const ojson& p = member(j, "p", where);
  if (!p.is_number_unsigned() && !p.is_number_integer()) bad(where + ".p", "expected an integer");
  if (p.is_number_integer() && p.get<long long>() < 0) bad(where + ".p", "negative modulus");
  try {
    return Field::prime(p.get<std::uint64_t>());
  } catch (const Error& e) {
    bad(where + ".p", e.what());
  }
}

ojson poly_to_json(const HomPoly& p) {
  ojson coeffs = ojson::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(p.field().to_string(c));
  return ojson{{"degree", p.degree()}, {"coeffs", coeffs}};
}

HomPoly poly_from_json(const Field& F, const ojson& j, const std::string& where) {
  const int d = int_member(j, "degree", where);
  if (d < 0) bad(where + ".degree", "negative degree");
  const ojson& cs = member(j, "coeffs", where);
  if (!cs.is_array()) bad(where + ".coeffs", "expected an array");
  if (static_cast<int>(cs.size()) != d + 1) bad(where + ".coeffs", "expected degree+1 entries");
  std::vector<FieldElem> coeffs;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string at = where + ".coeffs[" + std::to_string(i) + "]";
    if (cs[i].is_string()) {
      try {
        coeffs.push_back(F.parse(cs[i].get<std::string>()));
      } catch (const Error& e) {
        bad(at, e.what());
      }
    } else if (cs[i].is_number_integer()) {
      coeffs.push_back(F.from_int(cs[i].get<long long>()));
    } else {
      bad(at, "expected a decimal string");
    }
  }
  return HomPoly(F, std::move(coeffs));
}

ojson curve_to_json(const CurveMap& f) {
  ojson comps = ojson::array();
  for (const auto& c : f.components()) comps.push_back(poly_to_json(c));
  return ojson{{"n", f.n()}, {"e", f.e()}, {"field", field_to_json(f.field())}, {"components", comps}};
}

CurveMap curve_from_json(const ojson& j) {
  const int n = int_member(j, "n", "curve");
  const int e = int_member(j, "e", "curve");
  const Field F = field_from_json(member(j, "field", "curve"), "curve.field");
  const ojson& comps = member(j, "components", "curve");
  if (!comps.is_array()) bad("curve.components", "expected an array");
  if (static_cast<int>(comps.size()) != n + 1) bad("curve.components", "expected n+1 components");
  std::vector<HomPoly> polys;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string at = "curve.components[" + std::to_string(i) + "]";
    HomPoly p = poly_from_json(F, comps[i], at);
    if (p.degree() != e) bad(at + ".degree", "expected degree e = " + std::to_string(e));
    polys.push_back(std::move(p));
  }
  try {
    return CurveMap(F, std::move(polys));
  } catch (const Error& ex) {
    bad("curve", ex.what());
  }
}

CurveMap read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  ojson j;
  try {
    j = ojson::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    bad(path, std::string("invalid JSON: ") + e.what());
  }
  return curve_from_json(j);
}

ojson witness_to_json(const Witness& w) {
  ojson j = curve_to_json(w.curve);
  j["declared"] = splitting_to_json(w.declared);
  ojson rels = ojson::array();
  for (const auto& a : w.relations) rels.push_back(relation_to_json(a));
  j["relations"] = rels;
  j["provenance"] = w.provenance;
  return j;
}

ojson splitting_to_json(const SplittingType& s) {
  return ojson{{"baseline", s.baseline}, {"twists", s.twists}};
}

ojson relation_to_json(const Relation& a) {
  ojson entries = ojson::array();
  for (const auto& x : a.entries) entries.push_back(poly_to_json(x));
  return ojson{{"degree", a.degree}, {"entries", entries}};
}

ojson witness_report_to_json(const WitnessReport& w) {
  ojson j{{"id", w.id}, {"ok", w.ok}};
  if (!w.error.empty()) j["error"] = w.error;
  j["basepoint_free"] = w.basepoint_free;
  j["nondegenerate"] = w.nondegenerate;
  j["unramified"] = w.unramified;
  j["splitting"] = w.splitting ? splitting_to_json(*w.splitting) : ojson(nullptr);
  j["matches"] = w.matches;
  j["relation_degree"] = w.relation_degree;
  j["relation_count"] = w.relation_count;
  j["conic_classes"] = w.conic_classes;
  j["tangency_pairs"] = w.tangency_pairs;
  j["longest_chain"] = w.longest_chain;
  j["plane_matrix"] = w.plane_matrix;
  return j;
}

ojson stratum_report_to_json(const StratumReport& r) {
  ojson ws = ojson::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_report_to_json(w));
  return ojson{{"n", r.n},
               {"e", r.e},
               {"splitting", splitting_to_json(r.splitting)},
               {"dim_mor", r.dim_mor},
               {"expected_codim", r.expected_codim},
               {"expected_dim", r.expected_dim},
               {"witnesses", ws}};
}

}  // namespace ncurve
