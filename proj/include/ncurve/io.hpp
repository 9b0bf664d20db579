#ifndef NCURVE_IO_HPP
#define NCURVE_IO_HPP

#include <string>

#include <json.hpp>

#include "ncurve/construct.hpp"
#include "ncurve/curve.hpp"
#include "ncurve/strata.hpp"
#include "ncurve/syzygy.hpp"

namespace ncurve {

using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

ojson field_to_json(const Field& F);
/// {"kind": "Q"} or {"kind": "Fp", "p": int}. Throws ParseError naming the field.
Field field_from_json(const ojson& j, const std::string& where = "field");

ojson poly_to_json(const HomPoly& p);
HomPoly poly_from_json(const Field& F, const ojson& j, const std::string& where);

/// {"n", "e", "field", "components"} in that order.
ojson curve_to_json(const CurveMap& f);
/// Accepts keys in any order; extra keys (e.g. "provenance") are ignored.
CurveMap curve_from_json(const ojson& j);
CurveMap read_curve_file(const std::string& path);

ojson witness_to_json(const Witness& w);

ojson splitting_to_json(const SplittingType& s);
ojson relation_to_json(const Relation& a);
ojson witness_report_to_json(const WitnessReport& w);
ojson stratum_report_to_json(const StratumReport& r);

}  // namespace ncurve

#endif  // NCURVE_IO_HPP
