#ifndef AGFILT_JSON_IO_HPP
#define AGFILT_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "agfilt/arcs.hpp"
#include "agfilt/filtration.hpp"
#include "agfilt/jets.hpp"
#include "agfilt/surface.hpp"

namespace agfilt::io {

using json = nlohmann::json;

// field elements: a bare integer for prime fields, a coefficient array above
json field_spec_to_json(const FieldSpec& spec);
FieldSpecPtr field_spec_from_json(const json& j);
json field_element_to_json(const FieldElement& el);
FieldElement field_element_from_json(const FieldSpecPtr& spec, const json& j);

// curves: {kind, p, k, modulus, a, b}; point lists: [{x, y} | "inf"]
json curve_spec_to_json(const CurveSpec& curve);
CurveSpecPtr curve_spec_from_json(const json& j);
json point_to_json(const CurvePoint& pt);
CurvePoint point_from_json(const CurveSpecPtr& curve, const json& j);
json points_to_json(const std::vector<CurvePoint>& pts);
std::vector<CurvePoint> points_from_json(const CurveSpecPtr& curve, const json& j);

// bases serialize as exponent pairs
json basis_to_json(const RRBasis& basis);

// codes: {n, k, d, goppa, singleton, mds, gen}; divisor_degree feeds goppa
json code_to_json(const LinearCode& code, int divisor_degree,
                  std::uint64_t cap = LinearCode::kDefaultDistanceCap);
std::string code_csv_header();
std::string code_csv_row(const LinearCode& code, int divisor_degree,
                         std::uint64_t cap = LinearCode::kDefaultDistanceCap);

// trade-off tables: CSV schema
// i,deg,k,d,goppa,singleton,mds,R_num,R_den,Q_num,Q_den,rs_class
std::string tradeoff_csv_header();
std::string tradeoff_to_csv(const TradeoffTable& table);
json tradeoff_to_json(const TradeoffTable& table);

// chains: levels plus the per-level discrepancy report (designed-distance
// premise d = n - deg and the MDS-vs-bounds comparison)
json chain_to_json(const FiltrationChain& chain, const TradeoffTable& table);

json arc_report_to_json(const ArcReport& report);
json truncated_arc_to_json(const TruncatedArc& arc);
json max_contact_to_json(const MaxContact& mc);

json surface_eval_to_json(const SurfaceNumerics& numerics);
json monomial_filtration_to_json(const MonomialFiltration& f);

/// Writes atomically: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace agfilt::io

#endif
