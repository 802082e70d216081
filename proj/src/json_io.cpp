#include "agfilt/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace agfilt::io {

json field_spec_to_json(const FieldSpec& spec) {
    return json{{"p", spec.p()}, {"k", spec.degree()}, {"modulus", spec.modulus()}};
}

FieldSpecPtr field_spec_from_json(const json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto k = j.at("k").get<std::uint32_t>();
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus") && !j.at("modulus").empty())
        modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return field_new(p, k, modulus);
}

json field_element_to_json(const FieldElement& el) {
    if (el.spec() && el.spec()->degree() == 1) return json(el.rep()[0]);
    return json(el.rep());
}

FieldElement field_element_from_json(const FieldSpecPtr& spec, const json& j) {
    if (j.is_number()) return spec->from_int(j.get<std::int64_t>());
    std::vector<std::int64_t> coeffs = j.get<std::vector<std::int64_t>>();
    return spec->from_coeffs(coeffs);
}

json curve_spec_to_json(const CurveSpec& curve) {
    json j = field_spec_to_json(*curve.field());
    if (curve.kind() == CurveKind::ProjectiveLine) {
        j["kind"] = "projective_line";
    } else {
        j["kind"] = "elliptic";
        j["a"] = field_element_to_json(curve.a());
        j["b"] = field_element_to_json(curve.b());
    }
    return j;
}

CurveSpecPtr curve_spec_from_json(const json& j) {
    auto field = field_spec_from_json(j);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "projective_line") return projective_line(std::move(field));
    if (kind == "elliptic")
        return elliptic_curve(field, field_element_from_json(field, j.at("a")),
                              field_element_from_json(field, j.at("b")));
    throw std::invalid_argument("unknown curve kind: " + kind);
}

json point_to_json(const CurvePoint& pt) {
    if (pt.is_infinity()) return json("inf");
    return json{{"x", field_element_to_json(pt.x())}, {"y", field_element_to_json(pt.y())}};
}

CurvePoint point_from_json(const CurveSpecPtr& curve, const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf")
        return CurvePoint::infinity(curve->field());
    auto x = field_element_from_json(curve->field(), j.at("x"));
    auto y = field_element_from_json(curve->field(), j.at("y"));
    return curve->kind() == CurveKind::ProjectiveLine ? CurvePoint::affine(std::move(x))
                                                      : CurvePoint::affine(std::move(x), std::move(y));
}

json points_to_json(const std::vector<CurvePoint>& pts) {
    json arr = json::array();
    for (const auto& pt : pts) arr.push_back(point_to_json(pt));
    return arr;
}

std::vector<CurvePoint> points_from_json(const CurveSpecPtr& curve, const json& j) {
    std::vector<CurvePoint> pts;
    pts.reserve(j.size());
    for (const auto& e : j) pts.push_back(point_from_json(curve, e));
    return pts;
}

json basis_to_json(const RRBasis& basis) {
    json arr = json::array();
    for (const auto& mon : basis.monomials()) arr.push_back(json::array({mon.i, mon.j}));
    return arr;
}

namespace {

json generator_to_json(const LinearCode& code) {
    json rows = json::array();
    for (const auto& row : code.generator()) {
        json r = json::array();
        for (const auto& e : row) r.push_back(field_element_to_json(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

json code_to_json(const LinearCode& code, int divisor_degree, std::uint64_t cap) {
    return json{{"n", code.length()},
                {"k", code.dimension()},
                {"d", code.min_distance(cap)},
                {"goppa", code.length() - divisor_degree},
                {"singleton", singleton_bound(code)},
                {"mds", is_mds(code, cap)},
                {"gen", generator_to_json(code)}};
}

std::string code_csv_header() { return "n,k,d,goppa,singleton,mds"; }

std::string code_csv_row(const LinearCode& code, int divisor_degree, std::uint64_t cap) {
    std::ostringstream out;
    out << code.length() << ',' << code.dimension() << ',' << code.min_distance(cap) << ','
        << (code.length() - divisor_degree) << ',' << singleton_bound(code) << ','
        << (is_mds(code, cap) ? 1 : 0);
    return out.str();
}

std::string tradeoff_csv_header() {
    return "i,deg,k,d,goppa,singleton,mds,R_num,R_den,Q_num,Q_den,rs_class";
}

std::string tradeoff_to_csv(const TradeoffTable& table) {
    std::ostringstream out;
    out << tradeoff_csv_header() << '\n';
    for (const auto& row : table.rows) {
        out << row.index << ',' << row.degree << ',' << row.k << ',' << row.d << ',' << row.goppa
            << ',' << row.singleton << ',' << (row.mds ? 1 : 0) << ',' << row.rate.numerator()
            << ',' << row.rate.denominator() << ',' << row.q_score.numerator() << ','
            << row.q_score.denominator() << ',' << to_string(row.rs_class) << '\n';
    }
    return out.str();
}

namespace {

json tradeoff_row_to_json(const TradeoffRow& row) {
    return json{{"i", row.index},
                {"deg", row.degree},
                {"k", row.k},
                {"d", row.d},
                {"goppa", row.goppa},
                {"singleton", row.singleton},
                {"mds", row.mds},
                {"R", json::array({row.rate.numerator(), row.rate.denominator()})},
                {"Q", json::array({row.q_score.numerator(), row.q_score.denominator()})},
                {"rs_class", to_string(row.rs_class)}};
}

}  // namespace

json tradeoff_to_json(const TradeoffTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(tradeoff_row_to_json(row));
    return json{{"n", table.n}, {"rows", std::move(rows)}};
}

json chain_to_json(const FiltrationChain& chain, const TradeoffTable& table) {
    json levels = json::array();
    json discrepancies = json::array();
    for (std::size_t i = 0; i < chain.levels().size(); ++i) {
        const auto& level = chain.levels()[i];
        const auto& row = table.rows[i];
        json entry = tradeoff_row_to_json(row);
        entry["basis"] = basis_to_json(level.basis);
        entry["gen"] = generator_to_json(level.code);
        levels.push_back(std::move(entry));

        if (row.d != row.goppa)
            discrepancies.push_back(json{{"level", row.index},
                                         {"kind", "designed_distance"},
                                         {"computed_d", row.d},
                                         {"expected_d", row.goppa}});
        if (!row.mds)
            discrepancies.push_back(json{{"level", row.index},
                                         {"kind", "mds"},
                                         {"computed_d", row.d},
                                         {"singleton", row.singleton}});
    }
    return json{{"curve", curve_spec_to_json(*chain.curve())},
                {"gamma", points_to_json(chain.gamma().points())},
                {"levels", std::move(levels)},
                {"discrepancies", std::move(discrepancies)}};
}

json arc_report_to_json(const ArcReport& report) {
    json j{{"n", report.n}, {"r", report.ambient_dim}, {"is_arc", report.is_arc}};
    j["witness"] = report.witness ? json(*report.witness) : json(nullptr);
    return j;
}

namespace {

json series_to_json(const Series& s) {
    json arr = json::array();
    for (const auto& e : s) arr.push_back(field_element_to_json(e));
    return arr;
}

}  // namespace

json truncated_arc_to_json(const TruncatedArc& arc) {
    return json{{"center", point_to_json(arc.center)},
                {"N", arc.truncation},
                {"x_series", series_to_json(arc.x_series)},
                {"y_series", series_to_json(arc.y_series)}};
}

json max_contact_to_json(const MaxContact& mc) {
    json j{{"max_count", mc.count}};
    j["center_witness"] = mc.witness ? point_to_json(*mc.witness) : json(nullptr);
    return j;
}

json surface_eval_to_json(const SurfaceNumerics& numerics) {
    return json{{"inputs",
                 {{"c1_sq", numerics.c1_sq}, {"c1_dot_k", numerics.c1_dot_k}, {"chi", numerics.chi}}},
                {"h", depth_formula(numerics)},
                {"h_dual", dual_depth_formula(numerics)}};
}

json monomial_filtration_to_json(const MonomialFiltration& f) {
    json mons = json::array();
    for (const auto& m : f.monomials) mons.push_back(json::array({m[0], m[1], m[2]}));
    return json{{"degree", f.degree}, {"length", f.monomials.size()}, {"monomials", std::move(mons)}};
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
    }
    fs::rename(tmp, target);
}

}  // namespace agfilt::io
