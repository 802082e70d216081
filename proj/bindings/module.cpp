// Python bindings for the chain-of-codes library. Field elements, points and
// the heavier report types convert to plain python objects where that reads
// better than mirroring the C++ types.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "agfilt/arcs.hpp"
#include "agfilt/errors.hpp"
#include "agfilt/filtration.hpp"
#include "agfilt/jets.hpp"
#include "agfilt/json_io.hpp"
#include "agfilt/reproduce.hpp"
#include "agfilt/surface.hpp"

namespace py = pybind11;
using namespace agfilt;

namespace {

std::string element_repr(const FieldElement& el) {
    std::ostringstream out;
    out << "FieldElement(";
    for (std::size_t i = 0; i < el.rep().size(); ++i) {
        if (i) out << ",";
        out << el.rep()[i];
    }
    out << ")";
    return out.str();
}

std::string point_repr(const CurvePoint& pt) {
    if (pt.is_infinity()) return "CurvePoint(inf)";
    std::ostringstream out;
    out << "CurvePoint(x=" << pt.x().index() << ", y=" << pt.y().index() << ")";
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact filtration chains of evaluation codes on P^1 and elliptic curves";

    py::register_exception<Error>(m, "AgfiltError");

    py::class_<FieldElement>(m, "FieldElement")
        .def_property_readonly("rep", [](const FieldElement& el) { return el.rep(); })
        .def_property_readonly("index", &FieldElement::index)
        .def("is_zero", &FieldElement::is_zero)
        .def("is_one", &FieldElement::is_one)
        .def("inv", &FieldElement::inv)
        .def("pow", &FieldElement::pow)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", &element_repr)
        .def("__hash__", [](const FieldElement& el) { return el.index(); });

    py::class_<FieldSpec, std::shared_ptr<FieldSpec>>(m, "FieldSpec")
        .def_property_readonly("p", &FieldSpec::p)
        .def_property_readonly("k", &FieldSpec::degree)
        .def_property_readonly("q", &FieldSpec::q)
        .def_property_readonly("modulus", &FieldSpec::modulus)
        .def("zero", &FieldSpec::zero)
        .def("one", &FieldSpec::one)
        .def("gen", &FieldSpec::gen)
        .def("from_int", &FieldSpec::from_int)
        .def("from_coeffs", &FieldSpec::from_coeffs)
        .def("from_index", &FieldSpec::from_index)
        .def("enumerate", &FieldSpec::enumerate)
        .def("__eq__",
             [](const FieldSpec& a, const FieldSpec& b) { return a == b; });

    m.def("field_new", &field_new, py::arg("p"), py::arg("k") = 1,
          py::arg("modulus") = std::nullopt,
          "GF(p^k); the modulus defaults to the least irreducible monic polynomial");

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_static("infinity", &CurvePoint::infinity)
        .def_static("affine", py::overload_cast<FieldElement>(&CurvePoint::affine))
        .def_static("affine",
                    py::overload_cast<FieldElement, FieldElement>(&CurvePoint::affine))
        .def("is_infinity", &CurvePoint::is_infinity)
        .def("is_affine", &CurvePoint::is_affine)
        .def_property_readonly("x", &CurvePoint::x)
        .def_property_readonly("y", &CurvePoint::y)
        .def(py::self == py::self)
        .def("__lt__", [](const CurvePoint& a, const CurvePoint& b) { return a < b; })
        .def("__repr__", &point_repr);

    py::class_<CurveSpec, std::shared_ptr<CurveSpec>>(m, "CurveSpec")
        .def_property_readonly("genus", &CurveSpec::genus)
        .def_property_readonly("field", &CurveSpec::field)
        .def_property_readonly(
            "is_elliptic",
            [](const CurveSpec& c) { return c.kind() == CurveKind::Elliptic; })
        .def("on_curve", &CurveSpec::on_curve)
        .def("rational_points", &CurveSpec::rational_points)
        .def("affine_points", &CurveSpec::affine_points)
        .def("ec_add", &CurveSpec::ec_add)
        .def("ec_neg", &CurveSpec::ec_neg);

    m.def("projective_line", &projective_line);
    m.def("elliptic_curve", &elliptic_curve);

    py::class_<Divisor>(m, "Divisor")
        .def(py::init<>())
        .def_static("of_point", &Divisor::of_point, py::arg("pt"), py::arg("multiplicity") = 1)
        .def("degree", &Divisor::degree)
        .def("is_effective", &Divisor::is_effective)
        .def("multiplicity", &Divisor::multiplicity)
        .def("add", &Divisor::add, py::return_value_policy::reference)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def_static("precedes", &Divisor::precedes);

    py::class_<BasisMonomial>(m, "BasisMonomial")
        .def_readonly("i", &BasisMonomial::i)
        .def_readonly("j", &BasisMonomial::j);

    py::class_<RRBasis>(m, "RRBasis")
        .def_property_readonly("dim", &RRBasis::dim)
        .def_property_readonly("pole_bound", &RRBasis::pole_bound)
        .def_property_readonly("monomials",
                               [](const RRBasis& b) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto& mon : b.monomials())
                                       out.emplace_back(mon.i, mon.j);
                                   return out;
                               })
        .def("pole_order", &RRBasis::pole_order);

    m.def("rr_basis", &rr_basis);
    m.def("evaluate", &evaluate, py::arg("basis"), py::arg("coeffs"), py::arg("pt"));

    py::class_<EvaluationSet>(m, "EvaluationSet")
        .def(py::init<CurveSpecPtr, std::vector<CurvePoint>>())
        .def_static("all_affine", &EvaluationSet::all_affine)
        .def("subset", &EvaluationSet::subset)
        .def_property_readonly("n", &EvaluationSet::n)
        .def_property_readonly("points", &EvaluationSet::points)
        .def("is_subset_of", &EvaluationSet::is_subset_of);

    py::class_<LinearCode>(m, "LinearCode")
        .def(py::init<FieldSpecPtr, int, linalg::Matrix>())
        .def_property_readonly("n", &LinearCode::length)
        .def_property_readonly("k", &LinearCode::dimension)
        .def_property_readonly("field", &LinearCode::field)
        .def_property_readonly("generator", &LinearCode::generator)
        .def("min_distance", &LinearCode::min_distance,
             py::arg("cap") = LinearCode::kDefaultDistanceCap)
        .def("weight_distribution", &LinearCode::weight_distribution,
             py::arg("cap") = LinearCode::kDefaultDistanceCap);

    m.def("eval_code", &eval_code);
    m.def("goppa_bound", &goppa_bound);
    m.def("singleton_bound", &singleton_bound);
    m.def("is_mds", &is_mds, py::arg("code"), py::arg("cap") = LinearCode::kDefaultDistanceCap);

    py::class_<ChainLevel>(m, "ChainLevel")
        .def_readonly("index", &ChainLevel::index)
        .def_readonly("degree", &ChainLevel::degree)
        .def_readonly("basis", &ChainLevel::basis)
        .def_readonly("code", &ChainLevel::code);

    py::class_<FiltrationChain>(m, "FiltrationChain")
        .def_property_readonly("levels", &FiltrationChain::levels)
        .def_property_readonly("max_degree", &FiltrationChain::max_degree)
        .def_property_readonly("n", &FiltrationChain::n)
        .def_property_readonly("curve", &FiltrationChain::curve)
        .def_property_readonly("gamma", &FiltrationChain::gamma);

    m.def("build_chain", &build_chain, py::arg("curve"), py::arg("gamma"), py::arg("m"),
          py::arg("cap") = LinearCode::kDefaultDistanceCap);

    py::enum_<RsClass>(m, "RsClass")
        .value("RS_equivalent", RsClass::RsEquivalent)
        .value("NonRS", RsClass::NonRs)
        .value("Unknown", RsClass::Unknown);

    py::class_<TradeoffRow>(m, "TradeoffRow")
        .def_readonly("index", &TradeoffRow::index)
        .def_readonly("degree", &TradeoffRow::degree)
        .def_readonly("k", &TradeoffRow::k)
        .def_readonly("d", &TradeoffRow::d)
        .def_readonly("goppa", &TradeoffRow::goppa)
        .def_readonly("singleton", &TradeoffRow::singleton)
        .def_readonly("mds", &TradeoffRow::mds)
        .def_readonly("rs_class", &TradeoffRow::rs_class)
        .def_property_readonly("rate",
                               [](const TradeoffRow& r) {
                                   return std::pair(r.rate.numerator(), r.rate.denominator());
                               })
        .def_property_readonly("q_score", [](const TradeoffRow& r) {
            return std::pair(r.q_score.numerator(), r.q_score.denominator());
        });

    py::class_<TradeoffTable>(m, "TradeoffTable")
        .def_readonly("n", &TradeoffTable::n)
        .def_readonly("rows", &TradeoffTable::rows);

    m.def("tradeoff", &tradeoff, py::arg("chain"),
          py::arg("cap") = LinearCode::kDefaultDistanceCap);

    py::class_<OptimalIndex>(m, "OptimalIndex")
        .def_readonly("formula", &OptimalIndex::formula)
        .def_readonly("empirical", &OptimalIndex::empirical)
        .def_readonly("agrees", &OptimalIndex::agrees);

    m.def("optimal_index",
          py::overload_cast<const FiltrationChain&, std::uint64_t>(&optimal_index),
          py::arg("chain"), py::arg("cap") = LinearCode::kDefaultDistanceCap);

    py::class_<MdsAlignedLevel>(m, "MdsAlignedLevel")
        .def_readonly("sub_index", &MdsAlignedLevel::sub_index)
        .def_readonly("level_index", &MdsAlignedLevel::level_index)
        .def_readonly("degree", &MdsAlignedLevel::degree)
        .def_readonly("dim", &MdsAlignedLevel::dim)
        .def_readonly("h1_vanishes", &MdsAlignedLevel::h1_vanishes)
        .def_readonly("mds", &MdsAlignedLevel::mds);

    py::class_<MdsDepthReport>(m, "MdsDepthReport")
        .def_readonly("depth", &MdsDepthReport::depth)
        .def_readonly("aligned", &MdsDepthReport::aligned)
        .def_readonly("level_mds", &MdsDepthReport::level_mds);

    m.def("mds_depth", &mds_depth, py::arg("chain"),
          py::arg("cap") = LinearCode::kDefaultDistanceCap);
    m.def("dominates", &dominates, py::arg("a"), py::arg("b"),
          py::arg("cap") = LinearCode::kDefaultDistanceCap);
    m.def("classify_rs", &classify_rs, py::arg("code"),
          py::arg("cap") = LinearCode::kDefaultDistanceCap);

    py::class_<PuncturedFamily>(m, "PuncturedFamily")
        .def_readonly("sub", &PuncturedFamily::sub)
        .def_readonly("full", &PuncturedFamily::full);

    m.def("punctured_family", &punctured_family, py::arg("curve"), py::arg("gamma_full"),
          py::arg("gamma_sub"), py::arg("m"), py::arg("cap") = LinearCode::kDefaultDistanceCap);

    py::class_<ProjPoint>(m, "ProjPoint")
        .def(py::init<std::vector<FieldElement>>())
        .def_property_readonly("coords", &ProjPoint::coords)
        .def_property_readonly("ambient_dim", &ProjPoint::ambient_dim)
        .def(py::self == py::self);

    py::class_<ArcReport>(m, "ArcReport")
        .def_readonly("n", &ArcReport::n)
        .def_readonly("ambient_dim", &ArcReport::ambient_dim)
        .def_readonly("is_arc", &ArcReport::is_arc)
        .def_readonly("witness", &ArcReport::witness);

    m.def("columns_as_points", &columns_as_points);
    m.def("is_k_arc", &is_k_arc, py::arg("points"), py::arg("r"),
          py::arg("subset_cap") = kDefaultSubsetCap);
    m.def("arc_size_bound", &arc_size_bound);

    py::class_<MdsArcCheck>(m, "MdsArcCheck")
        .def_readonly("mds", &MdsArcCheck::mds)
        .def_readonly("arc", &MdsArcCheck::arc)
        .def_readonly("equivalent", &MdsArcCheck::equivalent);

    m.def("mds_iff_arc", &mds_iff_arc, py::arg("code"),
          py::arg("distance_cap") = LinearCode::kDefaultDistanceCap,
          py::arg("subset_cap") = kDefaultSubsetCap);

    py::class_<TruncatedArc>(m, "TruncatedArc")
        .def_readonly("center", &TruncatedArc::center)
        .def_readonly("truncation", &TruncatedArc::truncation)
        .def_readonly("x_series", &TruncatedArc::x_series)
        .def_readonly("y_series", &TruncatedArc::y_series);

    py::class_<VanishingOrder>(m, "VanishingOrder")
        .def_readonly("order", &VanishingOrder::order)
        .def_readonly("truncated", &VanishingOrder::truncated);

    m.def("lift_arc", &lift_arc, py::arg("curve"), py::arg("center"), py::arg("N"),
          py::arg("x_jet") = std::nullopt);
    m.def("ord_of_series", &ord_of_series);
    m.def("series_product", &series_product);
    m.def("compose_along", &compose_along);
    m.def("ord_along",
          py::overload_cast<const TruncatedArc&, const RRBasis&, const std::vector<FieldElement>&>(
              &ord_along));
    m.def("ord_along_point",
          py::overload_cast<const TruncatedArc&, const CurvePoint&>(&ord_along));
    m.def("contact_count", &contact_count);

    py::class_<MaxContact>(m, "MaxContact")
        .def_readonly("count", &MaxContact::count)
        .def_readonly("witness", &MaxContact::witness);

    m.def("max_contact", &max_contact);

    py::class_<SurfaceNumerics>(m, "SurfaceNumerics")
        .def(py::init([](long long c1_sq, long long c1_dot_k, long long chi) {
                 return SurfaceNumerics{c1_sq, c1_dot_k, chi};
             }),
             py::arg("c1_sq"), py::arg("c1_dot_k"), py::arg("chi"))
        .def_readonly("c1_sq", &SurfaceNumerics::c1_sq)
        .def_readonly("c1_dot_k", &SurfaceNumerics::c1_dot_k)
        .def_readonly("chi", &SurfaceNumerics::chi);

    m.def("depth_formula", &depth_formula);
    m.def("dual_depth_formula", &dual_depth_formula);

    py::class_<MonomialFiltration>(m, "MonomialFiltration")
        .def_readonly("degree", &MonomialFiltration::degree)
        .def_readonly("monomials", &MonomialFiltration::monomials);

    m.def("p2_filtration", &p2_filtration);

    py::class_<LineRestriction>(m, "LineRestriction")
        .def_readonly("restricted_dim", &LineRestriction::restricted_dim)
        .def_readonly("inequality_holds", &LineRestriction::inequality_holds)
        .def_readonly("dead_steps", &LineRestriction::dead_steps);

    m.def("restrict_to_line", &restrict_to_line);

    m.def(
        "reproduce_json",
        [](std::uint64_t seed, std::uint64_t distance_cap, std::uint64_t subset_cap) {
            return report_to_json(run_reproduce(seed, distance_cap, subset_cap)).dump(2);
        },
        py::arg("seed") = 42, py::arg("distance_cap") = LinearCode::kDefaultDistanceCap,
        py::arg("subset_cap") = 10'000'000,
        "run every built-in claim check; returns the report as a JSON string");

    m.def("tradeoff_csv", [](const TradeoffTable& table) { return io::tradeoff_to_csv(table); });
    m.def("chain_json", [](const FiltrationChain& chain, const TradeoffTable& table) {
        return io::chain_to_json(chain, table).dump(2);
    });
}
