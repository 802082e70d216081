// agfilt: builds divisor filtrations on P^1 and elliptic curves, derives the
// induced evaluation-code chains, and checks the quantitative claims about
// them. Subcommands: tradeoff, chain, reproduce, arc-check, jets, surface.
//
// Exit codes: 0 success (refuted claims still exit 0), 2 configuration or
// precondition failure, 3 a search cap was exceeded, 4 internal error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "agfilt/arcs.hpp"
#include "agfilt/errors.hpp"
#include "agfilt/filtration.hpp"
#include "agfilt/jets.hpp"
#include "agfilt/json_io.hpp"
#include "agfilt/reproduce.hpp"
#include "agfilt/surface.hpp"

namespace {

using agfilt::io::json;

struct GlobalOptions {
    std::string format = "csv";
    std::string out;
    std::uint64_t distance_cap = agfilt::LinearCode::kDefaultDistanceCap;
    std::uint64_t subset_cap = agfilt::kDefaultSubsetCap;
    std::uint64_t seed = 42;
};

struct CurveOptions {
    std::uint32_t p = 0;
    std::uint32_t k = 1;
    std::vector<std::uint32_t> modulus;
    std::string curve = "p1";
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::vector<std::string> gamma{"all-affine"};
    int m = 0;

    // config files split comma lists into several tokens; stitch them back
    std::string gamma_spec() const {
        std::string out;
        for (const auto& part : gamma) {
            if (!out.empty()) out += ',';
            out += part;
        }
        return out;
    }
};

// The experiment options live on the app itself so that a flat key=value
// config file can supply them; command-line flags override the file.
struct CurveOptionHandles {
    CLI::Option* p = nullptr;
    CLI::Option* m = nullptr;
};

CurveOptionHandles add_curve_options(CLI::App& app, CurveOptions& opts) {
    CurveOptionHandles handles;
    handles.p = app.add_option("--p", opts.p, "field characteristic (prime)");
    app.add_option("--k", opts.k, "extension degree");
    app.add_option("--modulus", opts.modulus, "monic modulus coefficients, constant term first")
        ->delimiter(',');
    app.add_option("--curve", opts.curve, "p1 or elliptic")
        ->check(CLI::IsMember({"p1", "elliptic"}));
    app.add_option("--a", opts.a, "elliptic coefficient a");
    app.add_option("--b", opts.b, "elliptic coefficient b");
    app.add_option("--gamma", opts.gamma,
                   "evaluation points: all-affine | x list (p1) | x:y pairs | idx:i,j,...");
    handles.m = app.add_option("--m", opts.m, "largest divisor degree in the chain");
    return handles;
}

agfilt::CurveSpecPtr make_curve(const CurveOptions& opts) {
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!opts.modulus.empty()) modulus = opts.modulus;
    auto field = agfilt::field_new(opts.p, opts.k, modulus);
    if (opts.curve == "p1") return agfilt::projective_line(field);
    return agfilt::elliptic_curve(field, field->from_int(opts.a), field->from_int(opts.b));
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == delim) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

agfilt::EvaluationSet make_gamma(const agfilt::CurveSpecPtr& curve, const std::string& spec) {
    using agfilt::CurvePoint;
    if (spec == "all-affine") return agfilt::EvaluationSet::all_affine(curve);
    if (spec.rfind("idx:", 0) == 0) {
        std::vector<int> indices;
        for (const auto& part : split(spec.substr(4), ','))
            indices.push_back(std::stoi(part));
        return agfilt::EvaluationSet::all_affine(curve).subset(indices);
    }
    std::vector<CurvePoint> points;
    for (const auto& part : split(spec, ',')) {
        const auto coords = split(part, ':');
        const auto x = curve->field()->from_int(std::stoll(coords[0]));
        if (coords.size() == 1) {
            points.push_back(CurvePoint::affine(x));
        } else {
            points.push_back(CurvePoint::affine(x, curve->field()->from_int(std::stoll(coords[1]))));
        }
    }
    return agfilt::EvaluationSet(curve, std::move(points));
}

void emit(const GlobalOptions& global, const std::string& contents) {
    if (global.out.empty()) {
        std::cout << contents;
        if (!contents.empty() && contents.back() != '\n') std::cout << '\n';
    } else {
        agfilt::io::write_file_atomic(global.out, contents);
    }
}

int cmd_tradeoff(const GlobalOptions& global, const CurveOptions& opts, bool emit_chain) {
    auto curve = make_curve(opts);
    auto gamma = make_gamma(curve, opts.gamma_spec());
    const auto chain = agfilt::build_chain(curve, gamma, opts.m, global.distance_cap);
    const auto table = agfilt::tradeoff(chain, global.distance_cap);
    const auto opt = agfilt::optimal_index(table, curve->genus(), opts.m);

    if (emit_chain) {
        emit(global, agfilt::io::chain_to_json(chain, table).dump(2));
    } else if (global.format == "json") {
        json j = agfilt::io::tradeoff_to_json(table);
        j["optimal_index"] = json{{"formula", opt.formula},
                                  {"empirical", opt.empirical},
                                  {"agrees", opt.agrees}};
        emit(global, j.dump(2));
    } else {
        emit(global, agfilt::io::tradeoff_to_csv(table));
    }
    std::cerr << "i* formula=" << opt.formula << " empirical=" << opt.empirical
              << " agrees=" << (opt.agrees ? "true" : "false") << '\n';
    return 0;
}

int cmd_reproduce(const GlobalOptions& global) {
    const auto report =
        agfilt::run_reproduce(global.seed, global.distance_cap, global.subset_cap);
    emit(global, agfilt::report_to_json(report).dump(2));
    int confirmed = 0, refuted = 0, not_testable = 0;
    for (const auto& claim : report.claims) {
        switch (claim.status) {
            case agfilt::ClaimStatus::Confirmed: ++confirmed; break;
            case agfilt::ClaimStatus::Refuted: ++refuted; break;
            case agfilt::ClaimStatus::NotTestable: ++not_testable; break;
        }
    }
    std::cerr << "claims: " << confirmed << " confirmed, " << refuted << " refuted, "
              << not_testable << " not testable\n";
    return 0;
}

int cmd_arc_check(const GlobalOptions& global, const CurveOptions& opts) {
    auto curve = make_curve(opts);
    auto gamma = make_gamma(curve, opts.gamma_spec());
    const auto basis = agfilt::rr_basis(curve, opts.m);
    const auto code = agfilt::eval_code(basis, gamma);
    const auto points = agfilt::columns_as_points(code);
    const auto report = agfilt::is_k_arc(points, code.dimension() - 1, global.subset_cap);
    const auto check = agfilt::mds_iff_arc(code, global.distance_cap, global.subset_cap);
    json j = agfilt::io::arc_report_to_json(report);
    j["mds"] = check.mds;
    j["equivalent"] = check.equivalent;
    j["bound"] = code.dimension() >= 2
                     ? json(agfilt::arc_size_bound(code.dimension() - 1, curve->field()->q()))
                     : json(nullptr);
    emit(global, j.dump(2));
    return check.equivalent ? 0 : 4;
}

int cmd_jets(const GlobalOptions& global, const CurveOptions& opts, const std::string& center_str,
             int N, const std::vector<std::int64_t>& jet_coeffs,
             const std::vector<std::string>& contact_strs) {
    auto curve = make_curve(opts);
    const auto parse_point = [&](const std::string& s) {
        const auto coords = split(s, ',');
        const auto x = curve->field()->from_int(std::stoll(coords[0]));
        if (coords.size() == 1) return agfilt::CurvePoint::affine(x);
        return agfilt::CurvePoint::affine(x, curve->field()->from_int(std::stoll(coords[1])));
    };
    const auto center = parse_point(center_str);
    std::optional<agfilt::Series> jet;
    if (!jet_coeffs.empty()) {
        agfilt::Series s;
        for (auto c : jet_coeffs) s.push_back(curve->field()->from_int(c));
        jet = std::move(s);
    }
    const auto arc = agfilt::lift_arc(curve, center, N, std::move(jet));
    json j = agfilt::io::truncated_arc_to_json(arc);
    if (!contact_strs.empty()) {
        std::vector<agfilt::CurvePoint> divisor_points;
        for (const auto& s : contact_strs) divisor_points.push_back(parse_point(s));
        j["contact_count"] = agfilt::contact_count(arc, divisor_points);
        j["max_contact"] =
            agfilt::io::max_contact_to_json(agfilt::max_contact(curve, divisor_points, N));
    }
    emit(global, j.dump(2));
    return 0;
}

int cmd_surface(const GlobalOptions& global, int p2_degree, bool have_numerics,
                const agfilt::SurfaceNumerics& numerics) {
    json j;
    if (p2_degree >= 0) {
        const auto f = agfilt::p2_filtration(p2_degree);
        const agfilt::SurfaceNumerics n{1LL * p2_degree * p2_degree, -3LL * p2_degree, 1};
        j = agfilt::io::surface_eval_to_json(n);
        j["monomials"] = agfilt::io::monomial_filtration_to_json(f)["monomials"];
        const auto r = agfilt::restrict_to_line(f);
        j["restricted_dim"] = r.restricted_dim;
        j["restriction_inequality_holds"] = r.inequality_holds;
    } else if (have_numerics) {
        j = agfilt::io::surface_eval_to_json(numerics);
    } else {
        throw CLI::ValidationError("surface", "need --p2-degree or all of --c1-sq/--c1-dot-k/--chi");
    }
    emit(global, j.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"filtration chains of evaluation codes, with exact verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config", "", "flat key=value configuration file; flags win");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    GlobalOptions global;
    app.add_option("--format", global.format, "table output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", global.out, "write output to this file (atomically)");
    app.add_option("--distance-cap", global.distance_cap,
                   "largest message space q^k an exact distance scan may visit");
    app.add_option("--subset-cap", global.subset_cap,
                   "largest number of point subsets an arc check may visit");
    app.add_option("--seed", global.seed, "seed for the randomized series checks");

    CurveOptions opts;
    const CurveOptionHandles handles = add_curve_options(app, opts);

    auto* tradeoff_cmd =
        app.add_subcommand("tradeoff", "emit the exact rate-distance table of a chain");
    auto* chain_cmd =
        app.add_subcommand("chain", "emit the full chain (levels, generators, discrepancies)");
    auto* reproduce_cmd =
        app.add_subcommand("reproduce", "run every built-in claim check and emit the report");
    auto* arc_cmd =
        app.add_subcommand("arc-check", "test generator columns of a chain level for arc-ness");

    std::string jets_center;
    int jets_n = 8;
    std::vector<std::int64_t> jets_jet;
    std::vector<std::string> jets_contact;
    auto* jets_cmd = app.add_subcommand("jets", "lift a truncated arc through a point");
    jets_cmd->add_option("--center", jets_center, "arc center, x or x,y");
    jets_cmd->add_option("--N", jets_n, "truncation order (>= 2)");
    jets_cmd->add_option("--jet", jets_jet, "x-series coefficients, constant first")
        ->delimiter(',');
    jets_cmd->add_option("--contact", jets_contact,
                         "divisor points (x or x,y) for contact counting");

    int p2_degree = -1;
    agfilt::SurfaceNumerics numerics;
    bool have_c1sq = false, have_c1k = false, have_chi = false;
    auto* surface_cmd =
        app.add_subcommand("surface", "evaluate the depth formulas / the plane filtration");
    surface_cmd->add_option("--p2-degree", p2_degree, "degree d of the plane system");
    surface_cmd->add_option("--c1-sq", numerics.c1_sq, "c1(L)^2")
        ->each([&](const std::string&) { have_c1sq = true; });
    surface_cmd->add_option("--c1-dot-k", numerics.c1_dot_k, "c1(L).c1(K_S)")
        ->each([&](const std::string&) { have_c1k = true; });
    surface_cmd->add_option("--chi", numerics.chi, "chi(O_S)")
        ->each([&](const std::string&) { have_chi = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const auto missing = [&](const char* flag) {
        std::cerr << "error: " << flag << " is required\nRun with --help for more information.\n";
        return 2;
    };
    const bool needs_curve =
        tradeoff_cmd->parsed() || chain_cmd->parsed() || arc_cmd->parsed() || jets_cmd->parsed();
    if (needs_curve && handles.p->count() == 0) return missing("--p");
    const bool needs_m = tradeoff_cmd->parsed() || chain_cmd->parsed() || arc_cmd->parsed();
    if (needs_m && handles.m->count() == 0) return missing("--m");
    if (jets_cmd->parsed() && jets_center.empty()) return missing("--center");

    try {
        if (tradeoff_cmd->parsed()) return cmd_tradeoff(global, opts, false);
        if (chain_cmd->parsed()) return cmd_tradeoff(global, opts, true);
        if (reproduce_cmd->parsed()) return cmd_reproduce(global);
        if (arc_cmd->parsed()) return cmd_arc_check(global, opts);
        if (jets_cmd->parsed())
            return cmd_jets(global, opts, jets_center, jets_n, jets_jet, jets_contact);
        if (surface_cmd->parsed())
            return cmd_surface(global, p2_degree, have_c1sq && have_c1k && have_chi, numerics);
    } catch (const agfilt::SearchTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const agfilt::TooManySubsets& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const agfilt::InternalInconsistency& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const agfilt::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 2;
}
