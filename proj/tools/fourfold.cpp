// Command-line front end: characteristic numbers, Einstein obstructions,
// curvature bound tables, minimization certificates, homeomorphism checks,
// the exotic-pair search, and the built-in verification checklist.
//
// Exit codes: 0 success, 2 parse error, 3 inapplicable input,
// 4 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fourfold/json_io.hpp"

namespace {

using namespace fourfold;

enum class Output { JsonMode, MarkdownMode };

void emit(const Json& payload, Output mode) {
    if (mode == Output::JsonMode)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << markdown(payload);
}

Json wrap(const std::string& command, Json payload) {
    Json j{{"schema", "1"}, {"command", command}};
    j.update(payload);
    return j;
}

struct RangeArg {
    long long lo = 0;
    long long hi = -1;  // empty by default
};

RangeArg parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like a..b: " + text);
    std::size_t used_lo = 0, used_hi = 0;
    RangeArg out;
    out.lo = std::stoll(text.substr(0, dots), &used_lo);
    out.hi = std::stoll(text.substr(dots + 2), &used_hi);
    if (used_lo != dots || used_hi != text.size() - dots - 2)
        throw std::invalid_argument("range must look like a..b: " + text);
    return out;
}

Rational parse_eps(const std::string& text) {
    Rational eps = parse_rational(text);
    if (sgn(eps) < 0) throw std::invalid_argument("eps must be >= 0");
    return eps;
}

int run_info(const std::string& spec_text, Output mode) {
    SurfaceSpec spec = parse_spec(spec_text);
    Json j{{"spec", encode(spec)}, {"numbers", encode(spec.evaluate())}};
    if (auto model = spec.blowup_model())
        j["minimal_model"] = Json{{"root", family_text(model->minimal_model)},
                                  {"blowups", encode(model->blowups)}};
    emit(wrap("info", j), mode);
    return 0;
}

int run_obstruct(const std::string& spec_text, bool assume_sw, Output mode) {
    ObstructionReport rep = evaluate_obstructions(parse_spec(spec_text), assume_sw);
    emit(wrap("obstruct", encode(rep)), mode);
    return rep.any_applicable() ? 0 : 3;
}

Json bound_row(const char* name, const Rational& coeff, bool strict,
               const char* inputs) {
    return Json{{"name", name},
                {"coefficient", encode(coeff)},
                {"strict", strict},
                {"inputs", inputs}};
}

int run_bounds(const std::string& eps_text, Output mode) {
    Json rows = Json::array();
    rows.push_back(bound_row("scalar_l2", Rational(1), false,
                             "(1/32 pi^2) Int s^2 over (c1+)^2; equality only for "
                             "Kahler-Einstein"));
    rows.push_back(bound_row("sharp_energy", rat(4, 9), false,
                             "(1/4 pi^2) Int (|W+|^2/3 + s^2/24) over (c1+)^2; sharp"));
    rows.push_back(bound_row("combined_energy", rat(32, 57), true,
                             "(1/4 pi^2) Int (s^2/24 + 2|W+|^2) over (c1+)^2"));
    rows.push_back(bound_row("refined_energy", rat(16, 33), true,
                             "(1/4 pi^2) Int (s^2/24 + |W+|^2/2) over (c1+)^2"));
    rows.push_back(bound_row("trivial_branch", rat(16, 27), true,
                             "combined energy floor when beta > 16/9"));
    rows.push_back(bound_row("asd_scalar", rat(16, 9), true,
                             "(1/32 pi^2) Int s^2 over (c1+)^2 when W+ = 0"));
    rows.push_back(bound_row("ricci_c1_term", rat(8, 5), true,
                             "(c1+)^2 term of the (1/8 pi^2) Int |ric|^2 bound"));
    rows.push_back(bound_row("ricci_gb_term", rat(-3, 5), true,
                             "(2chi+3tau)(M) term of the same bound"));
    rows.push_back(bound_row("scalar_threshold", rat(2, 3), false,
                             "k >= coeff * (2chi+3tau)(X) obstructs, inclusive"));
    rows.push_back(bound_row("einstein_threshold", rat(25, 57), false,
                             "k >= coeff * (2chi+3tau)(X) obstructs, inclusive"));
    rows.push_back(bound_row("asd_threshold", rat(11, 27), false,
                             "k >= coeff * (2chi+3tau)(X) obstructs "
                             "anti-self-dual Einstein, inclusive"));
    rows.push_back(bound_row("hyperbolic_vanishing", rat(32, 3), false,
                             "invariant vanishes when (c1+)^2 >= coeff * chi"));
    Json j{{"bounds", rows}};
    if (!eps_text.empty()) {
        Rational eps = parse_eps(eps_text);
        j["weighted_energy"] =
            Json{{"eps", encode(eps)},
                 {"infimum", encode(energy_infimum(eps))},
                 {"argmin_beta", encode(energy_argmin_beta(eps))},
                 {"strict", eps > rat(1, 3)},
                 {"inputs", "(1/4 pi^2) Int (s^2/24 + eps |W+|^2) over (c1+)^2"}};
    }
    emit(wrap("bounds", j), mode);
    return 0;
}

int run_verify_minimum(const std::string& eps_text, long long grid_size,
                       long long refine_size, const std::string& csv_path,
                       long long csv_samples, Output mode) {
    Rational eps = parse_eps(eps_text);
    MinimumCertificate cert =
        minimize_energy(eps, static_cast<std::size_t>(grid_size),
                        static_cast<std::size_t>(refine_size));
    Json j = encode(cert);
    Rational residual(cert.min_upper - cert.claimed_infimum);
    j["residual"] = encode(residual);
    if (!csv_path.empty()) {
        auto samples = sample_energy(eps, static_cast<std::size_t>(csv_samples));
        std::ofstream csv(csv_path);
        if (!csv) throw std::invalid_argument("cannot open csv file: " + csv_path);
        csv << "beta,f_lower,f_upper,beta_approx,f_approx\n";
        for (const auto& s : samples) {
            char approx[64];
            std::snprintf(approx, sizeof approx, "%.17g,%.17g", s.beta.get_d(),
                          s.value.hi.get_d());
            csv << to_string(s.beta) << "," << to_string(s.value.lo) << ","
                << to_string(s.value.hi) << "," << approx << "\n";
        }
        j["csv"] = csv_path;
        j["csv_samples"] = csv_samples;
    }
    emit(wrap("verify-minimum", j), mode);
    return cert.brackets_claim() ? 0 : 4;
}

int run_homeo(const std::string& a_text, const std::string& b_text, Output mode) {
    SurfaceSpec a = parse_spec(a_text), b = parse_spec(b_text);
    HomeoVerdict verdict = homeomorphic(a.evaluate(), b.evaluate());
    Json j = encode(verdict);
    j["left_spec"] = encode(a);
    j["right_spec"] = encode(b);
    if (verdict.decided()) j["shared_type"] = encode(*verdict.left.type);
    emit(wrap("homeo", j), mode);
    return verdict.decided() ? 0 : 3;
}

int run_search(const std::string& l_range, const std::string& m_range,
               const std::string& strategy_text, Output mode) {
    SearchRanges ranges;
    if (!l_range.empty()) {
        RangeArg r = parse_range(l_range);
        ranges.hypersurface_lo = static_cast<long>(r.lo);
        ranges.hypersurface_hi = static_cast<long>(r.hi);
    }
    if (!m_range.empty()) {
        RangeArg r = parse_range(m_range);
        ranges.double_plane_lo = static_cast<long>(r.lo);
        ranges.double_plane_hi = static_cast<long>(r.hi);
    }
    PairStrategy strategy;
    if (strategy_text == "noether")
        strategy = PairStrategy::NoetherMatch;
    else if (strategy_text == "min-threshold")
        strategy = PairStrategy::MinThreshold;
    else
        throw std::invalid_argument("strategy must be noether or min-threshold");
    auto pairs = exotic_pair_search(ranges, strategy);
    Json arr = Json::array();
    for (const auto& p : pairs) arr.push_back(encode(p));
    emit(wrap("search-exotic",
              Json{{"strategy", text(strategy)},
                   {"count", pairs.size()},
                   {"pairs", arr}}),
         mode);
    return 0;
}

struct Checklist {
    Json checks = Json::array();
    bool all_pass = true;

    void add(const char* name, bool pass, const std::string& detail) {
        checks.push_back(Json{{"name", name}, {"pass", pass}, {"detail", detail}});
        all_pass = all_pass && pass;
    }
};

int run_verify(long long grid_size, unsigned long long seed, Output mode) {
    Checklist list;

    CharNumbers x9 = hypersurface_invariants(Int(9));
    list.add("x9_invariants",
             x9.c1sq() == 225 && *x9.p_g == 56 && x9.tau == -231 && x9.chi == 459,
             "c1sq=" + Int(x9.c1sq()).get_str() + " p_g=" + x9.p_g->get_str() +
                 " tau=" + x9.tau.get_str() + " chi=" + x9.chi.get_str() +
                 " vs expected 225/56/-231/459");

    CharNumbers m117 = blow_up(x9, 117);
    list.add("x9_blowup_117",
             m117.c1sq() == 108 && *m117.p_g == 56 && m117.tau == -348 &&
                 m117.chi == 576,
             "c1sq=" + Int(m117.c1sq()).get_str() + " p_g=" + m117.p_g->get_str() +
                 " tau=" + m117.tau.get_str() + " chi=" + m117.chi.get_str() +
                 " vs expected 108/56/-348/576");

    HomeoClass ft = freedman_type(m117);
    list.add("freedman_type_113_461",
             ft.status == HomeoStatus::Classified && ft.type->cp2 == 113 &&
                 ft.type->cp2_bar == 461,
             ft.type ? "(" + ft.type->cp2.get_str() + "," + ft.type->cp2_bar.get_str() +
                           ") vs expected (113,461)"
                     : "unclassified: " + ft.reason);

    ThresholdResult t9 = minimal_surface_obstruction(x9, Int(117));
    list.add("einstein_threshold_x9",
             t9.k_min && *t9.k_min == 99 && t9.verdict == Verdict::Obstructed,
             "k_min=" + (t9.k_min ? t9.k_min->get_str() : std::string("none")) +
                 " (expected 99), verdict at k=117: " + text(t9.verdict));

    CharNumbers bic = quadric_bicover_invariants(Int(3), Int(29));
    HomeoVerdict hv = homeomorphic(m117, bic);
    list.add("bicover_6_58_match",
             bic.c1sq() == 108 && *bic.p_g == 56 && hv.homeomorphic,
             "bicover(3,29): c1sq=" + Int(bic.c1sq()).get_str() + " p_g=" +
                 bic.p_g->get_str() + ", homeomorphic=" +
                 (hv.homeomorphic ? "true" : "false"));

    CharNumbers y27 = double_plane_invariants(Int(27));
    ThresholdResult t27 = minimal_surface_obstruction(y27, Int(506));
    CharNumbers y506 = blow_up(y27, 506);
    auto partner = noether_partner(Int(y506.c1sq()), *y506.p_g);
    bool y_ok = y27.c1sq() == 1152 && *y27.p_g == 325 && t27.k_min &&
                *t27.k_min == 506 && t27.verdict == Verdict::Obstructed &&
                y506.c1sq() == 646 && partner.has_value();
    if (y_ok) y_ok = homeomorphic(y506, partner->evaluate()).homeomorphic;
    list.add("y27_chain", y_ok,
             "c1sq=" + Int(y27.c1sq()).get_str() + " p_g=" + y27.p_g->get_str() +
                 " k_min=" + (t27.k_min ? t27.k_min->get_str() : std::string("none")) +
                 " blown-down c1sq=" + Int(y506.c1sq()).get_str() +
                 " partner=" + (partner ? partner->to_canonical() : std::string("none")));

    MinimumCertificate cert =
        minimize_energy(Rational(2), static_cast<std::size_t>(grid_size), 10000);
    Rational residual(cert.min_upper - rat(32, 57));
    Rational arg_err(cert.argmin - rat(576, 361));
    if (sgn(arg_err) < 0) arg_err = Rational(-arg_err);
    list.add("grid_minimum_32_57",
             cert.brackets_claim() && sgn(residual) >= 0 &&
                 residual < rat(Int(1), pow10(9)) && arg_err < rat(Int(1), pow10(6)),
             "min_upper - 32/57 = " + to_string(residual) +
                 ", |argmin - 576/361| = " + to_string(arg_err));

    bool order = rat(11, 27) < rat(25, 57) && rat(25, 57) < rat(4, 9) &&
                 rat(4, 9) < rat(2, 3);
    list.add("constant_ordering", order, "11/27 < 25/57 < 4/9 < 2/3 as exact rationals");

    MinimalVolumes vols = minimal_volumes(x9, Int(0));
    list.add("vol_s_x9", vols.vol_s == 50,
             "vol_s(X_9) = " + to_string(vols.vol_s) + " (expected 50, pi^2 units)");

    std::mt19937_64 rng(seed);
    auto small = [&rng](long lo, long hi) {
        return static_cast<long>(lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)));
    };
    bool ricci_ok = true;
    for (int i = 0; i < 100 && ricci_ok; ++i) {
        Rational x = rat(small(1, 5000), small(1, 40));
        Rational y = rat(small(-3000, 3000), small(1, 40));
        ConvexRoutes routes = ricci_convex_routes(x, y);
        ricci_ok = routes.convex == routes.direct;
    }
    ConvexRoutes at_x9 = ricci_convex_routes(Rational(225), Rational(108));
    ricci_ok = ricci_ok && at_x9.direct == rat(1476, 5) &&
               ricci_l2_lower(Rational(225), Rational(108)) == rat(1476, 5);
    list.add("ricci_identity", ricci_ok,
             "convex route == (8/5)x - (3/5)y on 100 seeded samples; value at "
             "(225,108) = " + to_string(at_x9.direct) + " (expected 1476/5)");

    bool sat_ok = true;
    for (int i = 0; i < 100 && sat_ok; ++i) {
        Rational c = rat(-small(1, 2000), small(1, 50));
        Rational v = rat(small(1, 3000), small(1, 40));
        SaturationPair pair = kahler_saturation(c, v);
        sat_ok = pair.lhs == pair.rhs;
    }
    list.add("kahler_saturation_sweep", sat_ok,
             "lhs == rhs exactly on 100 seeded (c1.omega, omega^2) samples");

    WeightedEnergyResult ie = weighted_energy_infimum(parse_spec("hypersurface(9)"),
                                                      rat(1, 3));
    WeightedEnergyResult ir = weighted_energy_infimum(parse_spec("ruled(2)"),
                                                      Rational(5));
    list.add("weighted_energy_values",
             ie.status == EnergyStatus::Exact && *ie.value == 100 &&
                 ir.status == EnergyStatus::Zero && *ir.value == 0,
             "I_{1/3}(X_9) = " + (ie.value ? to_string(*ie.value) : std::string("?")) +
                 " (expected 100); ruled genus-2 infimum = " +
                 (ir.value ? to_string(*ir.value) : std::string("?")) + " (expected 0)");

    Json j{{"grid_size", grid_size},
           {"seed", seed},
           {"all_pass", list.all_pass},
           {"checks", list.checks}};
    emit(wrap("verify", j), mode);
    return list.all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for characteristic numbers, curvature "
                 "bounds, and Einstein obstructions on blown-up complex surfaces"};
    app.require_subcommand(1);

    std::string output_text = "json";
    app.add_option("--output", output_text, "Report format: json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));

    std::string spec_text, spec_b_text, eps_text = "2", csv_path;
    std::string l_range, m_range, strategy_text = "noether";
    long long grid_size = 1000000, refine_size = 10000, csv_samples = 200;
    unsigned long long seed = 12345;
    bool assume_sw = false;

    auto* info = app.add_subcommand("info", "Characteristic numbers of a surface spec");
    info->add_option("spec", spec_text, "e.g. \"hypersurface(9) + 117*CP2bar\"")
        ->required();

    auto* obstruct = app.add_subcommand("obstruct", "Einstein obstruction report");
    obstruct->add_option("spec", spec_text)->required();
    obstruct->add_flag("--assume-sw", assume_sw,
                       "Grant the nonzero Seiberg-Witten hypothesis for any "
                       "blow-up model");

    auto* bounds = app.add_subcommand("bounds", "Table of curvature bound constants");
    bounds->add_option("--eps", eps_text,
                       "Also report the weighted energy infimum at this eps (p/q)");
    std::string bounds_eps;  // empty unless --eps given
    bounds->callback([&] { bounds_eps = bounds->count("--eps") ? eps_text : ""; });

    auto* verify_min =
        app.add_subcommand("verify-minimum", "Grid-minimization certificate for the "
                                             "weighted energy over beta in [1, 16/9]");
    verify_min->add_option("--eps", eps_text, "Energy weight (p/q), default 2");
    verify_min->add_option("--grid-size", grid_size, "Coarse grid cells, >= 1000")
        ->check(CLI::Range(1000LL, 1000000000LL));
    verify_min->add_option("--refine-size", refine_size, "Refinement points, >= 1000")
        ->check(CLI::Range(1000LL, 100000000LL));
    verify_min->add_option("--csv", csv_path, "Write f(beta) samples to this CSV file");
    verify_min->add_option("--csv-samples", csv_samples, "CSV sample count")
        ->check(CLI::Range(1LL, 100000LL));

    auto* homeo_cmd = app.add_subcommand("homeo", "Freedman-type homeomorphism check");
    homeo_cmd->add_option("spec_a", spec_text)->required();
    homeo_cmd->add_option("spec_b", spec_b_text)->required();

    auto* search = app.add_subcommand("search-exotic",
                                      "Search for obstructed manifolds homeomorphic "
                                      "to Kahler-Einstein surfaces");
    search->add_option("--l-range", l_range, "Hypersurface degree range a..b");
    search->add_option("--m-range", m_range, "Double-plane degree range a..b");
    search->add_option("--strategy", strategy_text, "noether or min-threshold");

    auto* verify = app.add_subcommand("verify", "Run the built-in verification "
                                                "checklist of known exact values");
    verify->add_option("--grid-size", grid_size, "Grid cells for the minimum check")
        ->check(CLI::Range(1000LL, 1000000000LL));
    verify->add_option("--seed", seed, "Seed for randomized identity sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output mode = output_text == "markdown" ? Output::MarkdownMode : Output::JsonMode;
    try {
        if (info->parsed()) return run_info(spec_text, mode);
        if (obstruct->parsed()) return run_obstruct(spec_text, assume_sw, mode);
        if (bounds->parsed()) return run_bounds(bounds_eps, mode);
        if (verify_min->parsed())
            return run_verify_minimum(eps_text, grid_size, refine_size, csv_path,
                                      csv_samples, mode);
        if (homeo_cmd->parsed()) return run_homeo(spec_text, spec_b_text, mode);
        if (search->parsed()) return run_search(l_range, m_range, strategy_text, mode);
        if (verify->parsed()) return run_verify(grid_size, seed, mode);
    } catch (const SpecParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnclassifiedError& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
