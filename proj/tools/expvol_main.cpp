// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expvol/bessel.hpp"
#include "expvol/cluster.hpp"
#include "expvol/crown.hpp"
#include "expvol/errors.hpp"
#include "expvol/polytope.hpp"
#include "expvol/quadrature.hpp"
#include "expvol/recursion.hpp"
#include "expvol/tropical.hpp"
#include "expvol/types.hpp"
#include "expvol/verify.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string format = "json";
    std::string out;
    double tol_abs = 0.0;
    double tol_rel = 0.0;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "write output to PATH instead of stdout");
    cmd->add_option("--tol-abs", o.tol_abs, "absolute quadrature tolerance override");
    cmd->add_option("--tol-rel", o.tol_rel, "relative quadrature tolerance override");
    cmd->add_option("--seed", o.seed, "Monte-Carlo seed");
}

expvol::QuadConfig config_from(const CommonOpts& o) {
    expvol::QuadConfig cfg;
    if (o.tol_abs > 0.0) cfg.abs_tol = o.tol_abs;
    if (o.tol_rel > 0.0) cfg.rel_tol = o.tol_rel;
    if (o.seed != 0) cfg.mc_seed = o.seed;
    return cfg;
}

void emit(const CommonOpts& o, const json& j, const std::string& csv) {
    const std::string& text = o.format == "csv" ? csv : j.dump(2) + "\n";
    if (o.out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(o.out);
        if (!f) throw expvol::param_error("cannot open output file " + o.out);
        f << text;
    }
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw expvol::param_error("empty numeric list: '" + s + "'");
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_list(s)) out.push_back(static_cast<int>(v));
    return out;
}

// Splits a flat K list into per-crown groups following the boundary arities.
expvol::CrownParams group_K(const expvol::DecoratedSurface& surf,
                            const std::vector<double>& flat) {
    expvol::CrownParams cp;
    std::size_t pos = 0;
    for (int j : surf.crown_indices()) {
        const int n = surf.boundaries[static_cast<std::size_t>(j)];
        if (pos + static_cast<std::size_t>(n) > flat.size())
            throw expvol::param_error("--K list shorter than the total number of cusps");
        cp.per_crown.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                                  flat.begin() + static_cast<std::ptrdiff_t>(pos) + n);
        pos += static_cast<std::size_t>(n);
    }
    if (pos != flat.size())
        throw expvol::param_error("--K list longer than the total number of cusps");
    return cp;
}

json surface_json(const expvol::DecoratedSurface& s) {
    return json{{"genus", s.genus}, {"boundaries", s.boundaries}};
}

std::vector<double> sweep_values(const std::string& desc) {
    // "start:stop:count"
    double a = 0.0, b = 0.0;
    int n = 0;
    if (std::sscanf(desc.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 || n < 2)
        throw expvol::param_error("--sweep-s expects start:stop:count with count >= 2");
    std::vector<double> v;
    for (int i = 0; i < n; ++i)
        v.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponential volumes, Bessel transforms and tropical limits of "
                 "decorated hyperbolic surfaces"};
    app.require_subcommand(1);

    // ---- bessel ----
    auto* cmd_bessel = app.add_subcommand("bessel", "Bessel kernel J_s(z) and log-moments");
    CommonOpts ob;
    std::string bessel_s = "0", bessel_z = "1";
    int bessel_k = 0;
    cmd_bessel->add_option("--s", bessel_s, "order(s), comma separated");
    cmd_bessel->add_option("--z", bessel_z, "argument(s), comma separated");
    cmd_bessel->add_option("--logmoment", bessel_k, "log-moment order k (default 0)");
    add_common(cmd_bessel, ob);

    // ---- crown ----
    auto* cmd_crown = app.add_subcommand("crown", "exponential volume / moments of D_n^*");
    CommonOpts oc;
    int crown_n = 1;
    std::string crown_K = "1";
    std::optional<double> crown_l, crown_lambda, crown_s;
    std::optional<int> crown_moment, crown_signed;
    cmd_crown->add_option("--n", crown_n, "number of cusps");
    cmd_crown->add_option("--K", crown_K, "K parameters, comma separated");
    cmd_crown->add_option("--l", crown_l, "boundary length l (Lambda = e^l)");
    cmd_crown->add_option("--Lambda", crown_lambda, "boundary eigenvalue Lambda");
    cmd_crown->add_option("--moment", crown_moment, "half-line moment order k");
    cmd_crown->add_option("--signed-moment", crown_signed, "signed moment order k");
    cmd_crown->add_option("--s", crown_s, "Laplace variable for --signed-moment");
    add_common(cmd_crown, oc);

    // ---- bfunction / lfunction / expvol ----
    auto* cmd_bf = app.add_subcommand("bfunction", "B-function of a decorated surface");
    auto* cmd_lf = app.add_subcommand("lfunction", "L-function of a decorated surface");
    auto* cmd_ev = app.add_subcommand("expvol", "exponential volume of a decorated surface");
    struct SurfOpts {
        CommonOpts common;
        int g = 0;
        std::string boundaries = "1,0";
        std::string K = "1";
        std::string s = "0";
        std::string lengths;
        double hbar = 1.0;
        std::string sweep;
        int sweep_boundary = 0;
    };
    SurfOpts sb, sl, se;
    for (auto [cmd, opts] : {std::pair{cmd_bf, &sb}, std::pair{cmd_lf, &sl}, std::pair{cmd_ev, &se}}) {
        cmd->add_option("--g", opts->g, "genus");
        cmd->add_option("--boundaries", opts->boundaries,
                        "marked points per boundary, comma separated (0 = circle)");
        cmd->add_option("--K", opts->K, "K parameters, flat comma list over all cusps");
        if (cmd != cmd_ev) {
            cmd->add_option("--s", opts->s, "Laplace variables, one per boundary");
            cmd->add_option("--hbar", opts->hbar, "potential rescaling");
            cmd->add_option("--sweep-s", opts->sweep, "sweep one s over start:stop:count");
            cmd->add_option("--sweep-boundary", opts->sweep_boundary,
                            "boundary index swept by --sweep-s");
        } else {
            cmd->add_option("--l", opts->lengths, "boundary lengths, one per boundary");
        }
        add_common(cmd, opts->common);
    }

    // ---- mcshane ----
    auto* cmd_mc = app.add_subcommand("mcshane", "A_{1,1} McShane partial sums");
    CommonOpts om;
    std::string mc_K = "1,1";
    double mc_lambda = 4.0;
    int mc_N = 60;
    cmd_mc->add_option("--K", mc_K, "K1,K2");
    cmd_mc->add_option("--Lambda", mc_lambda, "neck eigenvalue (>= 1)");
    cmd_mc->add_option("--N", mc_N, "twist range |n| <= N");
    add_common(cmd_mc, om);

    // ---- tropical ----
    auto* cmd_tr = app.add_subcommand("tropical", "tropical crown volumes and moments");
    CommonOpts ot;
    std::string tr_kappa = "-1,-1";
    std::optional<int> tr_moment;
    bool tr_kontsevich = false;
    bool tr_polytope = false;
    bool tr_expvol = false;
    int tr_g = 1;
    std::string tr_boundaries = "1";
    cmd_tr->add_option("--kappa", tr_kappa, "tropical K parameters, comma separated");
    cmd_tr->add_option("--moment", tr_moment, "moment degree d");
    cmd_tr->add_flag("--kontsevich-g1n1", tr_kontsevich, "emit the (1,1) coefficient check");
    cmd_tr->add_flag("--polytope", tr_polytope, "emit the moment polytope H-representation");
    cmd_tr->add_flag("--exp-volume", tr_expvol,
                     "tropical exponential volume of the surface given by --g/--boundaries");
    cmd_tr->add_option("--g", tr_g, "genus (with --exp-volume)");
    cmd_tr->add_option("--boundaries", tr_boundaries, "cusp counts (with --exp-volume)");
    add_common(cmd_tr, ot);

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "run the acceptance suite");
    CommonOpts ov;
    add_common(cmd_verify, ov);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_bessel) {
            const auto svals = parse_list(bessel_s);
            const auto zvals = parse_list(bessel_z);
            const auto cfg = config_from(ob);
            json arr = json::array();
            std::ostringstream csv;
            for (double s : svals)
                for (double z : zvals) {
                    const double v = bessel_k == 0 ? expvol::bessel_J(s, z, cfg)
                                                   : expvol::bessel_J_logmoment(s, z, bessel_k, cfg);
                    arr.push_back({{"s", s}, {"z", z}, {"k", bessel_k}, {"value", v}});
                    csv << (svals.size() > 1 ? s : z) << "," << v << "\n";
                }
            emit(ob, arr.size() == 1 ? arr[0] : arr, csv.str());
        } else if (*cmd_crown) {
            const auto K = parse_list(crown_K);
            const auto cfg = config_from(oc);
            double value = 0.0;
            json rec;
            if (crown_moment) {
                value = expvol::crown_moment_halfline(crown_n, K, *crown_moment, cfg);
                rec = {{"n", crown_n}, {"K", K}, {"k", *crown_moment}, {"value", value},
                       {"kind", "moment_halfline"}};
            } else if (crown_signed) {
                const double s = crown_s.value_or(0.0);
                value = expvol::crown_signed_moment(crown_n, K, s, *crown_signed, cfg);
                rec = {{"n", crown_n}, {"K", K}, {"s", s}, {"k", *crown_signed},
                       {"value", value}, {"kind", "signed_moment"}};
            } else {
                const double lambda =
                    crown_lambda ? *crown_lambda : std::exp(crown_l.value_or(0.0));
                value = expvol::crown_volume(crown_n, K, lambda, cfg);
                rec = {{"n", crown_n}, {"K", K}, {"Lambda", lambda}, {"value", value},
                       {"kind", "volume"}};
            }
            std::ostringstream csv;
            csv << crown_n << "," << value << "\n";
            emit(oc, rec, csv.str());
        } else if (*cmd_bf || *cmd_lf) {
            SurfOpts& so = *cmd_bf ? sb : sl;
            const bool is_b = static_cast<bool>(*cmd_bf);
            expvol::DecoratedSurface surf{so.g, parse_int_list(so.boundaries)};
            const auto k_flat = parse_list(so.K);
            const auto cp = group_K(surf, k_flat);
            const auto cfg = config_from(so.common);
            auto base_s = parse_list(so.s);
            if (static_cast<int>(base_s.size()) != surf.num_boundaries())
                throw expvol::param_error("--s needs one value per boundary");
            std::vector<double> xs{0.0};
            const bool sweeping = !so.sweep.empty();
            if (sweeping) xs = sweep_values(so.sweep);
            json arr = json::array();
            std::ostringstream csv;
            for (double x : xs) {
                expvol::LaplaceArgs la{base_s, so.hbar};
                if (sweeping) la.s[static_cast<std::size_t>(so.sweep_boundary)] = x;
                double value = 0.0, err = 0.0;
                if (is_b) {
                    const auto b = expvol::b_function(surf, cp, la, cfg);
                    value = b.value;
                    err = b.error_estimate;
                } else {
                    value = expvol::l_function(surf, cp, la, cfg);
                }
                json rec = {{"surface", surface_json(surf)},
                            {"K", k_flat},
                            {"s", la.s},
                            {"hbar", so.hbar},
                            {"value", value},
                            {"error_estimate", err},
                            {"method", is_b ? "operator" : "recursion_integral"}};
                arr.push_back(rec);
                csv << (sweeping ? x : la.s[0]) << "," << value << "\n";
            }
            emit(so.common, arr.size() == 1 ? arr[0] : arr, csv.str());
        } else if (*cmd_ev) {
            expvol::DecoratedSurface surf{se.g, parse_int_list(se.boundaries)};
            const auto k_flat = parse_list(se.K);
            const auto cp = group_K(surf, k_flat);
            expvol::BoundaryLengths lengths;
            lengths.l = se.lengths.empty()
                            ? std::vector<double>(static_cast<std::size_t>(surf.num_boundaries()), 0.0)
                            : parse_list(se.lengths);
            const auto cfg = config_from(se.common);
            const double value = expvol::exp_volume(surf, cp, lengths, cfg);
            json rec = {{"surface", surface_json(surf)}, {"K", k_flat},
                        {"lengths", lengths.l},         {"value", value},
                        {"error_estimate", 0.0},        {"method", "neck_recursion"}};
            std::ostringstream csv;
            csv << 0 << "," << value << "\n";
            emit(se.common, rec, csv.str());
        } else if (*cmd_mc) {
            const auto K = parse_list(mc_K);
            if (K.size() != 2) throw expvol::param_error("mcshane: --K needs exactly K1,K2");
            const auto partials = expvol::mcshane_partial_sums_A11(K[0], K[1], mc_lambda, mc_N);
            const double target =
                std::sqrt(K[0]) * (std::sqrt(mc_lambda) - 1.0 / std::sqrt(mc_lambda));
            int n999 = -1;
            for (std::size_t i = 0; i < partials.size(); ++i)
                if (partials[i] >= 0.999 * target) {
                    n999 = static_cast<int>(i);
                    break;
                }
            json rec = {{"K", K},
                        {"Lambda", mc_lambda},
                        {"N", mc_N},
                        {"partial", partials.back()},
                        {"target", target},
                        {"n_999", n999},
                        {"partials", partials}};
            std::ostringstream csv;
            for (std::size_t i = 0; i < partials.size(); ++i) csv << i << "," << partials[i] << "\n";
            emit(om, rec, csv.str());
        } else if (*cmd_tr) {
            const auto kappa = parse_list(tr_kappa);
            const auto cfg = config_from(ot);
            json rec;
            std::ostringstream csv;
            if (tr_kontsevich) {
                const auto k = expvol::kontsevich_check_g1n1();
                rec = {{"vstar", k.vstar},
                       {"rho", k.rho},
                       {"tropical_coeff", k.tropical_coeff},
                       {"psi_target", k.psi_target},
                       {"ratio", k.ratio},
                       {"log2_ratio", k.log2_ratio}};
                csv << k.tropical_coeff << "," << k.psi_target << "\n";
            } else if (tr_polytope) {
                const auto poly = expvol::tropical_crown_moment_polytope(kappa);
                rec = json::parse(poly.to_json());
                csv << poly.dim << "," << poly.constraints.size() << "\n";
            } else if (tr_expvol) {
                expvol::DecoratedSurface surf{tr_g, parse_int_list(tr_boundaries)};
                // split the flat kappa list over the crowns
                std::vector<std::span<const double>> groups;
                std::size_t pos = 0;
                for (int j : surf.crown_indices()) {
                    const auto n = static_cast<std::size_t>(
                        surf.boundaries[static_cast<std::size_t>(j)]);
                    if (pos + n > kappa.size())
                        throw expvol::param_error("--kappa shorter than the cusp count");
                    groups.emplace_back(kappa.data() + pos, n);
                    pos += n;
                }
                if (pos != kappa.size())
                    throw expvol::param_error("--kappa longer than the cusp count");
                const double v = expvol::tropical_exp_volume(surf, groups, cfg);
                rec = {{"surface", surface_json(surf)}, {"kappa", kappa}, {"value", v},
                       {"kind", "exp_volume"}};
                csv << kappa[0] << "," << v << "\n";
            } else if (tr_moment) {
                const double v = expvol::tropical_crown_moment(kappa, *tr_moment, cfg);
                rec = {{"kappa", kappa}, {"d", *tr_moment}, {"value", v}, {"kind", "moment"}};
                csv << *tr_moment << "," << v << "\n";
            } else {
                const double v = expvol::tropical_crown_volume(kappa);
                rec = {{"kappa", kappa}, {"value", v}, {"kind", "volume"}};
                csv << kappa.size() << "," << v << "\n";
            }
            emit(ot, rec, csv.str());
        } else if (*cmd_verify) {
            const auto results = expvol::verify::run_all();
            if (ov.format == "json") {
                json arr = json::array();
                for (const auto& res : results)
                    arr.push_back({{"id", res.id},
                                   {"name", res.name},
                                   {"pass", res.pass},
                                   {"measured", res.measured},
                                   {"threshold", res.threshold},
                                   {"seconds", res.seconds},
                                   {"detail", res.detail}});
                if (!ov.out.empty()) {
                    std::ofstream f(ov.out);
                    f << arr.dump(2) << "\n";
                }
            }
            expvol::verify::print_report(results);
            return expvol::verify::all_passed(results) ? 0 : 3;
        }
    } catch (const expvol::param_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
