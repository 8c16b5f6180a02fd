#include "daubnorm/bernstein.hpp"
#include "daubnorm/bound_formulas.hpp"
#include "daubnorm/daub_filters.hpp"
#include "daubnorm/norms.hpp"
#include "daubnorm/spectral_eval.hpp"
#include "daubnorm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

using namespace daubnorm;
using nlohmann::json;

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("range", "expected LO:HI, got " + text);
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct Globals {
    double tol = 1e-9;
    std::string out;
    std::string format = "csv";
    double log_base = std::numbers::e;
    EvalConfig cfg;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + g.out);
    file << text;
}

int run_sweep(const Globals& g, const SweepGrid& grid) {
    const SweepReport report = verify_sweep(grid, g.cfg);
    emit(g, g.format == "json" ? report_json(report) : report_csv(report));
    const SweepSummary& s = report.summary;
    std::cerr << to_string(grid.check) << ": pass=" << s.pass << " fail=" << s.fail
              << " vacuous=" << s.vacuous << " error=" << s.error << "\n";
    return report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Daubechies wavelet weighted norms, best constants and bound verification"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--tol", g.tol, "Extra absolute tolerance added to every verification check");
    app.add_option("--out", g.out, "Write the report to FILE instead of stdout");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--log-base", g.log_base, "Logarithm base in c log m");
    app.add_option("--product-tol", g.cfg.product_tol, "Truncation tolerance of the infinite product");
    app.add_option("--quad-tol", g.cfg.quad_tol, "Absolute quadrature tolerance");

    // filters
    int filt_m = 2;
    bool filt_json = false, filt_csv = false;
    auto* filters = app.add_subcommand("filters", "Print the Daubechies filter taps h_m(l)");
    filters->add_option("--m", filt_m, "Order")->required();
    filters->add_flag("--json", filt_json);
    filters->add_flag("--csv", filt_csv);

    // eval
    int eval_m = 2;
    double eval_omega = 0;
    bool eval_abs2 = false, eval_json = false;
    auto* eval = app.add_subcommand("eval", "Evaluate psi-hat (and phi-hat) at one frequency");
    eval->add_option("--m", eval_m, "Order")->required();
    eval->add_option("--omega", eval_omega, "Frequency")->required();
    eval->add_flag("--abs2", eval_abs2, "Print |psi-hat|^2 from the magnitude formula only");
    eval->add_flag("--json", eval_json);

    // decay
    int decay_m = 2;
    std::string decay_range = "12.566370614359172:1608.4954386379741";
    int decay_samples = 64;
    bool decay_json = false;
    auto* decay = app.add_subcommand("decay", "Fit |psi-hat(w)| <= C w^{-c log m}");
    decay->add_option("--m", decay_m, "Order")->required();
    decay->add_option("--range", decay_range, "Fit range LO:HI (LO > 2 pi)");
    decay->add_option("--samples", decay_samples, "Number of log-spaced samples");
    decay->add_flag("--json", decay_json);

    // norm
    int norm_m = 2, norm_k = 0;
    double norm_p = 2.0, norm_cutoff = kDefaultCutoff;
    bool norm_json = false;
    auto* norm = app.add_subcommand("norm", "Weighted norm || (iw)^{-k} psi-hat ||_p");
    norm->add_option("--m", norm_m, "Order")->required();
    norm->add_option("--k", norm_k, "Weight exponent")->required();
    norm->add_option("--p", norm_p, "Exponent p > 1")->required();
    norm->add_option("--omega-max", norm_cutoff, "Integration cutoff");
    norm->add_flag("--json", norm_json);

    // bounds
    int bnd_m = 2, bnd_k = 1;
    double bnd_p = 2.0, bnd_eps = std::numbers::pi;
    std::optional<double> bnd_c, bnd_ct;
    bool bnd_json = false, bnd_csv = false;
    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds A, B, D, E, F, G");
    bounds->add_option("--m", bnd_m, "Order")->required();
    bounds->add_option("--k", bnd_k, "Weight exponent")->required();
    bounds->add_option("--p", bnd_p, "Exponent p > 1")->required();
    bounds->add_option("--eps", bnd_eps, "epsilon in (0, pi]");
    bounds->add_option("--c", bnd_c, "Decay parameter c (default: fitted)");
    bounds->add_option("--ctilde", bnd_ct, "Decay constant C~ (default: fitted)");
    bounds->add_flag("--json", bnd_json);
    bounds->add_flag("--csv", bnd_csv);

    // verify
    std::string ver_check;
    std::vector<int> ver_m, ver_k;
    std::vector<double> ver_p;
    std::optional<double> ver_c, ver_ct, ver_eps, ver_slack;
    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("check", ver_check, "theorem1|theorem2|corollary1|corollary2|corollary3")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "corollary1", "corollary2", "corollary3"}));
    verify->add_option("--m", ver_m, "Orders");
    verify->add_option("--k", ver_k, "Weight exponents (theorem1/corollary2)");
    verify->add_option("--p", ver_p, "Exponents");
    verify->add_option("--eps", ver_eps, "epsilon for B");
    verify->add_option("--c", ver_c, "Override the fitted c");
    verify->add_option("--ctilde", ver_ct, "Override the fitted C~");
    verify->add_option("--g-slack", ver_slack, "Multiplier applied to G");

    // bernstein
    int ber_m = 2, ber_k = 1;
    double ber_p = 2.0, ber_sigma = 1.0, ber_center = 0.0;
    std::string ber_j = "-3:6", ber_nu = "-8:8";
    auto* bernstein = app.add_subcommand("bernstein", "Check |<f, psi_{j,nu}>| against the Bernstein bound");
    bernstein->add_option("--m", ber_m, "Order");
    bernstein->add_option("--k", ber_k, "Weight exponent");
    bernstein->add_option("--p", ber_p, "Exponent p > 1");
    bernstein->add_option("--sigma", ber_sigma, "Gaussian width");
    bernstein->add_option("--center", ber_center, "Gaussian center");
    bernstein->add_option("--j-range", ber_j, "Scales A:B");
    bernstein->add_option("--nu-range", ber_nu, "Shifts A:B");

    CLI11_PARSE(app, argc, argv);

    try {
        g.cfg.validate();

        if (*filters) {
            const FilterSpec f = construct_filter(filt_m);
            std::ostringstream out;
            if (filt_json) {
                out << "{\"m\": " << f.order() << ", \"taps\": [";
                for (std::size_t l = 0; l < f.taps().size(); ++l) out << (l ? ", " : "") << g17(f.taps()[l]);
                out << "]}\n";
            } else {
                if (filt_csv) out << "l,h\n";
                for (std::size_t l = 0; l < f.taps().size(); ++l) {
                    out << l << (filt_csv ? "," : " ") << g17(f.taps()[l]) << "\n";
                }
            }
            emit(g, out.str());
            return 0;
        }

        if (*eval) {
            std::ostringstream out;
            if (eval_abs2) {
                const double v = wavelet_hat_abs2(eval_m, eval_omega, g.cfg);
                if (eval_json) {
                    out << json{{"m", eval_m}, {"omega", eval_omega}, {"abs2", v}}.dump() << "\n";
                } else {
                    out << g17(v) << "\n";
                }
            } else {
                const auto psi = wavelet_hat(eval_m, eval_omega, g.cfg);
                const auto phi = scaling_hat(eval_m, eval_omega, g.cfg);
                if (eval_json) {
                    out << json{{"m", eval_m},
                                {"omega", eval_omega},
                                {"psi_hat", {psi.real(), psi.imag()}},
                                {"phi_hat", {phi.real(), phi.imag()}}}
                               .dump()
                        << "\n";
                } else {
                    out << "psi_hat " << g17(psi.real()) << " " << g17(psi.imag()) << " abs " << g17(std::abs(psi))
                        << "\nphi_hat " << g17(phi.real()) << " " << g17(phi.imag()) << " abs "
                        << g17(std::abs(phi)) << "\n";
                }
            }
            emit(g, out.str());
            return 0;
        }

        if (*decay) {
            const auto [lo, hi] = parse_range(decay_range);
            const DecayFit fit = estimate_decay(decay_m, lo, hi, decay_samples, g.cfg);
            std::ostringstream out;
            if (decay_json) {
                out << json{{"m", fit.m},
                            {"C_tilde", fit.C_tilde},
                            {"c", fit.c},
                            {"exponent", fit.exponent()},
                            {"fit_range", {fit.omega_lo, fit.omega_hi}},
                            {"residual", fit.residual}}
                           .dump(2)
                    << "\n";
            } else {
                out << "C_tilde " << g17(fit.C_tilde) << "\nc " << g17(fit.c) << "\nexponent "
                    << g17(fit.exponent()) << "\nresidual " << g17(fit.residual) << "\n";
            }
            emit(g, out.str());
            return 0;
        }

        if (*norm) {
            NormRequest req{norm_m, norm_k, norm_p, norm_cutoff, std::nullopt};
            const QuadResult r = weighted_lp_norm(req, g.cfg);
            std::ostringstream out;
            if (norm_json) {
                out << json{{"value", r.value}, {"abs_error", r.abs_error}, {"evaluations", r.evaluations}}.dump()
                    << "\n";
            } else {
                out << "value " << g17(r.value) << "\nabs_error " << g17(r.abs_error) << "\nevaluations "
                    << r.evaluations << "\n";
            }
            emit(g, out.str());
            return 0;
        }

        if (*bounds) {
            BoundParams q;
            q.m = bnd_m;
            q.k = bnd_k;
            q.p = bnd_p;
            q.eps = bnd_eps;
            q.log_base = g.log_base;
            std::string source = "cli";
            if (!bnd_c || !bnd_ct) {
                if (bnd_m >= 2) {
                    const DecayFit fit = estimate_decay(bnd_m, 4.0 * std::numbers::pi, kDefaultCutoff, 1024, g.cfg);
                    q.c = bnd_c.value_or(fit.c_for_log_base(g.log_base));
                    q.C_tilde = bnd_ct.value_or(fit.C_tilde);
                } else {
                    const EnvelopeFit env = fit_envelope(1, 4.0 * std::numbers::pi, kDefaultCutoff, 1024, g.cfg);
                    q.c = bnd_c.value_or(1.0);
                    q.C_tilde = bnd_ct.value_or(env.C_tilde);
                }
                source = "estimate_decay";
            } else {
                q.c = *bnd_c;
                q.C_tilde = *bnd_ct;
            }
            const BoundSet set = compute_bounds(q);
            auto opt = [](const std::optional<double>& v) { return v ? number(*v) : json(nullptr); };
            std::ostringstream out;
            if (bnd_csv) {
                auto cell = [](const std::optional<double>& v) { return v ? g17(*v) : std::string(); };
                out << "m,k,p,eps,c,C_tilde,log_base,A,B,D,E,F,G,flags\n";
                std::string flags;
                for (const auto& f : set.flags) flags += (flags.empty() ? "" : "|") + f;
                out << q.m << ',' << q.k << ',' << g17(q.p) << ',' << g17(q.eps) << ',' << g17(q.c) << ','
                    << g17(q.C_tilde) << ',' << g17(q.log_base) << ',' << cell(set.A) << ',' << cell(set.B) << ','
                    << cell(set.D) << ',' << cell(set.E) << ',' << cell(set.F) << ',' << cell(set.G) << ','
                    << flags << "\n";
            } else if (bnd_json || g.format == "json") {
                out << json{{"params",
                             {{"m", q.m}, {"k", q.k}, {"p", q.p}, {"eps", q.eps}, {"c", q.c},
                              {"C_tilde", q.C_tilde}, {"log_base", q.log_base}, {"decay_source", source}}},
                            {"A", opt(set.A)}, {"B", opt(set.B)}, {"D", opt(set.D)}, {"E", opt(set.E)},
                            {"F", opt(set.F)}, {"G", opt(set.G)}, {"G_asymptotic", set.G_asymptotic},
                            {"flags", set.flags}}
                           .dump(2)
                    << "\n";
            } else {
                auto line = [&](const char* name, const std::optional<double>& v) {
                    out << name << " " << (v ? g17(*v) : std::string("n/a")) << "\n";
                };
                line("A", set.A);
                line("B", set.B);
                line("D", set.D);
                line("E", set.E);
                line("F", set.F);
                line("G", set.G);
                out << "c " << g17(q.c) << " (" << source << ")\nC_tilde " << g17(q.C_tilde) << "\n";
                for (const auto& f : set.flags) out << "flag " << f << "\n";
            }
            emit(g, out.str());
            return 0;
        }

        if (*verify) {
            SweepGrid grid = default_grid(parse_check_kind(ver_check));
            if (!ver_m.empty()) grid.ms = ver_m;
            if (!ver_k.empty()) grid.ks = ver_k;
            if (!ver_p.empty()) grid.ps = ver_p;
            if (ver_eps) grid.eps = *ver_eps;
            if (ver_slack) grid.g_slack = *ver_slack;
            grid.c = ver_c;
            grid.C_tilde = ver_ct;
            grid.tol_extra = g.tol;
            grid.log_base = g.log_base;
            return run_sweep(g, grid);
        }

        if (*bernstein) {
            SweepGrid grid = default_grid(CheckKind::Bernstein);
            grid.ms = {ber_m};
            grid.ks = {ber_k};
            grid.ps = {ber_p};
            grid.sigma = ber_sigma;
            grid.center = ber_center;
            const auto [jlo, jhi] = parse_range(ber_j);
            const auto [nlo, nhi] = parse_range(ber_nu);
            grid.j_lo = static_cast<int>(jlo);
            grid.j_hi = static_cast<int>(jhi);
            grid.nu_lo = static_cast<int>(nlo);
            grid.nu_hi = static_cast<int>(nhi);
            grid.tol_extra = g.tol;
            grid.log_base = g.log_base;
            return run_sweep(g, grid);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
