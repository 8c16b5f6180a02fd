#include "daubnorm/verify.hpp"

#include "daubnorm/bernstein.hpp"
#include "daubnorm/norms.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace daubnorm {

namespace {

constexpr double kPi = std::numbers::pi;

struct DecayInfo {
    TailDecay tail;
    double c_bounds;
    double C_tilde;
};

std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt17(const std::optional<double>& v) { return v ? fmt17(*v) : std::string(); }

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Quote a CSV field when it carries a separator or quote.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

// Status and margin from the sides that actually constrain the value.
void finalize(VerificationRow& row, double tol) {
    bool failed = false;
    bool constrained = false;
    double margin = std::numeric_limits<double>::infinity();
    if (row.lower_bound && !row.lower_vacuous) {
        constrained = true;
        const double gap = row.numeric_value - *row.lower_bound;
        margin = std::min(margin, gap);
        if (gap < -tol) failed = true;
    }
    if (row.upper_bound && !row.upper_vacuous) {
        constrained = true;
        const double gap = *row.upper_bound - row.numeric_value;
        margin = std::min(margin, gap);
        if (gap < -tol) failed = true;
    }
    row.margin = constrained ? margin : std::numeric_limits<double>::quiet_NaN();
    if (failed) {
        row.status = RowStatus::Fail;
        if (row.message.empty()) row.message = "bound violated beyond tolerance " + fmt17(tol);
    } else {
        row.status = constrained ? RowStatus::Pass : RowStatus::Vacuous;
    }
}

bool theorem1_family(CheckKind c) { return c == CheckKind::Theorem1 || c == CheckKind::Corollary2; }
bool theorem2_family(CheckKind c) { return c == CheckKind::Theorem2 || c == CheckKind::Corollary3; }

// Bound flags that concern the bounds a check actually uses.
bool flag_applies(CheckKind check, const std::string& flag) {
    if (flag == "m1_decay_term_vacuous") return true;
    switch (check) {
        case CheckKind::Theorem1: return flag == "B_nonpositive";
        case CheckKind::Theorem2: return flag == "G_asymptotic";
        case CheckKind::Corollary1: return flag == "E_nonpositive";
        case CheckKind::Corollary2: return flag == "B_nonpositive" || flag == "E_nonpositive";
        case CheckKind::Corollary3: return flag == "E_nonpositive" || flag == "G_asymptotic";
        case CheckKind::Bernstein: return false;
    }
    return false;
}

class Sweeper {
public:
    Sweeper(const SweepGrid& grid, const EvalConfig& cfg) : grid_(grid), cfg_(cfg) {}

    SweepReport run() {
        SweepReport report;
        report.grid = grid_;
        for (const auto& [m, k, p] : cases()) {
            if (grid_.check == CheckKind::Bernstein) {
                run_bernstein(m, k, p, report.rows);
            } else {
                report.rows.push_back(run_case(m, k, p));
            }
        }
        for (const auto& row : report.rows) {
            switch (row.status) {
                case RowStatus::Pass: ++report.summary.pass; break;
                case RowStatus::Fail: ++report.summary.fail; break;
                case RowStatus::Vacuous: ++report.summary.vacuous; break;
                case RowStatus::Error: ++report.summary.error; break;
            }
        }
        return report;
    }

private:
    std::vector<std::tuple<int, int, double>> cases() const {
        std::vector<std::tuple<int, int, double>> out;
        for (int m : grid_.ms) {
            std::vector<int> ks;
            if (theorem1_family(grid_.check) || grid_.check == CheckKind::Bernstein) {
                if (grid_.ks.empty()) {
                    for (int k = 1; k < m; ++k) ks.push_back(k);
                } else {
                    for (int k : grid_.ks) {
                        if (k >= 0 && k < m) ks.push_back(k);
                    }
                }
            } else if (theorem2_family(grid_.check)) {
                ks.push_back(m);
            } else {
                ks.push_back(0);
            }
            for (int k : ks) {
                for (double p : grid_.ps) {
                    if (theorem1_family(grid_.check) && !(p * k > 1.0)) continue;
                    if (theorem2_family(grid_.check) && !mp_is_even(m, p)) continue;
                    out.emplace_back(m, k, p);
                }
            }
        }
        return out;
    }

    const DecayInfo& decay(int m) {
        auto it = decay_.find(m);
        if (it != decay_.end()) return it->second;
        DecayInfo info{};
        if (m >= 2) {
            const DecayFit fit = estimate_decay(m, 4.0 * kPi, grid_.cutoff, grid_.decay_samples, cfg_);
            info.tail = TailDecay::from(fit);
            info.c_bounds = grid_.c.value_or(fit.c_for_log_base(grid_.log_base));
            info.C_tilde = grid_.C_tilde.value_or(fit.C_tilde);
        } else {
            // c log 1 = 0: the bounds do not depend on c, the tail uses the raw envelope.
            const EnvelopeFit env = fit_envelope(m, 4.0 * kPi, grid_.cutoff, grid_.decay_samples, cfg_);
            info.tail = TailDecay::from(env);
            info.c_bounds = grid_.c.value_or(1.0);
            info.C_tilde = grid_.C_tilde.value_or(env.C_tilde);
        }
        return decay_.emplace(m, info).first->second;
    }

    const QuadResult& norm(int m, int k, double p) {
        const auto key = std::make_tuple(m, k, p);
        auto it = norms_.find(key);
        if (it != norms_.end()) return it->second;
        NormRequest req{m, k, p, grid_.cutoff, decay(m).tail};
        return norms_.emplace(key, weighted_lp_norm(req, cfg_)).first->second;
    }

    BoundParams params(int m, int k, double p) {
        const DecayInfo& d = decay(m);
        BoundParams q;
        q.m = m;
        q.k = k;
        q.p = p;
        q.eps = grid_.eps;
        q.c = d.c_bounds;
        q.C_tilde = d.C_tilde;
        q.log_base = grid_.log_base;
        return q;
    }

    VerificationRow run_case(int m, int k, double p) {
        VerificationRow row;
        row.check = grid_.check;
        row.m = m;
        row.k = k;
        row.p = p;
        try {
            const BoundParams q = params(m, k, p);
            row.C_tilde = q.C_tilde;
            row.c = q.c;
            const BoundSet bounds = compute_bounds(q);
            for (const auto& flag : bounds.flags) {
                if (flag_applies(grid_.check, flag)) row.vacuous_flags.push_back(flag);
            }
            double tol = grid_.tol_extra;

            switch (grid_.check) {
                case CheckKind::Theorem1: {
                    const QuadResult& I = norm(m, k, p);
                    row.numeric_value = I.value;
                    row.abs_error = I.abs_error;
                    row.lower_bound = bounds.B;
                    row.upper_bound = bounds.A;
                    row.lower_vacuous = *bounds.B <= 0;
                    break;
                }
                case CheckKind::Theorem2: {
                    const QuadResult& I = norm(m, m, p);
                    row.numeric_value = I.value;
                    row.abs_error = I.abs_error;
                    row.lower_bound = grid_.g_slack * *bounds.G;
                    row.upper_bound = bounds.F;
                    row.vacuous_flags.push_back("G_slack=" + fmt17(grid_.g_slack));
                    break;
                }
                case CheckKind::Corollary1: {
                    const QuadResult& I = norm(m, 0, p);
                    row.numeric_value = I.value;
                    row.abs_error = I.abs_error;
                    row.lower_bound = bounds.E;
                    row.upper_bound = bounds.D;
                    row.lower_vacuous = *bounds.E <= 0;
                    break;
                }
                case CheckKind::Corollary2:
                case CheckKind::Corollary3: {
                    const bool cor3 = grid_.check == CheckKind::Corollary3;
                    const QuadResult& num = norm(m, k, p);
                    const QuadResult& den = norm(m, 0, p);
                    row.numeric_value = num.value / den.value;
                    row.abs_error = row.numeric_value * (num.abs_error / num.value + den.abs_error / den.value);
                    const RatioBounds r = ratio_bounds(q, cor3 ? RatioKind::Corollary3 : RatioKind::Corollary2);
                    const double lo = cor3 ? grid_.g_slack * r.lo : r.lo;
                    row.lower_bound = lo;
                    row.upper_bound = r.hi;
                    row.lower_vacuous = r.lo_vacuous;
                    row.upper_vacuous = r.hi_vacuous;
                    if (cor3) row.vacuous_flags.push_back("G_slack=" + fmt17(grid_.g_slack));
                    if (r.hi_vacuous) row.vacuous_flags.push_back("upper_ratio_vacuous");
                    if (r.lo_vacuous) row.vacuous_flags.push_back("lower_ratio_vacuous");
                    break;
                }
                case CheckKind::Bernstein:
                    break;
            }
            tol += row.abs_error;
            finalize(row, tol);
        } catch (const std::exception& e) {
            row.status = RowStatus::Error;
            row.message = e.what();
        }
        return row;
    }

    void run_bernstein(int m, int k, double p, std::vector<VerificationRow>& rows) {
        std::optional<GaussianTest> f;
        std::string setup_error;
        try {
            f = make_class_gaussian(grid_.sigma, grid_.center, k, p);
        } catch (const std::exception& e) {
            setup_error = e.what();
        }
        for (int j = grid_.j_lo; j <= grid_.j_hi; ++j) {
            std::optional<BernsteinRhs> rhs;
            std::string rhs_error = setup_error;
            if (f && rhs_error.empty()) {
                try {
                    rhs = bernstein_rhs(m, k, p, j, *f, cfg_, decay(m).tail);
                } catch (const std::exception& e) {
                    rhs_error = e.what();
                }
            }
            for (int nu = grid_.nu_lo; nu <= grid_.nu_hi; ++nu) {
                VerificationRow row;
                row.check = CheckKind::Bernstein;
                row.m = m;
                row.k = k;
                row.p = p;
                row.j = j;
                row.nu = nu;
                if (!rhs) {
                    row.status = RowStatus::Error;
                    row.message = rhs_error;
                    rows.push_back(std::move(row));
                    continue;
                }
                try {
                    const DecayInfo& d = decay(m);
                    row.C_tilde = d.C_tilde;
                    row.c = d.c_bounds;
                    const ComplexQuad coef = wavelet_coefficient(*f, m, j, nu, cfg_);
                    row.numeric_value = std::abs(coef.value);
                    row.abs_error = coef.abs_error;
                    row.upper_bound = rhs->value;
                    finalize(row, coef.abs_error + rhs->abs_error + grid_.tol_extra);
                } catch (const std::exception& e) {
                    row.status = RowStatus::Error;
                    row.message = e.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }

    const SweepGrid& grid_;
    const EvalConfig& cfg_;
    std::map<int, DecayInfo> decay_;
    std::map<std::tuple<int, int, double>, QuadResult> norms_;
};

}  // namespace

std::string to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::Theorem1: return "theorem1";
        case CheckKind::Theorem2: return "theorem2";
        case CheckKind::Corollary1: return "corollary1";
        case CheckKind::Corollary2: return "corollary2";
        case CheckKind::Corollary3: return "corollary3";
        case CheckKind::Bernstein: return "bernstein";
    }
    return "unknown";
}

std::string to_string(RowStatus status) {
    switch (status) {
        case RowStatus::Pass: return "pass";
        case RowStatus::Fail: return "fail";
        case RowStatus::Vacuous: return "vacuous";
        case RowStatus::Error: return "error";
    }
    return "unknown";
}

CheckKind parse_check_kind(const std::string& name) {
    for (CheckKind k : {CheckKind::Theorem1, CheckKind::Theorem2, CheckKind::Corollary1,
                        CheckKind::Corollary2, CheckKind::Corollary3, CheckKind::Bernstein}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown check: " + name);
}

SweepGrid default_grid(CheckKind check) {
    SweepGrid g;
    g.check = check;
    switch (check) {
        case CheckKind::Theorem1:
        case CheckKind::Corollary2:
            g.ms = {2, 3, 4, 5, 6};
            g.ps = {1.5, 2.0, 3.0};
            break;
        case CheckKind::Theorem2:
        case CheckKind::Corollary3:
            g.ms = {1, 2, 3, 4, 5};
            g.ps = {2.0, 4.0};
            break;
        case CheckKind::Corollary1:
            g.ms = {2, 3, 4, 5, 6};
            g.ps = {1.5, 2.0, 3.0};
            break;
        case CheckKind::Bernstein:
            g.ms = {2};
            g.ks = {1};
            g.ps = {2.0};
            break;
    }
    return g;
}

SweepReport verify_sweep(const SweepGrid& grid, const EvalConfig& cfg) {
    return Sweeper(grid, cfg).run();
}

std::string report_csv(const SweepReport& report) {
    std::ostringstream out;
    const SweepGrid& g = report.grid;
    out << "# daubnorm-report schema_version=v1 check=" << to_string(g.check)
        << " tol_extra=" << fmt17(g.tol_extra) << " g_slack=" << fmt17(g.g_slack)
        << " log_base=" << fmt17(g.log_base) << " cutoff=" << fmt17(g.cutoff) << "\n";
    out << "check,m,k,p,j,nu,numeric_value,abs_error,lower_bound,upper_bound,margin,status,"
           "vacuous_flags,C_tilde,c,message\n";
    for (const auto& r : report.rows) {
        out << to_string(r.check) << ',' << r.m << ',' << r.k << ',' << fmt17(r.p) << ','
            << (r.j ? std::to_string(*r.j) : "") << ',' << (r.nu ? std::to_string(*r.nu) : "") << ','
            << fmt17(r.numeric_value) << ',' << fmt17(r.abs_error) << ',' << fmt17(r.lower_bound) << ','
            << fmt17(r.upper_bound) << ',' << fmt17(r.margin) << ',' << to_string(r.status) << ','
            << csv_field(join(r.vacuous_flags, '|')) << ',' << fmt17(r.C_tilde) << ',' << fmt17(r.c) << ','
            << csv_field(r.message) << "\n";
    }
    const SweepSummary& s = report.summary;
    out << "# summary pass=" << s.pass << " fail=" << s.fail << " vacuous=" << s.vacuous
        << " error=" << s.error << "\n";
    return out.str();
}

std::string report_json(const SweepReport& report) {
    using nlohmann::json;
    auto number = [](double v) -> json { return std::isfinite(v) ? json(v) : json(nullptr); };
    auto optional = [&](const std::optional<double>& v) -> json { return v ? number(*v) : json(nullptr); };

    const SweepGrid& g = report.grid;
    json doc;
    doc["schema_version"] = "v1";
    doc["check"] = to_string(g.check);
    doc["settings"] = {{"tol_extra", g.tol_extra}, {"g_slack", g.g_slack}, {"log_base", g.log_base},
                       {"cutoff", g.cutoff}, {"eps", g.eps}};
    json rows = json::array();
    for (const auto& r : report.rows) {
        json row;
        row["check"] = to_string(r.check);
        row["m"] = r.m;
        row["k"] = r.k;
        row["p"] = r.p;
        row["j"] = r.j ? json(*r.j) : json(nullptr);
        row["nu"] = r.nu ? json(*r.nu) : json(nullptr);
        row["numeric_value"] = number(r.numeric_value);
        row["abs_error"] = number(r.abs_error);
        row["lower_bound"] = optional(r.lower_bound);
        row["upper_bound"] = optional(r.upper_bound);
        row["lower_vacuous"] = r.lower_vacuous;
        row["upper_vacuous"] = r.upper_vacuous;
        row["margin"] = number(r.margin);
        row["status"] = to_string(r.status);
        row["vacuous_flags"] = r.vacuous_flags;
        row["decay"] = {{"C_tilde", number(r.C_tilde)}, {"c", number(r.c)}};
        row["message"] = r.message;
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["summary"] = {{"pass", report.summary.pass},
                      {"fail", report.summary.fail},
                      {"vacuous", report.summary.vacuous},
                      {"error", report.summary.error}};
    return doc.dump(2) + "\n";
}

int report_exit_code(const SweepReport& report) {
    return (report.summary.fail > 0 || report.summary.error > 0) ? 1 : 0;
}

}  // namespace daubnorm
