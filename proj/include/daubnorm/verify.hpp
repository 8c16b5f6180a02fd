#pragma once

#include "daubnorm/bound_formulas.hpp"
#include "daubnorm/spectral_eval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace daubnorm {

enum class CheckKind { Theorem1, Theorem2, Corollary1, Corollary2, Corollary3, Bernstein };
enum class RowStatus { Pass, Fail, Vacuous, Error };

std::string to_string(CheckKind kind);
std::string to_string(RowStatus status);
/// Parses "theorem1", "corollary2", "bernstein", ...; std::invalid_argument otherwise.
CheckKind parse_check_kind(const std::string& name);

/// One (m, k, p[, j, nu]) case. A missing bound means the side does not apply;
/// a vacuous side is present but constrains nothing.
struct VerificationRow {
    CheckKind check = CheckKind::Theorem1;
    int m = 0;
    int k = 0;
    double p = 0;
    std::optional<int> j;
    std::optional<int> nu;
    double numeric_value = 0;
    double abs_error = 0;
    std::optional<double> lower_bound;
    std::optional<double> upper_bound;
    bool lower_vacuous = false;
    bool upper_vacuous = false;
    double margin = 0;  // min(upper - value, value - lower) over constraining sides; may be negative
    std::vector<std::string> vacuous_flags;
    double C_tilde = 0;
    double c = 0;
    RowStatus status = RowStatus::Error;
    std::string message;
};

struct SweepGrid {
    CheckKind check = CheckKind::Theorem1;
    std::vector<int> ms;
    std::vector<int> ks;      // empty: every admissible k for the check
    std::vector<double> ps;
    double eps = 3.141592653589793;
    std::optional<double> c;        // overrides the fitted decay exponent parameter
    std::optional<double> C_tilde;  // overrides the fitted envelope constant (provenance only)
    double log_base = 2.718281828459045;
    double tol_extra = 1e-9;
    double g_slack = 0.5;           // multiplier on G in place of its (1 - o(1)) factor
    double cutoff = 4096.0 * 3.141592653589793;
    int decay_samples = 1024;
    // Bernstein checks
    double sigma = 1.0;
    double center = 0.0;
    int j_lo = -3, j_hi = 6;
    int nu_lo = -8, nu_hi = 8;
};

/// The grids used by the acceptance runs for each check.
SweepGrid default_grid(CheckKind check);

struct SweepSummary {
    int pass = 0;
    int fail = 0;
    int vacuous = 0;
    int error = 0;
};

struct SweepReport {
    SweepGrid grid;
    std::vector<VerificationRow> rows;
    SweepSummary summary;
};

/// Runs every case of the grid in deterministic order. Case failures and
/// exceptions are recorded in their rows; the sweep itself does not throw.
SweepReport verify_sweep(const SweepGrid& grid, const EvalConfig& cfg = {});

/// 17 significant digits, fixed column order, a leading "# " header line.
std::string report_csv(const SweepReport& report);
/// JSON mirror of the CSV with schema_version "v1".
std::string report_json(const SweepReport& report);

/// 0 when every row is pass or vacuous, 1 otherwise.
int report_exit_code(const SweepReport& report);

}  // namespace daubnorm
