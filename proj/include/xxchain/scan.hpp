#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace xxchain {

struct ScanRow {
    double alpha = 0.0;
    int m = 0;
    double t1 = 0.0;
    double t3 = 0.0;
    double lqfi = 0.0;
    double owqd = 0.0;
    double dlqfi = 0.0;
    double dowqd = 0.0;
};

struct ScanConfig {
    double alpha_min = 0.0;
    double alpha_max = 3.0;
    double step = 0.005;
    int m = 1;
    bool with_lqfi = true;
    bool with_owqd = true;
};

enum class Measure { lqfi, owqd };

// Closed-form/numeric mismatch found during a scan's self-check.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CSV destination failures (open or write).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sweep alpha over the inclusive uniform grid alpha_min + i * step.  If the
// grid passes through alpha = 1 it is snapped there exactly so the kink is
// sampled on the nose.  The deficit column is cross-checked against the
// brute-force route every 50th point (tolerance 1e-5); a mismatch throws
// consistency_error naming alpha, m and both values.  Derivative columns are
// central differences of the measure columns.
std::vector<ScanRow> scan(const ScanConfig& cfg);

struct TransitionReport {
    double alpha_star = 0.0;
    double jump = 0.0;  // |d'(after) - d'(before)| across the located point
    bool transition_found = false;
};

// Locate the sharpest second-difference feature of the chosen measure column
// and estimate the first-derivative jump across it.  Rows must come from a
// uniform grid with at least 5 points.  When the largest jump does not top
// ten times the median jump (pure noise, e.g. a constant column), the report
// says so via transition_found = false.
TransitionReport detect_transition(std::span<const ScanRow> rows, Measure which);

// Header "alpha,m,t1,t3,lqfi,owqd,dlqfi,dowqd", one row per line, each value
// printed with %.12g so identical inputs give identical bytes.
void emit_csv(std::span<const ScanRow> rows, std::ostream& out);
void emit_csv(std::span<const ScanRow> rows, const std::string& path);

// Entry point behind the command-line tool; returns the process exit code
// (0 ok, 2 bad arguments, 3 internal consistency failure, 4 I/O failure).
int cli_main(int argc, const char* const* argv);

}  // namespace xxchain
