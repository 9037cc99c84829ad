#include "xxchain/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "xxchain/measures.hpp"
#include "xxchain/numerics.hpp"

namespace xxchain {

namespace {

double checked_lqfi(const CorrelationTriple& t) {
    if (auto v = lqfi_closed(t)) return *v;
    return lqfi(build_x_state(t));  // near the formula poles, go generic
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::vector<ScanRow> scan(const ScanConfig& cfg) {
    if (!(cfg.alpha_min >= 0.0) || !(cfg.alpha_max > cfg.alpha_min))
        throw std::invalid_argument("scan: need 0 <= alpha_min < alpha_max");
    if (!(cfg.step > 0.0)) throw std::invalid_argument("scan: step must be positive");
    if (cfg.m < 1 || cfg.m > 16) throw std::invalid_argument("scan: m must be in [1, 16]");

    const double span = cfg.alpha_max - cfg.alpha_min;
    const double count_f = span / cfg.step;
    if (count_f > 1e6) throw std::invalid_argument("scan: grid would exceed 1e6 points");
    const std::size_t n = static_cast<std::size_t>(std::floor(count_f + 1e-9)) + 1;

    std::vector<double> alphas(n);
    for (std::size_t i = 0; i < n; ++i) alphas[i] = cfg.alpha_min + static_cast<double>(i) * cfg.step;
    // the kink sits at alpha = 1; when the grid passes through it, sample it
    // exactly instead of at 0.99999999999998
    if (cfg.alpha_min <= 1.0 && 1.0 <= cfg.alpha_max + 1e-12) {
        const double pos = (1.0 - cfg.alpha_min) / cfg.step;
        const auto idx = static_cast<std::size_t>(std::llround(pos));
        if (idx < n && std::fabs(pos - std::llround(pos)) < 1e-6) alphas[idx] = 1.0;
    }

    std::vector<ScanRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const CorrelationTriple t = correlation_triple(cfg.m, alphas[i]);
        ScanRow& r = rows[i];
        r.alpha = alphas[i];
        r.m = cfg.m;
        r.t1 = t.t1;
        r.t3 = t.t3;
        if (cfg.with_lqfi) r.lqfi = checked_lqfi(t);
        if (cfg.with_owqd) {
            r.owqd = owqd_closed(t);
            if (i % 50 == 0) {
                const double brute = owqd_numeric(build_x_state(t)).value;
                if (std::fabs(brute - r.owqd) > 1e-5) {
                    std::ostringstream os;
                    os << "scan: deficit closed form and brute force disagree at alpha = "
                       << alphas[i] << ", m = " << cfg.m << ": closed " << r.owqd
                       << " vs numeric " << brute;
                    throw consistency_error(os.str());
                }
            }
        }
    }

    if (n >= 3) {
        std::vector<double> col(n);
        if (cfg.with_lqfi) {
            for (std::size_t i = 0; i < n; ++i) col[i] = rows[i].lqfi;
            const std::vector<double> d = central_difference(col, cfg.step);
            for (std::size_t i = 0; i < n; ++i) rows[i].dlqfi = d[i];
        }
        if (cfg.with_owqd) {
            for (std::size_t i = 0; i < n; ++i) col[i] = rows[i].owqd;
            const std::vector<double> d = central_difference(col, cfg.step);
            for (std::size_t i = 0; i < n; ++i) rows[i].dowqd = d[i];
        }
    }
    return rows;
}

TransitionReport detect_transition(std::span<const ScanRow> rows, Measure which) {
    const std::size_t n = rows.size();
    if (n < 5) throw std::invalid_argument("detect_transition: need at least 5 rows");

    const auto value = [&](std::size_t i) {
        return which == Measure::lqfi ? rows[i].lqfi : rows[i].owqd;
    };
    const auto deriv = [&](std::size_t i) {
        return which == Measure::lqfi ? rows[i].dlqfi : rows[i].dowqd;
    };

    // sharpest curvature of the measure column marks the candidate point
    std::size_t best = 1;
    double best_curv = -1.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double curv = std::fabs(value(i + 1) - 2.0 * value(i) + value(i - 1));
        if (curv > best_curv) {
            best_curv = curv;
            best = i;
        }
    }

    TransitionReport rep;
    rep.alpha_star = rows[best].alpha;
    rep.jump = std::fabs(deriv(best + 1) - deriv(best - 1));

    // compare against the typical derivative variation elsewhere; a constant
    // or smooth column has no order-of-magnitude outlier
    std::vector<double> jumps;
    jumps.reserve(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i)
        jumps.push_back(std::fabs(deriv(i + 1) - deriv(i - 1)));
    std::nth_element(jumps.begin(), jumps.begin() + static_cast<std::ptrdiff_t>(jumps.size() / 2),
                     jumps.end());
    const double floor = jumps[jumps.size() / 2];
    rep.transition_found = rep.jump > 10.0 * floor && rep.jump > 0.0;
    return rep;
}

void emit_csv(std::span<const ScanRow> rows, std::ostream& out) {
    out << "alpha,m,t1,t3,lqfi,owqd,dlqfi,dowqd\n";
    for (const ScanRow& r : rows) {
        out << fmt12(r.alpha) << ',' << r.m << ',' << fmt12(r.t1) << ',' << fmt12(r.t3) << ','
            << fmt12(r.lqfi) << ',' << fmt12(r.owqd) << ',' << fmt12(r.dlqfi) << ','
            << fmt12(r.dowqd) << '\n';
    }
    if (!out) throw io_error("emit_csv: write failed");
}

void emit_csv(std::span<const ScanRow> rows, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw io_error("emit_csv: cannot open " + path);
    emit_csv(rows, static_cast<std::ostream&>(f));
    f.flush();
    if (!f) throw io_error("emit_csv: write failed for " + path);
}

}  // namespace xxchain
