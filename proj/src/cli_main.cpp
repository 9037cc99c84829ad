#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xxchain/finite_chain.hpp"
#include "xxchain/measures.hpp"
#include "xxchain/scan.hpp"

namespace xxchain {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double lqfi_with_fallback(const CorrelationTriple& t) {
    if (auto v = lqfi_closed(t)) return *v;
    return lqfi(build_x_state(t));
}

int run_measure(double alpha, int m) {
    const CorrelationTriple t = correlation_triple(m, alpha);
    const double lq = lqfi_with_fallback(t);
    const double owc = owqd_closed(t);
    const DeficitResult dr = owqd_numeric(build_x_state(t));
    if (std::fabs(dr.value - owc) > 1e-5) {
        std::cerr << "deficit closed form and brute force disagree at alpha = " << alpha
                  << ", m = " << m << ": " << owc << " vs " << dr.value << "\n";
        return 3;
    }
    std::cout << "alpha = " << num(alpha) << "\n"
              << "m = " << m << "\n"
              << "t1 = " << num(t.t1) << "\n"
              << "t3 = " << num(t.t3) << "\n"
              << "lqfi = " << num(lq) << "\n"
              << "owqd = " << num(owc) << "\n"
              << "owqd_argmin_theta = " << num(dr.argmin.theta) << "\n"
              << "owqd_argmin_phi = " << num(dr.argmin.phi) << "\n";
    return 0;
}

int run_scan(const ScanConfig& cfg, const std::string& out_path) {
    const std::vector<ScanRow> rows = scan(cfg);
    if (out_path.empty())
        emit_csv(rows, std::cout);
    else {
        emit_csv(rows, out_path);
        std::cerr << "wrote " << rows.size() << " rows to " << out_path << "\n";
    }
    if (rows.size() >= 5) {
        for (const Measure which : {Measure::lqfi, Measure::owqd}) {
            if (which == Measure::lqfi && !cfg.with_lqfi) continue;
            if (which == Measure::owqd && !cfg.with_owqd) continue;
            const char* name = which == Measure::lqfi ? "lqfi" : "owqd";
            const TransitionReport rep = detect_transition(rows, which);
            if (rep.transition_found)
                std::cerr << "transition (" << name << "): alpha* = " << num(rep.alpha_star)
                          << ", derivative jump = " << num(rep.jump) << "\n";
            else
                std::cerr << "no transition detected (" << name << ")\n";
        }
    }
    return 0;
}

int report(const char* what, double dev, int cases, double tol) {
    const bool ok = dev <= tol;
    std::cout << "oracle " << what << ": max deviation = " << num(dev) << " over " << cases
              << " cases, tolerance " << num(tol) << ": " << (ok ? "OK" : "MISMATCH") << "\n";
    return ok ? 0 : 3;
}

int run_oracle(const std::string& check, int n) {
    if (check == "g") {
        const int sites = n > 0 ? n : 4096;
        const double alphas[] = {0.2, 0.7, 1.5, 3.0};
        double dev = 0.0;
        int cases = 0;
        for (int m = 1; m <= 4; ++m)
            for (double a : alphas) {
                dev = std::max(dev, std::fabs(finite_g(sites, a, m) - g_function(m, a)));
                ++cases;
            }
        return report("g (finite ring vs closed form)", dev, cases, 2e-3);
    }
    if (check == "qfi") {
        const int states = n > 0 ? n : 1000;
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        double dev = 0.0;
        int cases = 0;
        for (int s = 0; s < states; ++s) {
            CorrelationTriple t;
            t.m = 1;
            t.t1 = -0.999 + 1.998 * u01(rng);
            const double hi = 1.0 - 2.0 * std::fabs(t.t1);
            t.t3 = -1.0 + (hi + 1.0) * u01(rng);
            t.t2 = t.t1;
            const TwoQubitState st = build_x_state(t);
            for (int k = 0; k < 100; ++k) {
                const double ct = -1.0 + 2.0 * u01(rng);
                const double phi = 2.0 * std::numbers::pi * u01(rng);
                const BlochDirection r = BlochDirection::from_angles(std::acos(ct), phi);
                dev = std::max(dev, std::fabs(qfi_local(st, r) - qfi_sld_oracle(st, r)));
                ++cases;
            }
        }
        const int code1 = report("qfi (pair-sum route vs SLD route)", dev, cases, 1e-8);

        double dev2 = 0.0;
        int cases2 = 0;
        for (int m = 1; m <= 3; ++m)
            for (double a : {0.0, 0.5, 1.25, 2.0}) {
                const CorrelationTriple t = correlation_triple(m, a);
                dev2 = std::max(dev2, std::fabs(lqfi_with_fallback(t) -
                                                lqfi_sphere_scan(build_x_state(t))));
                ++cases2;
            }
        const int code2 = report("lqfi (closed form vs sphere scan)", dev2, cases2, 1e-6);
        return code1 != 0 ? code1 : code2;
    }
    if (check == "owqd") {
        const int points = n > 0 ? n : 31;
        if (points < 2) throw std::invalid_argument("oracle owqd: need at least 2 points");
        double dev = 0.0;
        int cases = 0;
        for (int m = 1; m <= 3; ++m)
            for (int i = 0; i < points; ++i) {
                const double a = 3.0 * i / (points - 1);
                const CorrelationTriple t = correlation_triple(m, a);
                dev = std::max(dev,
                               std::fabs(owqd_closed(t) - owqd_numeric(build_x_state(t)).value));
                ++cases;
            }
        return report("owqd (closed form vs brute minimization)", dev, cases, 1e-6);
    }
    // energy
    const int sites = n > 0 ? n : 8;
    double dev = 0.0;
    int cases = 0;
    for (double a : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        dev = std::max(dev, std::fabs(ed_ground_energy(sites, a) - ff_ground_energy(sites, a)));
        ++cases;
    }
    return report("energy (exact diagonalization vs free fermions)", dev, cases, 1e-9);
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"two-site quantum correlation measures on the XX ring with a three-site "
                 "energy-current coupling"};
    app.require_subcommand(1);

    double alpha = 0.0;
    int m = 1;
    auto* cmd_measure = app.add_subcommand("measure", "evaluate a single (alpha, m) point");
    cmd_measure->add_option("--alpha", alpha, "coupling ratio J'/J")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_measure->add_option("--m", m, "site separation")->check(CLI::Range(1, 16));

    ScanConfig cfg;
    std::string out_path;
    auto* cmd_scan = app.add_subcommand("scan", "sweep alpha and emit CSV");
    cmd_scan->add_option("--alpha-min", cfg.alpha_min, "sweep start")
        ->check(CLI::NonNegativeNumber);
    cmd_scan->add_option("--alpha-max", cfg.alpha_max, "sweep end");
    cmd_scan->add_option("--step", cfg.step, "grid spacing");
    cmd_scan->add_option("--m", cfg.m, "site separation")->check(CLI::Range(1, 16));
    cmd_scan->add_option("--out", out_path, "CSV file (stdout when omitted)");
    bool no_lqfi = false, no_owqd = false;
    cmd_scan->add_flag("--no-lqfi", no_lqfi, "skip the lqfi column");
    cmd_scan->add_flag("--no-owqd", no_owqd, "skip the owqd column");

    std::string check;
    int nn = 0;
    auto* cmd_oracle =
        app.add_subcommand("oracle", "cross-check fast routes against slow independent ones");
    cmd_oracle->add_option("--check", check, "which oracle to run")
        ->required()
        ->check(CLI::IsMember({"g", "qfi", "owqd", "energy"}));
    cmd_oracle->add_option("--n", nn, "size or sample count, meaning depends on the check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_measure) return run_measure(alpha, m);
        if (*cmd_scan) {
            cfg.with_lqfi = !no_lqfi;
            cfg.with_owqd = !no_owqd;
            return run_scan(cfg, out_path);
        }
        return run_oracle(check, nn);
    } catch (const consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const io_error& e) {
        std::cerr << "i/o failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "bad arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace xxchain
