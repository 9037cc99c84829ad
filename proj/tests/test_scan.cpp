#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "xxchain/numerics.hpp"
#include "xxchain/scan.hpp"

using namespace xxchain;
constexpr double kPi = std::numbers::pi;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

int run_cli(std::initializer_list<const char*> args, std::string* out = nullptr) {
    std::vector<const char*> argv = {"xxchain"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    const int code = cli_main(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    if (out) *out = captured.str();
    return code;
}

}  // namespace

TEST_CASE("scan: flat region below the transition") {
    ScanConfig cfg;
    cfg.alpha_min = 0.0;
    cfg.alpha_max = 1.0;
    cfg.step = 0.05;
    cfg.m = 1;
    const std::vector<ScanRow> rows = scan(cfg);
    REQUIRE(rows.size() == 21);
    CHECK(rows.back().alpha == 1.0);  // snapped, not 0.9999999999
    for (const ScanRow& r : rows) {
        CHECK(r.m == 1);
        CHECK(std::fabs(r.lqfi - 4.0 / (kPi * kPi)) < 1e-12);
        CHECK(std::fabs(r.dlqfi) < 1e-9);
        CHECK(std::fabs(r.dowqd) < 1e-9);
    }
}

TEST_CASE("scan: algebraic tail above the transition") {
    ScanConfig cfg;
    cfg.alpha_min = 1.5;
    cfg.alpha_max = 3.0;
    cfg.step = 0.05;
    cfg.m = 1;
    const std::vector<ScanRow> rows = scan(cfg);
    for (const ScanRow& r : rows) {
        const double t1 = (2.0 / kPi) / r.alpha;
        CHECK(std::fabs(r.t1 - t1) < 1e-12);
        CHECK(std::fabs(r.lqfi - t1 * t1) < 1e-12);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].lqfi < rows[i - 1].lqfi);
}

TEST_CASE("scan: column toggles and validation") {
    ScanConfig cfg;
    cfg.alpha_min = 0.0;
    cfg.alpha_max = 0.5;
    cfg.step = 0.1;
    cfg.m = 2;
    cfg.with_owqd = false;
    const std::vector<ScanRow> rows = scan(cfg);
    for (const ScanRow& r : rows) {
        CHECK(r.owqd == 0.0);
        CHECK(r.dowqd == 0.0);
        CHECK(std::fabs(r.lqfi - 0.19653824648794102) < 1e-12);
    }

    ScanConfig bad = cfg;
    bad.alpha_max = 0.0;
    CHECK_THROWS_AS(scan(bad), std::invalid_argument);
    bad = cfg;
    bad.step = 0.0;
    CHECK_THROWS_AS(scan(bad), std::invalid_argument);
    bad = cfg;
    bad.m = 0;
    CHECK_THROWS_AS(scan(bad), std::invalid_argument);
    bad = cfg;
    bad.alpha_max = 3.0;
    bad.step = 1e-7;
    CHECK_THROWS_AS(scan(bad), std::invalid_argument);
}

TEST_CASE("detect_transition: synthetic kink and synthetic flatline") {
    // |alpha - 1| has a derivative jump of exactly 2 at the kink
    std::vector<ScanRow> rows;
    std::vector<double> col;
    const double step = 0.01;
    for (int i = 0; i <= 20; ++i) {
        ScanRow r;
        r.alpha = 0.9 + step * i;
        r.lqfi = std::fabs(r.alpha - 1.0);
        rows.push_back(r);
        col.push_back(r.lqfi);
    }
    const std::vector<double> d = central_difference(col, step);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].dlqfi = d[i];

    const TransitionReport rep = detect_transition(rows, Measure::lqfi);
    CHECK(rep.transition_found);
    CHECK(std::fabs(rep.alpha_star - 1.0) < 1e-12);
    CHECK(std::fabs(rep.jump - 2.0) < 1e-9);

    for (ScanRow& r : rows) {
        r.lqfi = 0.3;
        r.dlqfi = 0.0;
    }
    const TransitionReport flat = detect_transition(rows, Measure::lqfi);
    CHECK_FALSE(flat.transition_found);
    CHECK(flat.jump == 0.0);

    CHECK_THROWS_AS(detect_transition(std::span<const ScanRow>(rows.data(), 4), Measure::lqfi),
                    std::invalid_argument);
}

TEST_CASE("detect_transition: the real sweep finds the point to grid accuracy") {
    ScanConfig cfg;
    cfg.alpha_min = 0.5;
    cfg.alpha_max = 1.5;
    cfg.step = 0.005;
    cfg.m = 1;
    const std::vector<ScanRow> rows = scan(cfg);
    for (Measure which : {Measure::lqfi, Measure::owqd}) {
        const TransitionReport rep = detect_transition(rows, which);
        CHECK(rep.transition_found);
        CHECK(std::fabs(rep.alpha_star - 1.0) <= 0.005 + 1e-12);
    }

    ScanConfig finer = cfg;
    finer.step = 0.0025;
    const TransitionReport rep = detect_transition(scan(finer), Measure::lqfi);
    CHECK(std::fabs(rep.alpha_star - 1.0) <= 0.0025 + 1e-12);
}

TEST_CASE("emit_csv: exact bytes, header and determinism") {
    std::ostringstream empty;
    emit_csv(std::vector<ScanRow>{}, empty);
    CHECK(empty.str() == "alpha,m,t1,t3,lqfi,owqd,dlqfi,dowqd\n");

    std::ostringstream one;
    emit_csv(std::vector<ScanRow>{ScanRow{}}, one);
    CHECK(one.str() == "alpha,m,t1,t3,lqfi,owqd,dlqfi,dowqd\n0,0,0,0,0,0,0,0\n");

    ScanConfig cfg;
    cfg.alpha_min = 0.9;
    cfg.alpha_max = 1.1;
    cfg.step = 0.01;
    cfg.m = 1;
    const std::vector<ScanRow> rows = scan(cfg);
    std::ostringstream a, b;
    emit_csv(rows, a);
    emit_csv(rows, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("alpha,m,") == 0);

    CHECK_THROWS_AS(emit_csv(rows, std::string("/nonexistent-dir-xyz/out.csv")), io_error);
}

TEST_CASE("cli: single-point measure prints the frozen plateau values") {
    std::string out;
    const int code = run_cli({"measure", "--alpha", "0.5", "--m", "1"}, &out);
    CHECK(code == 0);
    CHECK(out.find("t1 = 0.636619772368") != std::string::npos);
    CHECK(out.find("lqfi = 0.405284734569") != std::string::npos);
    CHECK(out.find("owqd = 0.316239541866") != std::string::npos);
    CHECK(out.find("owqd_argmin_theta = 1.57079632679") != std::string::npos);
}

TEST_CASE("cli: scan writes a deterministic csv and reports the transition") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto p1 = dir / "xxchain_test_scan_a.csv";
    const auto p2 = dir / "xxchain_test_scan_b.csv";
    const std::string s1 = p1.string(), s2 = p2.string();

    int code = run_cli({"scan", "--alpha-min", "0.8", "--alpha-max", "1.2", "--step", "0.01",
                        "--m", "1", "--out", s1.c_str()});
    CHECK(code == 0);
    code = run_cli({"scan", "--alpha-min", "0.8", "--alpha-max", "1.2", "--step", "0.01",
                    "--m", "1", "--out", s2.c_str()});
    CHECK(code == 0);
    const std::string b1 = slurp(p1), b2 = slurp(p2);
    CHECK(!b1.empty());
    CHECK(b1 == b2);
    CHECK(b1.find("alpha,m,t1,t3,lqfi,owqd,dlqfi,dowqd\n") == 0);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({"measure", "--alpha", "-1"}) == 2);
    CHECK(run_cli({"measure", "--alpha", "0.5", "--m", "40"}) == 2);
    CHECK(run_cli({"scan", "--alpha-min", "2", "--alpha-max", "1"}) == 2);
    CHECK(run_cli({"scan", "--alpha-min", "0", "--alpha-max", "1", "--step", "0.25", "--out",
                   "/nonexistent-dir-xyz/out.csv"}) == 4);
    CHECK(run_cli({"oracle", "--check", "bogus"}) == 2);
    CHECK(run_cli({"oracle"}) == 2);
    CHECK(run_cli({"nonsense"}) == 2);
}

TEST_CASE("cli: the cheap oracles pass") {
    std::string out;
    CHECK(run_cli({"oracle", "--check", "g", "--n", "4096"}, &out) == 0);
    CHECK(out.find("OK") != std::string::npos);
    CHECK(run_cli({"oracle", "--check", "energy", "--n", "6"}, &out) == 0);
    CHECK(run_cli({"oracle", "--check", "owqd", "--n", "5"}, &out) == 0);
}
