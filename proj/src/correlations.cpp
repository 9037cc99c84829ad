#include "xxchain/correlations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xxchain/numerics.hpp"

namespace xxchain {

namespace {
constexpr double kPi = std::numbers::pi;
}

ModelParams::ModelParams(double a) : alpha(a) {
    if (!(a >= 0.0)) throw std::invalid_argument("ModelParams: alpha must be >= 0");
}

double g_function(int m, double alpha) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("g_function: alpha must be >= 0");
    if (m == 0) return 0.0;
    const int ma = std::abs(m);
    if (ma % 2 == 0) return 0.0;  // both branches carry sin(m pi/2) parity

    if (alpha < 1.0) {
        // (2/(m pi)) sin(m pi / 2), sign exact from m mod 4
        const double sign = (ma % 4 == 1) ? 1.0 : -1.0;
        return sign * 2.0 / (ma * kPi);
    }
    // split sea: (1/(m pi)) (1 - (-1)^m) sin(m asin(1/alpha)); odd m only here
    const double kf = std::asin(1.0 / alpha);
    return (2.0 / (ma * kPi)) * std::sin(ma * kf);
}

double sx_correlation(int m, double alpha) {
    if (m < 1 || m > 16) throw std::out_of_range("sx_correlation: m must be in [1, 16]");
    RealMatrix t(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t(i, j) = g_function(j - i + 1, alpha);
    return 0.25 * determinant(t);
}

double sz_correlation(int m, double alpha) {
    if (m < 1) throw std::out_of_range("sz_correlation: m must be >= 1");
    const double g = g_function(m, alpha);
    return -0.25 * g * g;
}

CorrelationTriple correlation_triple(int m, double alpha) {
    if (m < 1 || m > 16) throw std::out_of_range("correlation_triple: m must be in [1, 16]");
    CorrelationTriple t;
    t.m = m;
    t.t1 = 4.0 * sx_correlation(m, alpha);
    t.t2 = t.t1;  // x and y play symmetric roles in this model
    t.t3 = 4.0 * sz_correlation(m, alpha);

    // physicality guarantees for states built from these numbers; a failure
    // here is a bug in the correlators, not bad input
    if (!(std::fabs(t.t1) < 1.0) || !(t.t3 <= 0.0 && t.t3 >= -1.0) ||
        !(1.0 - t.t3 >= 2.0 * std::fabs(t.t1)))
        throw std::logic_error("correlation_triple: produced an unphysical triple");
    return t;
}

}  // namespace xxchain
