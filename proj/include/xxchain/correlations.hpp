#pragma once

namespace xxchain {

// XX chain with a three-site energy-current coupling, at zero field and zero
// anisotropy.  Everything downstream depends on the couplings only through
// the ratio alpha = J'/J, so that is what we carry around; J itself is the
// unit of energy.
struct ModelParams {
    double alpha = 0.0;

    static constexpr double coupling = 1.0;    // J
    static constexpr double anisotropy = 0.0;  // Delta, fixed at zero here

    ModelParams() = default;
    explicit ModelParams(double a);  // requires a >= 0
};

// t_q = 4 <S^q_j S^q_{j+m}>, q = x, y, z, for separation m.  The chain is
// translation invariant so only m matters.  t2 = t1 identically (the model
// never mixes x and y).
struct CorrelationTriple {
    int m = 1;
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
};

// Ground-state contraction G(m) in the thermodynamic limit.  Piecewise in
// alpha: below alpha = 1 the occupied interval is symmetric and G is
// alpha-independent; at and above 1 the Fermi sea splits and G picks up the
// arcsin(1/alpha) dependence.  Even in m, and G(0) = 0 by convention.
double g_function(int m, double alpha);

// <S^x_j S^x_{j+m}> as (1/4) det of the m x m Toeplitz matrix with entries
// G(j - i + 1).  Supported for 1 <= m <= 16.
double sx_correlation(int m, double alpha);

// <S^z_j S^z_{j+m}> = -G(m)^2 / 4, m >= 1.
double sz_correlation(int m, double alpha);

// Bundle of the three correlators scaled to t_q = 4 <S^q S^q>.
CorrelationTriple correlation_triple(int m, double alpha);

}  // namespace xxchain
