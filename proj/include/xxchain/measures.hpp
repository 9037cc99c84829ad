#pragma once

#include <array>
#include <optional>

#include "xxchain/state.hpp"

namespace xxchain {

// Unit vector on the Bloch sphere.
struct BlochDirection {
    double x = 0.0, y = 0.0, z = 1.0;

    BlochDirection(double x_, double y_, double z_);  // requires |r| = 1 within 1e-12
    static BlochDirection from_angles(double theta, double phi);
};

// Projective qubit basis: the +-n eigenvectors of sigma . n(theta, phi).
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;
};

// Symmetric 3x3 matrix of the quadratic form behind the local-phase QFI:
// qfi_local(rho, r) = 1 - r . T r for unit r.
struct TMatrix {
    std::array<double, 9> a{};

    double& operator()(int l, int k) { return a[static_cast<std::size_t>(3 * l + k)]; }
    double operator()(int l, int k) const { return a[static_cast<std::size_t>(3 * l + k)]; }

    double max_eigenvalue() const;
};

// Quantum Fisher information (factor-4 normalized to [0, 1]) of the phase
// rotation generated by (sigma . r) on qubit A:
//   F = Tr(rho H^2) - sum_{ij} 2 p_i p_j / (p_i + p_j) |<i|H|j>|^2,
// both sums over ALL ordered pairs, including i = j; pairs with
// p_i + p_j = 0 are skipped.  The i = j terms cancel between the two sums,
// which is exactly why dropping them from only one sum would be wrong.
double qfi_local(const TwoQubitState& s, const BlochDirection& r);

// Same quantity evaluated from a precomputed spectral decomposition (the
// sphere-scan oracle calls this thousands of times per state).
double qfi_local(const SpectralDecomposition& d, const BlochDirection& r);

// Independent route: solve for the symmetric logarithmic derivative L of the
// rotated family and return (1/4) Tr(rho L^2).  Agrees with qfi_local to
// round-off; kept separate as a cross-check, not a fast path.
double qfi_sld_oracle(const TwoQubitState& s, const BlochDirection& r);

TMatrix t_matrix(const SpectralDecomposition& d);

// Local quantum Fisher information: min over unit r of qfi_local, computed
// as 1 - lambda_max(T).
double lqfi(const TwoQubitState& s);

// Closed form for X states built from a CorrelationTriple; empty when the
// triple sits too close to the |t1| = 1 or t3 = 1 poles of the formula
// (callers fall back to the generic route).
std::optional<double> lqfi_closed(const CorrelationTriple& t);

// Brute-force cross-check behind lqfi: minimize qfi_local directly over the
// half-open 64 x 128 grid of Bloch angles (antipodal directions give the
// same value, so half the sphere suffices and the coordinate axes land
// exactly on grid nodes).
double lqfi_sphere_scan(const TwoQubitState& s);

// Dephase qubit B in the given projective basis:
//   rho -> sum_k (I x Pi_k) rho (I x Pi_k).
TwoQubitState measured_state(const TwoQubitState& s, const MeasurementBasis& b);

struct DeficitResult {
    double value = 0.0;
    MeasurementBasis argmin;
};

// One-way quantum deficit: min over bases of S(measured) - S(rho), by brute
// scan + refinement of the basis angles.
DeficitResult owqd_numeric(const TwoQubitState& s);

// Closed form for X states: the optimal dephasing axis is the dominant
// correlation axis, c = max(|t1|, |t3|), and the measured state has
// eigenvalues (1 +- c)/4, each twice.
double owqd_closed(const CorrelationTriple& t);

}  // namespace xxchain
