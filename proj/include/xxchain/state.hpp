#pragma once

#include <array>
#include <optional>
#include <vector>

#include "xxchain/correlations.hpp"
#include "xxchain/numerics.hpp"

namespace xxchain {

struct SpectralDecomposition {
    std::vector<double> probabilities;  // ascending, clamped to >= 0
    ComplexMatrix vectors;              // column j goes with probabilities[j]
};

// Two-qubit density matrix with optional provenance (the correlation triple
// it was built from, when it came out of build_x_state).
class TwoQubitState {
public:
    explicit TwoQubitState(ComplexMatrix rho);
    TwoQubitState(ComplexMatrix rho, const CorrelationTriple& origin);

    const ComplexMatrix& matrix() const { return rho_; }
    const std::optional<CorrelationTriple>& origin() const { return origin_; }

private:
    void validate() const;

    ComplexMatrix rho_;
    std::optional<CorrelationTriple> origin_;
};

// Closed-form spectrum of the X family built from a triple with t2 = t1:
// {(1+t3)/4 twice, (1 - t3 +- 2 t1)/4}.  Returned ascending.
std::array<double, 4> x_state_eigenvalues(const CorrelationTriple& t);

// rho = (1/4)(I + t1 XX + t2 YY + t3 ZZ) in the computational basis.
// Requires t2 == t1 (the X form with empty corners) and positivity within
// -1e-12; a violating eigenvalue is reported in the exception text.
TwoQubitState build_x_state(const CorrelationTriple& t);

SpectralDecomposition spectrum(const TwoQubitState& s);

// Base-2 von Neumann entropy; eigenvalues below 1e-14 are treated as zero.
double von_neumann_entropy(const TwoQubitState& s);

}  // namespace xxchain
