#include "xxchain/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xxchain {

TwoQubitState::TwoQubitState(ComplexMatrix rho) : rho_(std::move(rho)) { validate(); }

TwoQubitState::TwoQubitState(ComplexMatrix rho, const CorrelationTriple& origin)
    : rho_(std::move(rho)), origin_(origin) {
    validate();
}

void TwoQubitState::validate() const {
    if (rho_.dim() != 4) throw std::invalid_argument("TwoQubitState: matrix must be 4x4");
    check_hermitian(rho_);
    const double tr = rho_.trace().real();
    if (std::fabs(tr - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "TwoQubitState: trace " << tr << " is not 1 within 1e-12";
        throw std::invalid_argument(os.str());
    }
}

std::array<double, 4> x_state_eigenvalues(const CorrelationTriple& t) {
    std::array<double, 4> p = {0.25 * (1.0 + t.t3), 0.25 * (1.0 + t.t3),
                               0.25 * (1.0 - t.t3 + 2.0 * t.t1),
                               0.25 * (1.0 - t.t3 - 2.0 * t.t1)};
    std::sort(p.begin(), p.end());
    return p;
}

TwoQubitState build_x_state(const CorrelationTriple& t) {
    if (t.t2 != t.t1)
        throw std::invalid_argument("build_x_state: requires t2 == t1 (pure X form)");

    const auto p = x_state_eigenvalues(t);
    if (p.front() < -1e-12) {
        std::ostringstream os;
        os << "build_x_state: not positive semidefinite, eigenvalue " << p.front();
        throw std::invalid_argument(os.str());
    }

    const double u = 0.25 * (1.0 + t.t3);
    const double w = 0.25 * (1.0 - t.t3);
    const double y = 0.5 * t.t1;  // (t1 + t2)/4 with t2 = t1

    ComplexMatrix rho(4);
    rho(0, 0) = u;
    rho(3, 3) = u;
    rho(1, 1) = w;
    rho(2, 2) = w;
    rho(1, 2) = y;
    rho(2, 1) = y;
    return TwoQubitState(std::move(rho), t);
}

SpectralDecomposition spectrum(const TwoQubitState& s) {
    EigenSystem es = hermitian_eig(s.matrix());
    SpectralDecomposition d;
    d.probabilities = std::move(es.values);
    for (double& p : d.probabilities)
        if (p < 0.0) p = 0.0;  // shave round-off; physical states only
    d.vectors = std::move(es.vectors);
    return d;
}

double von_neumann_entropy(const TwoQubitState& s) {
    const std::vector<double> vals = hermitian_eigenvalues(s.matrix());
    double h = 0.0;
    for (double p : vals) {
        if (p < 1e-14) continue;        // 0 log 0 = 0
        if (p > 1.0 - 1e-14) continue;  // weight this close to 1 carries no entropy
        h -= p * std::log2(p);
    }
    if (h < 0.0) h = 0.0;
    if (h > 2.0) h = 2.0;
    return h;
}

}  // namespace xxchain
