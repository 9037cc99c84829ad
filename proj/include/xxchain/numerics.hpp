#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace xxchain {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    cplx trace() const;
    double max_abs() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;

private:
    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

// Same storage; the hermiticity contract is enforced where it matters
// (at the eigensolver entry), not by the type.
using HermitianMatrix = ComplexMatrix;

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column j goes with values[j]
};

// Throws std::invalid_argument naming the worst offending entry pair when
// M deviates from M^dagger by more than tol (absolute, per entry).
void check_hermitian(const ComplexMatrix& m, double tol = 1e-12);

// Full eigendecomposition of a Hermitian matrix, dim <= 1024.
// Cyclic complex Jacobi for dim <= 8, Householder tridiagonalization plus
// implicit-shift QL above that.  Eigenvalues ascending; within clusters
// degenerate to 1e-9 the vectors are re-orthonormalized deterministically.
EigenSystem hermitian_eig(const ComplexMatrix& m);

// Eigenvalues only (skips accumulating the transformations).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Rectangular real matrix; determinant() insists on square.
struct RealMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;

    RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// LU with partial pivoting, dim <= 64.  Exact for dim 1 and 2.
double determinant(const RealMatrix& m);

struct Minimum2D {
    double value;
    double theta;
    double phi;
};

// Deterministic minimizer over [0, theta_max] x [0, phi_max]: inclusive
// 65 x 129 coarse grid followed by a compass pattern search that halves the
// step until it drops below 1e-8.  Ties break toward the candidate probed
// first, so the result is reproducible bit for bit.  The returned value never
// exceeds the best coarse-grid value.
Minimum2D minimize_2d(const std::function<double(double, double)>& f,
                      double theta_max, double phi_max);

// Central differences on a uniform grid, one-sided at the endpoints.
// Needs at least 3 samples and h > 0.
std::vector<double> central_difference(const std::vector<double>& samples, double h);

}  // namespace xxchain
