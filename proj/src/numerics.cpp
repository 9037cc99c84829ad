#include "xxchain/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xxchain {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < dim_; ++j) r(i, j) += aik * rhs(k, j);
        }
    return r;
}

void check_hermitian(const ComplexMatrix& m, double tol) {
    const std::size_t n = m.dim();
    double worst = 0.0;
    std::size_t wi = 0, wj = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double dev = std::abs(m(i, j) - std::conj(m(j, i)));
            if (dev > worst) {
                worst = dev;
                wi = i;
                wj = j;
            }
        }
    if (worst > tol) {
        std::ostringstream os;
        os << "matrix is not Hermitian within " << tol << ": entry (" << wi << "," << wj
           << ") = (" << m(wi, wj).real() << "," << m(wi, wj).imag() << ") vs conj of ("
           << wj << "," << wi << ") = (" << m(wj, wi).real() << "," << -m(wj, wi).imag()
           << "), mismatch " << worst;
        throw std::invalid_argument(os.str());
    }
}

namespace {

constexpr std::size_t kMaxEigDim = 1024;
constexpr std::size_t kJacobiCutoff = 8;

// One cyclic sweep family of two-sided complex Jacobi rotations.  The
// rotation for the (p,q) pair zeroes A(p,q) exactly in real arithmetic;
// iterating sweeps drives the off-diagonal Frobenius mass to round-off.
void jacobi_hermitian(ComplexMatrix& a, ComplexMatrix* v) {
    const std::size_t n = a.dim();
    if (v) *v = ComplexMatrix::identity(n);
    if (n < 2) return;

    double fro = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fro += std::norm(a(i, j));
    fro = std::sqrt(fro);
    const double stop = std::max(1e-300, 1e-15 * std::max(1.0, fro));

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += std::norm(a(i, j));
        if (std::sqrt(off) <= stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const cplx phase = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (app - aqq) / (2.0 * r);
                double t;
                if (tau == 0.0)
                    t = 1.0;
                else
                    t = (tau > 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- U^dagger A U with the unitary supported on (p,q):
                // u_pp = c, u_pq = -s*phase, u_qp = s*conj(phase), u_qq = c.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + s * std::conj(phase) * aiq;
                    a(i, q) = -s * phase * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj + s * phase * aqj;
                    a(q, j) = -s * std::conj(phase) * apj + c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                if (v)
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx vip = (*v)(i, p), viq = (*v)(i, q);
                        (*v)(i, p) = c * vip + s * std::conj(phase) * viq;
                        (*v)(i, q) = -s * phase * vip + c * viq;
                    }
            }
    }
}

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// form; q (if given) accumulates the unitary so a_in = q T q^dagger.
void householder_tridiag(ComplexMatrix a, ComplexMatrix* q, std::vector<double>& d,
                         std::vector<double>& e) {
    const std::size_t n = a.dim();
    if (q) *q = ComplexMatrix::identity(n);
    std::vector<cplx> vv(n), p(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        double sigma = 0.0;
        for (std::size_t i = k + 2; i < n; ++i) sigma += std::norm(a(i, k));
        const cplx x0 = a(k + 1, k);
        if (sigma == 0.0) continue;  // column already tridiagonal here

        const double xnorm = std::sqrt(std::norm(x0) + sigma);
        const cplx phase0 = (std::abs(x0) == 0.0) ? cplx(1.0, 0.0) : x0 / std::abs(x0);
        const cplx alpha = -phase0 * xnorm;

        std::fill(vv.begin(), vv.end(), cplx(0.0, 0.0));
        vv[k + 1] = x0 - alpha;
        for (std::size_t i = k + 2; i < n; ++i) vv[i] = a(i, k);
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(vv[i]);
        if (vnorm2 < 1e-290) continue;
        const double beta = 2.0 / vnorm2;

        // rank-2 update of the trailing block: A <- A - v w^+ - w v^+
        for (std::size_t i = k + 1; i < n; ++i) {
            cplx acc = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) acc += a(i, j) * vv[j];
            p[i] = beta * acc;
        }
        cplx vp = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vp += std::conj(vv[i]) * p[i];
        const double kk = 0.5 * beta * vp.real();
        for (std::size_t i = k + 1; i < n; ++i) p[i] -= kk * vv[i];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) -= vv[i] * std::conj(p[j]) + p[i] * std::conj(vv[j]);

        a(k + 1, k) = alpha;
        a(k, k + 1) = std::conj(alpha);
        for (std::size_t i = k + 2; i < n; ++i) {
            a(i, k) = 0.0;
            a(k, i) = 0.0;
        }

        if (q)
            for (std::size_t i = 0; i < n; ++i) {
                cplx g = 0.0;
                for (std::size_t j = k + 1; j < n; ++j) g += (*q)(i, j) * vv[j];
                g *= beta;
                for (std::size_t j = k + 1; j < n; ++j) (*q)(i, j) -= g * std::conj(vv[j]);
            }
    }

    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();

    // absorb the residual subdiagonal phases into the basis so the
    // tridiagonal matrix handed to QL is real
    cplx s0 = 1.0;
    std::vector<cplx> colphase(n, cplx(1.0, 0.0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const cplx ei = a(i + 1, i);
        const double mag = std::abs(ei);
        const cplx ph = (mag == 0.0) ? cplx(1.0, 0.0) : ei / mag;
        s0 *= ph;
        colphase[i + 1] = s0;
        e[i] = mag;
    }
    if (q)
        for (std::size_t j = 1; j < n; ++j) {
            if (colphase[j] == cplx(1.0, 0.0)) continue;
            for (std::size_t i = 0; i < n; ++i) (*q)(i, j) *= colphase[j];
        }
}

// Implicit-shift QL for a real symmetric tridiagonal matrix; rotations are
// accumulated into the complex columns of z when present.  Classic EISPACK
// tql2 recurrence.
void tql_implicit(std::vector<double>& d, std::vector<double>& e, ComplexMatrix* z) {
    const std::size_t n = d.size();
    if (n < 2) return;
    const double eps = std::numeric_limits<double>::epsilon();

    // Deflation needs an absolute floor on top of the usual relative test:
    // a cluster of exact-zero eigenvalues leaves d and e both at round-off
    // relative to the matrix norm, and eps*(|d[m]|+|d[m+1]|) can then never
    // be met.  Gershgorin row sums give the scale.
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::fabs(d[i]);
        if (i > 0) row += std::fabs(e[i - 1]);
        if (i + 1 < n) row += std::fabs(e[i]);
        scale = std::max(scale, row);
    }
    const double floor_tol = eps * scale;

    for (std::size_t l = 0; l < n; ++l) {
        std::size_t iter = 0;
        std::size_t m;
        for (;;) {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd + floor_tol) break;
            }
            if (m == l) break;
            if (iter++ == 60) throw std::runtime_error("tridiagonal QL did not converge");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t ii = m; ii-- > l;) {
                double f = s * e[ii];
                const double b = c * e[ii];
                r = std::hypot(f, g);
                e[ii + 1] = r;
                if (r == 0.0) {
                    d[ii + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[ii + 1] - p;
                r = (d[ii] - g) * s + 2.0 * c * b;
                p = s * r;
                d[ii + 1] = g + p;
                g = c * r - b;
                if (z)
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx fz = (*z)(k, ii + 1);
                        (*z)(k, ii + 1) = s * (*z)(k, ii) + c * fz;
                        (*z)(k, ii) = c * (*z)(k, ii) - s * fz;
                    }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

void sort_ascending(std::vector<double>& vals, ComplexMatrix* vecs) {
    const std::size_t n = vals.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) sv[j] = vals[idx[j]];
    if (vecs) {
        ComplexMatrix out(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) out(i, j) = (*vecs)(i, idx[j]);
        *vecs = std::move(out);
    }
    vals = std::move(sv);
}

// Deterministic modified Gram-Schmidt inside clusters of eigenvalues that
// agree to 1e-9, so near-degenerate subspace bases come out reproducible.
void reorthonormalize_clusters(const std::vector<double>& vals, ComplexMatrix& v) {
    const std::size_t n = vals.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && vals[j + 1] - vals[j] <= 1e-9) ++j;
        for (std::size_t c = i; c <= j; ++c) {
            for (std::size_t prev = i; prev < c; ++prev) {
                cplx proj = 0.0;
                for (std::size_t k = 0; k < n; ++k) proj += std::conj(v(k, prev)) * v(k, c);
                for (std::size_t k = 0; k < n; ++k) v(k, c) -= proj * v(k, prev);
            }
            double norm = 0.0;
            for (std::size_t k = 0; k < n; ++k) norm += std::norm(v(k, c));
            norm = std::sqrt(norm);
            if (norm > 1e-12)
                for (std::size_t k = 0; k < n; ++k) v(k, c) /= norm;
        }
        i = j + 1;
    }
}

void validate_eig_input(const ComplexMatrix& m) {
    if (m.dim() == 0) throw std::invalid_argument("hermitian_eig: empty matrix");
    if (m.dim() > kMaxEigDim)
        throw std::invalid_argument("hermitian_eig: dimension exceeds 1024");
    check_hermitian(m);
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& m) {
    validate_eig_input(m);
    const std::size_t n = m.dim();
    EigenSystem es;
    if (n <= kJacobiCutoff) {
        ComplexMatrix a = m;
        ComplexMatrix v;
        jacobi_hermitian(a, &v);
        es.values.resize(n);
        for (std::size_t i = 0; i < n; ++i) es.values[i] = a(i, i).real();
        es.vectors = std::move(v);
    } else {
        std::vector<double> d, e;
        ComplexMatrix q;
        householder_tridiag(m, &q, d, e);
        tql_implicit(d, e, &q);
        es.values = std::move(d);
        es.vectors = std::move(q);
    }
    sort_ascending(es.values, &es.vectors);
    reorthonormalize_clusters(es.values, es.vectors);
    return es;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    validate_eig_input(m);
    const std::size_t n = m.dim();
    std::vector<double> vals;
    if (n <= kJacobiCutoff) {
        ComplexMatrix a = m;
        jacobi_hermitian(a, nullptr);
        vals.resize(n);
        for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i).real();
    } else {
        std::vector<double> e;
        householder_tridiag(m, nullptr, vals, e);
        tql_implicit(vals, e, nullptr);
    }
    sort_ascending(vals, nullptr);
    return vals;
}

double determinant(const RealMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows;
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    if (n > 64) throw std::invalid_argument("determinant: dimension exceeds 64");
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

    RealMatrix a = m;
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double big = std::fabs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(a(i, k)) > big) {
                big = std::fabs(a(i, k));
                piv = i;
            }
        if (big == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

Minimum2D minimize_2d(const std::function<double(double, double)>& f, double theta_max,
                      double phi_max) {
    if (!(theta_max > 0.0) || !(phi_max > 0.0))
        throw std::invalid_argument("minimize_2d: ranges must be positive");

    constexpr int kNt = 64;   // theta intervals -> 65 nodes including both ends
    constexpr int kNp = 128;  // phi intervals -> 129 nodes
    const double ht = theta_max / kNt;
    const double hp = phi_max / kNp;

    double best = std::numeric_limits<double>::infinity();
    double bt = 0.0, bp = 0.0;
    for (int i = 0; i <= kNt; ++i) {
        const double th = (i == kNt) ? theta_max : i * ht;
        for (int j = 0; j <= kNp; ++j) {
            const double ph = (j == kNp) ? phi_max : j * hp;
            const double val = f(th, ph);
            if (val < best) {
                best = val;
                bt = th;
                bp = ph;
            }
        }
    }

    // compass refinement: probe +-step on each axis, move only on strict
    // improvement, halve the step when stuck
    double step = std::max(ht, hp);
    const auto clamp = [](double x, double hi) { return std::min(std::max(x, 0.0), hi); };
    while (step >= 1e-8) {
        const double cand[4][2] = {{clamp(bt - step, theta_max), bp},
                                   {clamp(bt + step, theta_max), bp},
                                   {bt, clamp(bp - step, phi_max)},
                                   {bt, clamp(bp + step, phi_max)}};
        double cbest = std::numeric_limits<double>::infinity();
        int cidx = -1;
        for (int c = 0; c < 4; ++c) {
            const double val = f(cand[c][0], cand[c][1]);
            if (val < cbest) {
                cbest = val;
                cidx = c;
            }
        }
        if (cidx >= 0 && cbest < best) {
            best = cbest;
            bt = cand[cidx][0];
            bp = cand[cidx][1];
        } else {
            step *= 0.5;
        }
    }
    return {best, bt, bp};
}

std::vector<double> central_difference(const std::vector<double>& samples, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("central_difference: step must be positive");
    const std::size_t n = samples.size();
    if (n < 3) throw std::invalid_argument("central_difference: need at least 3 samples");
    std::vector<double> d(n);
    d[0] = (-3.0 * samples[0] + 4.0 * samples[1] - samples[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (samples[i + 1] - samples[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * samples[n - 1] - 4.0 * samples[n - 2] + samples[n - 3]) / (2.0 * h);
    return d;
}

}  // namespace xxchain
