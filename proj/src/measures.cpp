#include "xxchain/measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xxchain {

namespace {

constexpr double kPi = std::numbers::pi;

// (sigma . r x I) applied to column j of V; the A qubit is the high bit.
void apply_generator(const BlochDirection& r, const ComplexMatrix& v, std::size_t j,
                     cplx w[4]) {
    const cplx xm(r.x, -r.y);  // x - i y
    const cplx xp(r.x, r.y);   // x + i y
    for (std::size_t a0 = 0; a0 < 2; ++a0) {
        const cplx top = v(a0, j);
        const cplx bot = v(2 + a0, j);
        w[a0] = r.z * top + xm * bot;
        w[2 + a0] = xp * top - r.z * bot;
    }
}

// M_ij = <i| sigma.r x I |j> in the eigenbasis held by d.vectors
void generator_elements(const SpectralDecomposition& d, const BlochDirection& r,
                        cplx m[4][4]) {
    for (std::size_t j = 0; j < 4; ++j) {
        cplx w[4];
        apply_generator(r, d.vectors, j, w);
        for (std::size_t i = 0; i < 4; ++i) {
            cplx acc = 0.0;
            for (std::size_t a = 0; a < 4; ++a) acc += std::conj(d.vectors(a, i)) * w[a];
            m[i][j] = acc;
        }
    }
}

double entropy_bits(const double* p, std::size_t n) {
    double h = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double x = p[i];
        if (x < 1e-14) continue;
        if (x > 1.0) x = 1.0;
        h -= x * std::log2(x);
    }
    return h < 0.0 ? 0.0 : h;
}

}  // namespace

BlochDirection::BlochDirection(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (std::fabs(n - 1.0) > 1e-12)
        throw std::invalid_argument("BlochDirection: vector is not unit length within 1e-12");
}

BlochDirection BlochDirection::from_angles(double theta, double phi) {
    return BlochDirection(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                          std::cos(theta));
}

double TMatrix::max_eigenvalue() const {
    ComplexMatrix m(3);
    for (int l = 0; l < 3; ++l)
        for (int k = 0; k < 3; ++k) m(l, k) = 0.5 * ((*this)(l, k) + (*this)(k, l));
    return hermitian_eigenvalues(m).back();
}

double qfi_local(const SpectralDecomposition& d, const BlochDirection& r) {
    cplx m[4][4];
    generator_elements(d, r, m);
    const auto& p = d.probabilities;

    double term1 = 0.0, term2 = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double m2 = std::norm(m[i][j]);
            term1 += p[i] * m2;
            const double ps = p[i] + p[j];
            if (ps > 0.0) term2 += (2.0 * p[i] * p[j] / ps) * m2;
        }
    double f = term1 - term2;
    if (f < 0.0) f = 0.0;
    if (f > 1.0) f = 1.0;
    return f;
}

double qfi_local(const TwoQubitState& s, const BlochDirection& r) {
    return qfi_local(spectrum(s), r);
}

double qfi_sld_oracle(const TwoQubitState& s, const BlochDirection& r) {
    const SpectralDecomposition d = spectrum(s);
    cplx m[4][4];
    generator_elements(d, r, m);
    const auto& p = d.probabilities;

    // d_rho in the eigenbasis: (d rho)_ij = -i [H, rho]_ij = -i m_ij (p_j - p_i);
    // SLD from (d rho) = (L rho + rho L)/2, i.e. L_ij = 2 (d rho)_ij / (p_i + p_j)
    cplx L[4][4];
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double ps = p[i] + p[j];
            if (ps > 0.0)
                L[i][j] = cplx(0.0, -1.0) * m[i][j] * (p[j] - p[i]) * (2.0 / ps);
            else
                L[i][j] = 0.0;
        }

    double f = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) f += p[i] * std::norm(L[i][j]);
    return 0.25 * f;
}

TMatrix t_matrix(const SpectralDecomposition& d) {
    static const BlochDirection axes[3] = {BlochDirection(1, 0, 0), BlochDirection(0, 1, 0),
                                           BlochDirection(0, 0, 1)};
    cplx m[3][4][4];
    for (int l = 0; l < 3; ++l) generator_elements(d, axes[l], m[l]);
    const auto& p = d.probabilities;

    TMatrix t;
    for (int l = 0; l < 3; ++l)
        for (int k = l; k < 3; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    const double ps = p[i] + p[j];
                    if (ps <= 0.0) continue;
                    acc += (2.0 * p[i] * p[j] / ps) *
                           (m[l][i][j] * std::conj(m[k][i][j])).real();
                }
            t(l, k) = acc;
            t(k, l) = acc;
        }
    return t;
}

double lqfi(const TwoQubitState& s) {
    const TMatrix t = t_matrix(spectrum(s));
    double f = 1.0 - t.max_eigenvalue();
    if (f < 0.0) f = 0.0;
    if (f > 1.0) f = 1.0;
    return f;
}

std::optional<double> lqfi_closed(const CorrelationTriple& t) {
    const double t1 = t.t1, t3 = t.t3;
    if (std::fabs(t1) >= 1.0 - 1e-9 || t3 >= 1.0 - 1e-9) return std::nullopt;
    const double common = 2.0 * t1 * t1 + t3 - 1.0;
    const double e_xy = (t3 + 1.0) * common / (t1 * t1 - 1.0);
    const double e_z = common / (t3 - 1.0);
    double f = 1.0 - std::max(e_xy, e_z);
    if (f < 0.0) f = 0.0;
    if (f > 1.0) f = 1.0;
    return f;
}

double lqfi_sphere_scan(const TwoQubitState& s) {
    const SpectralDecomposition d = spectrum(s);
    double best = 1.0;
    for (int i = 0; i < 64; ++i) {
        const double theta = kPi * i / 64.0;
        for (int j = 0; j < 128; ++j) {
            const double phi = 2.0 * kPi * j / 128.0;
            best = std::min(best, qfi_local(d, BlochDirection::from_angles(theta, phi)));
        }
    }
    return best;
}

TwoQubitState measured_state(const TwoQubitState& s, const MeasurementBasis& b) {
    if (!(b.theta >= -1e-12 && b.theta <= kPi + 1e-12) ||
        !(b.phi >= -1e-12 && b.phi <= 2.0 * kPi + 1e-12))
        throw std::invalid_argument("measured_state: angles outside [0,pi] x [0,2pi]");

    const double c = std::cos(0.5 * b.theta);
    const double sn = std::sin(0.5 * b.theta);
    const cplx eip(std::cos(b.phi), std::sin(b.phi));
    // columns of the basis unitary: v0 = (c, sn e^{i phi}), v1 = (-sn e^{-i phi}, c)
    const cplx v[2][2] = {{c, -sn * std::conj(eip)}, {sn * eip, c}};

    // projectors on qubit B
    cplx proj[2][2][2];
    for (int k = 0; k < 2; ++k)
        for (int a = 0; a < 2; ++a)
            for (int bb = 0; bb < 2; ++bb) proj[k][a][bb] = v[a][k] * std::conj(v[bb][k]);

    const ComplexMatrix& rho = s.matrix();
    ComplexMatrix out(4);
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1) {
            // block (a1, b1) of rho acts on B; dephase it: sum_k Pi_k R Pi_k
            cplx blk[2][2] = {{rho(static_cast<std::size_t>(2 * a1),
                                   static_cast<std::size_t>(2 * b1)),
                              rho(static_cast<std::size_t>(2 * a1),
                                   static_cast<std::size_t>(2 * b1 + 1))},
                             {rho(static_cast<std::size_t>(2 * a1 + 1),
                                   static_cast<std::size_t>(2 * b1)),
                              rho(static_cast<std::size_t>(2 * a1 + 1),
                                   static_cast<std::size_t>(2 * b1 + 1))}};
            cplx res[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
            for (int k = 0; k < 2; ++k) {
                // tmp = Pi_k * blk
                cplx tmp[2][2];
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        tmp[i][j] = proj[k][i][0] * blk[0][j] + proj[k][i][1] * blk[1][j];
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        res[i][j] += tmp[i][0] * proj[k][0][j] + tmp[i][1] * proj[k][1][j];
            }
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    out(static_cast<std::size_t>(2 * a1 + i),
                        static_cast<std::size_t>(2 * b1 + j)) = res[i][j];
        }
    return TwoQubitState(std::move(out));
}

DeficitResult owqd_numeric(const TwoQubitState& s) {
    const double s0 = von_neumann_entropy(s);
    const auto objective = [&s](double theta, double phi) {
        return von_neumann_entropy(measured_state(s, MeasurementBasis{theta, phi}));
    };
    const Minimum2D m = minimize_2d(objective, kPi, 2.0 * kPi);
    const double raw = m.value - s0;
    if (raw < -1e-6)
        throw std::logic_error("owqd_numeric: dephasing lowered the entropy; broken state");
    return {raw < 0.0 ? 0.0 : raw, MeasurementBasis{m.theta, m.phi}};
}

double owqd_closed(const CorrelationTriple& t) {
    const double t1 = t.t1, t3 = t.t3;
    const double pre[4] = {0.25 * (1.0 + t3), 0.25 * (1.0 + t3),
                           0.25 * (1.0 - t3 + 2.0 * t1), 0.25 * (1.0 - t3 - 2.0 * t1)};
    const double s0 = entropy_bits(pre, 4);

    const double c = std::max(std::fabs(t1), std::fabs(t3));
    const double post[4] = {0.25 * (1.0 + c), 0.25 * (1.0 + c), 0.25 * (1.0 - c),
                            0.25 * (1.0 - c)};
    const double s1 = entropy_bits(post, 4);

    const double d = s1 - s0;
    return d < 0.0 ? 0.0 : d;
}

}  // namespace xxchain
