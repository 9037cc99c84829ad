#include "xxchain/finite_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "xxchain/numerics.hpp"

namespace xxchain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroModeTol = 1e-12;

void require_even(int n, const char* who) {
    if (n % 2 != 0) throw std::invalid_argument(std::string(who) + ": N must be even");
}

struct FilledModes {
    std::vector<double> ks;
    double energy = 0.0;
    int boundary = 0;
};

// enumerate the sector's momentum grid on (-pi, pi] and keep the strictly
// negative-energy modes
FilledModes fill_modes(int n, double alpha, Sector sector) {
    FilledModes out;
    out.ks.reserve(static_cast<std::size_t>(n) / 2 + 2);
    const double offset = (sector == Sector::integer_k) ? 0.0 : 0.5;
    for (int j = 0; j < n; ++j) {
        double k = 2.0 * kPi * (j + offset) / n;
        if (k > kPi + 1e-12) k -= 2.0 * kPi;  // map onto (-pi, pi]
        const double e = dispersion(k, alpha);
        if (std::fabs(e) < kZeroModeTol) {
            ++out.boundary;
            continue;  // zero modes carry no energy; leave them out of the sea
        }
        if (e < 0.0) {
            out.ks.push_back(k);
            out.energy += e;
        }
    }
    std::sort(out.ks.begin(), out.ks.end());
    return out;
}

// half-integer wins ties so the answer never depends on zero-mode bookkeeping
FilledModes lower_sector(int n, double alpha) {
    FilledModes half = fill_modes(n, alpha, Sector::half_integer_k);
    FilledModes integer = fill_modes(n, alpha, Sector::integer_k);
    return (integer.energy < half.energy - 1e-15) ? integer : half;
}

}  // namespace

double dispersion(double k, double alpha) {
    return -(std::cos(k) - 0.5 * alpha * std::sin(2.0 * k));
}

FermiSea build_sea(int n_sites, double alpha, Sector sector) {
    if (n_sites < 8 || n_sites > 65536)
        throw std::out_of_range("build_sea: N must be in [8, 65536]");
    require_even(n_sites, "build_sea");
    if (!(alpha >= 0.0)) throw std::invalid_argument("build_sea: alpha must be >= 0");

    FilledModes fm = fill_modes(n_sites, alpha, sector);
    FermiSea sea;
    sea.n_sites = n_sites;
    sea.alpha = alpha;
    sea.sector = sector;
    sea.filled = std::move(fm.ks);
    sea.boundary_modes = fm.boundary;
    return sea;
}

double finite_g(int n_sites, double alpha, int m) {
    if (n_sites < 8 || n_sites > 65536)
        throw std::out_of_range("finite_g: N must be in [8, 65536]");
    require_even(n_sites, "finite_g");
    if (!(alpha >= 0.0)) throw std::invalid_argument("finite_g: alpha must be >= 0");
    if (std::abs(m) > n_sites / 2)
        throw std::out_of_range("finite_g: |m| must be at most N/2");

    const FilledModes fm = lower_sector(n_sites, alpha);
    const int ma = std::abs(m);  // even in m by construction
    double acc = 0.0;
    for (double k : fm.ks) acc += std::cos(k * ma);
    double g = 2.0 * acc / n_sites;
    if (m == 0) g -= 1.0;
    return g;
}

double ff_ground_energy(int n_sites, double alpha) {
    if (n_sites < 2 || n_sites > 65536)
        throw std::out_of_range("ff_ground_energy: N must be in [2, 65536]");
    require_even(n_sites, "ff_ground_energy");
    if (!(alpha >= 0.0)) throw std::invalid_argument("ff_ground_energy: alpha must be >= 0");
    return lower_sector(n_sites, alpha).energy;
}

double ed_ground_energy(int n_sites, double alpha) {
    if (n_sites < 4 || n_sites > 10)
        throw std::out_of_range("ed_ground_energy: N must be in [4, 10]");
    require_even(n_sites, "ed_ground_energy");
    if (!(alpha >= 0.0)) throw std::invalid_argument("ed_ground_energy: alpha must be >= 0");

    const double j = 1.0;
    const double jp = alpha * j;
    const std::size_t dim = std::size_t{1} << n_sites;
    ComplexMatrix h(dim);

    // H = -J sum_l (Sx Sx + Sy Sy)_{l,l+1}
    //     + J' sum_l Sz_l (Sx_{l-1} Sy_{l+1} - Sy_{l-1} Sx_{l+1}), periodic ring.
    // In raising/lowering form the second line is
    //     (J'/2i) Sz_l (S+_{l-1} S-_{l+1} - S-_{l-1} S+_{l+1}).
    for (std::size_t b = 0; b < dim; ++b) {
        for (int l = 0; l < n_sites; ++l) {
            const int lp = (l + 1) % n_sites;
            const int lm = (l + n_sites - 1) % n_sites;
            const bool bit_l = (b >> l) & 1U;
            const bool bit_lp = (b >> lp) & 1U;
            const bool bit_lm = (b >> lm) & 1U;

            if (bit_l != bit_lp) {
                const std::size_t b2 = b ^ (std::size_t{1} << l) ^ (std::size_t{1} << lp);
                h(b2, b) += -0.5 * j;
            }
            const double sz = bit_l ? 0.5 : -0.5;
            if (!bit_lm && bit_lp) {
                // S+_{l-1} S-_{l+1}: hop the up spin from l+1 to l-1
                const std::size_t b2 = b ^ (std::size_t{1} << lm) ^ (std::size_t{1} << lp);
                h(b2, b) += cplx(0.0, -0.5 * jp) * sz;
            } else if (bit_lm && !bit_lp) {
                const std::size_t b2 = b ^ (std::size_t{1} << lm) ^ (std::size_t{1} << lp);
                h(b2, b) += cplx(0.0, 0.5 * jp) * sz;
            }
        }
    }

    return hermitian_eigenvalues(h).front();
}

}  // namespace xxchain
