#pragma once

#include <vector>

namespace xxchain {

// Which momentum quantization to use on the ring of N sites: k = 2 pi n / N
// (periodic fermions) or k = 2 pi (n + 1/2) / N (antiperiodic).  The exact
// ground state lives in whichever sector ends up lower after filling.
enum class Sector { integer_k, half_integer_k };

struct FermiSea {
    int n_sites = 0;
    double alpha = 0.0;
    Sector sector = Sector::half_integer_k;
    std::vector<double> filled;  // momenta with dispersion < 0, ascending
    int boundary_modes = 0;      // modes with |dispersion| < 1e-12 (occupation ambiguous)
};

// Single-particle dispersion -J [cos k - (alpha/2) sin 2k] at J = 1.
double dispersion(double k, double alpha);

// Fill all strictly negative modes of the given sector; N even, 8..65536.
FermiSea build_sea(int n_sites, double alpha, Sector sector);

// Finite-size counterpart of g_function: (2/N) sum_{k filled} cos(k m),
// minus 1 at m = 0.  Uses the lower-energy sector (ties go half-integer).
double finite_g(int n_sites, double alpha, int m);

// Sum of the negative dispersion values over the lower-energy sector.
// N even, 2..65536 (small rings allowed so it can meet exact results).
double ff_ground_energy(int n_sites, double alpha);

// Dense exact diagonalization of the spin Hamiltonian on the ring,
// N even, 4..10.  Ground energy only.
double ed_ground_energy(int n_sites, double alpha);

}  // namespace xxchain
