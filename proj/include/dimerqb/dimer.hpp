// dimer.hpp — dipole-coupled two-emitter model: couplings, Hamiltonian, Gibbs state

#pragma once

#include <array>

#include "dimerqb/linalg.hpp"

namespace dimerqb::model {

// Reduced units throughout (hbar = h = k_B = 1).
struct DimerParams {
    double nu0{1.0};         // mean transition frequency (nu1 + nu2) / 2
    double delta{0.0};       // detuning nu1 - nu2
    double v12{0.0};         // coherent dipole-dipole coupling
    double temperature{1.0};

    double nu1() const { return nu0 + 0.5 * delta; }
    double nu2() const { return nu0 - 0.5 * delta; }
    // Splitting of the single-excitation manifold, sqrt(delta^2 + 4 v12^2).
    double alpha() const;

    static DimerParams from_frequencies(double nu1, double nu2, double v12, double temperature);

    // Throws InvalidParams unless nu0 > 0, temperature > 0 and all fields finite.
    void validate() const;
};

using Vec3 = std::array<double, 3>;

struct GeometryConfig {
    Vec3 n1_hat{0.0, 0.0, 1.0};  // transition dipole orientations
    Vec3 n2_hat{0.0, 0.0, 1.0};
    Vec3 u12_hat{1.0, 0.0, 0.0}; // separation direction
    double z12{1.0};             // n k12 r12
    double lambda1{1.0};         // single-emitter decay rates
    double lambda2{1.0};
};

struct CollectiveCoupling {
    double v12{0.0};
    double lambda12{0.0};
};

// Near/far-zone dipole-dipole expressions for V12 and Lambda12. The
// z -> 0 limit of Lambda12 is finite and is evaluated by series.
// Throws DegenerateGeometry if z12 < 1e-12, InvalidGeometry for non-unit
// vectors or non-positive rates.
CollectiveCoupling coupling_from_geometry(const GeometryConfig& g);

// prefactor * n_refr * omega^3 * dipole_sq; prefactor carries 1/(3 eps0 hbar c^3).
double emission_rate(double omega, double dipole_sq, double n_refr, double prefactor);

// Basis {|00>, |01>, |10>, |11>}:
//   diag(-nu0, -delta/2, delta/2, nu0) with v12 on (|01>,|10>).
linalg::Matrix4 hamiltonian(const DimerParams& p);

struct AnalyticSpectrum {
    // (-nu0, -alpha/2, alpha/2, nu0), in that labeling, not sorted.
    std::array<double, 4> energies{};
    std::array<linalg::Vector4, 4> states{};
    double alpha{0.0};
};

AnalyticSpectrum analytic_spectrum(const DimerParams& p);

// 2 [cosh(nu0 / T) + cosh(alpha / 2T)]
double partition_function(const DimerParams& p);

// exp(-H/T)/Z assembled from its closed-form elements; exponents are
// shifted by their maximum so low temperatures do not overflow.
linalg::DensityMatrix4 gibbs_state(const DimerParams& p);

} // namespace dimerqb::model
