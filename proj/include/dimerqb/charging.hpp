// charging.hpp — collective X-drive: charging Hamiltonian, unitary, evolved state

#pragma once

#include "dimerqb/dimer.hpp"
#include "dimerqb/linalg.hpp"

namespace dimerqb::charging {

// Every dynamical quantity depends on tau = omega * t only; omega sets the
// physical time axis.
struct ChargeConfig {
    double omega{1.0}; // Rabi amplitude
    double tau{0.0};   // omega * t

    double physical_time() const { return tau / omega; }
};

// omega (sigma_x x I + I x sigma_x)
linalg::Matrix4 charging_hamiltonian(double omega);

// exp(-i tau (sigma_x x I + I x sigma_x)) written out entrywise:
//   cos^2(tau) on the diagonal, -i sin(tau) cos(tau) for single flips,
//   -sin^2(tau) for double flips. Period pi in tau.
linalg::Matrix4 u_x(double tau);

// Gibbs state of the dimer conjugated by u_x(tau).
linalg::DensityMatrix4 evolve(const model::DimerParams& p, double tau);

// The ten independent entries of the driven thermal state, each a real
// trigonometric/hyperbolic expression. They are the entries of the state in
// the frame G rho G^dagger with G = real_frame_transform(); in that frame
// the state is real symmetric.
struct EtaElements {
    double e11{}, e12{}, e13{}, e14{};
    double e22{}, e23{}, e24{};
    double e33{}, e34{};
    double e44{};
};

EtaElements eta_elements(const model::DimerParams& p, double tau);

// diag(1, i, i, -1) = S x S with S = diag(1, i). Maps the x-drive to the
// y-drive and leaves the Gibbs state and the dimer Hamiltonian unchanged.
linalg::Matrix4 real_frame_transform();

// Driven state assembled from eta_elements, rotated back to the lab frame.
linalg::DensityMatrix4 eta_closed_form(const model::DimerParams& p, double tau);

} // namespace dimerqb::charging
