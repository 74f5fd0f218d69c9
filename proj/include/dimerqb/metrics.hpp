// metrics.hpp — ergotropy, anti-ergotropy, capacity, charging power, l1 coherence

#pragma once

#include "dimerqb/dimer.hpp"
#include "dimerqb/linalg.hpp"

namespace dimerqb::metrics {

struct MetricsSample {
    double tau{0.0};
    double ergotropy{0.0};      // >= 0
    double anti_ergotropy{0.0}; // <= 0, Tr[(rho - sigma_active) H]
    double capacity{0.0};       // ergotropy - anti_ergotropy
    double power{0.0};          // d ergotropy / d tau, signed
    double avg_power{0.0};      // ergotropy / tau; NaN at tau = 0
    double coherence_l1{0.0};

    // Energy needed to reach the fully active state, |anti_ergotropy|.
    double injection_cost() const { return -anti_ergotropy; }
};

// Populations of rho sorted descending, placed on the eigenvectors of H in
// ascending energy. Lowest energy reachable from rho by any unitary.
linalg::DensityMatrix4 passive_state(const linalg::DensityMatrix4& rho, const linalg::Matrix4& h);

// Populations sorted ascending on ascending energies: the highest-energy
// unitary orbit point.
linalg::DensityMatrix4 active_state(const linalg::DensityMatrix4& rho, const linalg::Matrix4& h);

// Tr[(rho - passive) H], clamped at 0.
double ergotropy(const linalg::DensityMatrix4& rho, const linalg::Matrix4& h);

// Tr[(rho - active) H], clamped at 0 from above. Non-positive: the active
// state maximizes the energy.
double anti_ergotropy(const linalg::DensityMatrix4& rho, const linalg::Matrix4& h);

// |anti_ergotropy|
double injection_cost(const linalg::DensityMatrix4& rho, const linalg::Matrix4& h);

// ergotropy - anti_ergotropy = Tr[active H] - Tr[passive H]. Depends only
// on the spectra of rho and H, so it is unitarily invariant.
double capacity(const linalg::DensityMatrix4& rho, const linalg::Matrix4& h);

// Ergotropy of the driven dimer at tau with respect to its own Hamiltonian.
double ergotropy_at(const model::DimerParams& p, double tau);

inline constexpr double kDefaultPowerStep = 1e-5;

// d ergotropy / d tau by central differences. Within `step` of tau = 0 the
// second-order one-sided stencil is used instead. Per unit tau; multiply by
// omega for physical time.
// Throws NegativeTau if tau < 0, InvalidParams if step <= 0.
double instantaneous_power(const model::DimerParams& p, double tau, double step = kDefaultPowerStep);

// ergotropy(tau) / tau. Throws ZeroTime if tau <= 0.
double average_power(const model::DimerParams& p, double tau);

// Sum of |<b_i|rho|b_j>| over i != j in the given orthonormal basis.
double l1_coherence(const linalg::DensityMatrix4& rho, const linalg::EigenSystem4& basis);

enum class CoherenceBasis { Energy, Computational };

// Energy basis is the eigenbasis of h; Computational ignores h.
double l1_coherence(const linalg::DensityMatrix4& rho, const linalg::Matrix4& h,
                    CoherenceBasis basis = CoherenceBasis::Energy);

// True when two eigenvalues of rho lie closer than `gap`. Ergotropy is not
// smooth across such degeneracies, so derivative checks skip them.
bool has_population_crossing(const linalg::DensityMatrix4& rho, double gap = 1e-8);

// All metrics of the driven dimer at tau.
MetricsSample sample(const model::DimerParams& p, double tau, double power_step = kDefaultPowerStep,
                     CoherenceBasis basis = CoherenceBasis::Energy);

} // namespace dimerqb::metrics
