// metrics.cpp

#include "dimerqb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dimerqb/charging.hpp"
#include "dimerqb/errors.hpp"

namespace dimerqb::metrics {

using linalg::Complex;
using linalg::DensityMatrix4;
using linalg::EigenSystem4;
using linalg::Matrix4;

namespace {

double mean_energy(const Matrix4& rho, const Matrix4& h) { return (rho * h).trace().real(); }

// Populations placed on energy levels in the given order.
DensityMatrix4 assemble(const std::array<double, 4>& populations, const EigenSystem4& energy) {
    Matrix4 m;
    for (std::size_t i = 0; i < linalg::kDim; ++i) {
        const auto v = energy.vector(i);
        m += linalg::outer(v, v) * Complex{populations[i], 0.0};
    }
    return DensityMatrix4(m);
}

std::array<double, 4> ascending_populations(const DensityMatrix4& rho) {
    return linalg::hermitian_eig(rho.matrix()).values;
}

std::array<double, 4> descending_populations(const DensityMatrix4& rho) {
    auto p = ascending_populations(rho);
    std::reverse(p.begin(), p.end());
    return p;
}

double paired_energy(const std::array<double, 4>& populations, const std::array<double, 4>& energies) {
    double e = 0.0;
    for (std::size_t i = 0; i < linalg::kDim; ++i) e += populations[i] * energies[i];
    return e;
}

} // namespace

DensityMatrix4 passive_state(const DensityMatrix4& rho, const Matrix4& h) {
    return assemble(descending_populations(rho), linalg::hermitian_eig(h));
}

DensityMatrix4 active_state(const DensityMatrix4& rho, const Matrix4& h) {
    return assemble(ascending_populations(rho), linalg::hermitian_eig(h));
}

double ergotropy(const DensityMatrix4& rho, const Matrix4& h) {
    const auto energies = linalg::hermitian_eig(h).values;
    const double e = mean_energy(rho.matrix(), h) - paired_energy(descending_populations(rho), energies);
    return std::max(e, 0.0);
}

double anti_ergotropy(const DensityMatrix4& rho, const Matrix4& h) {
    const auto energies = linalg::hermitian_eig(h).values;
    const double w = mean_energy(rho.matrix(), h) - paired_energy(ascending_populations(rho), energies);
    return std::min(w, 0.0);
}

double injection_cost(const DensityMatrix4& rho, const Matrix4& h) { return -anti_ergotropy(rho, h); }

double capacity(const DensityMatrix4& rho, const Matrix4& h) {
    return ergotropy(rho, h) - anti_ergotropy(rho, h);
}

double ergotropy_at(const model::DimerParams& p, double tau) {
    return ergotropy(charging::evolve(p, tau), model::hamiltonian(p));
}

double instantaneous_power(const model::DimerParams& p, double tau, double step) {
    if (!(tau >= 0.0)) throw NegativeTau("instantaneous_power: tau must be >= 0");
    if (!(step > 0.0)) throw InvalidParams("instantaneous_power: step must be > 0");
    if (tau - step < 0.0) {
        const double e0 = ergotropy_at(p, tau);
        const double e1 = ergotropy_at(p, tau + step);
        const double e2 = ergotropy_at(p, tau + 2.0 * step);
        return (-3.0 * e0 + 4.0 * e1 - e2) / (2.0 * step);
    }
    return (ergotropy_at(p, tau + step) - ergotropy_at(p, tau - step)) / (2.0 * step);
}

double average_power(const model::DimerParams& p, double tau) {
    if (!(tau > 0.0)) throw ZeroTime("average_power: tau must be > 0");
    return ergotropy_at(p, tau) / tau;
}

double l1_coherence(const DensityMatrix4& rho, const EigenSystem4& basis) {
    const Matrix4 m = basis.vectors.adjoint() * rho.matrix() * basis.vectors;
    double sum = 0.0;
    for (std::size_t i = 0; i < linalg::kDim; ++i)
        for (std::size_t j = 0; j < linalg::kDim; ++j)
            if (i != j) sum += std::abs(m(i, j));
    return sum;
}

double l1_coherence(const DensityMatrix4& rho, const Matrix4& h, CoherenceBasis basis) {
    if (basis == CoherenceBasis::Computational) {
        EigenSystem4 standard;
        standard.vectors = Matrix4::identity();
        return l1_coherence(rho, standard);
    }
    return l1_coherence(rho, linalg::hermitian_eig(h));
}

bool has_population_crossing(const DensityMatrix4& rho, double gap) {
    const auto p = ascending_populations(rho);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i + 1] - p[i] < gap) return true;
    return false;
}

MetricsSample sample(const model::DimerParams& p, double tau, double power_step, CoherenceBasis basis) {
    const Matrix4 h = model::hamiltonian(p);
    const DensityMatrix4 rho = charging::evolve(p, tau);

    MetricsSample s;
    s.tau = tau;
    s.ergotropy = ergotropy(rho, h);
    s.anti_ergotropy = anti_ergotropy(rho, h);
    s.capacity = s.ergotropy - s.anti_ergotropy;
    s.power = instantaneous_power(p, tau, power_step);
    s.avg_power = tau > 0.0 ? s.ergotropy / tau : std::numeric_limits<double>::quiet_NaN();
    s.coherence_l1 = l1_coherence(rho, h, basis);
    return s;
}

} // namespace dimerqb::metrics
