// thermal.hpp — Boltzmann weights of the dimer levels with a common scale removed

#pragma once

#include <algorithm>
#include <cmath>

#include "dimerqb/dimer.hpp"

namespace dimerqb::thermal {

// Every quantity is multiplied by exp(-m), m = max(nu0/T, alpha/2T), so all
// weights are <= 1. Ratios of them are the physical Gibbs quantities.
struct ScaledWeights {
    double outer_plus{0.0};        // exp(nu0/T)
    double outer_minus{0.0};       // exp(-nu0/T)
    double cosh_a{0.0};            // cosh(alpha/2T)
    double sinh_a{0.0};            // sinh(alpha/2T)
    double sinh_a_over_alpha{0.0}; // sinh(alpha/2T) / alpha, finite at alpha = 0

    double cosh_b() const { return 0.5 * (outer_plus + outer_minus); }
    // Z = 2 [cosh(nu0/T) + cosh(alpha/2T)]
    double partition() const { return outer_plus + outer_minus + 2.0 * cosh_a; }
};

inline ScaledWeights scaled_weights(const model::DimerParams& p) {
    const double t = p.temperature;
    const double alpha = p.alpha();
    const double b = p.nu0 / t;
    const double a = alpha / (2.0 * t);
    const double m = std::max(b, a);

    ScaledWeights w;
    w.outer_plus = std::exp(b - m);
    w.outer_minus = std::exp(-b - m);
    const double ap = std::exp(a - m);
    const double am = std::exp(-a - m);
    w.cosh_a = 0.5 * (ap + am);
    w.sinh_a = 0.5 * (ap - am);
    if (a < 1e-4) {
        // sinh(a)/alpha = (1/2T) sinh(a)/a
        const double sinhc = 1.0 + a * a / 6.0 + a * a * a * a / 120.0;
        w.sinh_a_over_alpha = std::exp(-m) * sinhc / (2.0 * t);
    } else {
        w.sinh_a_over_alpha = w.sinh_a / alpha;
    }
    return w;
}

} // namespace dimerqb::thermal
