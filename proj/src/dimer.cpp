// dimer.cpp

#include "dimerqb/dimer.hpp"

#include <cmath>
#include <sstream>

#include "dimerqb/errors.hpp"
#include "thermal.hpp"

namespace dimerqb::model {

using linalg::Complex;
using linalg::Matrix4;
using linalg::Vector4;

double DimerParams::alpha() const { return std::hypot(delta, 2.0 * v12); }

DimerParams DimerParams::from_frequencies(double nu1, double nu2, double v12, double temperature) {
    return DimerParams{0.5 * (nu1 + nu2), nu1 - nu2, v12, temperature};
}

void DimerParams::validate() const {
    std::ostringstream os;
    if (!std::isfinite(nu0) || !std::isfinite(delta) || !std::isfinite(v12) ||
        !std::isfinite(temperature))
        os << " all parameters must be finite;";
    if (!(nu0 > 0.0)) os << " nu0 must be > 0 (got " << nu0 << ");";
    if (!(temperature > 0.0)) os << " temperature must be > 0 (got " << temperature << ");";
    const std::string msg = os.str();
    if (!msg.empty()) throw InvalidParams("DimerParams:" + msg);
}

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

void require_unit(const Vec3& v, const char* name) {
    if (!(std::abs(std::sqrt(dot(v, v)) - 1.0) <= 1e-12))
        throw InvalidGeometry(std::string("GeometryConfig: ") + name + " is not a unit vector");
}

// cos z / z^2 - sin z / z^3, which tends to -1/3 as z -> 0.
double near_zone_term(double z) {
    if (z < 0.1) {
        const double z2 = z * z;
        return -1.0 / 3.0 + z2 * (1.0 / 30.0 + z2 * (-1.0 / 840.0 + z2 * (1.0 / 45360.0 - z2 / 3991680.0)));
    }
    return std::cos(z) / (z * z) - std::sin(z) / (z * z * z);
}

} // namespace

CollectiveCoupling coupling_from_geometry(const GeometryConfig& g) {
    require_unit(g.n1_hat, "n1_hat");
    require_unit(g.n2_hat, "n2_hat");
    require_unit(g.u12_hat, "u12_hat");
    if (!(g.lambda1 > 0.0) || !(g.lambda2 > 0.0))
        throw InvalidGeometry("GeometryConfig: decay rates must be > 0");
    if (!(g.z12 >= 1e-12))
        throw DegenerateGeometry("GeometryConfig: z12 must be >= 1e-12 (coupling is singular at zero separation)");

    const double z = g.z12;
    const double n12 = dot(g.n1_hat, g.n2_hat);
    const double proj = dot(g.n1_hat, g.u12_hat) * dot(g.n2_hat, g.u12_hat);
    const double rate = std::sqrt(g.lambda1 * g.lambda2);

    const double transverse = n12 - proj;
    const double longitudinal = n12 - 3.0 * proj;

    CollectiveCoupling out;
    out.lambda12 = 1.5 * rate * (transverse * std::sin(z) / z + longitudinal * near_zone_term(z));
    out.v12 = 0.75 * rate *
              (-transverse * std::cos(z) / z +
               longitudinal * (std::cos(z) / (z * z * z) + std::sin(z) / (z * z)));
    return out;
}

double emission_rate(double omega, double dipole_sq, double n_refr, double prefactor) {
    if (!(omega > 0.0) || !(dipole_sq > 0.0) || !(n_refr > 0.0) || !(prefactor > 0.0))
        throw InvalidParams("emission_rate: all inputs must be > 0");
    return prefactor * n_refr * omega * omega * omega * dipole_sq;
}

Matrix4 hamiltonian(const DimerParams& p) {
    Matrix4 h = Matrix4::diagonal({-p.nu0, -0.5 * p.delta, 0.5 * p.delta, p.nu0});
    h(1, 2) = p.v12;
    h(2, 1) = p.v12;
    return h;
}

namespace {

// (x|01> + |10>) / norm
Vector4 single_excitation_state(double x) {
    const double n = std::hypot(x, 1.0);
    return Vector4{Complex{}, Complex{x / n}, Complex{1.0 / n}, Complex{}};
}

} // namespace

AnalyticSpectrum analytic_spectrum(const DimerParams& p) {
    AnalyticSpectrum s;
    s.alpha = p.alpha();
    s.energies = {-p.nu0, -0.5 * s.alpha, 0.5 * s.alpha, p.nu0};
    s.states[0] = Vector4{Complex{1.0}, Complex{}, Complex{}, Complex{}};
    s.states[3] = Vector4{Complex{}, Complex{}, Complex{}, Complex{1.0}};

    const double d = p.delta;
    const double a = s.alpha;
    const double v = p.v12;
    if (std::abs(v) < 1e-14) {
        // Limit v12 -> 0+ of the amplitudes below.
        const Vector4 e01{Complex{}, Complex{1.0}, Complex{}, Complex{}};
        const Vector4 e10{Complex{}, Complex{}, Complex{1.0}, Complex{}};
        const Vector4 minus_e01{Complex{}, Complex{-1.0}, Complex{}, Complex{}};
        if (d > 0.0) {
            s.states[1] = minus_e01;
            s.states[2] = e10;
        } else if (d < 0.0) {
            s.states[1] = e10;
            s.states[2] = e01;
        } else {
            s.states[1] = single_excitation_state(-1.0);
            s.states[2] = single_excitation_state(1.0);
        }
        return s;
    }
    // Amplitudes -(delta + alpha) / 2v and (alpha - delta) / 2v, each written in
    // the form free of cancellation for the sign of delta.
    const double x_low = d >= 0.0 ? -(d + a) / (2.0 * v) : -2.0 * v / (a - d);
    const double x_high = d >= 0.0 ? 2.0 * v / (a + d) : (a - d) / (2.0 * v);
    s.states[1] = single_excitation_state(x_low);
    s.states[2] = single_excitation_state(x_high);
    return s;
}

double partition_function(const DimerParams& p) {
    p.validate();
    return 2.0 * (std::cosh(p.nu0 / p.temperature) + std::cosh(p.alpha() / (2.0 * p.temperature)));
}

linalg::DensityMatrix4 gibbs_state(const DimerParams& p) {
    p.validate();
    const thermal::ScaledWeights w = thermal::scaled_weights(p);
    const double z = w.partition();

    Matrix4 rho;
    rho(0, 0) = w.outer_plus / z;
    rho(1, 1) = (w.cosh_a + p.delta * w.sinh_a_over_alpha) / z;
    rho(2, 2) = (w.cosh_a - p.delta * w.sinh_a_over_alpha) / z;
    rho(3, 3) = w.outer_minus / z;
    const double coherence = -2.0 * p.v12 * w.sinh_a_over_alpha / z;
    rho(1, 2) = coherence;
    rho(2, 1) = coherence;
    return linalg::DensityMatrix4(rho);
}

} // namespace dimerqb::model
