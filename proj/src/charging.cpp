// charging.cpp

#include "dimerqb/charging.hpp"

#include <cmath>

#include "thermal.hpp"

namespace dimerqb::charging {

using linalg::Complex;
using linalg::Matrix4;

Matrix4 charging_hamiltonian(double omega) {
    Matrix4 h;
    // sigma_x on either site flips one bit of the basis index.
    for (std::size_t i = 0; i < linalg::kDim; ++i) {
        h(i, i ^ 1u) = omega;
        h(i, i ^ 2u) = omega;
    }
    return h;
}

Matrix4 u_x(double tau) {
    const double c = std::cos(tau);
    const double s = std::sin(tau);
    const Complex stay{c * c, 0.0};
    const Complex single{0.0, -s * c};
    const Complex both{-s * s, 0.0};

    Matrix4 u;
    for (std::size_t i = 0; i < linalg::kDim; ++i) {
        for (std::size_t j = 0; j < linalg::kDim; ++j) {
            switch (i ^ j) {
            case 0: u(i, j) = stay; break;
            case 3: u(i, j) = both; break;
            default: u(i, j) = single; break;
            }
        }
    }
    return u;
}

linalg::DensityMatrix4 evolve(const model::DimerParams& p, double tau) {
    return linalg::conjugate(u_x(tau), model::gibbs_state(p));
}

EtaElements eta_elements(const model::DimerParams& p, double tau) {
    p.validate();
    const thermal::ScaledWeights w = thermal::scaled_weights(p);
    const double ep = w.outer_plus;
    const double em = w.outer_minus;
    const double cn = w.cosh_b();
    const double ch = w.cosh_a;
    const double sha = w.sinh_a_over_alpha;
    const double d = p.delta;
    const double v = p.v12;

    const double c = std::cos(tau);
    const double s = std::sin(tau);
    const double c2 = c * c;
    const double s2 = s * s;
    const double sin2t = std::sin(2.0 * tau);
    const double cos2t = std::cos(2.0 * tau);
    const double cos4t = std::cos(4.0 * tau);
    const double sin2t_sq = sin2t * sin2t;

    const double denom = ch + cn;

    EtaElements e;
    e.e11 = (2.0 * (s2 * s2 * em + c2 * c2 * ep) + sin2t_sq * (ch - 2.0 * v * sha)) / (4.0 * denom);
    e.e12 = sin2t * (c2 * ep - s2 * em - cos2t * ch - sha * (d - 2.0 * v * cos2t)) / (4.0 * denom);
    e.e13 = sin2t * (c2 * ep - s2 * em - cos2t * ch + sha * (d + 2.0 * v * cos2t)) / (4.0 * denom);
    e.e14 = -s2 * c2 * (ch - cn - 2.0 * v * sha) / denom;
    e.e22 = (2.0 * sin2t_sq * cn + (cos4t + 3.0) * ch + 4.0 * sha * (d * cos2t + v * sin2t_sq)) /
            (8.0 * denom);
    e.e23 = (2.0 * sin2t_sq * cn - 8.0 * s2 * c2 * ch - 2.0 * v * (cos4t + 3.0) * sha) / (8.0 * denom);
    e.e24 = -sin2t * (c2 * em - s2 * ep - cos2t * ch + sha * (2.0 * v * cos2t - d)) / (4.0 * denom);
    e.e33 = (2.0 * sin2t_sq * cn + (cos4t + 3.0) * ch -
             2.0 * sha * (2.0 * d * cos2t + v * (cos4t - 1.0))) /
            (8.0 * denom);
    e.e34 = -sin2t * (c2 * em - s2 * ep - cos2t * ch + sha * (d + 2.0 * v * cos2t)) / (4.0 * denom);
    e.e44 = (2.0 * (c2 * c2 * em + s2 * s2 * ep) + sin2t_sq * (ch - 2.0 * v * sha)) / (4.0 * denom);
    return e;
}

Matrix4 real_frame_transform() {
    Matrix4 g;
    g(0, 0) = 1.0;
    g(1, 1) = Complex{0.0, 1.0};
    g(2, 2) = Complex{0.0, 1.0};
    g(3, 3) = -1.0;
    return g;
}

linalg::DensityMatrix4 eta_closed_form(const model::DimerParams& p, double tau) {
    const EtaElements e = eta_elements(p, tau);
    Matrix4 real_frame;
    const double upper[4][4] = {
        {e.e11, e.e12, e.e13, e.e14},
        {0.0, e.e22, e.e23, e.e24},
        {0.0, 0.0, e.e33, e.e34},
        {0.0, 0.0, 0.0, e.e44},
    };
    for (std::size_t i = 0; i < linalg::kDim; ++i)
        for (std::size_t j = i; j < linalg::kDim; ++j) {
            real_frame(i, j) = upper[i][j];
            real_frame(j, i) = upper[i][j];
        }
    const Matrix4 g = real_frame_transform();
    return linalg::DensityMatrix4(g.adjoint() * real_frame * g);
}

} // namespace dimerqb::charging
