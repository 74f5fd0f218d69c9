#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dimerqb/charging.hpp"
#include "dimerqb/dimer.hpp"
#include "dimerqb/linalg.hpp"
#include "oracles.hpp"

using namespace dimerqb;
using linalg::Complex;
using linalg::Matrix4;
using model::DimerParams;

constexpr double kPi = std::numbers::pi;

TEST_CASE("charging_hamiltonian: entries and spectrum") {
    const Matrix4 h = charging::charging_hamiltonian(1.0);
    // sigma_x x I couples (0,2),(1,3); I x sigma_x couples (0,1),(2,3).
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool linked = (i == 0 && (j == 1 || j == 2)) || (j == 0 && (i == 1 || i == 2)) ||
                                (i == 3 && (j == 1 || j == 2)) || (j == 3 && (i == 1 || i == 2));
            CHECK(h(i, j) == Complex{linked ? 1.0 : 0.0});
        }
    CHECK(h.trace() == Complex{0.0});
    const auto es = linalg::hermitian_eig(charging::charging_hamiltonian(0.7));
    CHECK(es.values[0] == doctest::Approx(-1.4).epsilon(1e-14));
    CHECK(std::abs(es.values[1]) < 1e-14);
    CHECK(std::abs(es.values[2]) < 1e-14);
    CHECK(es.values[3] == doctest::Approx(1.4).epsilon(1e-14));
}

TEST_CASE("u_x: special times") {
    CHECK((charging::u_x(0.0) - Matrix4::identity()).max_abs() == 0.0);

    const Matrix4 half = charging::u_x(kPi / 2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(half(i, j) - Complex{i + j == 3 ? -1.0 : 0.0}) < 1e-15);
}

TEST_CASE("u_x: matches the exponential of the charging Hamiltonian") {
    const Matrix4 hch = charging::charging_hamiltonian(1.0);
    for (int k = 0; k <= 60; ++k) {
        const double tau = 4.0 * kPi * k / 60.0;
        const Matrix4 u = charging::u_x(tau);
        CHECK((u - linalg::matrix_exp_oracle(hch * Complex{0.0, -tau})).max_abs() <= 1e-12);
        CHECK(linalg::unitarity_defect(u) <= 1e-13);
        CHECK((u - charging::u_x(tau + kPi)).max_abs() <= 1e-13);
    }
    // Physical time with omega != 1 gives the same operator at tau = omega t.
    const double omega = 2.5;
    const double t = 0.37;
    const Matrix4 hw = charging::charging_hamiltonian(omega);
    CHECK((charging::u_x(omega * t) - linalg::matrix_exp_oracle(hw * Complex{0.0, -t})).max_abs() <= 1e-12);
    CHECK(charging::ChargeConfig{omega, omega * t}.physical_time() == doctest::Approx(t));
}

TEST_CASE("u_x: one-parameter group") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-2 * kPi, 2 * kPi);
    for (int k = 0; k < 200; ++k) {
        const double a = u(rng);
        const double b = u(rng);
        CHECK((charging::u_x(a) * charging::u_x(b) - charging::u_x(a + b)).max_abs() <= 1e-12);
    }
}

TEST_CASE("evolve: period and initial state") {
    const DimerParams p{6.0, 10.0, 0.05, 0.5};
    const Matrix4 gibbs = model::gibbs_state(p).matrix();
    CHECK((charging::evolve(p, 0.0).matrix() - gibbs).max_abs() == 0.0);
    CHECK((charging::evolve(p, kPi).matrix() - gibbs).max_abs() <= 1e-14);
}

TEST_CASE("evolve: spectrum is tau-independent") {
    const DimerParams p{3.5, 5.0, 1.5, 0.5};
    const auto ref = linalg::hermitian_eig(model::gibbs_state(p).matrix()).values;
    double drift = 0.0;
    for (int k = 0; k <= 200; ++k) {
        const auto vals = linalg::hermitian_eig(charging::evolve(p, 2 * kPi * k / 200.0).matrix()).values;
        for (std::size_t i = 0; i < 4; ++i) drift = std::max(drift, std::abs(vals[i] - ref[i]));
    }
    CHECK(drift <= 1e-11);
}

TEST_CASE("eta_closed_form: reduces to the Gibbs state and keeps unit trace") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 100; ++k) {
        const DimerParams p = oracle::random_params(rng);
        CHECK((charging::eta_closed_form(p, 0.0).matrix() - model::gibbs_state(p).matrix()).max_abs() <= 1e-13);
        const double tau = std::uniform_real_distribution<double>(0.0, 2 * kPi)(rng);
        CHECK(std::abs(charging::eta_closed_form(p, tau).matrix().trace() - Complex{1.0}) <= 1e-12);
    }
}

TEST_CASE("eta_closed_form: matches the conjugation path") {
    const DimerParams fig1{6.0, 10.0, 0.05, 0.5};
    CHECK((charging::eta_closed_form(fig1, kPi / 4).matrix() - charging::evolve(fig1, kPi / 4).matrix())
              .max_abs() <= 1e-11);

    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> tau(0.0, 2 * kPi);
    for (int k = 0; k < 300; ++k) {
        const DimerParams p = oracle::random_params(rng);
        const double t = tau(rng);
        CHECK((charging::eta_closed_form(p, t).matrix() - charging::evolve(p, t).matrix()).max_abs() <= 1e-11);
    }
}

TEST_CASE("driven state is real in the y-drive frame") {
    const Matrix4 g = charging::real_frame_transform();
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> tau(0.0, 2 * kPi);
    for (int k = 0; k < 100; ++k) {
        const DimerParams p = oracle::random_params(rng);
        const double t = tau(rng);
        const Matrix4 framed = g * charging::evolve(p, t).matrix() * g.adjoint();
        double worst_imag = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) worst_imag = std::max(worst_imag, std::abs(framed(i, j).imag()));
        CHECK(worst_imag < 1e-13);

        const auto e = charging::eta_elements(p, t);
        CHECK(framed(0, 1).real() == doctest::Approx(e.e12).epsilon(1e-9));
        CHECK(framed(1, 2).real() == doctest::Approx(e.e23).epsilon(1e-9));
    }
    // The frame change commutes with the Gibbs state and the dimer Hamiltonian.
    const DimerParams p{2.0, 1.0, 0.7, 0.9};
    const Matrix4 rho = model::gibbs_state(p).matrix();
    const Matrix4 h = model::hamiltonian(p);
    CHECK((g * rho * g.adjoint() - rho).max_abs() < 1e-16);
    CHECK((g * h * g.adjoint() - h).max_abs() < 1e-16);
}
