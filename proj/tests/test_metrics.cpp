#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dimerqb/charging.hpp"
#include "dimerqb/dimer.hpp"
#include "dimerqb/errors.hpp"
#include "dimerqb/metrics.hpp"
#include "oracles.hpp"

using namespace dimerqb;
using linalg::Complex;
using linalg::DensityMatrix4;
using linalg::Matrix4;
using model::DimerParams;

constexpr double kPi = std::numbers::pi;

namespace {

double energy(const DensityMatrix4& rho, const Matrix4& h) { return (rho.matrix() * h).trace().real(); }

} // namespace

TEST_CASE("passive_state / active_state: basic cases") {
    const Matrix4 h = Matrix4::diagonal({-1.0, 0.0, 0.0, 1.0});
    const DensityMatrix4 excited(Matrix4::diagonal({0.0, 0.0, 0.0, 1.0}));
    const DensityMatrix4 ground(Matrix4::diagonal({1.0, 0.0, 0.0, 0.0}));
    CHECK((metrics::passive_state(excited, h).matrix() - ground.matrix()).max_abs() < 1e-15);
    CHECK((metrics::active_state(ground, h).matrix() - excited.matrix()).max_abs() < 1e-15);

    const DensityMatrix4 mixed(Matrix4::diagonal({0.25, 0.25, 0.25, 0.25}));
    CHECK((metrics::active_state(mixed, h).matrix() - mixed.matrix()).max_abs() < 1e-15);
    CHECK(metrics::anti_ergotropy(mixed, h) == 0.0);
    CHECK(metrics::capacity(mixed, h) == 0.0);

    const DimerParams p{6.0, 4.0, 0.3, 0.8};
    const auto gibbs = model::gibbs_state(p);
    CHECK((metrics::passive_state(gibbs, model::hamiltonian(p)).matrix() - gibbs.matrix()).max_abs() < 1e-12);
}

TEST_CASE("passive/active states against the permutation brute force") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 200; ++k) {
        const DensityMatrix4 rho(oracle::random_density(rng));
        const Matrix4 h = oracle::random_hermitian(rng, 3.0);
        const auto pops = linalg::hermitian_eig(rho.matrix()).values;
        const auto energies = linalg::hermitian_eig(h).values;
        const auto [lo, hi] = oracle::pairing_extremes(pops, energies);

        const auto pas = metrics::passive_state(rho, h);
        const auto act = metrics::active_state(rho, h);
        CHECK(energy(pas, h) == doctest::Approx(lo).epsilon(1e-12));
        CHECK(energy(act, h) == doctest::Approx(hi).epsilon(1e-12));

        // Same spectrum as rho.
        const auto pas_vals = linalg::hermitian_eig(pas.matrix()).values;
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(pas_vals[i] - pops[i]) < 1e-12);

        // No unitary beats them.
        const auto moved = linalg::conjugate(oracle::random_unitary(rng), rho);
        CHECK(energy(pas, h) <= energy(moved, h) + 1e-12);
        CHECK(energy(act, h) >= energy(moved, h) - 1e-12);
    }
}

TEST_CASE("ergotropy: full inversion and passive inputs") {
    const Matrix4 h = model::hamiltonian({6.0, 0.0, 0.0, 1.0});
    const DensityMatrix4 top(Matrix4::diagonal({0.0, 0.0, 0.0, 1.0}));
    CHECK(metrics::ergotropy(top, h) == doctest::Approx(12.0).epsilon(1e-15));

    const DimerParams p{6.0, 10.0, 0.05, 0.5};
    CHECK(metrics::ergotropy(model::gibbs_state(p), model::hamiltonian(p)) <= 1e-10);
}

TEST_CASE("ergotropy: peak of the detuned sweep sits at tau = pi/2") {
    const DimerParams p{6.0, 10.0, 0.05, 0.5};
    double best = -1.0;
    double best_tau = 0.0;
    for (int k = 0; k <= 200; ++k) {
        const double tau = kPi * k / 200.0;
        const double e = metrics::ergotropy_at(p, tau);
        if (e > best) {
            best = e;
            best_tau = tau;
        }
    }
    CHECK(best_tau == doctest::Approx(kPi / 2));
}

TEST_CASE("anti_ergotropy: resonant Gibbs state against brute force") {
    const DimerParams p{6.0, 0.0, 0.05, 0.5};
    const auto rho = model::gibbs_state(p);
    const Matrix4 h = model::hamiltonian(p);
    const auto [lo, hi] = oracle::pairing_extremes(linalg::hermitian_eig(rho.matrix()).values,
                                                   linalg::hermitian_eig(h).values);
    (void)lo;
    CHECK(metrics::anti_ergotropy(rho, h) == doctest::Approx(-(hi - energy(rho, h))).epsilon(1e-12));
    CHECK(metrics::injection_cost(rho, h) == doctest::Approx(hi - energy(rho, h)).epsilon(1e-12));

    const DensityMatrix4 active(Matrix4::diagonal({0.1, 0.2, 0.3, 0.4}));
    CHECK(metrics::anti_ergotropy(active, Matrix4::diagonal({-2.0, -1.0, 1.0, 2.0})) == 0.0);
}

TEST_CASE("ergotropy: 500 random pairs against brute force") {
    std::mt19937_64 rng(32);
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
        const DensityMatrix4 rho(oracle::random_density(rng));
        const Matrix4 h = oracle::random_hermitian(rng, 5.0);
        const auto [lo, hi] = oracle::pairing_extremes(linalg::hermitian_eig(rho.matrix()).values,
                                                       linalg::hermitian_eig(h).values);
        worst = std::max(worst, std::abs(metrics::ergotropy(rho, h) - (energy(rho, h) - lo)));
        const double c = metrics::capacity(rho, h);
        CHECK(std::abs(c - (hi - lo)) <= 1e-10);
        CHECK(c >= metrics::ergotropy(rho, h));
        CHECK(metrics::ergotropy(rho, h) >= 0.0);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("capacity: pure states span the full spectrum") {
    std::mt19937_64 rng(33);
    const Matrix4 h = model::hamiltonian({6.0, 3.0, 0.4, 1.0});
    for (int k = 0; k < 20; ++k) {
        const Matrix4 u = oracle::random_unitary(rng);
        const DensityMatrix4 pure(u * Matrix4::diagonal({1.0, 0.0, 0.0, 0.0}) * u.adjoint());
        CHECK(metrics::capacity(pure, h) == doctest::Approx(12.0).epsilon(1e-12));
    }
}

TEST_CASE("capacity: unitary invariance") {
    std::mt19937_64 rng(34);
    for (int s = 0; s < 100; ++s) {
        const DensityMatrix4 rho(oracle::random_density(rng));
        const Matrix4 h = oracle::random_hermitian(rng, 4.0);
        const double c0 = metrics::capacity(rho, h);
        for (int k = 0; k < 100; ++k) {
            const auto moved = linalg::conjugate(oracle::random_unitary(rng), rho);
            REQUIRE(std::abs(metrics::capacity(moved, h) - c0) <= 1e-10);
        }
    }
}

TEST_CASE("capacity: constant along the charging trajectory") {
    const DimerParams p{6.0, 10.0, 0.05, 0.5};
    const Matrix4 h = model::hamiltonian(p);
    const double c0 = metrics::capacity(charging::evolve(p, 0.0), h);
    for (int k = 1; k <= 100; ++k)
        CHECK(std::abs(metrics::capacity(charging::evolve(p, 2 * kPi * k / 100.0), h) - c0) <= 1e-10);
}

TEST_CASE("instantaneous_power: extrema, errors and step consistency") {
    const DimerParams detuned{6.0, 10.0, 0.05, 0.5};
    CHECK(std::abs(metrics::instantaneous_power(detuned, kPi / 2)) < 1e-6);
    CHECK(std::abs(metrics::instantaneous_power(detuned, 0.0)) < 1e-6);
    CHECK_THROWS_AS(metrics::instantaneous_power(detuned, -0.1), NegativeTau);
    CHECK_THROWS_AS(metrics::instantaneous_power(detuned, 0.5, 0.0), InvalidParams);

    // At T = 0.5 the two smallest populations sit ~1e-10 apart and are flagged.
    CHECK(metrics::has_population_crossing(model::gibbs_state(detuned)));
    const DimerParams warm{6.0, 10.0, 0.05, 2.0};
    REQUIRE_FALSE(metrics::has_population_crossing(model::gibbs_state(warm)));
    const double h = metrics::kDefaultPowerStep;
    const double scale = 2.0 * warm.nu0;
    for (double tau : {0.3, 0.7, 1.1, 2.0, 2.9}) {
        const double p1 = metrics::instantaneous_power(warm, tau, h);
        const double p2 = metrics::instantaneous_power(warm, tau, h / 2);
        CHECK(std::abs(p1 - p2) <= 10.0 * h * h * scale);
    }
    // Near tau = 0 the one-sided stencil still tracks the central one.
    CHECK(metrics::instantaneous_power(detuned, 0.5 * h) ==
          doctest::Approx(metrics::instantaneous_power(detuned, 2 * h)).epsilon(1e-3).scale(1.0));
}

TEST_CASE("has_population_crossing") {
    CHECK(metrics::has_population_crossing(DensityMatrix4(Matrix4::diagonal({0.25, 0.25, 0.25, 0.25}))));
    CHECK_FALSE(metrics::has_population_crossing(DensityMatrix4(Matrix4::diagonal({0.1, 0.2, 0.3, 0.4}))));
    CHECK(metrics::has_population_crossing(model::gibbs_state({1.0, 0.0, 0.0, 1.0})));
}

TEST_CASE("average_power") {
    const DimerParams p{6.0, 10.0, 0.05, 0.5};
    CHECK(metrics::average_power(p, kPi / 2) ==
          doctest::Approx(metrics::ergotropy_at(p, kPi / 2) / (kPi / 2)).epsilon(1e-15));
    CHECK(metrics::average_power(p, kPi) == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(metrics::average_power(p, 0.0), ZeroTime);
}

TEST_CASE("l1_coherence: definitions") {
    const DimerParams p{6.0, 2.0, 0.4, 0.7};
    const auto gibbs = model::gibbs_state(p);
    const Matrix4 h = model::hamiltonian(p);
    CHECK(metrics::l1_coherence(gibbs, h) < 1e-12);
    CHECK(metrics::l1_coherence(gibbs, h, metrics::CoherenceBasis::Computational) ==
          doctest::Approx(2.0 * std::abs(gibbs(1, 2))).epsilon(1e-14));

    Matrix4 bell = Matrix4::diagonal({0.4, 0.1, 0.1, 0.4});
    const Complex c{0.15, -0.2};
    bell(0, 3) = c;
    bell(3, 0) = std::conj(c);
    linalg::EigenSystem4 standard;
    standard.vectors = Matrix4::identity();
    CHECK(metrics::l1_coherence(DensityMatrix4(bell), standard) == doctest::Approx(2.0 * std::abs(c)).epsilon(1e-15));
}

TEST_CASE("l1_coherence: zero at pi/2 on resonance and period pi") {
    const DimerParams p{4.0, 0.0, 0.5, 0.5};
    const Matrix4 h = model::hamiltonian(p);
    CHECK(metrics::l1_coherence(charging::evolve(p, kPi / 2), h) <= 1e-10);
    for (int k = 0; k < 50; ++k) {
        const double tau = kPi * k / 50.0;
        CHECK(std::abs(metrics::l1_coherence(charging::evolve(p, tau), h) -
                       metrics::l1_coherence(charging::evolve(p, tau + kPi), h)) <= 1e-10);
    }
}

TEST_CASE("sample: invariants hold") {
    std::mt19937_64 rng(35);
    for (int k = 0; k < 50; ++k) {
        const DimerParams p = oracle::random_params(rng);
        const double tau = std::uniform_real_distribution<double>(0.0, 2 * kPi)(rng);
        const auto s = metrics::sample(p, tau);
        CHECK(s.ergotropy >= 0.0);
        CHECK(s.capacity >= s.ergotropy);
        CHECK(std::abs(s.capacity - (s.ergotropy - s.anti_ergotropy)) <= 1e-10);
        CHECK(s.injection_cost() >= 0.0);
        CHECK(s.coherence_l1 >= 0.0);
    }
    CHECK(std::isnan(metrics::sample({1.0, 0.0, 0.1, 1.0}, 0.0).avg_power));
}
