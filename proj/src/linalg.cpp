// linalg.cpp — complex Jacobi eigensolver, matrix exponential, state checks

#include "dimerqb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "dimerqb/errors.hpp"

namespace dimerqb::linalg {

Matrix4 Matrix4::identity() {
    Matrix4 m;
    for (std::size_t i = 0; i < kDim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix4 Matrix4::diagonal(const std::array<double, kDim>& d) {
    Matrix4 m;
    for (std::size_t i = 0; i < kDim; ++i) m(i, i) = d[i];
    return m;
}

Matrix4 Matrix4::adjoint() const {
    Matrix4 r;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

Complex Matrix4::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < kDim; ++i) t += (*this)(i, i);
    return t;
}

double Matrix4::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double Matrix4::norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < kDim; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < kDim; ++i) col += std::abs((*this)(i, j));
        best = std::max(best, col);
    }
    return best;
}

double Matrix4::frobenius() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

bool Matrix4::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

Matrix4& Matrix4::operator+=(const Matrix4& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix4& Matrix4::operator-=(const Matrix4& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix4& Matrix4::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t k = 0; k < kDim; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < kDim; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Vector4 column(const Matrix4& m, std::size_t j) {
    Vector4 v;
    for (std::size_t i = 0; i < kDim; ++i) v[i] = m(i, j);
    return v;
}

Complex inner(const Vector4& a, const Vector4& b) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < kDim; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

Matrix4 outer(const Vector4& a, const Vector4& b) {
    Matrix4 m;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) m(i, j) = a[i] * std::conj(b[j]);
    return m;
}

double hermiticity_defect(const Matrix4& m) { return (m - m.adjoint()).max_abs(); }

double unitarity_defect(const Matrix4& u) {
    return (u * u.adjoint() - Matrix4::identity()).max_abs();
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-14;

double off_diagonal_norm(const Matrix4& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Multiply column j by the phase that makes its dominant entry real positive.
void normalize_phase(Matrix4& v, std::size_t j) {
    std::size_t lead = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < kDim; ++i) {
        const double mag = std::abs(v(i, j));
        if (mag > best + 1e-12) {
            best = mag;
            lead = i;
        }
    }
    if (best <= 0.0) return;
    const Complex phase = std::conj(v(lead, j)) / std::abs(v(lead, j));
    for (std::size_t i = 0; i < kDim; ++i) v(i, j) *= phase;
    v(lead, j) = Complex{v(lead, j).real(), 0.0};
}

} // namespace

EigenSystem4 hermitian_eig(const Matrix4& m) {
    const double defect = hermiticity_defect(m);
    if (!(defect <= kHermitianTol)) {
        std::ostringstream os;
        os << "hermitian_eig: input is not Hermitian (max|M - M^dagger| = " << defect << ")";
        throw NonHermitianInput(os.str());
    }

    Matrix4 a = (m + m.adjoint()) * Complex{0.5, 0.0};
    Matrix4 v = Matrix4::identity();
    const double scale = std::max(a.frobenius(), std::numeric_limits<double>::min());

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const double off = off_diagonal_norm(a);
        if (off <= kOffDiagonalTol * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < kDim; ++p) {
            for (std::size_t q = p + 1; q < kDim; ++q) {
                const Complex apq = a(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) continue;
                const Complex e = apq / b;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * b);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Phase rotation on q makes a_pq real, then a real Givens rotation.
                Matrix4 j = Matrix4::identity();
                j(p, p) = c;
                j(p, q) = s;
                j(q, p) = -s * std::conj(e);
                j(q, q) = c * std::conj(e);

                a = j.adjoint() * a * j;
                v = v * j;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > kOffDiagonalTol * scale)
        throw ConvergenceFailure("hermitian_eig: Jacobi sweeps did not converge");

    std::array<std::size_t, kDim> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigenSystem4 es;
    for (std::size_t k = 0; k < kDim; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < kDim; ++i) es.vectors(i, k) = v(i, order[k]);
        normalize_phase(es.vectors, k);
    }
    return es;
}

std::vector<Violation> validate_density(const Matrix4& rho, const DensityTolerances& tol) {
    std::vector<Violation> out;
    if (!rho.all_finite()) {
        out.push_back({DensityViolation::NonFinite, "matrix has non-finite entries"});
        return out;
    }
    const double herm = hermiticity_defect(rho);
    if (herm > tol.hermitian) {
        std::ostringstream os;
        os << "not Hermitian: max|rho - rho^dagger| = " << herm;
        out.push_back({DensityViolation::NotHermitian, os.str()});
    }
    const Complex tr = rho.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol.trace) {
        std::ostringstream os;
        os << "trace = " << tr << ", expected 1";
        out.push_back({DensityViolation::TraceNotOne, os.str()});
    }
    // Spectrum of the Hermitian part, so a non-Hermitian input still gets a PSD verdict.
    const Matrix4 h = (rho + rho.adjoint()) * Complex{0.5, 0.0};
    const double lowest = hermitian_eig(h).values[0];
    if (lowest < -tol.psd) {
        std::ostringstream os;
        os << "not positive semidefinite: lowest eigenvalue " << lowest;
        out.push_back({DensityViolation::NotPositive, os.str()});
    }
    return out;
}

std::vector<Violation> validate_density(const Matrix4& rho, double tol) {
    return validate_density(rho, DensityTolerances{tol, tol, tol});
}

DensityMatrix4::DensityMatrix4(const Matrix4& m, const DensityTolerances& tol) : m_(m) {
    const auto issues = validate_density(m, tol);
    if (!issues.empty()) {
        std::string msg = "invalid density matrix:";
        for (const auto& v : issues) msg += " [" + v.detail + "]";
        throw InvalidDensityMatrix(msg);
    }
}

DensityMatrix4 conjugate(const Matrix4& u, const DensityMatrix4& rho) {
    const double defect = unitarity_defect(u);
    if (!(defect <= kUnitaryTol)) {
        std::ostringstream os;
        os << "conjugate: operator is not unitary (max|UU^dagger - I| = " << defect << ")";
        throw NonUnitaryInput(os.str());
    }
    Matrix4 r = u * rho.matrix() * u.adjoint();
    r = (r + r.adjoint()) * Complex{0.5, 0.0};
    return DensityMatrix4(r);
}

Matrix4 matrix_exp_oracle(const Matrix4& a) {
    constexpr double kScalingThreshold = 0.5;
    constexpr int kMaxTerms = 30;

    int squarings = 0;
    const double n1 = a.norm1();
    if (n1 > kScalingThreshold) {
        int exponent = 0;
        std::frexp(n1 / kScalingThreshold, &exponent);
        squarings = exponent;
    }
    const Matrix4 b = a * Complex{std::ldexp(1.0, -squarings), 0.0};

    Matrix4 sum = Matrix4::identity();
    Matrix4 term = Matrix4::identity();
    for (int k = 1; k <= kMaxTerms; ++k) {
        term = term * b * Complex{1.0 / k, 0.0};
        sum += term;
        if (term.max_abs() <= std::numeric_limits<double>::epsilon() * sum.max_abs()) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

} // namespace dimerqb::linalg
