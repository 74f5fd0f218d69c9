// linalg.hpp — fixed 4x4 complex Hermitian linear algebra

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace dimerqb::linalg {

using Complex = std::complex<double>;

inline constexpr std::size_t kDim = 4;

// Row-major 4x4 complex matrix. Operator representations (Hamiltonians,
// unitaries, states) all live in this type.
class Matrix4 {
public:
    Matrix4() { data_.fill(Complex{0.0, 0.0}); }

    static Matrix4 identity();
    static Matrix4 diagonal(const std::array<double, kDim>& d);

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * kDim + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * kDim + j]; }

    Matrix4 adjoint() const;
    Complex trace() const;
    // max_ij |a_ij|
    double max_abs() const;
    // Induced 1-norm (max column sum).
    double norm1() const;
    double frobenius() const;
    bool all_finite() const;

    Matrix4& operator+=(const Matrix4& o);
    Matrix4& operator-=(const Matrix4& o);
    Matrix4& operator*=(Complex s);

    friend Matrix4 operator+(Matrix4 a, const Matrix4& b) { return a += b; }
    friend Matrix4 operator-(Matrix4 a, const Matrix4& b) { return a -= b; }
    friend Matrix4 operator*(Matrix4 a, Complex s) { return a *= s; }
    friend Matrix4 operator*(Complex s, Matrix4 a) { return a *= s; }
    friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);

private:
    std::array<Complex, kDim * kDim> data_;
};

using Vector4 = std::array<Complex, kDim>;

Vector4 column(const Matrix4& m, std::size_t j);
Complex inner(const Vector4& a, const Vector4& b); // <a|b>
Matrix4 outer(const Vector4& a, const Vector4& b); // |a><b|

// max |M - M^dagger|
double hermiticity_defect(const Matrix4& m);
// max |U U^dagger - I|
double unitarity_defect(const Matrix4& u);

// Ascending eigenvalues; column i of `vectors` pairs with values[i].
struct EigenSystem4 {
    std::array<double, kDim> values{};
    Matrix4 vectors;

    Vector4 vector(std::size_t i) const { return column(vectors, i); }
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

// Cyclic complex Jacobi. Ties in the eigenvalues keep Jacobi's column order
// (stable sort); each eigenvector is rotated so that its largest-magnitude
// component (first one on ties) is real and positive.
// Throws NonHermitianInput if max|M - M^dagger| > 1e-10.
EigenSystem4 hermitian_eig(const Matrix4& m);

// Entry-wise density-matrix invariant thresholds.
struct DensityTolerances {
    double hermitian = 1e-12;
    double trace = 1e-12;
    double psd = 1e-10;
};

enum class DensityViolation { NonFinite, NotHermitian, TraceNotOne, NotPositive };

struct Violation {
    DensityViolation kind;
    std::string detail;
};

// Empty iff finite, Hermitian, unit trace and PSD, each within `tol`.
std::vector<Violation> validate_density(const Matrix4& rho, double tol);
std::vector<Violation> validate_density(const Matrix4& rho, const DensityTolerances& tol);

// A 4x4 state known to satisfy the density-matrix invariants.
class DensityMatrix4 {
public:
    // Throws InvalidDensityMatrix listing every violation.
    explicit DensityMatrix4(const Matrix4& m, const DensityTolerances& tol = {});

    const Matrix4& matrix() const noexcept { return m_; }
    Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    Matrix4 m_;
};

// U rho U^dagger. Throws NonUnitaryInput if U is not unitary within 1e-10.
DensityMatrix4 conjugate(const Matrix4& u, const DensityMatrix4& rho);

// exp(A) by scaling and squaring: A is halved until ||A||_1 <= 0.5, the
// Taylor series is summed until the next term drops below machine epsilon
// relative to the partial sum (at most 30 terms), then squared back.
Matrix4 matrix_exp_oracle(const Matrix4& a);

} // namespace dimerqb::linalg
