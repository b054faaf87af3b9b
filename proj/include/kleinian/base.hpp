#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kleinian {

using Cpx = std::complex<double>;
using Vec2 = std::array<Cpx, 2>;
using Vec3 = std::array<Cpx, 3>;

// Row-major fixed-size complex matrices. Everything is by value; none of
// these types owns resources or mutates shared state.
struct Mat2 {
    std::array<Cpx, 4> a{};  // [ a00 a01 ; a10 a11 ]

    Cpx &operator()(int r, int c) { return a[2 * r + c]; }
    const Cpx &operator()(int r, int c) const { return a[2 * r + c]; }

    static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
    Cpx det() const { return a[0] * a[3] - a[1] * a[2]; }
    Cpx tr() const { return a[0] + a[3]; }
};

struct Mat3 {
    std::array<Cpx, 9> a{};

    Cpx &operator()(int r, int c) { return a[3 * r + c]; }
    const Cpx &operator()(int r, int c) const { return a[3 * r + c]; }

    static Mat3 identity() {
        return Mat3{{1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0}};
    }
    static Mat3 diagonal(Cpx d0, Cpx d1, Cpx d2) {
        return Mat3{{d0, 0.0, 0.0, 0.0, d1, 0.0, 0.0, 0.0, d2}};
    }
    Cpx det() const;
    Cpx tr() const { return a[0] + a[4] + a[8]; }
    Mat3 transpose() const;
    Mat3 adjugate() const;
};

Mat2 operator*(const Mat2 &x, const Mat2 &y);
Mat3 operator*(const Mat3 &x, const Mat3 &y);
Mat2 operator*(Cpx s, const Mat2 &m);
Mat3 operator*(Cpx s, const Mat3 &m);
Vec2 operator*(const Mat2 &m, const Vec2 &v);
Vec3 operator*(const Mat3 &m, const Vec3 &v);
Mat3 operator-(const Mat3 &x, const Mat3 &y);

inline Cpx dot(const Vec3 &x, const Vec3 &y) {  // bilinear, no conjugation
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}
inline Cpx hdot(const Vec3 &x, const Vec3 &y) {  // Hermitian <x,y>
    return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1] + std::conj(x[2]) * y[2];
}
inline double norm2(const Vec3 &x) { return std::real(hdot(x, x)); }
inline double norm(const Vec3 &x) { return std::sqrt(norm2(x)); }
inline Vec3 cross(const Vec3 &x, const Vec3 &y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
            x[0] * y[1] - x[1] * y[0]};
}

double norm_inf(const Mat3 &m);      // max absolute row sum
double norm_frob(const Mat3 &m);
double norm_inf(const Mat2 &m);

// Principal branch k-th root: modulus^(1/k) * exp(i*arg/k), arg in (-pi,pi].
Cpx principal_root(Cpx z, int k);

struct Tolerances {
    double tau_zero = 1e-12;   // coordinates below this count as zero
    double tau_cmp = 1e-9;     // projective comparison
    double tau_eig = 1e-8;     // eigenvalue clustering, relative to |A|_inf
    double tau_rank = 1e-8;    // numerical rank of (A - lambda I)
    double tau_rot = 1e-9;     // |lambda^q - 1| bound for a torsion verdict
    double tau_unit = 1e-7;    // modulus comparisons against 1 / each other
    double tau_tr = 1e-9;      // trace-squared classification margin
    double tau_axis = 1e-9;    // distance to the negative real axis
    double tau_circle = 1e-4;  // circle-fit acceptance residual
    int q_max = 720;           // largest torsion order the detector reports
};

inline const Tolerances &default_tol() {
    static const Tolerances t{};
    return t;
}

// Error taxonomy shared by all modules.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};
struct CoincidentPoints : Error { using Error::Error; };
struct CoincidentLines : Error { using Error::Error; };
struct DegenerateQuadruple : Error { using Error::Error; };
struct PreconditionViolation : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct EmptyDomain : Error { using Error::Error; };
struct SpectrumMismatch : Error { using Error::Error; };
struct NotControllable : Error { using Error::Error; };

}  // namespace kleinian
