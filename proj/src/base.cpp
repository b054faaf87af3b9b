#include "kleinian/base.hpp"

namespace kleinian {

Mat2 operator*(const Mat2 &x, const Mat2 &y) {
    Mat2 r;
    r.a[0] = x.a[0] * y.a[0] + x.a[1] * y.a[2];
    r.a[1] = x.a[0] * y.a[1] + x.a[1] * y.a[3];
    r.a[2] = x.a[2] * y.a[0] + x.a[3] * y.a[2];
    r.a[3] = x.a[2] * y.a[1] + x.a[3] * y.a[3];
    return r;
}

Mat3 operator*(const Mat3 &x, const Mat3 &y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Cpx s = 0.0;
            for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat2 operator*(Cpx s, const Mat2 &m) {
    Mat2 r = m;
    for (auto &e : r.a) e *= s;
    return r;
}

Mat3 operator*(Cpx s, const Mat3 &m) {
    Mat3 r = m;
    for (auto &e : r.a) e *= s;
    return r;
}

Vec2 operator*(const Mat2 &m, const Vec2 &v) {
    return {m.a[0] * v[0] + m.a[1] * v[1], m.a[2] * v[0] + m.a[3] * v[1]};
}

Vec3 operator*(const Mat3 &m, const Vec3 &v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i)
        r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
    return r;
}

Mat3 operator-(const Mat3 &x, const Mat3 &y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

Cpx Mat3::det() const {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) -
           a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
}

Mat3 Mat3::adjugate() const {
    const Mat3 &m = *this;
    Mat3 r;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
}

double norm_inf(const Mat3 &m) {
    double best = 0.0;
    for (int i = 0; i < 3; ++i) {
        double s = std::abs(m(i, 0)) + std::abs(m(i, 1)) + std::abs(m(i, 2));
        best = std::max(best, s);
    }
    return best;
}

double norm_frob(const Mat3 &m) {
    double s = 0.0;
    for (const auto &e : m.a) s += std::norm(e);
    return std::sqrt(s);
}

double norm_inf(const Mat2 &m) {
    return std::max(std::abs(m.a[0]) + std::abs(m.a[1]),
                    std::abs(m.a[2]) + std::abs(m.a[3]));
}

Cpx principal_root(Cpx z, int k) {
    if (z == Cpx(0.0, 0.0)) return 0.0;
    double r = std::pow(std::abs(z), 1.0 / k);
    double th = std::arg(z) / k;
    return std::polar(r, th);
}

}  // namespace kleinian
