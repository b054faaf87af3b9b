#include <doctest.h>

#include "kleinian/rng.hpp"
#include "kleinian/spectral.hpp"

using namespace kleinian;

namespace {

ProjTransform random_unimodular(Rng &rng) {
    while (true) {
        Mat3 m;
        for (auto &e : m.a) e = rng.unit_disk();
        if (std::abs(m.det()) < 1e-3) continue;
        return ProjTransform(m);
    }
}

// The explicit three-generator family element with the closed-form spectrum;
// theta defaults to sqrt(2)-1 in the demos.
Mat3 me_matrix(double theta, Cpx eps2, Cpx eps3) {
    const double r10 = std::sqrt(10.0);
    Cpx e1 = -std::cbrt(3.0 + r10) * std::polar(1.0, -M_PI * (1.0 + 4.0 * theta) / 6.0);
    Mat3 m{};
    m(0, 0) = Cpx(0.0, 3.0) * e1;
    m(0, 1) = Cpx(0.0, 10.0) * e1;
    m(1, 0) = Cpx(0.0, 1.0) * e1;
    m(1, 1) = Cpx(0.0, 3.0) * e1;
    m(2, 0) = eps2;
    m(2, 1) = eps3;
    m(2, 2) = 1.0 / (e1 * e1);
    return m;
}

}  // namespace

TEST_CASE("char_poly conventions") {
    // identity: x^3 - 3x^2 + 3x - 1
    auto c = char_poly(ProjTransform());
    CHECK(std::abs(c[2] + 3.0) < 1e-14);
    CHECK(std::abs(c[1] - 3.0) < 1e-14);
    CHECK(std::abs(c[0] + 1.0) < 1e-14);

    auto d = char_poly(ProjTransform(Mat3::diagonal(0.5, 1.0, 2.0)));
    CHECK(std::abs(d[0] + 1.0) < 1e-14);  // constant term -det = -1
    for (Cpx r : {Cpx(0.5), Cpx(1.0), Cpx(2.0)})
        CHECK(std::abs(char_poly_eval(d, r)) < 1e-14);
}

TEST_CASE("char_poly factors at the printed closed-form roots") {
    double theta = std::sqrt(2.0) - 1.0;
    const double r10 = std::sqrt(10.0);
    Cpx e1 = -std::cbrt(3.0 + r10) * std::polar(1.0, -M_PI * (1.0 + 4.0 * theta) / 6.0);
    ProjTransform g(me_matrix(theta, 1.0, 1.0));
    auto c = char_poly(g);
    Cpx roots[3] = {1.0 / (e1 * e1), Cpx(0.0, 1.0) * e1 * (3.0 - r10),
                    Cpx(0.0, 1.0) * e1 * (3.0 + r10)};
    for (Cpx r : roots) CHECK(std::abs(char_poly_eval(c, r)) < 1e-9);
}

TEST_CASE("eigen_decompose diagonal and unipotent shapes") {
    auto e = eigen_decompose(ProjTransform(Mat3::diagonal(0.5, 1.0, 2.0)));
    CHECK(e.shape == JordanShape::DIAG);
    CHECK(std::abs(e.eigenvalues[0] - 0.5) < 1e-12);
    CHECK(std::abs(e.eigenvalues[1] - 1.0) < 1e-12);
    CHECK(std::abs(e.eigenvalues[2] - 2.0) < 1e-12);

    Mat3 u = Mat3::identity();
    u(0, 1) = 1.0;
    u(1, 2) = 1.0;
    auto b3 = eigen_decompose(ProjTransform(u));
    CHECK(b3.shape == JordanShape::BLOCK3);
    CHECK(std::abs(b3.eigenvalues[0] - 1.0) < 1e-6);
    CHECK(b3.residual < 1e-8 * norm_inf(u));
}

TEST_CASE("eigen_decompose matches the closed-form spectrum of the family element") {
    double theta = std::sqrt(2.0) - 1.0;
    const double r10 = std::sqrt(10.0);
    Cpx e1 = -std::cbrt(3.0 + r10) * std::polar(1.0, -M_PI * (1.0 + 4.0 * theta) / 6.0);
    ProjTransform g(me_matrix(theta, 1.0, 1.0));
    auto e = eigen_decompose(g);
    CHECK(e.shape == JordanShape::DIAG);

    Cpx alpha_minus = Cpx(0.0, 1.0) * e1 * (3.0 - r10);
    Cpx alpha_plus = Cpx(0.0, 1.0) * e1 * (3.0 + r10);
    Cpx rot_am = std::polar(1.0, 2.0 * M_PI * theta) * alpha_minus;
    bool found_minus = false, found_plus = false, found_rot = false;
    for (const auto &lam : e.eigenvalues) {
        if (std::abs(lam - alpha_minus) < 1e-9) found_minus = true;
        if (std::abs(lam - alpha_plus) < 1e-9) found_plus = true;
        if (std::abs(lam - rot_am) < 1e-9) found_rot = true;
    }
    CHECK(found_minus);
    CHECK(found_plus);
    CHECK(found_rot);
    CHECK(std::abs(e.eigenvalues[2] - alpha_plus) < 1e-9);  // largest modulus last

    // printed eigenvectors p1, p2 satisfy the eigen equations
    Cpx third = 1.0 / (e1 * e1);
    Cpx km = (r10 * 1.0 - 1.0) / (third - alpha_minus);
    Cpx kp = (-r10 * 1.0 - 1.0) / (third - alpha_plus);
    Vec3 p1{-r10, 1.0, km};
    Vec3 p2{r10, 1.0, kp};
    Vec3 mp1 = g.lift() * p1;
    Vec3 mp2 = g.lift() * p2;
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(mp1[i] - alpha_minus * p1[i]) < 1e-8);
        CHECK(std::abs(mp2[i] - alpha_plus * p2[i]) < 1e-8);
    }
}

TEST_CASE("reconstruction residual over random unimodular matrices") {
    Rng rng(101);
    for (int i = 0; i < 1000; ++i) {
        ProjTransform g = random_unimodular(rng);
        auto e = eigen_decompose(g);
        double scale = norm_inf(g.lift());
        CHECK(e.residual <= 1e-8 * std::max(scale, 1.0));
        Cpx prod = e.eigenvalues[0] * e.eigenvalues[1] * e.eigenvalues[2];
        CHECK(std::abs(prod - Cpx(1.0)) < 1e-9);
    }
}

TEST_CASE("eigenvalues are conjugation invariant") {
    Rng rng(103);
    for (int i = 0; i < 200; ++i) {
        ProjTransform g = random_unimodular(rng);
        ProjTransform h = random_unimodular(rng);
        double cond = norm_inf(h.lift()) * norm_inf(h.inverse().lift());
        if (cond > 1e3) continue;
        auto eg = eigen_decompose(g);
        auto ec = eigen_decompose(h * g * h.inverse());
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(eg.eigenvalues[j] - ec.eigenvalues[j]) < 1e-8);
    }
}

TEST_CASE("rotation_kind on torsion, irrational and non-unit inputs") {
    auto r1 = rotation_kind(Cpx(0.0, 1.0));
    CHECK(r1.kind == RotationClass::TORSION);
    CHECK(r1.order == 4);

    auto r2 = rotation_kind(std::polar(1.0, 2.0 * M_PI * (std::sqrt(2.0) - 1.0)), 720);
    CHECK(r2.kind == RotationClass::IRRATIONAL);
    CHECK(r2.confidence > 1e-9);

    auto r3 = rotation_kind(Cpx(2.0, 0.0));
    CHECK(r3.kind == RotationClass::NOT_UNIT_MODULUS);

    auto r4 = rotation_kind(Cpx(1.0, 0.0));
    CHECK(r4.kind == RotationClass::TORSION);
    CHECK(r4.order == 1);

    auto r5 = rotation_kind(std::polar(1.0, 2.0 * M_PI * 5.0 / 7.0));
    CHECK(r5.kind == RotationClass::TORSION);
    CHECK(r5.order == 7);
}

TEST_CASE("rotation_kind of powers reports a dividing order") {
    Rng rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        int q = 2 + int(rng.next_u64() % 40);
        int p = 1 + int(rng.next_u64() % (q - 1));
        Cpx lam = std::polar(1.0, 2.0 * M_PI * double(p) / double(q));
        auto base = rotation_kind(lam);
        REQUIRE(base.kind == RotationClass::TORSION);
        int k = 1 + int(rng.next_u64() % 6);
        Cpx pow = std::polar(1.0, 2.0 * M_PI * double(p) * k / double(q));
        auto powered = rotation_kind(pow);
        REQUIRE(powered.kind == RotationClass::TORSION);
        CHECK(base.order % powered.order == 0);
    }
}

TEST_CASE("rotation_kind_exact bypasses detection") {
    auto r = rotation_kind_exact(3, 9);
    CHECK(r.kind == RotationClass::TORSION);
    CHECK(r.order == 3);
    CHECK(r.confidence == 0.0);
}

TEST_CASE("defective shapes: 2+1 block vs diagonal with repeated eigenvalue") {
    Mat3 b21{};
    Cpx lam(0.0, 1.0);
    b21(0, 0) = lam;
    b21(0, 1) = 1.0;
    b21(1, 1) = lam;
    b21(2, 2) = 1.0 / (lam * lam);
    auto e = eigen_decompose(ProjTransform(b21));
    CHECK(e.shape == JordanShape::BLOCK2_PLUS_1);
    CHECK(e.residual < 1e-8);

    auto d = eigen_decompose(ProjTransform(Mat3::diagonal(lam, lam, 1.0 / (lam * lam))));
    CHECK(d.shape == JordanShape::DIAG);

    // conjugated defective shape is still detected
    Rng rng(109);
    Mat3 hm;
    for (auto &x : hm.a) x = rng.unit_disk();
    hm(0, 0) += 2.0;
    hm(1, 1) += 2.0;
    hm(2, 2) += 2.0;
    ProjTransform h(hm);
    auto ec = eigen_decompose(h * ProjTransform(b21) * h.inverse());
    CHECK(ec.shape == JordanShape::BLOCK2_PLUS_1);
}
