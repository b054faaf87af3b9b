#include <doctest.h>

#include "kleinian/projective.hpp"
#include "kleinian/rng.hpp"

using namespace kleinian;

namespace {

ProjTransform random_unimodular(Rng &rng, double max_cond = 1e6) {
    while (true) {
        Mat3 m;
        for (auto &e : m.a) e = rng.unit_disk();
        if (std::abs(m.det()) < 1e-3) continue;
        ProjTransform g(m);
        Mat3 inv = g.inverse().lift();
        double cond = norm_inf(g.lift()) * norm_inf(inv);
        if (cond <= max_cond) return g;
    }
}

}  // namespace

TEST_CASE("canonicalization is exactly idempotent") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Vec3 v{rng.unit_disk() * 3.0, rng.unit_disk(), rng.unit_disk() * 0.1};
        Vec3 c1 = canonical_triple(v);
        Vec3 c2 = canonical_triple(c1);
        for (int j = 0; j < 3; ++j) {
            CHECK(c1[j].real() == c2[j].real());
            CHECK(c1[j].imag() == c2[j].imag());
        }
    }
}

TEST_CASE("canonical form invariants") {
    ProjPoint p(Vec3{Cpx(0.0, 2.0), Cpx(1.0, 1.0), Cpx(0.0)});
    double n = norm(p.coords());
    CHECK(std::abs(n - 1.0) < 1e-14);
    CHECK(p.coords()[0].imag() == 0.0);
    CHECK(p.coords()[0].real() > 0.0);
    // scalar multiples and the original agree
    ProjPoint q(Vec3{Cpx(0.0, -6.0), Cpx(3.0, -3.0) * Cpx(0.0, -1.0), Cpx(0.0)});
    CHECK(p.equals(ProjPoint(Vec3{Cpx(0.0, 2.0) * Cpx(2.0, 1.0),
                                  Cpx(1.0, 1.0) * Cpx(2.0, 1.0), Cpx(0.0)})));
    (void)q;
    CHECK_THROWS_AS(ProjPoint(Vec3{1e-15, 0.0, 0.0}), Error);
}

TEST_CASE("line_through coordinate examples") {
    ProjPoint e1 = ProjPoint::e1(), e2 = ProjPoint::e2(), e3 = ProjPoint::e3();
    CHECK(line_through(e1, e2).equals(ProjLine(Vec3{0.0, 0.0, 1.0})));
    CHECK(line_through(e1, e3).equals(ProjLine(Vec3{0.0, 1.0, 0.0})));
    // [1;1;0] joined with e3: dual proportional to cross((1,1,0),(0,0,1)) = (1,-1,0)
    ProjPoint p(Vec3{1.0, 1.0, 0.0});
    CHECK(line_through(p, e3).equals(ProjLine(Vec3{1.0, -1.0, 0.0})));
    CHECK_THROWS_AS(line_through(e1, ProjPoint(Vec3{2.0, 0.0, 0.0})),
                    CoincidentPoints);
}

TEST_CASE("meet coordinate examples") {
    ProjLine l1(Vec3{0.0, 0.0, 1.0}), l2(Vec3{0.0, 1.0, 0.0});
    CHECK(meet(l1, l2).equals(ProjPoint::e1()));
    ProjLine l12 = line_through(ProjPoint::e1(), ProjPoint::e2());
    ProjLine l23 = line_through(ProjPoint::e2(), ProjPoint::e3());
    CHECK(meet(l12, l23).equals(ProjPoint::e2()));
    ProjPoint p(Vec3{1.0, 1.0, 0.0});
    ProjLine a = line_through(p, ProjPoint::e3());
    CHECK(meet(a, l12).equals(p));
    CHECK_THROWS_AS(meet(l1, ProjLine(Vec3{0.0, 0.0, 5.0})), CoincidentLines);
}

TEST_CASE("apply fixes eigenvectors and preserves incidence") {
    ProjTransform id;
    ProjPoint x(Vec3{0.3, Cpx(0.1, -0.4), 1.0});
    CHECK(apply(id, x).equals(x));

    Cpx a(1.3, 0.4);
    ProjTransform g(Mat3::diagonal(a, a, 1.0 / (a * a)));
    CHECK(apply(g, ProjPoint::e3()).equals(ProjPoint::e3()));
    // every point of line(e1,e2) is fixed up to scale
    ProjPoint y(Vec3{0.7, Cpx(0.2, 0.5), 0.0});
    CHECK(apply(g, y).equals(y));

    // the order-3 coordinate rotation maps line(e1,e2) to line(e3,e2)
    Mat3 b{};
    b(0, 2) = 1.0;
    b(1, 0) = 1.0;
    b(2, 1) = 1.0;
    ProjTransform B = ProjTransform::from_lift_unchecked(b);
    ProjLine l12 = line_through(ProjPoint::e1(), ProjPoint::e2());
    ProjLine l32 = line_through(ProjPoint::e3(), ProjPoint::e2());
    CHECK(apply_line(B, l12).equals(l32));
}

TEST_CASE("inverse round-trip and incidence preservation (random)") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        ProjTransform g = random_unimodular(rng);
        ProjPoint x(Vec3{rng.unit_disk(), rng.unit_disk(), rng.unit_disk() + 1.5});
        ProjPoint back = apply(g, apply(g.inverse(), x));
        CHECK(fs_distance(back, x) < 1e-9);

        ProjPoint y(Vec3{rng.unit_disk() + 0.8, rng.unit_disk(), rng.unit_disk()});
        if (x.equals(y)) continue;
        ProjLine l = line_through(x, y);
        CHECK(apply_line(g, l).incidence_residual(apply(g, x)) < 1e-9);
        CHECK(apply_line(g, l).incidence_residual(apply(g, y)) < 1e-9);
    }
}

TEST_CASE("fs_distance basics") {
    CHECK(fs_distance(ProjPoint::e1(), ProjPoint::e1()) == 0.0);
    CHECK(fs_distance(ProjPoint::e1(), ProjPoint::e2()) ==
          doctest::Approx(M_PI_2).epsilon(1e-12));
    ProjPoint p(Vec3{1.0, 1.0, 0.0});
    CHECK(fs_distance(ProjPoint::e1(), p) ==
          doctest::Approx(M_PI / 4.0).epsilon(1e-12));
    // symmetry
    ProjPoint q(Vec3{0.2, Cpx(0.4, 0.3), 1.0});
    CHECK(fs_distance(p, q) == doctest::Approx(fs_distance(q, p)));
}

TEST_CASE("cross ratio determinant convention") {
    Vec2 zero = p1_of(0.0), inf = p1_infinity(), one = p1_of(1.0);
    // (0, inf, 1, p) -> 1/p
    Cpx p(2.3, 0.7);
    Cpx cr = p1_value(cross_ratio(zero, inf, one, p1_of(p)));
    CHECK(std::abs(cr - 1.0 / p) < 1e-12);
    CHECK(std::abs(p1_value(cross_ratio(zero, inf, one, p1_of(2.0))) - 0.5) <
          1e-14);
    // pairwise-coincident guard value
    Vec2 a = p1_of(Cpx(0.3, 0.1)), b = p1_of(Cpx(-2.0, 0.4));
    Cpx v = p1_value(cross_ratio(a, b, a, b));
    CHECK(std::abs(v) < 1e-12);
    CHECK_THROWS_AS(cross_ratio(a, a, a, b), DegenerateQuadruple);
}

TEST_CASE("cross ratio is Moebius invariant (random)") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        Mat2 m{{rng.unit_disk() + 1.0, rng.unit_disk(), rng.unit_disk(),
                rng.unit_disk() + 1.0}};
        if (std::abs(m.det()) < 1e-2) continue;
        MobiusMap g(m);
        Vec2 z[4];
        for (auto &zz : z) zz = p1_of(rng.unit_disk() * 2.0);
        Cpx before = p1_value(cross_ratio(z[0], z[1], z[2], z[3]));
        Cpx after = p1_value(cross_ratio(g.apply(z[0]), g.apply(z[1]),
                                         g.apply(z[2]), g.apply(z[3])));
        CHECK(std::abs(before - after) < 1e-9 * (1.0 + std::abs(before)));
    }
}

TEST_CASE("mobius_circle_image examples") {
    // doubling map sends the unit circle to the radius-2 circle
    MobiusMap dbl(Mat2{{2.0, 0.0, 0.0, 1.0}});
    GenCircle unit = GenCircle::disk(0.0, 1.0);
    GenCircle img = mobius_circle_image(dbl, unit);
    CHECK(std::abs(img.center()) < 1e-12);
    CHECK(img.radius() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(img.region_contains(Cpx(0.0)));  // interior stays interior

    // m1 pairs the disk at 1+i with the complement of the disk at 1-i
    MobiusMap m1(Mat2{{Cpx(1.0, 1.0), Cpx(0.0, -1.0), Cpx(0.0, 1.0),
                       Cpx(1.0, -1.0)}});
    GenCircle r1 = GenCircle::disk(Cpx(1.0, 1.0), 1.0);
    GenCircle s1 = GenCircle::disk(Cpx(1.0, -1.0), 1.0);
    GenCircle im1 = mobius_circle_image(m1, r1);
    CHECK(im1.same_circle(s1, 1e-9));
    CHECK(!im1.region_contains(s1.region_sample()));  // side flipped
    CHECK(im1.region_contains(p1_infinity()));

    // m3 sends the disk at -3 to the complement of the disk at +3
    MobiusMap m3(Mat2{{Cpx(0.0, 3.0), Cpx(0.0, 10.0), Cpx(0.0, 1.0),
                       Cpx(0.0, 3.0)}});
    GenCircle r3 = GenCircle::disk(Cpx(-3.0, 0.0), 1.0);
    GenCircle s3 = GenCircle::disk(Cpx(3.0, 0.0), 1.0);
    GenCircle im3 = mobius_circle_image(m3, r3);
    CHECK(im3.same_circle(s3, 1e-9));
    CHECK(!im3.region_contains(s3.region_sample()));
}

TEST_CASE("mobius_circle_image respects composition (random)") {
    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        Mat2 a{{rng.unit_disk() + 1.0, rng.unit_disk(), rng.unit_disk(),
                rng.unit_disk() + 1.0}};
        Mat2 b{{rng.unit_disk() + 1.0, rng.unit_disk(), rng.unit_disk(),
                rng.unit_disk() + 1.0}};
        if (std::abs(a.det()) < 1e-2 || std::abs(b.det()) < 1e-2) continue;
        MobiusMap ma(a), mb(b);
        GenCircle c = GenCircle::disk(rng.unit_disk(), 0.5 + rng.uniform());
        GenCircle lhs = mobius_circle_image(mb * ma, c);
        GenCircle rhs = mobius_circle_image(mb, mobius_circle_image(ma, c));
        CHECK(lhs.same_circle(rhs, 1e-9));
        CHECK(lhs.region_contains(rhs.region_sample()));
    }
}

TEST_CASE("projective transform equality handles cube roots of unity") {
    Rng rng(23);
    ProjTransform g = random_unimodular(rng);
    Cpx omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    ProjTransform h = ProjTransform::from_lift_unchecked(omega * g.lift());
    CHECK(g.proj_equal(h));
    CHECK_FALSE(g.proj_equal(ProjTransform()));
}
