#pragma once

#include <optional>
#include <string>

#include "kleinian/base.hpp"

namespace kleinian {

// A point of P^2(C) in homogeneous coordinates, stored canonically:
// Hermitian norm 1 with the first coordinate of modulus > tau_zero rotated to
// be positive real. Canonical storage makes equality tests, hashing and
// deduplication deterministic.
class ProjPoint {
  public:
    ProjPoint() : c_{1.0, 0.0, 0.0} {}
    explicit ProjPoint(const Vec3 &v, const Tolerances &tol = default_tol());
    ProjPoint(Cpx z0, Cpx z1, Cpx z2, const Tolerances &tol = default_tol())
        : ProjPoint(Vec3{z0, z1, z2}, tol) {}

    const Vec3 &coords() const { return c_; }

    bool equals(const ProjPoint &o, double tau = default_tol().tau_cmp) const;

    static ProjPoint e1() { return ProjPoint(Vec3{1.0, 0.0, 0.0}); }
    static ProjPoint e2() { return ProjPoint(Vec3{0.0, 1.0, 0.0}); }
    static ProjPoint e3() { return ProjPoint(Vec3{0.0, 0.0, 1.0}); }

  private:
    Vec3 c_;
};

// A line of P^2(C) held by its dual coefficient triple; p lies on l iff the
// bilinear pairing dot(l.dual(), p.coords()) vanishes. Duals are
// canonicalized exactly like point coordinates.
class ProjLine {
  public:
    ProjLine() : d_{0.0, 0.0, 1.0} {}
    explicit ProjLine(const Vec3 &dual, const Tolerances &tol = default_tol());

    const Vec3 &dual() const { return d_; }
    bool equals(const ProjLine &o, double tau = default_tol().tau_cmp) const;

    // |dot(dual, p)| over unit representatives; zero iff incident.
    double incidence_residual(const ProjPoint &p) const;
    bool contains(const ProjPoint &p, double tau = 1e-10) const;

  private:
    Vec3 d_;
};

// Canonicalize a raw homogeneous triple (exposed for tests and hashing).
Vec3 canonical_triple(const Vec3 &v, const Tolerances &tol = default_tol());

// Element of PSL(3,C) carried by a unimodular lift. Raw input is rescaled by
// det^{-1/3} (principal branch); the residual cube-root-of-unity ambiguity is
// absorbed by projective comparison, never by a preferred representative.
class ProjTransform {
  public:
    ProjTransform() : m_(Mat3::identity()), rescaled_(false) {}
    explicit ProjTransform(const Mat3 &raw, const Tolerances &tol = default_tol());

    const Mat3 &lift() const { return m_; }
    bool was_rescaled() const { return rescaled_; }

    ProjTransform inverse() const;  // for det-1 lifts the adjugate is the inverse

    bool proj_equal(const ProjTransform &o,
                    double tau = default_tol().tau_cmp) const;

    static ProjTransform from_lift_unchecked(const Mat3 &unimodular);

  private:
    Mat3 m_;
    bool rescaled_;
};

ProjTransform operator*(const ProjTransform &g, const ProjTransform &h);

// Element of PSL(2,C) with a det-1 lift; the sign of the lift is ambiguous,
// trace squared is the well-defined invariant.
class MobiusMap {
  public:
    MobiusMap() : m_(Mat2::identity()) {}
    explicit MobiusMap(const Mat2 &raw);
    MobiusMap(Cpx a, Cpx b, Cpx c, Cpx d) : MobiusMap(Mat2{{a, b, c, d}}) {}

    const Mat2 &lift() const { return m_; }
    Cpx tr2() const { Cpx t = m_.tr(); return t * t; }

    MobiusMap inverse() const;
    Vec2 apply(const Vec2 &z) const { return m_ * z; }
    Cpx apply(Cpx z) const;  // affine chart, infinity handled projectively

    bool proj_equal(const MobiusMap &o,
                    double tau = default_tol().tau_cmp) const;

    static MobiusMap from_lift_unchecked(const Mat2 &unimodular);

  private:
    Mat2 m_;
};

MobiusMap operator*(const MobiusMap &g, const MobiusMap &h);

// Generalized circle { z : A|z|^2 + conj(B)z + B conj(z) + C = 0 } with
// A, C real, stored with the flagged side selecting one complementary
// component. Lines are circles through infinity (A = 0).
class GenCircle {
  public:
    GenCircle(double A, Cpx B, double C, int side);

    static GenCircle disk(Cpx center, double radius);       // side = interior
    static GenCircle disk_complement(Cpx center, double radius);

    double A() const { return A_; }
    Cpx B() const { return B_; }
    double C() const { return C_; }
    int side() const { return side_; }  // region = { Q * side < 0 }
    GenCircle flipped() const { return GenCircle(A_, B_, C_, -side_); }

    double discriminant() const { return std::norm(B_) - A_ * C_; }
    bool is_line() const;
    Cpx center() const;    // requires A != 0
    double radius() const; // requires A != 0

    // Sign of the defining quadratic form on a homogeneous pair [z;w].
    double quad_form(const Vec2 &zw) const;
    bool region_contains(const Vec2 &zw) const;
    bool region_contains(Cpx z) const { return region_contains(Vec2{z, 1.0}); }
    Vec2 region_sample() const;  // a point safely inside the flagged region

    // Same zero set and same flagged region, as coefficient vectors up to
    // positive scale.
    bool same_circle(const GenCircle &o, double tau = 1e-9) const;
    bool same_region(const GenCircle &o, double tau = 1e-9) const;

  private:
    double A_;
    Cpx B_;
    double C_;
    int side_;
};

// --- operations -----------------------------------------------------------

ProjLine line_through(const ProjPoint &p, const ProjPoint &q,
                      const Tolerances &tol = default_tol());
ProjPoint meet(const ProjLine &l1, const ProjLine &l2,
               const Tolerances &tol = default_tol());

ProjPoint apply(const ProjTransform &g, const ProjPoint &x);
ProjLine apply_line(const ProjTransform &g, const ProjLine &l);

// Fubini-Study distance, arccos |<x,y>| on unit representatives; in [0, pi/2].
double fs_distance(const ProjPoint &x, const ProjPoint &y);
double fs_distance(const Vec3 &x, const Vec3 &y);
// Distance from a point to a line: arcsin(|dot(dual,x)| / (|dual||x|)).
double fs_point_line_distance(const ProjPoint &x, const ProjLine &l);
double fs_point_line_distance(const Vec3 &x, const Vec3 &dual);

// Chordal geometry on the projective line (homogeneous pairs).
double p1_distance(const Vec2 &x, const Vec2 &y);
bool p1_equal(const Vec2 &x, const Vec2 &y, double tau = default_tol().tau_cmp);
Cpx p1_value(const Vec2 &x);  // affine value; infinity as (inf, 0)

// Cross ratio ((z1-z3)(z2-z4)) / ((z1-z4)(z2-z3)) computed with 2x2
// determinants of homogeneous pairs; no limit special-casing at infinity.
// Returned as a homogeneous pair so 0 and infinity are first-class values.
Vec2 cross_ratio(const Vec2 &z1, const Vec2 &z2, const Vec2 &z3, const Vec2 &z4,
                 const Tolerances &tol = default_tol());

// Pushforward of a generalized circle: the Hermitian coefficient matrix maps
// by congruence with the inverse lift, the side flag transports with it and
// is re-verified on the image of an interior sample point.
GenCircle mobius_circle_image(const MobiusMap &m, const GenCircle &c);

inline Vec2 p1_infinity() { return Vec2{1.0, 0.0}; }
inline Vec2 p1_of(Cpx z) { return Vec2{z, 1.0}; }

}  // namespace kleinian
