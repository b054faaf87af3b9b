#pragma once

#include <array>
#include <optional>

#include "kleinian/projective.hpp"

namespace kleinian {

enum class JordanShape { DIAG, BLOCK2_PLUS_1, BLOCK3 };

// Eigenstructure of a unimodular 3x3 lift. Eigenvalues are sorted by
// (modulus, then argument) at Jordan-block granularity: a size-2 block
// occupies adjacent slots (block_start, block_start+1) sharing its
// eigenvalue; BLOCK3 fills all three slots.
struct EigenData {
    std::array<Cpx, 3> eigenvalues{};
    Mat3 basis = Mat3::identity();   // columns: eigen / generalized vectors
    JordanShape shape = JordanShape::DIAG;
    int block_start = 0;             // first column of the nontrivial block
    double condition = 1.0;          // cond(basis), infinity norm
    double residual = 0.0;           // |A*P - P*J|_inf
    bool ill_conditioned = false;    // condition > 1e10; analysis still usable

    Mat3 jordan_matrix() const;      // J reconstructed from the fields above
    Vec3 basis_column(int j) const;
    // Multiplicity pattern of the eigenvalue clusters: {1,1,1}, {2,1} or {3}.
    std::array<int, 3> cluster_sizes() const;
};

enum class RotationClass { TORSION, IRRATIONAL, NOT_UNIT_MODULUS };

struct RotationKind {
    RotationClass kind = RotationClass::IRRATIONAL;
    int order = 0;        // q with |lambda^q - 1| <= tau_rot, for TORSION
    double confidence;    // residual of the best rational approximation tried
};

// Monic characteristic polynomial coefficients (c0, c1, c2) of
// p(x) = x^3 + c2 x^2 + c1 x + c0; for a unimodular lift c0 = -1.
std::array<Cpx, 3> char_poly(const ProjTransform &g);
Cpx char_poly_eval(const std::array<Cpx, 3> &coeffs, Cpx x);

// Roots of the cubic by the closed-form method with one Newton polish step.
std::array<Cpx, 3> cubic_roots(const std::array<Cpx, 3> &coeffs);

EigenData eigen_decompose(const ProjTransform &g,
                          const Tolerances &tol = default_tol());
// Raw-matrix variant (no unimodularity assumed); eigenvalue moduli are then
// only meaningful relative to each other.
EigenData eigen_decompose(const Mat3 &m, const Tolerances &tol = default_tol());

// Continued-fraction detection of rational vs irrational rotation angle.
RotationKind rotation_kind(Cpx lambda, int q_max = default_tol().q_max,
                           const Tolerances &tol = default_tol());

// Exact-input mode: the angle is declared as the rational p/q of a turn,
// bypassing floating detection entirely.
RotationKind rotation_kind_exact(long p, long q);

}  // namespace kleinian
