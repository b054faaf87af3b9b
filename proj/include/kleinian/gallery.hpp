#pragma once

#include <optional>

#include "kleinian/actions.hpp"

namespace kleinian {

enum class SolFamily { SOL4_0, SOL4_1, SOL4_1_PRIME, NONE };

const char *to_string(SolFamily f);

// Membership of one transformation in the solvable affine families, with the
// parameters extracted from the (3,3)-normalized lift. Rebuilding the matrix
// from the parameters reproduces the lift projectively.
struct SolMembership {
    SolFamily family = SolFamily::NONE;
    // SOL4_0: (lambda, a, b); SOL4_1 / SOL4_1_PRIME: (eps, alpha, a, b, c)
    Cpx lambda{};
    Cpx a{};
    Cpx b{};
    double eps = 1.0;
    double alpha = 1.0;
    double c = 0.0;

    Mat3 rebuild() const;  // (3,3)-normalized representative
};

// Families overlap (pure translations fit several); the preferred family is
// tried first when given.
SolMembership sol_membership(const ProjTransform &g, double tau = 1e-9,
                             SolFamily preferred = SolFamily::NONE);

// Index-3 normal form in the order-3-symmetry group: B^k followed by a
// diagonal with exponent vector (n1 - 2 n2 + n3, n1 + n2 - 2 n3, n2 + n3 - 2 n1).
struct GammaANormalForm {
    int k = 0;                          // 0, 1 or 2
    std::array<long, 3> exponents{};    // (n1, n2, n3), n3 fixed to 0
    std::array<long, 3> diag_powers{};  // the three diagonal exponents

    Mat3 rebuild(Cpx a) const;
};

GroupSpec make_gamma_a(Cpx a);
GammaANormalForm gamma_a_normal_form(const Word &word);

// Suspension prediction: the union of lines joining the control limit set to
// the apex, plus the control line itself when the scalar group is infinite.
struct SuspensionPrediction {
    std::vector<Vec2> control_limit_samples;  // P^1 points on the control line
    bool include_control_line = false;
    bool empty = false;

    // FS distance from x to the predicted union (samples stand in for the
    // control limit set).
    double distance(const ProjPoint &x) const;
};

struct Suspension {
    GroupSpec group;
    SuspensionPrediction prediction;
    bool scalar_group_infinite = false;
};

Suspension make_suspension(const std::vector<MobiusMap> &psl2_gens,
                           const std::vector<Cpx> &scalar_gens,
                           int control_limit_depth = 8,
                           const Tolerances &tol = default_tol());

// The three-generator kissing-Schottky family. eps1 is pinned to
// -(3+sqrt(10))^(1/3) e^{-i pi (1+4 theta)/6}; eps2, eps3 are free.
struct KissingSchottky {
    GroupSpec group;
    SchottkyPairing pairing;
    Cpx eps1;
    std::array<Cpx, 3> predicted_eigenvalues;  // alpha-, alpha+, e^{2 pi i theta} alpha-
    ProjPoint p1, p2;                          // printed eigenvectors
    Cpx k_plus, k_minus;
    double char_poly_residual = 0.0;  // max |P(lambda)| over predicted roots
    bool rational_theta_warning = false;
    bool degenerate_affine_case = false;  // k+ = k- = 0, excluded regime
};

KissingSchottky make_kissing_schottky(double theta, Cpx eps2, Cpx eps3,
                                      const Tolerances &tol = default_tol());

struct InoueSM {
    GroupSpec group;
    double alpha;                 // real eigenvalue > 1
    Cpx beta;                     // complex eigenvalue
    std::array<double, 3> real_eigenvector;
    std::array<Cpx, 3> complex_eigenvector;
    std::vector<SolMembership> memberships;  // one per generator
};

// Generators from an integer matrix with one real eigenvalue > 1 and a
// complex-conjugate pair: gamma0 = (alpha w, beta z), gamma_i translations by
// the eigenvector components, as maps of [z; w; 1].
InoueSM make_inoue_sm(const std::array<std::array<long, 3>, 3> &M,
                      const Tolerances &tol = default_tol());

struct InoueSN {
    GroupSpec group;
    double alpha;
    std::array<double, 2> vec_a;  // eigenvector for alpha
    std::array<double, 2> vec_b;  // eigenvector for +-alpha^{-1}
    Cpx gamma3_translation;       // r^{-1} (b1 a2 - b2 a1)
    std::vector<SolMembership> memberships;
    bool integrability_unchecked = true;  // c1, c2 accepted from the caller
};

InoueSN make_inoue_sn(const std::array<std::array<long, 2>, 2> &N, long r,
                      Cpx t, Cpx c1, Cpx c2, int sign,
                      const Tolerances &tol = default_tol());

struct KernelFormReport {
    struct Entry {
        Word word;
        bool form_ok;  // unipotent shear fixing a line through the point
        Cpx tau;
    };
    bool kernel_trivial = true;
    bool all_forms_ok = true;
    std::vector<Entry> entries;
};

// For each Pi-kernel word, verify the lift is the unipotent translation
// fixing a line through the control point pointwise, with tau != 0.
KernelFormReport kernel_form_check(const GroupSpec &spec, int max_len,
                                   const Tolerances &tol = default_tol());

}  // namespace kleinian
