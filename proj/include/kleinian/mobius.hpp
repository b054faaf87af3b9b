#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kleinian/spectral.hpp"

namespace kleinian {

enum class MobiusType { IDENTITY, ELLIPTIC, PARABOLIC, LOXODROMIC };

struct MobiusClass {
    MobiusType type = MobiusType::IDENTITY;
    Cpx tr2{4.0, 0.0};
    RotationKind rotation{};  // meaningful for elliptic elements
};

const char *to_string(MobiusType t);

// Element of the closed purely elliptic group of maps z -> (az - conj(c)) /
// (cz + conj(a)) with |a|^2 + |c|^2 = 1.
struct CrElement {
    Cpx a, c;
    MobiusMap map() const;
    // Fixed points as homogeneous pairs; for c != 0 they satisfy
    // p_plus * conj(p_minus) = -1.
    std::pair<Vec2, Vec2> fixed_points() const;
};

enum class ElementaryType {
    DIH_INF,
    CR,
    EPA,
    MOB_CSTAR,
    NON_ELEMENTARY,
    UNDETERMINED,
};

const char *to_string(ElementaryType t);

struct ElementaryCertificate {
    ElementaryType type = ElementaryType::UNDETERMINED;
    std::optional<MobiusMap> conjugator;  // witness into the normal form
    int depth_used = 0;
    std::string detail;
};

struct MobiusCloudPoint {
    Vec2 point;
    int word_length;
};

struct CircleFit {
    GenCircle circle;
    double residual;
    bool circle_compatible;  // residual <= tau_circle
};

struct GreenbergCloud {
    std::vector<MobiusCloudPoint> points;  // loxodromic fixed points
    std::optional<CircleFit> fit;          // absent when < 4 points
    long words_visited = 0;
};

// --- operations -------------------------------------------------------------

MobiusClass mobius_classify(const MobiusMap &m,
                            const Tolerances &tol = default_tol());

// Fixed points of a non-identity map as homogeneous pairs.
std::pair<Vec2, Vec2> mobius_fixed_points(const MobiusMap &m,
                                          const Tolerances &tol = default_tol());

// The elliptic map with Fix = {1, p} and rotation angle 2*pi*theta,
// lambda = exp(i*pi*theta):
//   z -> [ (p*conj(l) - l) z + p(l - conj(l)) ] / [ (conj(l) - l) z + (p*l - conj(l)) ]
// normalized by (p - 1).
MobiusMap elliptic_with_fixed_points(Cpx p, double theta);

struct Lemma2Predicates {
    Cpx a, d, p;
    bool a_eq_conj_d;   // holds iff p is real
    bool abs_a_eq_1;    // for real p, holds iff p = 0
    bool abs_a_lt_1;    // for real p, holds iff p < 0
};

// Coefficient-side predicates for an elliptic with Fix = {1, p}; the lift
// sign is resolved toward Re(tr) >= 0.
Lemma2Predicates lemma2_predicates(const MobiusMap &m,
                                   const Tolerances &tol = default_tol());

struct CrossRatioLoxodromicTest {
    bool guaranteed_loxodromic;
    Vec2 cr;  // homogeneous cross ratio of the two fixed-point pairs
};

// The two pairs are fixed-point sets of infinite-order elliptics
// (caller-asserted); a cross ratio off the closed negative real axis
// certifies a loxodromic element in the generated group.
CrossRatioLoxodromicTest cross_ratio_loxodromic_test(
    const std::pair<Vec2, Vec2> &fix1, const std::pair<Vec2, Vec2> &fix2,
    const Tolerances &tol = default_tol());

struct ParabolicPairWitness {
    int m;
    Cpx trace_sq;
};

// Smallest m >= 1 with g2^m g1 loxodromic; in the normalized model the trace
// squared is (m*alpha*beta + 2)^2.
ParabolicPairWitness parabolic_pair_witness(const MobiusMap &g1,
                                            const MobiusMap &g2,
                                            const Tolerances &tol = default_tol());

// Succeeds iff a unit rescaling of the lift has the (a, -conj(c); c, conj(a))
// shape; for det-1 lifts only the sign is free.
std::optional<CrElement> cr_membership(const MobiusMap &m, double tau = 1e-9);

// The explicit one-parameter family inside Cr(p), p < 0, x in (0,1):
//   a(x) = (x(p-1) - i(p+1)sqrt(1-x^2)) / (p-1), c(x) = -2i sqrt(1-x^2)/(p-1),
// returned with lift [[|a|, |a| p conj(c)/a], [c a/|a|, |a|]]. Its fixed
// points are +-z_x and Re of the derivative there equals
// f(x) = (-8 p x^2 + p^2 + 6p + 1)/(p-1)^2.
MobiusMap cr_p_generator(double p, double x);
double cr_p_derivative_identity(double p, double x);  // f(x) above

ElementaryCertificate elementary_certificate(const std::vector<MobiusMap> &gens,
                                             int depth,
                                             const Tolerances &tol = default_tol());

struct GreenbergOptions {
    double dedup_resolution = 1e-4;
    long max_points = 200000;
    bool fit_circle = true;
    // Also collect parabolic fixed points; they lie in the closure of the
    // loxodromic ones for non-elementary groups and densify limit-set
    // samples near tangencies. Off for the plain fixed-point cloud.
    bool include_parabolic = false;
};

GreenbergCloud greenberg_limit_approx(const std::vector<MobiusMap> &gens,
                                      int depth,
                                      const GreenbergOptions &opts = {},
                                      const Tolerances &tol = default_tol());

// Streaming enumeration of all reduced words up to the given length over
// gens and their inverses (no deduplication); visit returns false to stop.
void visit_reduced_mobius_words(
    const std::vector<MobiusMap> &gens, int depth,
    const std::function<bool(const MobiusMap &, int)> &visit);

// Least-squares generalized-circle fit through homogeneous P^1 points;
// residual is the smallest singular value of the normalized design matrix.
std::pair<GenCircle, double> fit_generalized_circle(
    const std::vector<Vec2> &points);

}  // namespace kleinian
