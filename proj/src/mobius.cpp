#include "kleinian/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace kleinian {

const char *to_string(MobiusType t) {
    switch (t) {
        case MobiusType::IDENTITY: return "IDENTITY";
        case MobiusType::ELLIPTIC: return "ELLIPTIC";
        case MobiusType::PARABOLIC: return "PARABOLIC";
        case MobiusType::LOXODROMIC: return "LOXODROMIC";
    }
    return "?";
}

const char *to_string(ElementaryType t) {
    switch (t) {
        case ElementaryType::DIH_INF: return "DIH_INF";
        case ElementaryType::CR: return "CR";
        case ElementaryType::EPA: return "EPA";
        case ElementaryType::MOB_CSTAR: return "MOB_CSTAR";
        case ElementaryType::NON_ELEMENTARY: return "NON_ELEMENTARY";
        case ElementaryType::UNDETERMINED: return "UNDETERMINED";
    }
    return "?";
}

namespace {

bool is_identity_lift2(const Mat2 &m, double tau) {
    double scale = std::max(1.0, norm_inf(m));
    double off = std::max(std::abs(m.a[1]), std::abs(m.a[2]));
    return off <= tau * scale && std::abs(m.a[0] - m.a[3]) <= tau * scale;
}

}  // namespace

MobiusClass mobius_classify(const MobiusMap &m, const Tolerances &tol) {
    MobiusClass out;
    out.tr2 = m.tr2();
    if (is_identity_lift2(m.lift(), tol.tau_cmp)) {
        out.type = MobiusType::IDENTITY;
        return out;
    }
    Cpx t2 = out.tr2;
    bool real = std::abs(t2.imag()) <= tol.tau_tr * std::max(1.0, std::abs(t2));
    if (real && std::abs(t2.real() - 4.0) <= tol.tau_tr * 4.0) {
        out.type = MobiusType::PARABOLIC;
        return out;
    }
    if (real && t2.real() >= -tol.tau_tr && t2.real() < 4.0) {
        out.type = MobiusType::ELLIPTIC;
        // Multiplier mu with mu + 1/mu + 2 = tr^2; |mu| = 1 for elliptics.
        Cpx tr = std::sqrt(t2);
        Cpx half = tr / 2.0;
        Cpx disc = std::sqrt(half * half - 1.0);
        Cpx mu = (half + disc) * (half + disc);
        out.rotation = rotation_kind(mu, tol.q_max, tol);
        return out;
    }
    out.type = MobiusType::LOXODROMIC;
    return out;
}

std::pair<Vec2, Vec2> mobius_fixed_points(const MobiusMap &m,
                                          const Tolerances &tol) {
    const Mat2 &l = m.lift();
    Cpx a = l.a[0], b = l.a[1], c = l.a[2], d = l.a[3];
    if (is_identity_lift2(l, tol.tau_cmp))
        throw PreconditionViolation("mobius_fixed_points: identity map");
    double scale = norm_inf(l);
    if (std::abs(c) <= tol.tau_zero * scale) {
        // Fixes infinity; second fixed point from (a - d) z = -b.
        if (std::abs(a - d) <= tol.tau_zero * scale)
            return {p1_infinity(), p1_infinity()};  // parabolic translation
        return {p1_infinity(), Vec2{b, d - a}};
    }
    // c z^2 + (d - a) z - b = 0, stabilized quadratic formula.
    Cpx B = d - a;
    Cpx disc = std::sqrt(B * B + 4.0 * c * b);
    Cpx q = std::abs(-B + disc) >= std::abs(-B - disc) ? (-B + disc) : (-B - disc);
    if (std::abs(q) <= tol.tau_zero * scale) {
        Vec2 z{-B / (2.0 * c), 1.0};  // double root
        return {z, z};
    }
    Vec2 z1{q, 2.0 * c};
    Vec2 z2{-2.0 * b, q};
    return {z1, z2};
}

MobiusMap elliptic_with_fixed_points(Cpx p, double theta) {
    if (std::abs(p - Cpx(1.0)) <= 1e-14)
        throw PreconditionViolation("elliptic_with_fixed_points: p = 1");
    Cpx l = std::polar(1.0, M_PI * theta);
    Cpx lc = std::conj(l);
    Cpx den = p - 1.0;
    Mat2 raw{{(p * lc - l) / den, p * (l - lc) / den, (lc - l) / den,
              (p * l - lc) / den}};
    return MobiusMap::from_lift_unchecked(raw);  // det is 1 by construction
}

Lemma2Predicates lemma2_predicates(const MobiusMap &m, const Tolerances &tol) {
    auto [f1, f2] = mobius_fixed_points(m, tol);
    Vec2 one = p1_of(1.0);
    Vec2 other;
    if (p1_equal(f1, one, 1e-7))
        other = f2;
    else if (p1_equal(f2, one, 1e-7))
        other = f1;
    else
        throw PreconditionViolation("lemma2_predicates: 1 is not fixed");
    Cpx p = p1_value(other);
    if (std::isinf(p.real()))
        throw PreconditionViolation("lemma2_predicates: second fixed point at infinity");

    Mat2 l = m.lift();
    if ((l.a[0] + l.a[3]).real() < 0.0) l = Cpx(-1.0) * l;  // Re(tr) >= 0

    Lemma2Predicates out;
    out.a = l.a[0];
    out.d = l.a[3];
    out.p = p;
    double tau = 1e3 * tol.tau_cmp;  // predicate margin
    out.a_eq_conj_d = std::abs(out.a - std::conj(out.d)) <= tau;
    out.abs_a_eq_1 = std::abs(std::abs(out.a) - 1.0) <= tau;
    out.abs_a_lt_1 = std::abs(out.a) < 1.0 - tau;
    return out;
}

CrossRatioLoxodromicTest cross_ratio_loxodromic_test(
    const std::pair<Vec2, Vec2> &fix1, const std::pair<Vec2, Vec2> &fix2,
    const Tolerances &tol) {
    for (const auto &p : {fix1.first, fix1.second})
        for (const auto &q : {fix2.first, fix2.second})
            if (p1_equal(p, q, tol.tau_cmp))
                throw DegenerateQuadruple(
                    "cross_ratio_loxodromic_test: shared fixed point");
    Vec2 cr = cross_ratio(fix1.first, fix1.second, fix2.first, fix2.second, tol);
    CrossRatioLoxodromicTest out;
    out.cr = cr;
    Cpx v = p1_value(cr);
    bool zero_or_inf = std::abs(cr[0]) <= tol.tau_axis * std::abs(cr[1]) ||
                       std::abs(cr[1]) <= tol.tau_axis * std::abs(cr[0]);
    bool negative_real = !std::isinf(v.real()) &&
                         std::abs(v.imag()) <= tol.tau_axis * (1.0 + std::abs(v)) &&
                         v.real() < 0.0;
    out.guaranteed_loxodromic = !zero_or_inf && !negative_real;
    return out;
}

ParabolicPairWitness parabolic_pair_witness(const MobiusMap &g1,
                                            const MobiusMap &g2,
                                            const Tolerances &tol) {
    if (mobius_classify(g1, tol).type != MobiusType::PARABOLIC ||
        mobius_classify(g2, tol).type != MobiusType::PARABOLIC)
        throw PreconditionViolation("parabolic_pair_witness: inputs not parabolic");
    Vec2 p1 = mobius_fixed_points(g1, tol).first;
    Vec2 p2 = mobius_fixed_points(g2, tol).first;
    if (p1_equal(p1, p2, 1e-8))
        throw PreconditionViolation("parabolic_pair_witness: shared fixed point");
    MobiusMap acc = g2;
    for (int m = 1; m <= 4096; ++m) {
        MobiusMap w = acc * g1;
        if (mobius_classify(w, tol).type == MobiusType::LOXODROMIC)
            return {m, w.tr2()};
        acc = acc * g2;
    }
    throw Error("parabolic_pair_witness: no loxodromic product found");
}

std::optional<CrElement> cr_membership(const MobiusMap &m, double tau) {
    for (double sign : {1.0, -1.0}) {
        Mat2 l = sign * m.lift();
        Cpx a = l.a[0], b = l.a[1], c = l.a[2], d = l.a[3];
        if (std::abs(d - std::conj(a)) <= tau &&
            std::abs(b + std::conj(c)) <= tau) {
            return CrElement{a, c};
        }
    }
    return std::nullopt;
}

MobiusMap CrElement::map() const {
    return MobiusMap::from_lift_unchecked(
        Mat2{{a, -std::conj(c), c, std::conj(a)}});
}

std::pair<Vec2, Vec2> CrElement::fixed_points() const {
    return mobius_fixed_points(map());
}

MobiusMap cr_p_generator(double p, double x) {
    if (!(p < 0.0))
        throw PreconditionViolation("cr_p_generator: p must be negative");
    if (!(x > 0.0 && x < 1.0))
        throw PreconditionViolation("cr_p_generator: x must lie in (0,1)");
    double s = std::sqrt(1.0 - x * x);
    Cpx a = (x * (p - 1.0) - Cpx(0.0, 1.0) * (p + 1.0) * s) / (p - 1.0);
    Cpx c = Cpx(0.0, -2.0) * s / (p - 1.0);
    double am = std::abs(a);
    Mat2 lift{{Cpx(am), am * p * std::conj(c) / a, c * a / am, Cpx(am)}};
    return MobiusMap::from_lift_unchecked(lift);
}

double cr_p_derivative_identity(double p, double x) {
    return (-8.0 * p * x * x + p * p + 6.0 * p + 1.0) / ((p - 1.0) * (p - 1.0));
}

void visit_reduced_mobius_words(
    const std::vector<MobiusMap> &gens, int depth,
    const std::function<bool(const MobiusMap &, int)> &visit) {
    int n = static_cast<int>(gens.size());
    if (n == 0 || depth <= 0) return;
    std::vector<MobiusMap> alphabet;
    alphabet.reserve(2 * n);
    for (const auto &g : gens) alphabet.push_back(g);
    for (const auto &g : gens) alphabet.push_back(g.inverse());
    auto inverse_letter = [&](int i) { return i < n ? i + n : i - n; };

    struct Frame {
        MobiusMap acc;
        int last;
        int len;
    };
    // Iterative DFS, letters in declaration order for determinism.
    std::vector<Frame> stack;
    for (int i = 2 * n - 1; i >= 0; --i)
        stack.push_back({alphabet[i], i, 1});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (!visit(f.acc, f.len)) return;
        if (f.len >= depth) continue;
        for (int i = 2 * n - 1; i >= 0; --i) {
            if (i == inverse_letter(f.last)) continue;
            stack.push_back({f.acc * alphabet[i], i, f.len + 1});
        }
    }
}

namespace {

// Canonical quantized key of a P^1 point for resolution-based dedup.
uint64_t p1_key(const Vec2 &v, double resolution) {
    double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    Cpx z = v[0] / n, w = v[1] / n;
    Cpx phase;
    if (std::abs(z) >= std::abs(w))
        phase = std::conj(z) / std::abs(z);
    else
        phase = std::conj(w) / std::abs(w);
    z *= phase;
    w *= phase;
    auto q = [&](double x) {
        return static_cast<int64_t>(std::llround(x / resolution));
    };
    uint64_t h = 1469598103934665603ull;
    for (int64_t v64 : {q(z.real()), q(z.imag()), q(w.real()), q(w.imag())}) {
        h ^= static_cast<uint64_t>(v64);
        h *= 1099511628211ull;
    }
    return h;
}

// Jacobi eigenvalue iteration for a symmetric 4x4 matrix; returns the
// eigenvector of the smallest eigenvalue and that eigenvalue.
std::pair<std::array<double, 4>, double> smallest_eigenpair4(
    std::array<std::array<double, 4>, 4> m) {
    std::array<std::array<double, 4>, 4> v{};
    for (int i = 0; i < 4; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off += m[i][j] * m[i][j];
        if (off < 1e-30) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                if (std::abs(m[p][q]) < 1e-300) continue;
                double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (int k = 0; k < 4; ++k) {
                    double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for (int k = 0; k < 4; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }
    int best = 0;
    for (int i = 1; i < 4; ++i)
        if (m[i][i] < m[best][best]) best = i;
    return {{v[0][best], v[1][best], v[2][best], v[3][best]},
            std::max(m[best][best], 0.0)};
}

}  // namespace

std::pair<std::optional<GenCircle>, double> fit_generalized_circle_impl(
    const std::vector<Vec2> &points) {
    std::array<std::array<double, 4>, 4> mtm{};
    for (const auto &p : points) {
        double n = std::sqrt(std::norm(p[0]) + std::norm(p[1]));
        Cpx z = p[0] / n, w = p[1] / n;
        Cpx zw = z * std::conj(w);
        std::array<double, 4> row{std::norm(z), 2.0 * zw.real(), 2.0 * zw.imag(),
                                  std::norm(w)};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) mtm[i][j] += row[i] * row[j];
    }
    auto [vec, val] = smallest_eigenpair4(mtm);
    double residual = std::sqrt(val / std::max<size_t>(points.size(), 1));
    double A = vec[0], C = vec[3];
    Cpx B(vec[1], vec[2]);
    if (std::norm(B) - A * C <= 0.0) return {std::nullopt, residual};
    return {GenCircle(A, B, C, +1), residual};
}

std::pair<GenCircle, double> fit_generalized_circle(
    const std::vector<Vec2> &points) {
    auto [circle, residual] = fit_generalized_circle_impl(points);
    if (!circle)
        throw Error("fit_generalized_circle: degenerate point set");
    return {*circle, residual};
}

GreenbergCloud greenberg_limit_approx(const std::vector<MobiusMap> &gens,
                                      int depth, const GreenbergOptions &opts,
                                      const Tolerances &tol) {
    GreenbergCloud out;
    std::unordered_set<uint64_t> seen;
    visit_reduced_mobius_words(gens, depth, [&](const MobiusMap &w, int len) {
        ++out.words_visited;
        MobiusType type = mobius_classify(w, tol).type;
        if (type != MobiusType::LOXODROMIC &&
            !(opts.include_parabolic && type == MobiusType::PARABOLIC))
            return true;
        auto [f1, f2] = mobius_fixed_points(w, tol);
        for (const auto &f : {f1, f2}) {
            if (static_cast<long>(out.points.size()) >= opts.max_points) break;
            uint64_t key = p1_key(f, opts.dedup_resolution);
            if (seen.insert(key).second) out.points.push_back({f, len});
        }
        return true;
    });
    if (opts.fit_circle && out.points.size() >= 4) {
        std::vector<Vec2> pts;
        pts.reserve(out.points.size());
        for (const auto &p : out.points) pts.push_back(p.point);
        auto [circle, residual] = fit_generalized_circle_impl(pts);
        if (circle)
            out.fit = CircleFit{*circle, residual, residual <= tol.tau_circle};
        else if (!pts.empty())
            out.fit = CircleFit{GenCircle::disk(0.0, 1.0), residual, false};
    }
    return out;
}

// --- elementary certificate -------------------------------------------------

namespace {

struct WordData {
    MobiusMap map;
    MobiusClass cls;
    std::optional<std::pair<Vec2, Vec2>> fix;
};

bool maps_point_to(const MobiusMap &m, const Vec2 &p, const Vec2 &q, double tau) {
    return p1_equal(m.apply(p), q, tau);
}

MobiusMap mobius_two_point_conjugator(const Vec2 &u, const Vec2 &v) {
    // u -> 0, v -> infinity
    Mat2 raw{{u[1], -u[0], v[1], -v[0]}};
    return MobiusMap(raw);
}

MobiusMap mobius_point_to_infinity(const Vec2 &p) {
    // second row kills p; pick a first row keeping the determinant away
    // from zero
    if (std::abs(p[0]) >= std::abs(p[1])) {
        Mat2 raw{{1.0, 0.0, p[1], -p[0]}};
        return MobiusMap(raw);
    }
    Mat2 raw{{0.0, 1.0, p[1], -p[0]}};
    return MobiusMap(raw);
}

// Maps (a, b, c) to (0, infinity, 1).
MobiusMap mobius_three_point_conjugator(const Vec2 &a, const Vec2 &b,
                                        const Vec2 &c) {
    MobiusMap h = mobius_two_point_conjugator(a, b);
    Cpx img = p1_value(h.apply(c));
    if (std::isinf(img.real()) || std::abs(img) < 1e-14)
        throw PreconditionViolation("three_point_conjugator: points collide");
    Cpx s = std::sqrt(1.0 / img);
    return MobiusMap::from_lift_unchecked(Mat2{{s, 0.0, 0.0, 1.0 / s}}) * h;
}

}  // namespace

ElementaryCertificate elementary_certificate(const std::vector<MobiusMap> &gens,
                                             int depth, const Tolerances &tol) {
    ElementaryCertificate out;
    out.depth_used = depth;
    const double tau = 1e-8;

    std::vector<WordData> words;
    const long cap = 20000;
    visit_reduced_mobius_words(gens, depth, [&](const MobiusMap &w, int) {
        if (static_cast<long>(words.size()) >= cap) return false;
        WordData d;
        d.map = w;
        d.cls = mobius_classify(w, tol);
        if (d.cls.type != MobiusType::IDENTITY)
            d.fix = mobius_fixed_points(w, tol);
        words.push_back(std::move(d));
        return true;
    });
    if (words.empty()) {
        out.type = ElementaryType::DIH_INF;  // trivial group
        out.detail = "no nontrivial words";
        return out;
    }

    bool any_loxodromic = std::any_of(words.begin(), words.end(), [](const auto &w) {
        return w.cls.type == MobiusType::LOXODROMIC;
    });

    // Common pointwise fixed points, seeded from the first non-identity word.
    std::vector<Vec2> common;
    for (const auto &w : words) {
        if (!w.fix) continue;
        for (const auto &cand : {w.fix->first, w.fix->second}) {
            bool fixed_by_all = true;
            for (const auto &o : words)
                if (o.cls.type != MobiusType::IDENTITY &&
                    !maps_point_to(o.map, cand, cand, tau)) {
                    fixed_by_all = false;
                    break;
                }
            if (fixed_by_all &&
                std::none_of(common.begin(), common.end(), [&](const Vec2 &c) {
                    return p1_equal(c, cand, tau);
                }))
                common.push_back(cand);
        }
        break;  // candidates can only come from one fixed set
    }

    if (common.size() >= 2) {
        // Everything is diagonal in the (0, infinity) frame.
        out.conjugator = mobius_two_point_conjugator(common[0], common[1]);
        out.type = any_loxodromic ? ElementaryType::MOB_CSTAR
                                  : ElementaryType::DIH_INF;
        out.detail = "two pointwise-common fixed points";
        return out;
    }
    if (common.size() == 1) {
        if (!any_loxodromic) {
            // All multipliers are unit: affine with |a| = 1 after moving the
            // common point to infinity, hence tr^2 in [0,4].
            out.conjugator = mobius_point_to_infinity(common[0]);
            bool verified = true;
            for (const auto &w : words) {
                MobiusMap c = *out.conjugator * w.map * out.conjugator->inverse();
                if (std::abs(c.lift().a[2]) > tau) verified = false;
            }
            if (verified) {
                out.type = ElementaryType::EPA;
                out.detail = "single common fixed point, unit multipliers";
                return out;
            }
        }
        out.type = ElementaryType::UNDETERMINED;
        out.detail = "single common fixed point with a loxodromic element";
        return out;
    }

    // Common invariant two-point set, allowing swaps; candidate pairs come
    // from the first several words with distinct fixed points.
    int candidates_tried = 0;
    for (const auto &w : words) {
        if (!w.fix || candidates_tried >= 50) continue;
        const Vec2 &u = w.fix->first, &v = w.fix->second;
        if (p1_equal(u, v, tau)) continue;
        ++candidates_tried;
        bool invariant = true;
        for (const auto &o : words) {
            if (o.cls.type == MobiusType::IDENTITY) continue;
            bool keeps = maps_point_to(o.map, u, u, tau) &&
                         maps_point_to(o.map, v, v, tau);
            bool swaps = maps_point_to(o.map, u, v, tau) &&
                         maps_point_to(o.map, v, u, tau);
            if (!keeps && !swaps) {
                invariant = false;
                break;
            }
        }
        if (invariant) {
            out.conjugator = mobius_two_point_conjugator(u, v);
            out.type = any_loxodromic ? ElementaryType::MOB_CSTAR
                                      : ElementaryType::DIH_INF;
            out.detail = "invariant two-point set";
            return out;
        }
    }

    // Cr branch: two non-commuting infinite-order elliptics whose fixed-point
    // cross ratio lands on the negative real axis.
    const WordData *e1 = nullptr, *e2 = nullptr;
    for (const auto &w : words) {
        if (w.cls.type != MobiusType::ELLIPTIC ||
            w.cls.rotation.kind != RotationClass::IRRATIONAL)
            continue;
        if (!e1) {
            e1 = &w;
            continue;
        }
        bool same_set =
            (p1_equal(e1->fix->first, w.fix->first, tau) &&
             p1_equal(e1->fix->second, w.fix->second, tau)) ||
            (p1_equal(e1->fix->first, w.fix->second, tau) &&
             p1_equal(e1->fix->second, w.fix->first, tau));
        if (!same_set) {
            e2 = &w;
            break;
        }
    }
    if (e1 && e2) {
        try {
            auto test = cross_ratio_loxodromic_test(*e1->fix, *e2->fix, tol);
            Cpx q = p1_value(test.cr);
            if (!test.guaranteed_loxodromic && !std::isinf(q.real()) &&
                std::abs(q) > tol.tau_axis) {
                // Normal-form frame: fix1 -> {0, inf}, fix2 -> {1, p}, p < 0;
                // then scaling by sqrt(-p) aligns with the Cr normal form.
                MobiusMap h = mobius_three_point_conjugator(
                    e1->fix->first, e1->fix->second, e2->fix->first);
                Cpx p = p1_value(h.apply(e2->fix->second));
                if (!std::isinf(p.real()) && p.real() < 0.0 &&
                    std::abs(p.imag()) <= 1e-6 * (1.0 + std::abs(p))) {
                    double scale = std::sqrt(-p.real());
                    MobiusMap kappa = MobiusMap(
                        Mat2{{Cpx(1.0 / scale), 0.0, 0.0, Cpx(1.0)}});
                    MobiusMap conj = kappa * h;
                    bool verified = true;
                    for (const auto &w : words) {
                        MobiusMap cw = conj * w.map * conj.inverse();
                        if (!cr_membership(cw, 1e-8)) {
                            verified = false;
                            break;
                        }
                    }
                    if (verified) {
                        out.type = ElementaryType::CR;
                        out.conjugator = conj;
                        out.detail = "all words in rotation-group normal form";
                        return out;
                    }
                }
            }
        } catch (const Error &) {
            // degenerate configuration; fall through
        }
    }

    // Two loxodromics with disjoint fixed-point sets.
    const WordData *lox = nullptr;
    for (const auto &w : words) {
        if (w.cls.type != MobiusType::LOXODROMIC) continue;
        if (!lox) {
            lox = &w;
            continue;
        }
        bool disjoint = true;
        for (const auto &p : {lox->fix->first, lox->fix->second})
            for (const auto &q : {w.fix->first, w.fix->second})
                if (p1_equal(p, q, tau)) disjoint = false;
        if (disjoint) {
            out.type = ElementaryType::NON_ELEMENTARY;
            out.detail = "loxodromic pair with disjoint fixed sets";
            return out;
        }
    }

    out.type = ElementaryType::UNDETERMINED;
    out.detail = "no certificate at this depth";
    return out;
}

}  // namespace kleinian
