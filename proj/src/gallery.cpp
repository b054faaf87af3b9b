#include "kleinian/gallery.hpp"

#include <algorithm>
#include <cmath>

namespace kleinian {

const char *to_string(SolFamily f) {
    switch (f) {
        case SolFamily::SOL4_0: return "SOL4_0";
        case SolFamily::SOL4_1: return "SOL4_1";
        case SolFamily::SOL4_1_PRIME: return "SOL4_1_PRIME";
        case SolFamily::NONE: return "NONE";
    }
    return "?";
}

Mat3 SolMembership::rebuild() const {
    Mat3 m = Mat3::identity();
    switch (family) {
        case SolFamily::SOL4_0:
            m(0, 0) = lambda;
            m(1, 1) = 1.0 / std::norm(lambda);
            m(0, 2) = a;
            m(1, 2) = b;
            return m;
        case SolFamily::SOL4_1:
            m(0, 0) = eps;
            m(0, 1) = a;
            m(0, 2) = b;
            m(1, 1) = alpha;
            m(1, 2) = c;
            return m;
        case SolFamily::SOL4_1_PRIME:
            m(0, 0) = 1.0;
            m(0, 1) = a;
            m(0, 2) = b + Cpx(0.0, 1.0) * std::log(alpha);
            m(1, 1) = alpha;
            m(1, 2) = c;
            return m;
        case SolFamily::NONE:
            throw Error("SolMembership::rebuild on NONE");
    }
    return m;
}

SolMembership sol_membership(const ProjTransform &g, double tau,
                             SolFamily preferred) {
    SolMembership out;
    const Mat3 &l = g.lift();
    double scale = std::max(1.0, norm_inf(l));
    // All three families are upper triangular in the affine chart with the
    // bottom row (0, 0, *); normalize the lift so that entry is 1.
    if (std::abs(l(2, 0)) > tau * scale || std::abs(l(2, 1)) > tau * scale ||
        std::abs(l(2, 2)) < 1e-12 * scale)
        return out;
    Mat3 m = (Cpx(1.0) / l(2, 2)) * l;
    if (std::abs(m(1, 0)) > tau) return out;

    Cpx e00 = m(0, 0), e01 = m(0, 1), e02 = m(0, 2);
    Cpx e11 = m(1, 1), e12 = m(1, 2);

    // Sol_0^4: [[lambda, 0, a], [0, |lambda|^{-2}, b], [0,0,1]], b real.
    auto try_sol0 = [&]() {
        if (std::abs(e01) <= tau &&
            std::abs(e11 - 1.0 / std::norm(e00)) <=
                tau * std::max(1.0, std::abs(e11)) &&
            std::abs(e11.imag()) <= tau && std::abs(e12.imag()) <= tau) {
            out.family = SolFamily::SOL4_0;
            out.lambda = e00;
            out.a = e02;
            out.b = e12;
            return true;
        }
        return false;
    };
    // Sol_1^4: [[eps, a, b], [0, alpha, c], [0,0,1]], all real, alpha > 0,
    // eps = +-1.
    bool real_frame = std::abs(e01.imag()) <= tau && std::abs(e11.imag()) <= tau &&
                      std::abs(e12.imag()) <= tau && e11.real() > 0.0;
    bool eps_ok = std::abs(e00 - Cpx(1.0)) <= tau || std::abs(e00 + Cpx(1.0)) <= tau;
    auto try_sol1 = [&]() {
        if (real_frame && eps_ok && std::abs(e02.imag()) <= tau) {
            out.family = SolFamily::SOL4_1;
            out.eps = e00.real() > 0.0 ? 1.0 : -1.0;
            out.alpha = e11.real();
            out.a = e01.real();
            out.b = e02.real();
            out.c = e12.real();
            return true;
        }
        return false;
    };
    // Sol_1'^4: like Sol_1^4 with eps = 1 and Im(b) = log(alpha).
    auto try_sol1p = [&]() {
        if (real_frame && std::abs(e00 - Cpx(1.0)) <= tau && e11.real() > 0.0 &&
            std::abs(e02.imag() - std::log(e11.real())) <= tau) {
            out.family = SolFamily::SOL4_1_PRIME;
            out.eps = 1.0;
            out.alpha = e11.real();
            out.a = e01.real();
            out.b = e02.real();
            out.c = e12.real();
            return true;
        }
        return false;
    };
    if (preferred == SolFamily::SOL4_1 && try_sol1()) return out;
    if (preferred == SolFamily::SOL4_1_PRIME && try_sol1p()) return out;
    if (try_sol0()) return out;
    if (try_sol1()) return out;
    try_sol1p();
    return out;
}

// --- Gamma_a ------------------------------------------------------------------

GroupSpec make_gamma_a(Cpx a) {
    if (std::abs(a) == 0.0)
        throw PreconditionViolation("make_gamma_a: a must be nonzero");
    GroupSpec spec;
    spec.name = "gamma_a";
    Mat3 ma = Mat3::diagonal(a, a, 1.0 / (a * a));
    Mat3 b{};
    b(0, 2) = 1.0;
    b(1, 0) = 1.0;
    b(2, 1) = 1.0;
    spec.generators.push_back({"M", ProjTransform(ma)});
    spec.generators.push_back({"B", ProjTransform::from_lift_unchecked(b)});
    return spec;
}

GammaANormalForm gamma_a_normal_form(const Word &word) {
    // State: B^k diag(a^{v1}, a^{v2}, a^{v3}). Right-multiplying by M adds
    // (1,1,-2); right-multiplying by B rotates v and bumps k, via
    // B^{-1} diag(d1,d2,d3) B = diag(d2,d3,d1).
    int k = 0;
    std::array<long, 3> v{0, 0, 0};
    for (auto [idx, sign] : word.letters) {
        if (idx == 0) {  // M^sign
            v[0] += sign;
            v[1] += sign;
            v[2] -= 2 * sign;
        } else if (idx == 1) {
            if (sign > 0) {
                k = (k + 1) % 3;
                v = {v[1], v[2], v[0]};
            } else {
                k = (k + 2) % 3;
                v = {v[2], v[0], v[1]};
            }
        } else {
            throw PreconditionViolation("gamma_a_normal_form: not a 2-letter word");
        }
    }
    GammaANormalForm out;
    out.k = k;
    out.diag_powers = v;
    // Solve n1 - 2n2 + n3 = v1, n1 + n2 - 2n3 = v2 with n3 = 0; solvable in
    // the integers exactly on the lattice the rewriting produces.
    long diff = v[1] - v[0];
    if (diff % 3 != 0)
        throw Error("gamma_a_normal_form: exponent vector off the lattice");
    long n2 = diff / 3;
    long n1 = v[1] - n2;
    out.exponents = {n1, n2, 0};
    return out;
}

Mat3 GammaANormalForm::rebuild(Cpx a) const {
    Mat3 b{};
    b(0, 2) = 1.0;
    b(1, 0) = 1.0;
    b(2, 1) = 1.0;
    Mat3 bk = Mat3::identity();
    for (int i = 0; i < k; ++i) bk = bk * b;
    auto apow = [&](long e) { return std::pow(a, Cpx(double(e))); };
    return bk * Mat3::diagonal(apow(diag_powers[0]), apow(diag_powers[1]),
                               apow(diag_powers[2]));
}

// --- suspension ---------------------------------------------------------------

double SuspensionPrediction::distance(const ProjPoint &x) const {
    if (empty) return std::numeric_limits<double>::infinity();
    const Vec3 &v = x.coords();  // canonical, unit norm
    // Line joining [p0; p1; 0] and e3 has dual (p1, -p0, 0); minimize the
    // squared sine and take one asin at the end.
    double best_s2 = std::numeric_limits<double>::infinity();
    for (const auto &p : control_limit_samples) {
        double np2 = std::norm(p[0]) + std::norm(p[1]);
        double s2 = std::norm(v[0] * p[1] - v[1] * p[0]) / np2;
        if (s2 < best_s2) best_s2 = s2;
    }
    if (include_control_line) best_s2 = std::min(best_s2, std::norm(v[2]));
    return std::asin(std::clamp(std::sqrt(best_s2), 0.0, 1.0));
}

Suspension make_suspension(const std::vector<MobiusMap> &psl2_gens,
                           const std::vector<Cpx> &scalar_gens,
                           int control_limit_depth, const Tolerances &tol) {
    Suspension out;
    out.group.name = "suspension";
    int idx = 0;
    for (const auto &h : psl2_gens) {
        Mat3 m = Mat3::identity();
        m(0, 0) = h.lift().a[0];
        m(0, 1) = h.lift().a[1];
        m(1, 0) = h.lift().a[2];
        m(1, 1) = h.lift().a[3];
        out.group.generators.push_back(
            {"h" + std::to_string(idx++), ProjTransform::from_lift_unchecked(m)});
    }
    int sidx = 0;
    for (Cpx g : scalar_gens) {
        if (std::abs(g) == 0.0)
            throw PreconditionViolation("make_suspension: zero scalar");
        Mat3 m = Mat3::diagonal(g, g, 1.0 / (g * g));
        out.group.generators.push_back(
            {"s" + std::to_string(sidx++), ProjTransform(m)});
        RotationKind rk = rotation_kind(g, tol.q_max, tol);
        if (rk.kind != RotationClass::TORSION) out.scalar_group_infinite = true;
    }
    out.group.fixed_point = ProjPoint::e3();
    out.group.invariant_line = ProjLine(Vec3{0.0, 0.0, 1.0});

    GreenbergCloud cloud = greenberg_limit_approx(psl2_gens, control_limit_depth,
                                                  {}, tol);
    for (const auto &p : cloud.points)
        out.prediction.control_limit_samples.push_back(p.point);
    out.prediction.include_control_line = out.scalar_group_infinite;
    out.prediction.empty = out.prediction.control_limit_samples.empty() &&
                           !out.prediction.include_control_line;
    return out;
}

// --- kissing Schottky ----------------------------------------------------------

KissingSchottky make_kissing_schottky(double theta, Cpx eps2, Cpx eps3,
                                      const Tolerances &tol) {
    KissingSchottky out;
    const double r10 = std::sqrt(10.0);
    Cpx phase = std::polar(1.0, -M_PI * (1.0 + 4.0 * theta) / 6.0);
    out.eps1 = -std::cbrt(3.0 + r10) * phase;
    Cpx e1 = out.eps1;

    Mat3 m1{};
    m1(0, 0) = Cpx(-1.0, -1.0);
    m1(0, 1) = Cpx(0.0, 1.0);
    m1(1, 0) = Cpx(0.0, -1.0);
    m1(1, 1) = Cpx(-1.0, 1.0);
    m1(2, 2) = 1.0;
    Mat3 m2{};
    m2(0, 0) = Cpx(1.0, -1.0);
    m2(0, 1) = Cpx(0.0, -1.0);
    m2(1, 0) = Cpx(0.0, 1.0);
    m2(1, 1) = Cpx(1.0, 1.0);
    m2(2, 2) = 1.0;
    Mat3 me{};
    me(0, 0) = Cpx(0.0, 3.0) * e1;
    me(0, 1) = Cpx(0.0, 10.0) * e1;
    me(1, 0) = Cpx(0.0, 1.0) * e1;
    me(1, 1) = Cpx(0.0, 3.0) * e1;
    me(2, 0) = eps2;
    me(2, 1) = eps3;
    me(2, 2) = 1.0 / (e1 * e1);

    out.group.name = "gamma_eps";
    out.group.generators.push_back({"M1", ProjTransform(m1)});
    out.group.generators.push_back({"M2", ProjTransform(m2)});
    out.group.generators.push_back({"Me", ProjTransform(me)});
    out.group.fixed_point = ProjPoint::e3();
    out.group.invariant_line = ProjLine(Vec3{0.0, 0.0, 1.0});

    // Predicted spectrum: alpha_-, alpha_+, e^{2 pi i theta} alpha_-.
    Cpx alpha_minus = Cpx(0.0, 1.0) * e1 * (3.0 - r10);
    Cpx alpha_plus = Cpx(0.0, 1.0) * e1 * (3.0 + r10);
    Cpx rot = std::polar(1.0, 2.0 * M_PI * theta);
    out.predicted_eigenvalues = {alpha_minus, alpha_plus, rot * alpha_minus};

    auto coeffs = char_poly(out.group.generators[2].transform);
    double resid = 0.0;
    for (Cpx lam :
         {1.0 / (e1 * e1), Cpx(0.0, 1.0) * e1 * (3.0 - r10),
          Cpx(0.0, 1.0) * e1 * (3.0 + r10)})
        resid = std::max(resid, std::abs(char_poly_eval(coeffs, lam)));
    out.char_poly_residual = resid;

    // Eigenvectors p1 = (-sqrt10, 1, k-), p2 = (sqrt10, 1, k+), third e3;
    // the k's solve the last row of (M - lambda) p = 0.
    Cpx third = 1.0 / (e1 * e1);
    out.k_minus = (r10 * eps2 - eps3) / (third - alpha_minus);
    out.k_plus = (-r10 * eps2 - eps3) / (third - alpha_plus);
    out.p1 = ProjPoint(Vec3{-r10, 1.0, out.k_minus});
    out.p2 = ProjPoint(Vec3{r10, 1.0, out.k_plus});
    out.degenerate_affine_case =
        std::abs(out.k_plus) + std::abs(out.k_minus) <= 1e-12;

    RotationKind rk = rotation_kind(rot, tol.q_max, tol);
    out.rational_theta_warning = rk.kind == RotationClass::TORSION;

    // The six-disk pairing on the control line.
    auto disk = [](double x, double y) {
        return GenCircle::disk(Cpx(x, y), 1.0);
    };
    out.pairing.pairs.push_back({"M1", disk(1.0, 1.0), disk(1.0, -1.0)});
    out.pairing.pairs.push_back({"M2", disk(-1.0, 1.0), disk(-1.0, -1.0)});
    out.pairing.pairs.push_back({"Me", disk(-3.0, 0.0), disk(3.0, 0.0)});
    return out;
}

// --- Inoue families -------------------------------------------------------------

InoueSM make_inoue_sm(const std::array<std::array<long, 3>, 3> &M,
                      const Tolerances &tol) {
    Mat3 mi;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mi(i, j) = double(M[i][j]);
    if (std::abs(mi.det() - Cpx(1.0)) > 1e-9)
        throw SpectrumMismatch("make_inoue_sm: matrix must have determinant 1");
    EigenData e = eigen_decompose(mi, tol);
    // Expect one real eigenvalue alpha > 1 and a complex-conjugate pair.
    int real_idx = -1;
    for (int j = 0; j < 3; ++j)
        if (std::abs(e.eigenvalues[j].imag()) <= 1e-9 &&
            e.eigenvalues[j].real() > 1.0)
            real_idx = j;
    if (real_idx < 0 || e.shape != JordanShape::DIAG)
        throw SpectrumMismatch(
            "make_inoue_sm: need a real eigenvalue > 1 and a complex pair");
    int ci = -1;
    for (int j = 0; j < 3; ++j)
        if (j != real_idx && std::abs(e.eigenvalues[j].imag()) > 1e-9) ci = j;
    if (ci < 0)
        throw SpectrumMismatch("make_inoue_sm: spectrum is entirely real");

    InoueSM out;
    out.alpha = e.eigenvalues[real_idx].real();
    Cpx beta = e.eigenvalues[ci];
    if (beta.imag() < 0.0) beta = std::conj(beta);  // fix the pair member
    out.beta = beta;

    // Real eigenvector, unit norm, first nonzero coordinate positive.
    Vec3 rv = e.basis_column(real_idx);
    {
        // Rotate the phase away (the vector is real up to phase).
        int big = 0;
        for (int j = 1; j < 3; ++j)
            if (std::abs(rv[j]) > std::abs(rv[big])) big = j;
        Cpx ph = std::conj(rv[big]) / std::abs(rv[big]);
        for (auto &x : rv) x *= ph;
        double n = norm(rv);
        for (auto &x : rv) x /= n;
        for (int j = 0; j < 3; ++j)
            if (std::abs(rv[j]) > 1e-12) {
                if (rv[j].real() < 0.0)
                    for (auto &x : rv) x = -x;
                break;
            }
        for (int j = 0; j < 3; ++j) out.real_eigenvector[j] = rv[j].real();
    }
    // Complex eigenvector for beta; phase pinned by the first nonzero
    // coordinate being positive real.
    Vec3 cv{};
    for (int j = 0; j < 3; ++j)
        if (j != real_idx && std::abs(std::conj(e.eigenvalues[j]) - beta) < 1e-9)
            cv = e.basis_column(j);
    // basis column for beta itself (not its conjugate)
    for (int j = 0; j < 3; ++j)
        if (std::abs(e.eigenvalues[j] - beta) < 1e-9) cv = e.basis_column(j);
    {
        int first = 0;
        while (first < 3 && std::abs(cv[first]) <= 1e-12) ++first;
        Cpx ph = std::conj(cv[first]) / std::abs(cv[first]);
        double n = norm(cv);
        for (auto &x : cv) x *= ph / n;
        for (int j = 0; j < 3; ++j) out.complex_eigenvector[j] = cv[j];
    }

    // Group generators as maps of [z; w; 1]: gamma0 = (beta z, alpha w),
    // gamma_i = (z + b_i, w + a_i).
    out.group.name = "inoue_sm";
    Mat3 g0 = Mat3::diagonal(out.beta, out.alpha, 1.0);
    out.group.generators.push_back({"g0", ProjTransform(g0)});
    for (int i = 0; i < 3; ++i) {
        Mat3 gi = Mat3::identity();
        gi(0, 2) = out.complex_eigenvector[i];
        gi(1, 2) = out.real_eigenvector[i];
        out.group.generators.push_back(
            {"g" + std::to_string(i + 1), ProjTransform(gi)});
    }
    out.group.fixed_point = ProjPoint::e1();
    out.group.invariant_line = ProjLine(Vec3{1.0, 0.0, 0.0});

    for (const auto &g : out.group.generators)
        out.memberships.push_back(sol_membership(g.transform));
    return out;
}

InoueSN make_inoue_sn(const std::array<std::array<long, 2>, 2> &N, long r,
                      Cpx t, Cpx c1, Cpx c2, int sign, const Tolerances &tol) {
    (void)tol;
    if (r == 0) throw PreconditionViolation("make_inoue_sn: r must be nonzero");
    double n00 = double(N[0][0]), n01 = double(N[0][1]);
    double n10 = double(N[1][0]), n11 = double(N[1][1]);
    double det = n00 * n11 - n01 * n10;
    double tr = n00 + n11;
    double disc = tr * tr - 4.0 * det;
    if (disc <= 0.0)
        throw SpectrumMismatch("make_inoue_sn: eigenvalues are not real");
    double sq = std::sqrt(disc);
    double alpha = (tr + sq) / 2.0;
    double other = (tr - sq) / 2.0;
    if (std::abs(alpha) < std::abs(other)) std::swap(alpha, other);
    if (alpha <= 1.0)
        throw SpectrumMismatch("make_inoue_sn: need a real eigenvalue > 1");
    double expected = sign > 0 ? 1.0 / alpha : -1.0 / alpha;
    if (std::abs(other - expected) > 1e-9 * std::max(1.0, std::abs(alpha)))
        throw SpectrumMismatch(sign > 0
                                   ? "make_inoue_sn: spectrum is not (alpha, 1/alpha)"
                                   : "make_inoue_sn: spectrum is not (alpha, -1/alpha)");

    auto eigvec = [&](double lam) -> std::array<double, 2> {
        // (N - lam) v = 0 for the row with the larger residual entries.
        double r0 = std::hypot(n00 - lam, n01);
        double r1 = std::hypot(n10, n11 - lam);
        std::array<double, 2> v{};
        if (r0 >= r1)
            v = {-n01, n00 - lam};
        else
            v = {-(n11 - lam), n10};
        double n = std::hypot(v[0], v[1]);
        v = {v[0] / n, v[1] / n};
        if ((std::abs(v[0]) > 1e-12 ? v[0] : v[1]) < 0.0) v = {-v[0], -v[1]};
        return v;
    };
    InoueSN out;
    out.alpha = alpha;
    out.vec_a = eigvec(alpha);
    out.vec_b = eigvec(other);
    out.gamma3_translation =
        (out.vec_b[0] * out.vec_a[1] - out.vec_b[1] * out.vec_a[0]) / double(r);

    out.group.name = sign > 0 ? "inoue_sn_plus" : "inoue_sn_minus";
    // Maps of [z; w; 1]: gamma0 = (+-z + t, alpha w); gamma_i =
    // (z + b_i w + c_i, w + a_i); gamma3 = (z + r^{-1}(b1 a2 - b2 a1), w).
    Mat3 g0 = Mat3::identity();
    g0(0, 0) = sign > 0 ? 1.0 : -1.0;
    g0(0, 2) = sign > 0 ? t : Cpx(0.0);
    g0(1, 1) = alpha;
    out.group.generators.push_back({"g0", ProjTransform(g0)});
    Cpx cs[2] = {c1, c2};
    for (int i = 0; i < 2; ++i) {
        Mat3 gi = Mat3::identity();
        gi(0, 1) = out.vec_b[i];
        gi(0, 2) = cs[i];
        gi(1, 2) = out.vec_a[i];
        out.group.generators.push_back(
            {"g" + std::to_string(i + 1), ProjTransform(gi)});
    }
    Mat3 g3 = Mat3::identity();
    g3(0, 2) = out.gamma3_translation;
    out.group.generators.push_back({"g3", ProjTransform(g3)});
    out.group.fixed_point = ProjPoint::e1();
    out.group.invariant_line = ProjLine(Vec3{1.0, 0.0, 0.0});

    for (const auto &g : out.group.generators)
        out.memberships.push_back(
            sol_membership(g.transform, 1e-9, SolFamily::SOL4_1));
    return out;
}

KernelFormReport kernel_form_check(const GroupSpec &spec, int max_len,
                                   const Tolerances &tol) {
    ControlProjection ctrl = control_projection(spec, max_len, tol);
    KernelFormReport out;
    out.kernel_trivial = ctrl.kernel.empty();
    for (const auto &kw : ctrl.kernel) {
        out.entries.push_back({kw.word, kw.unipotent_shear_form, kw.tau});
        if (!kw.unipotent_shear_form) out.all_forms_ok = false;
    }
    return out;
}

}  // namespace kleinian
