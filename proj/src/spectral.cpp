#include "kleinian/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kleinian {

Mat3 EigenData::jordan_matrix() const {
    Mat3 j = Mat3::diagonal(eigenvalues[0], eigenvalues[1], eigenvalues[2]);
    if (shape == JordanShape::BLOCK2_PLUS_1) {
        j(block_start, block_start + 1) = 1.0;
    } else if (shape == JordanShape::BLOCK3) {
        j(0, 1) = 1.0;
        j(1, 2) = 1.0;
    }
    return j;
}

Vec3 EigenData::basis_column(int j) const {
    return {basis(0, j), basis(1, j), basis(2, j)};
}

std::array<int, 3> EigenData::cluster_sizes() const {
    if (shape == JordanShape::BLOCK3) return {3, 0, 0};
    if (shape == JordanShape::BLOCK2_PLUS_1) {
        // The paired slots share one eigenvalue; the remaining slot may or
        // may not coincide with it (it does for the unipotent 2+1 case).
        int other = block_start == 0 ? 2 : 0;
        if (std::abs(eigenvalues[other] - eigenvalues[block_start]) == 0.0)
            return {3, 0, 0};
        return {2, 1, 0};
    }
    bool e01 = eigenvalues[0] == eigenvalues[1];
    bool e12 = eigenvalues[1] == eigenvalues[2];
    if (e01 && e12) return {3, 0, 0};
    if (e01 || e12) return {2, 1, 0};
    return {1, 1, 1};
}

std::array<Cpx, 3> char_poly(const ProjTransform &g) {
    const Mat3 &m = g.lift();
    Cpx tr = m.tr();
    Cpx m01 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Cpx m02 = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    Cpx m12 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    Cpx det = m.det();
    // p(x) = x^3 - tr x^2 + (sum of principal 2x2 minors) x - det
    return {-det, m01 + m02 + m12, -tr};
}

Cpx char_poly_eval(const std::array<Cpx, 3> &c, Cpx x) {
    return ((x + c[2]) * x + c[1]) * x + c[0];
}

std::array<Cpx, 3> cubic_roots(const std::array<Cpx, 3> &c) {
    // Depressed form: x = t - c2/3, t^3 + p t + q = 0.
    Cpx c0 = c[0], c1 = c[1], c2 = c[2];
    Cpx shift = -c2 / 3.0;
    Cpx p = c1 - c2 * c2 / 3.0;
    Cpx q = c0 - c1 * c2 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0;

    std::array<Cpx, 3> roots;
    if (std::abs(p) == 0.0 && std::abs(q) == 0.0) {
        roots = {shift, shift, shift};
    } else {
        Cpx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        Cpx u3a = -q / 2.0 + disc;
        Cpx u3b = -q / 2.0 - disc;
        Cpx u3 = std::abs(u3a) >= std::abs(u3b) ? u3a : u3b;  // avoid cancellation
        Cpx u = principal_root(u3, 3);
        const Cpx omega(-0.5, std::sqrt(3.0) / 2.0);
        for (int k = 0; k < 3; ++k) {
            Cpx uk = u;
            if (k == 1) uk = u * omega;
            if (k == 2) uk = u * std::conj(omega);
            Cpx t = std::abs(uk) > 0.0 ? uk - p / (3.0 * uk) : Cpx(0.0);
            roots[k] = t + shift;
        }
    }
    // One Newton step per root for cross-platform reproducibility.
    for (auto &r : roots) {
        Cpx f = char_poly_eval(c, r);
        Cpx df = (3.0 * r + 2.0 * c[2]) * r + c[1];
        if (std::abs(df) > 1e-30) {
            Cpx step = f / df;
            if (std::abs(step) < 0.5 * (1.0 + std::abs(r))) r -= step;
        }
    }
    return roots;
}

namespace {

// Null vector of a matrix of numerical rank 2: the largest cross product of
// two rows is bilinearly orthogonal to every row.
Vec3 rank2_null_vector(const Mat3 &m) {
    Vec3 rows[3] = {{m(0, 0), m(0, 1), m(0, 2)},
                    {m(1, 0), m(1, 1), m(1, 2)},
                    {m(2, 0), m(2, 1), m(2, 2)}};
    Vec3 best{0.0, 0.0, 0.0};
    double bn = -1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Vec3 c = cross(rows[i], rows[j]);
            double n = norm(c);
            if (n > bn) {
                bn = n;
                best = c;
            }
        }
    double n = norm(best);
    if (!(n > 0.0)) throw Error("rank2_null_vector: zero cross products");
    return {best[0] / n, best[1] / n, best[2] / n};
}

// Two independent null vectors of a rank-1 matrix: everything orthogonal to
// its dominant row.
std::pair<Vec3, Vec3> rank1_null_vectors(const Mat3 &m) {
    Vec3 rows[3] = {{m(0, 0), m(0, 1), m(0, 2)},
                    {m(1, 0), m(1, 1), m(1, 2)},
                    {m(2, 0), m(2, 1), m(2, 2)}};
    int bi = 0;
    double bn = -1.0;
    for (int i = 0; i < 3; ++i) {
        double n = norm(rows[i]);
        if (n > bn) {
            bn = n;
            bi = i;
        }
    }
    Vec3 r = rows[bi];
    Vec3 cands[3] = {cross(r, Vec3{1.0, 0.0, 0.0}), cross(r, Vec3{0.0, 1.0, 0.0}),
                     cross(r, Vec3{0.0, 0.0, 1.0})};
    std::sort(cands, cands + 3,
              [](const Vec3 &a, const Vec3 &b) { return norm(a) > norm(b); });
    Vec3 n1 = cands[0];
    double nn1 = norm(n1);
    n1 = {n1[0] / nn1, n1[1] / nn1, n1[2] / nn1};
    // Orthogonalize the runner-up against the first for a clean pair.
    Vec3 n2 = cands[1];
    Cpx pr = hdot(n1, n2);
    n2 = {n2[0] - pr * n1[0], n2[1] - pr * n1[1], n2[2] - pr * n1[2]};
    double nn2 = norm(n2);
    if (!(nn2 > 0.0)) throw Error("rank1_null_vectors: degenerate null space");
    n2 = {n2[0] / nn2, n2[1] / nn2, n2[2] / nn2};
    return {n1, n2};
}

// Singular-value-style numerical rank via pivoted elimination.
int numerical_rank(Mat3 m, double tau_abs) {
    int rank = 0;
    std::array<int, 3> cols{0, 1, 2};
    for (int step = 0; step < 3; ++step) {
        int pr = -1, pc = -1;
        double best = tau_abs;
        for (int i = step; i < 3; ++i)
            for (int j = step; j < 3; ++j) {
                double v = std::abs(m(i, cols[j]));
                if (v > best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        ++rank;
        if (pr != step)
            for (int j = 0; j < 3; ++j) std::swap(m(step, j), m(pr, j));
        std::swap(cols[step], cols[pc]);
        for (int i = step + 1; i < 3; ++i) {
            Cpx f = m(i, cols[step]) / m(step, cols[step]);
            for (int j = 0; j < 3; ++j) m(i, cols[j]) -= f * m(step, cols[j]);
        }
    }
    return rank;
}

// Least-squares solve of (3x3) m * x = b via normal equations on the
// adjugate-regularized system; adequate for the consistent systems that
// generalized-eigenvector extraction produces.
Vec3 solve_ls(const Mat3 &m, const Vec3 &b) {
    // Normal equations: (m^H m + eps I) x = m^H b.
    Mat3 mh;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mh(i, j) = std::conj(m(j, i));
    Mat3 a = mh * m;
    double eps = 1e-14 * (1.0 + norm_inf(a));
    for (int i = 0; i < 3; ++i) a(i, i) += eps;
    Vec3 rhs = mh * b;
    // Gaussian elimination with partial pivoting.
    Mat3 work = a;
    Vec3 x = rhs;
    int perm[3] = {0, 1, 2};
    for (int k = 0; k < 3; ++k) {
        int piv = k;
        for (int i = k + 1; i < 3; ++i)
            if (std::abs(work(i, k)) > std::abs(work(piv, k))) piv = i;
        if (piv != k) {
            for (int j = 0; j < 3; ++j) std::swap(work(k, j), work(piv, j));
            std::swap(x[k], x[piv]);
            std::swap(perm[k], perm[piv]);
        }
        for (int i = k + 1; i < 3; ++i) {
            Cpx f = work(i, k) / work(k, k);
            for (int j = k; j < 3; ++j) work(i, j) -= f * work(k, j);
            x[i] -= f * x[k];
        }
    }
    for (int k = 2; k >= 0; --k) {
        for (int j = k + 1; j < 3; ++j) x[k] -= work(k, j) * x[j];
        x[k] /= work(k, k);
    }
    return x;
}

Mat3 shifted(const Mat3 &m, Cpx lambda) {
    Mat3 r = m;
    r(0, 0) -= lambda;
    r(1, 1) -= lambda;
    r(2, 2) -= lambda;
    return r;
}

double cond_inf(const Mat3 &p) {
    Cpx d = p.det();
    if (std::abs(d) < 1e-300) return std::numeric_limits<double>::infinity();
    Mat3 inv = (Cpx(1.0) / d) * p.adjugate();
    return norm_inf(p) * norm_inf(inv);
}

struct SortedRoots {
    std::array<Cpx, 3> lambda;
    std::array<int, 3> cluster_id;  // increasing along the sorted order
    int n_clusters;
};

void sort_roots(std::array<Cpx, 3> &roots) {
    std::sort(roots.begin(), roots.end(), [](Cpx a, Cpx b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma < mb;
        return std::arg(a) < std::arg(b);
    });
}

// A k-fold root splits into a cluster of diameter ~ eps^(1/k) under the
// closed-form solver, so clustering needs a cbrt(eps)-scale net; genuinely
// distinct eigenvalues closer than that are disambiguated downstream by the
// rank test and the reconstruction residual.
SortedRoots sort_and_cluster(std::array<Cpx, 3> roots,
                             const std::array<Cpx, 3> &coeffs, double tau_abs,
                             double scale) {
    tau_abs = std::max(tau_abs, 6e-5 * scale);
    // Pairwise clustering (the modulus sort can interleave a split multiple
    // root with a distinct root of equal modulus, so adjacency is not enough).
    bool c01 = std::abs(roots[0] - roots[1]) <= tau_abs;
    bool c02 = std::abs(roots[0] - roots[2]) <= tau_abs;
    bool c12 = std::abs(roots[1] - roots[2]) <= tau_abs;

    SortedRoots out;
    if ((c01 && c02) || (c01 && c12) || (c02 && c12)) {
        Cpx mu = -coeffs[2] / 3.0;  // triple root sits exactly at -c2/3
        out.lambda = {mu, mu, mu};
        out.cluster_id = {0, 0, 0};
        out.n_clusters = 1;
        return out;
    }
    if (c01 || c02 || c12) {
        Cpx mean, lone;
        if (c01) {
            mean = (roots[0] + roots[1]) / 2.0;
            lone = roots[2];
        } else if (c02) {
            mean = (roots[0] + roots[2]) / 2.0;
            lone = roots[1];
        } else {
            mean = (roots[1] + roots[2]) / 2.0;
            lone = roots[0];
        }
        // A double root of p is a simple root of p': solve
        // 3 x^2 + 2 c2 x + c1 and take the branch nearest the cluster mean.
        Cpx b = 2.0 * coeffs[2], c = coeffs[1];
        Cpx disc = std::sqrt(b * b - 12.0 * c);
        Cpx q = std::abs(-b + disc) >= std::abs(-b - disc) ? (-b + disc)
                                                           : (-b - disc);
        Cpx r1 = q / 6.0;
        Cpx r2 = std::abs(q) > 0.0 ? 2.0 * c / q : r1;
        Cpx mu = std::abs(r1 - mean) <= std::abs(r2 - mean) ? r1 : r2;
        if (std::abs(mu) > 1e-150) lone = -coeffs[0] / (mu * mu);
        // Block-granular order: the cluster's slots stay adjacent, clusters
        // ordered by (modulus, argument).
        auto before = [](Cpx a, Cpx bb) {
            double ma = std::abs(a), mb = std::abs(bb);
            if (ma != mb) return ma < mb;
            return std::arg(a) < std::arg(bb);
        };
        if (before(mu, lone)) {
            out.lambda = {mu, mu, lone};
            out.cluster_id = {0, 0, 1};
        } else {
            out.lambda = {lone, mu, mu};
            out.cluster_id = {0, 1, 1};
        }
        out.n_clusters = 2;
        return out;
    }
    sort_roots(roots);
    out.lambda = roots;
    out.cluster_id = {0, 1, 2};
    out.n_clusters = 3;
    return out;
}

}  // namespace

EigenData eigen_decompose(const ProjTransform &g, const Tolerances &tol) {
    return eigen_decompose(g.lift(), tol);
}

EigenData eigen_decompose(const Mat3 &m, const Tolerances &tol) {
    double scale = std::max(norm_inf(m), 1.0);
    Cpx tr = m.tr();
    Cpx m01 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Cpx m02 = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    Cpx m12 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    std::array<Cpx, 3> coeffs{-m.det(), m01 + m02 + m12, -tr};
    auto sorted =
        sort_and_cluster(cubic_roots(coeffs), coeffs, tol.tau_eig * scale, scale);
    double tau_rank_abs = tol.tau_rank * scale;

    EigenData out;
    out.eigenvalues = sorted.lambda;

    auto set_col = [&](int j, const Vec3 &v) {
        out.basis(0, j) = v[0];
        out.basis(1, j) = v[1];
        out.basis(2, j) = v[2];
    };

    if (sorted.n_clusters == 3) {
        out.shape = JordanShape::DIAG;
        for (int j = 0; j < 3; ++j)
            set_col(j, rank2_null_vector(shifted(m, sorted.lambda[j])));
    } else if (sorted.n_clusters == 2) {
        // Locate the doubled cluster; it occupies adjacent sorted slots.
        int dbl_start = sorted.cluster_id[0] == sorted.cluster_id[1] ? 0 : 1;
        Cpx ld = sorted.lambda[dbl_start];
        int simple = dbl_start == 0 ? 2 : 0;
        Cpx ls = sorted.lambda[simple];
        Mat3 shifted_d = shifted(m, ld);
        int rank = numerical_rank(shifted_d, tau_rank_abs);
        if (rank <= 1) {
            out.shape = JordanShape::DIAG;
            auto [n1, n2] = rank1_null_vectors(shifted_d);
            set_col(dbl_start, n1);
            set_col(dbl_start + 1, n2);
            set_col(simple, rank2_null_vector(shifted(m, ls)));
        } else {
            out.shape = JordanShape::BLOCK2_PLUS_1;
            out.block_start = dbl_start;
            // Generalized vector first, then re-derive the eigenvector from
            // it so (A - ld) w = v holds on the nose.
            Vec3 v0 = rank2_null_vector(shifted_d);
            Vec3 w = solve_ls(shifted_d, v0);
            Vec3 v = shifted_d * w;
            double nv = norm(v);
            if (nv < 1e-13) throw Error("eigen_decompose: lost Jordan chain");
            v = {v[0] / nv, v[1] / nv, v[2] / nv};
            w = {w[0] / nv, w[1] / nv, w[2] / nv};
            // w is free modulo v; make it Hermitian-orthogonal to v.
            Cpx pr = hdot(v, w);
            w = {w[0] - pr * v[0], w[1] - pr * v[1], w[2] - pr * v[2]};
            set_col(dbl_start, v);
            set_col(dbl_start + 1, w);
            set_col(simple, rank2_null_vector(shifted(m, ls)));
        }
    } else {
        // Triple eigenvalue (lambda^3 = det = 1 projectively).
        Cpx lt = sorted.lambda[0];
        Mat3 s = shifted(m, lt);
        int rank = numerical_rank(s, tau_rank_abs);
        if (rank == 0) {
            out.shape = JordanShape::DIAG;  // scalar matrix
        } else if (rank == 1) {
            // Jordan blocks of sizes 2+1 with a shared eigenvalue.
            out.shape = JordanShape::BLOCK2_PLUS_1;
            out.block_start = 0;
            // Pick w outside ker(s); v = s w spans the 1-dim range, which
            // lies inside the kernel since s^2 = 0 for this shape.
            Vec3 w{0.0, 0.0, 0.0};
            double best = -1.0;
            for (int j = 0; j < 3; ++j) {
                Vec3 e{0.0, 0.0, 0.0};
                e[j] = 1.0;
                double n = norm(s * e);
                if (n > best) {
                    best = n;
                    w = e;
                }
            }
            Vec3 v = s * w;
            double nv = norm(v);
            v = {v[0] / nv, v[1] / nv, v[2] / nv};
            w = {w[0] / nv, w[1] / nv, w[2] / nv};
            auto [n1, n2] = rank1_null_vectors(s);
            // Third column: kernel direction independent from v.
            Vec3 u = std::abs(hdot(v, n1)) < std::abs(hdot(v, n2)) ? n1 : n2;
            Cpx pr = hdot(v, u);
            u = {u[0] - pr * v[0], u[1] - pr * v[1], u[2] - pr * v[2]};
            double nu = norm(u);
            if (nu < 1e-13) throw Error("eigen_decompose: kernel collapse");
            u = {u[0] / nu, u[1] / nu, u[2] / nu};
            set_col(0, v);
            set_col(1, w);
            set_col(2, u);
        } else {
            out.shape = JordanShape::BLOCK3;
            Mat3 s2 = s * s;
            Vec3 w2{0.0, 0.0, 0.0};
            double best = -1.0;
            for (int j = 0; j < 3; ++j) {
                Vec3 e{0.0, 0.0, 0.0};
                e[j] = 1.0;
                double n = norm(s2 * e);
                if (n > best) {
                    best = n;
                    w2 = e;
                }
            }
            Vec3 v1 = s2 * w2;
            Vec3 v2 = s * w2;
            double nv = norm(v1);
            if (!(nv > 0.0)) throw Error("eigen_decompose: vanished chain");
            set_col(0, {v1[0] / nv, v1[1] / nv, v1[2] / nv});
            set_col(1, {v2[0] / nv, v2[1] / nv, v2[2] / nv});
            set_col(2, {w2[0] / nv, w2[1] / nv, w2[2] / nv});
        }
    }

    Mat3 j = out.jordan_matrix();
    out.residual = norm_inf(m * out.basis - out.basis * j);
    out.condition = cond_inf(out.basis);
    out.ill_conditioned = !(out.condition <= 1e10);
    return out;
}

RotationKind rotation_kind(Cpx lambda, int q_max, const Tolerances &tol) {
    RotationKind out;
    double mod = std::abs(lambda);
    if (std::abs(mod - 1.0) > tol.tau_unit) {
        out.kind = RotationClass::NOT_UNIT_MODULUS;
        out.confidence = std::abs(mod - 1.0);
        return out;
    }
    double t = std::arg(lambda) / (2.0 * M_PI);  // turn fraction in (-1/2, 1/2]
    if (t < 0.0) t += 1.0;

    // Continued-fraction convergents p/q of t, smallest denominator first;
    // a torsion verdict requires |lambda^q - 1| = 2|sin(pi(q t - p))| within
    // tau_rot. Convergents are automatically in lowest terms.
    double best_resid = std::numeric_limits<double>::infinity();
    long torsion_q = 0;
    long pm1 = 1, qm1 = 0;                       // p_{-1}/q_{-1}
    long p = 0, q = 1;                           // a0 = floor(t) = 0
    double x = t;
    for (int iter = 0; iter < 64; ++iter) {
        double resid = 2.0 * std::abs(std::sin(M_PI * (double(q) * t - double(p))));
        if (resid < best_resid) best_resid = resid;
        if (resid <= tol.tau_rot) {
            torsion_q = q;
            break;
        }
        double rem = x - std::floor(x);
        if (rem < 1e-18) break;
        x = 1.0 / rem;
        long a = static_cast<long>(std::floor(x));
        if (a <= 0) break;
        long pn = a * p + pm1;
        long qn = a * q + qm1;
        if (qn > q_max || qn <= 0) break;
        pm1 = p;
        qm1 = q;
        p = pn;
        q = qn;
    }
    out.confidence = best_resid;
    if (torsion_q >= 1) {
        out.kind = RotationClass::TORSION;
        out.order = static_cast<int>(torsion_q);
    } else {
        out.kind = RotationClass::IRRATIONAL;
    }
    return out;
}

RotationKind rotation_kind_exact(long p, long q) {
    if (q == 0) throw Error("rotation_kind_exact: zero denominator");
    RotationKind out;
    out.kind = RotationClass::TORSION;
    long g = std::gcd(std::abs(p), std::abs(q));
    out.order = static_cast<int>(std::abs(q) / (g == 0 ? 1 : g));
    if (out.order == 0) out.order = 1;
    out.confidence = 0.0;
    return out;
}

}  // namespace kleinian
