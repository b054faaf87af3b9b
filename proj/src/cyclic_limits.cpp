#include "kleinian/cyclic_limits.hpp"

#include <algorithm>
#include <cmath>

namespace kleinian {

const char *to_string(ElementClass3 c) {
    switch (c) {
        case ElementClass3::IDENTITY: return "IDENTITY";
        case ElementClass3::BLOCK3_UNIPOTENT: return "BLOCK3_UNIPOTENT";
        case ElementClass3::DIAG_TORSION: return "DIAG_TORSION";
        case ElementClass3::DIAG_ELLIPTIC_IRRATIONAL:
            return "DIAG_ELLIPTIC_IRRATIONAL";
        case ElementClass3::DIAG_EQUAL_MODULI_RATIONAL:
            return "DIAG_EQUAL_MODULI_RATIONAL";
        case ElementClass3::DIAG_EQUAL_MODULI_IRRATIONAL:
            return "DIAG_EQUAL_MODULI_IRRATIONAL";
        case ElementClass3::DIAG_STRONG_LOXODROMIC:
            return "DIAG_STRONG_LOXODROMIC";
        case ElementClass3::B21_TORSION: return "B21_TORSION";
        case ElementClass3::B21_UNIT_IRRATIONAL: return "B21_UNIT_IRRATIONAL";
        case ElementClass3::B21_NONUNIT: return "B21_NONUNIT";
    }
    return "?";
}

double LimitSetDesc::distance(const ProjPoint &x) const {
    if (whole_plane) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto &p : points) best = std::min(best, fs_distance(x, p.point));
    for (const auto &l : lines)
        best = std::min(best, fs_point_line_distance(x, l.line));
    return best;
}

ProjPoint Classification::table_point(int j) const {
    return ProjPoint(Vec3{table_basis(0, j), table_basis(1, j), table_basis(2, j)});
}

namespace {

RotationKind resolve_rotation(Cpx lambda, int slot, const ClassifyOptions &opts,
                              const Tolerances &tol) {
    if (opts.exact_rotations[slot]) {
        auto [p, q] = *opts.exact_rotations[slot];
        if (q == 0) {  // declared irrational
            RotationKind r;
            r.kind = RotationClass::IRRATIONAL;
            r.confidence = 0.0;
            return r;
        }
        return rotation_kind_exact(p, q);
    }
    return rotation_kind(lambda, opts.q_max, tol);
}

Mat3 columns(const Vec3 &c0, const Vec3 &c1, const Vec3 &c2) {
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        m(i, 0) = c0[i];
        m(i, 1) = c1[i];
        m(i, 2) = c2[i];
    }
    return m;
}

bool is_identity_lift(const Mat3 &m, double tau) {
    // Proportional to I by a cube root of unity.
    Cpx d = (m(0, 0) + m(1, 1) + m(2, 2)) / 3.0;
    double off = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            off = std::max(off, std::abs(m(i, j) - (i == j ? d : Cpx(0.0))));
    return off <= tau * std::max(1.0, norm_inf(m));
}

}  // namespace

Classification classify(const ProjTransform &g, const Tolerances &tol,
                        const ClassifyOptions &opts) {
    Classification out;
    if (is_identity_lift(g.lift(), tol.tau_cmp)) {
        out.cls = ElementClass3::IDENTITY;
        out.eig.eigenvalues = {1.0, 1.0, 1.0};
        return out;
    }

    EigenData eg = eigen_decompose(g, tol);
    out.eig = eg;
    out.ill_conditioned = eg.ill_conditioned;
    out.table_basis = eg.basis;
    out.table_eigenvalues = eg.eigenvalues;

    const auto lam = eg.eigenvalues;
    auto col = [&](int j) { return eg.basis_column(j); };

    if (eg.shape == JordanShape::BLOCK3) {
        out.cls = ElementClass3::BLOCK3_UNIPOTENT;
        return out;
    }

    if (eg.shape == JordanShape::BLOCK2_PLUS_1) {
        // Table coordinates: e1 = block eigenvector, e2 = generalized vector,
        // e3 = remaining eigenvector.
        int bs = eg.block_start;
        int simple = bs == 0 ? 2 : 0;
        out.table_basis = columns(col(bs), col(bs + 1), col(simple));
        out.table_eigenvalues = {lam[bs], lam[bs], lam[simple]};
        Cpx l1 = lam[bs];
        out.unit_residual = std::abs(std::abs(l1) - 1.0);
        if (out.unit_residual > tol.tau_unit) {
            out.cls = ElementClass3::B21_NONUNIT;
            return out;
        }
        out.rotation = resolve_rotation(l1, bs, opts, tol);
        out.cls = out.rotation.kind == RotationClass::TORSION
                      ? ElementClass3::B21_TORSION
                      : ElementClass3::B21_UNIT_IRRATIONAL;
        return out;
    }

    // Diagonalizable. Compare moduli pairwise at tau_unit (relative).
    double m0 = std::abs(lam[0]), m1 = std::abs(lam[1]), m2 = std::abs(lam[2]);
    auto close = [&](double a, double b) {
        return std::abs(a - b) <= tol.tau_unit * std::max({a, b, 1.0});
    };
    bool eq01 = close(m0, m1), eq12 = close(m1, m2);

    if (eq01 && eq12) {
        // All moduli agree; the unimodular product forces them to 1.
        out.unit_residual = std::max(std::abs(m0 - 1.0), std::abs(m2 - 1.0));
        bool all_torsion = true;
        double worst = 0.0;
        for (int j = 0; j < 3; ++j) {
            RotationKind r = resolve_rotation(lam[j], j, opts, tol);
            worst = std::max(worst, r.confidence);
            if (r.kind != RotationClass::TORSION) {
                all_torsion = false;
                out.rotation = r;
            }
        }
        if (all_torsion) {
            out.rotation.kind = RotationClass::TORSION;
            out.rotation.confidence = worst;
            out.cls = ElementClass3::DIAG_TORSION;
        } else {
            out.cls = ElementClass3::DIAG_ELLIPTIC_IRRATIONAL;
        }
        return out;
    }

    if (!eq01 && !eq12) {
        out.cls = ElementClass3::DIAG_STRONG_LOXODROMIC;
        return out;
    }

    // Exactly one equal-moduli pair; reorder so it occupies table slots 1,2.
    int pa = eq01 ? 0 : 1, pb = eq01 ? 1 : 2, other = eq01 ? 2 : 0;
    out.table_basis = columns(col(pa), col(pb), col(other));
    out.table_eigenvalues = {lam[pa], lam[pb], lam[other]};
    out.unit_residual = std::abs(std::abs(lam[pa]) - 1.0);
    Cpx ratio = lam[pa] / lam[pb];
    out.rotation = resolve_rotation(ratio, pa, opts, tol);
    if (out.rotation.kind == RotationClass::TORSION) {
        out.cls = ElementClass3::DIAG_EQUAL_MODULI_RATIONAL;
    } else {
        out.cls = ElementClass3::DIAG_EQUAL_MODULI_IRRATIONAL;
    }
    if (opts.hedged && eg.shape == JordanShape::DIAG &&
        std::abs(lam[pa] - lam[pb]) <=
            10.0 * tol.tau_eig * std::max(norm_inf(g.lift()), 1.0)) {
        // A nearly repeated eigenvalue could hide a defective block.
        out.hedged_alternative = std::abs(std::abs(lam[pa]) - 1.0) > tol.tau_unit
                                     ? ElementClass3::B21_NONUNIT
                                     : ElementClass3::B21_TORSION;
    }
    return out;
}

namespace {

NamedPoint np(const char *name, const Classification &c, int j) {
    return {name, c.table_point(j)};
}

NamedLine nl(const char *name, const Classification &c, int a, int b,
             const Tolerances &tol) {
    return {name, line_through(c.table_point(a), c.table_point(b), tol)};
}

LimitSetDesc set_of(std::string tag, std::vector<NamedPoint> pts,
                    std::vector<NamedLine> lns) {
    LimitSetDesc d;
    d.tag = std::move(tag);
    d.points = std::move(pts);
    d.lines = std::move(lns);
    return d;
}

LimitSetDesc whole_plane(std::string tag) {
    LimitSetDesc d;
    d.tag = std::move(tag);
    d.whole_plane = true;
    return d;
}

LimitSetDesc unknown_set(std::string tag) {
    LimitSetDesc d;
    d.tag = std::move(tag);
    d.unknown = true;
    return d;
}

}  // namespace

CyclicLimitSets kulkarni_limit_set(const Classification &c,
                                   const Tolerances &tol) {
    CyclicLimitSets out;
    out.L0.tag = "L0";
    out.L1.tag = "L1";
    out.L2.tag = "L2";
    out.Lambda.tag = "Lambda";

    auto e1 = [&] { return np("e1", c, 0); };
    auto e2 = [&] { return np("e2", c, 1); };
    auto e3 = [&] { return np("e3", c, 2); };
    auto l12 = [&] { return nl("line(e1,e2)", c, 0, 1, tol); };
    auto l13 = [&] { return nl("line(e1,e3)", c, 0, 2, tol); };
    auto l23 = [&] { return nl("line(e2,e3)", c, 1, 2, tol); };

    switch (c.cls) {
        case ElementClass3::IDENTITY:
        case ElementClass3::DIAG_TORSION:
            // Finite cyclic group: every layer is empty.
            break;
        case ElementClass3::BLOCK3_UNIPOTENT:
            out.L0 = set_of("L0", {e1()}, {});
            out.L1 = set_of("L1", {e1()}, {});
            out.L2 = set_of("L2", {}, {l12()});
            out.Lambda = set_of("Lambda", {}, {l12()});
            break;
        case ElementClass3::DIAG_ELLIPTIC_IRRATIONAL:
            // The table's open cell: L0 is reported unknown, never guessed.
            out.L0 = unknown_set("L0");
            out.L1 = whole_plane("L1");
            out.Lambda = whole_plane("Lambda");
            break;
        case ElementClass3::DIAG_EQUAL_MODULI_RATIONAL:
            out.L0 = set_of("L0", {e3()}, {l12()});
            out.L1 = set_of("L1", {e3()}, {l12()});
            out.L2 = set_of("L2", {e3()}, {l12()});
            out.Lambda = set_of("Lambda", {e3()}, {l12()});
            break;
        case ElementClass3::DIAG_EQUAL_MODULI_IRRATIONAL:
            out.L0 = set_of("L0", {e1(), e2(), e3()}, {});
            out.L1 = set_of("L1", {e3()}, {l12()});
            out.L2 = set_of("L2", {e3()}, {l12()});
            out.Lambda = set_of("Lambda", {e3()}, {l12()});
            break;
        case ElementClass3::DIAG_STRONG_LOXODROMIC:
            out.L0 = set_of("L0", {e1(), e2(), e3()}, {});
            out.L1 = set_of("L1", {e1(), e2(), e3()}, {});
            out.L2 = set_of("L2", {}, {l12(), l23()});
            out.Lambda = set_of("Lambda", {}, {l12(), l23()});
            break;
        case ElementClass3::B21_TORSION:
            out.L0 = set_of("L0", {}, {l13()});
            out.L1 = set_of("L1", {e1()}, {});
            out.L2 = set_of("L2", {e1()}, {});
            out.Lambda = set_of("Lambda", {}, {l13()});
            break;
        case ElementClass3::B21_UNIT_IRRATIONAL:
            out.L0 = set_of("L0", {e1(), e3()}, {});
            out.L1 = set_of("L1", {}, {l13()});
            out.L2 = set_of("L2", {e1()}, {});
            out.Lambda = set_of("Lambda", {}, {l13()});
            break;
        case ElementClass3::B21_NONUNIT:
            out.L0 = set_of("L0", {e1(), e3()}, {});
            out.L1 = set_of("L1", {e1(), e3()}, {});
            out.L2 = set_of("L2", {}, {l12(), l13()});
            out.Lambda = set_of("Lambda", {}, {l12(), l13()});
            break;
    }
    return out;
}

RegionDesc maximal_domains(const Classification &c, const Tolerances &tol) {
    RegionDesc out;
    auto lam = kulkarni_limit_set(c, tol);
    if (c.cls == ElementClass3::DIAG_STRONG_LOXODROMIC) {
        RegionDesc::Region r1, r2;
        r1.removed.tag = "removed";
        r1.removed.points = {np("e3", c, 2)};
        r1.removed.lines = {nl("line(e1,e2)", c, 0, 1, tol)};
        r2.removed.tag = "removed";
        r2.removed.points = {np("e1", c, 0)};
        r2.removed.lines = {nl("line(e3,e2)", c, 2, 1, tol)};
        out.regions = {r1, r2};
        return out;
    }
    if (c.cls == ElementClass3::B21_NONUNIT) {
        RegionDesc::Region r1, r2;
        r1.removed.tag = "removed";
        r1.removed.points = {np("e3", c, 2)};
        r1.removed.lines = {nl("line(e1,e2)", c, 0, 1, tol)};
        r2.removed.tag = "removed";
        r2.removed.lines = {nl("line(e3,e1)", c, 2, 0, tol)};
        out.regions = {r1, r2};
        return out;
    }
    RegionDesc::Region r;
    r.removed = lam.Lambda;
    r.removed.tag = "removed";
    r.is_omega_kul = true;
    out.regions = {r};
    return out;
}

InvariantLines invariant_lines(const Classification &c, const Tolerances &tol) {
    InvariantLines out;
    switch (c.cls) {
        case ElementClass3::IDENTITY:
            out.all_lines = true;
            return out;
        case ElementClass3::BLOCK3_UNIPOTENT:
            out.lines = {nl("line(e1,e2)", c, 0, 1, tol)};
            return out;
        case ElementClass3::B21_TORSION:
        case ElementClass3::B21_UNIT_IRRATIONAL:
        case ElementClass3::B21_NONUNIT: {
            // lambda^3 = 1 makes the lift a scalar times a two-block
            // unipotent: the fixed line is pointwise and a pencil appears.
            Cpx l1 = c.table_eigenvalues[0];
            if (std::abs(l1 * l1 * l1 - Cpx(1.0)) <= tol.tau_unit) {
                out.pencil = LinePencil{c.table_point(0),
                                        line_through(c.table_point(2),
                                                     c.table_point(1), tol)};
            } else {
                out.lines = {nl("line(e1,e3)", c, 0, 2, tol),
                             nl("line(e1,e2)", c, 0, 1, tol)};
            }
            return out;
        }
        default: {
            // Diagonalizable: branch on eigenvalue equality, not moduli.
            const auto &lam = c.table_eigenvalues;
            double scale = std::max(
                {std::abs(lam[0]), std::abs(lam[1]), std::abs(lam[2]), 1.0});
            auto same = [&](Cpx a, Cpx b) {
                return std::abs(a - b) <= tol.tau_unit * scale;
            };
            bool e01 = same(lam[0], lam[1]);
            bool e12 = same(lam[1], lam[2]);
            bool e02 = same(lam[0], lam[2]);
            if (!e01 && !e12 && !e02) {
                out.lines = {nl("line(e1,e2)", c, 0, 1, tol),
                             nl("line(e1,e3)", c, 0, 2, tol),
                             nl("line(e3,e2)", c, 2, 1, tol)};
                return out;
            }
            // A doubled eigenvalue: its eigenplane is the base line, the
            // remaining fixed point the pencil apex.
            int a, b, s;
            if (e01) { a = 0; b = 1; s = 2; }
            else if (e12) { a = 1; b = 2; s = 0; }
            else { a = 0; b = 2; s = 1; }
            ProjLine base = line_through(c.table_point(a), c.table_point(b), tol);
            std::string name = "line(e" + std::to_string(a + 1) + ",e" +
                               std::to_string(b + 1) + ")";
            out.lines = {{name, base}};
            out.pencil = LinePencil{c.table_point(s), base};
            return out;
        }
    }
}

}  // namespace kleinian
