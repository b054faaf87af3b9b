#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kleinian/spectral.hpp"

namespace kleinian {

enum class ElementClass3 {
    IDENTITY,
    BLOCK3_UNIPOTENT,
    DIAG_TORSION,
    DIAG_ELLIPTIC_IRRATIONAL,
    DIAG_EQUAL_MODULI_RATIONAL,
    DIAG_EQUAL_MODULI_IRRATIONAL,
    DIAG_STRONG_LOXODROMIC,
    B21_TORSION,
    B21_UNIT_IRRATIONAL,
    B21_NONUNIT,
};

const char *to_string(ElementClass3 c);

struct NamedPoint {
    std::string name;
    ProjPoint point;
};
struct NamedLine {
    std::string name;
    ProjLine line;
};

// A finite union of named points and lines, or a whole-plane / unknown
// marker; the building block for limit-set layers and region complements.
struct LimitSetDesc {
    std::string tag;  // "L0", "L1", "L2", "Lambda", or a region label
    std::vector<NamedPoint> points;
    std::vector<NamedLine> lines;
    bool whole_plane = false;
    bool unknown = false;  // the table's open cell

    bool empty() const {
        return !whole_plane && !unknown && points.empty() && lines.empty();
    }
    // Fubini-Study distance from x to the described set (whole plane: 0;
    // unknown or empty: +infinity).
    double distance(const ProjPoint &x) const;
};

struct CyclicLimitSets {
    LimitSetDesc L0, L1, L2, Lambda;
};

// Each maximal region is the complement of a finite union.
struct RegionDesc {
    struct Region {
        LimitSetDesc removed;     // region = P^2 minus this set
        bool is_omega_kul = false;  // the removed set is Lambda_Kul itself
    };
    std::vector<Region> regions;
};

// A pencil of lines given symbolically: every line through the apex, indexed
// by its base-line intersection.
struct LinePencil {
    ProjPoint apex;
    ProjLine base;
};

struct InvariantLines {
    std::vector<NamedLine> lines;
    std::optional<LinePencil> pencil;
    bool all_lines = false;  // identity only
};

// Classification result: the table row, the eigen data it came from, and the
// table-adapted basis (columns ordered the way the table's normal form
// expects, e.g. the equal-moduli pair first).
struct Classification {
    ElementClass3 cls = ElementClass3::IDENTITY;
    EigenData eig;
    Mat3 table_basis = Mat3::identity();
    std::array<Cpx, 3> table_eigenvalues{};
    RotationKind rotation{};     // of the decisive eigenvalue or ratio
    double unit_residual = 0.0;  // | |lambda|-1 | relevant to the decision
    bool ill_conditioned = false;
    std::optional<ElementClass3> hedged_alternative;

    ProjPoint table_point(int j) const;  // image of e_{j+1} under table_basis
};

struct ClassifyOptions {
    // Declared-exact rotation data per sorted eigenvalue slot, bypassing
    // floating detection: {p, q} for a rational turn, {0, 0} for declared
    // irrational; absent entries use the detector.
    std::array<std::optional<std::pair<long, long>>, 3> exact_rotations{};
    bool hedged = false;
    int q_max = default_tol().q_max;
};

Classification classify(const ProjTransform &g,
                        const Tolerances &tol = default_tol(),
                        const ClassifyOptions &opts = {});

CyclicLimitSets kulkarni_limit_set(const Classification &c,
                                   const Tolerances &tol = default_tol());

RegionDesc maximal_domains(const Classification &c,
                           const Tolerances &tol = default_tol());

InvariantLines invariant_lines(const Classification &c,
                               const Tolerances &tol = default_tol());

}  // namespace kleinian
