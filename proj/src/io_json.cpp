#include "kleinian/io_json.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace kleinian {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Json to_json(Cpx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Vec3 &v) {
    return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

Json to_json(const Mat3 &m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const Mat2 &m) {
    Json rows = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 2; ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Cpx cpx_from_json(const Json &j) {
    if (j.is_number()) return Cpx(j.get<double>(), 0.0);
    if (!j.is_array() || j.size() != 2)
        throw Error("expected [re, im] for a complex number");
    return Cpx(j[0].get<double>(), j[1].get<double>());
}

Mat3 mat3_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 3)
        throw Error("expected a 3x3 matrix as rows");
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_array() || j[i].size() != 3)
            throw Error("expected a 3x3 matrix as rows");
        for (int k = 0; k < 3; ++k) m(i, k) = cpx_from_json(j[i][k]);
    }
    return m;
}

Mat2 mat2_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2)
        throw Error("expected a 2x2 matrix as rows");
    Mat2 m;
    for (int i = 0; i < 2; ++i) {
        if (!j[i].is_array() || j[i].size() != 2)
            throw Error("expected a 2x2 matrix as rows");
        for (int k = 0; k < 2; ++k) m(i, k) = cpx_from_json(j[i][k]);
    }
    return m;
}

Json to_json(const ProjPoint &p) { return to_json(p.coords()); }
Json to_json(const ProjLine &l) { return to_json(l.dual()); }

Json to_json(const GenCircle &c) {
    Json j;
    j["a"] = c.A();
    j["b"] = to_json(c.B());
    j["c"] = c.C();
    j["side"] = c.side();
    return j;
}

GenCircle gencircle_from_json(const Json &j) {
    if (j.contains("center")) {
        Cpx center = cpx_from_json(j.at("center"));
        double radius = j.at("radius").get<double>();
        std::string side = j.value("side", "inside");
        return side == "inside" ? GenCircle::disk(center, radius)
                                : GenCircle::disk_complement(center, radius);
    }
    return GenCircle(j.at("a").get<double>(), cpx_from_json(j.at("b")),
                     j.at("c").get<double>(), j.value("side", 1));
}

Json to_json(const LimitSetDesc &d) {
    Json j;
    j["tag"] = d.tag;
    if (d.whole_plane) {
        j["whole_plane"] = true;
        return j;
    }
    if (d.unknown) {
        j["unknown"] = true;
        return j;
    }
    Json pts = Json::array();
    for (const auto &p : d.points) {
        Json e;
        e["name"] = p.name;
        e["coords"] = to_json(p.point);
        pts.push_back(e);
    }
    Json lns = Json::array();
    for (const auto &l : d.lines) {
        Json e;
        e["name"] = l.name;
        e["dual"] = to_json(l.line);
        lns.push_back(e);
    }
    j["points"] = pts;
    j["lines"] = lns;
    return j;
}

Json to_json(const CyclicLimitSets &s) {
    Json j;
    j["L0"] = to_json(s.L0);
    j["L1"] = to_json(s.L1);
    j["L2"] = to_json(s.L2);
    j["Lambda"] = to_json(s.Lambda);
    return j;
}

Json to_json(const RegionDesc &r) {
    Json arr = Json::array();
    for (const auto &reg : r.regions) {
        Json e;
        e["complement_of"] = to_json(reg.removed);
        e["is_kulkarni_region"] = reg.is_omega_kul;
        arr.push_back(e);
    }
    return arr;
}

Json to_json(const InvariantLines &il) {
    Json j;
    j["all_lines"] = il.all_lines;
    Json lns = Json::array();
    for (const auto &l : il.lines) {
        Json e;
        e["name"] = l.name;
        e["dual"] = to_json(l.line);
        lns.push_back(e);
    }
    j["lines"] = lns;
    if (il.pencil) {
        Json p;
        p["apex"] = to_json(il.pencil->apex);
        p["base"] = to_json(il.pencil->base);
        j["pencil"] = p;
    }
    return j;
}

Json to_json(const RotationKind &r) {
    Json j;
    switch (r.kind) {
        case RotationClass::TORSION:
            j["kind"] = "TORSION";
            j["order"] = r.order;
            break;
        case RotationClass::IRRATIONAL: j["kind"] = "IRRATIONAL"; break;
        case RotationClass::NOT_UNIT_MODULUS: j["kind"] = "NOT_UNIT_MODULUS"; break;
    }
    j["confidence"] = r.confidence;
    return j;
}

Json to_json(const EigenData &e) {
    Json j;
    j["eigenvalues"] = Json::array({to_json(e.eigenvalues[0]),
                                    to_json(e.eigenvalues[1]),
                                    to_json(e.eigenvalues[2])});
    j["basis"] = to_json(e.basis);
    switch (e.shape) {
        case JordanShape::DIAG: j["jordan_shape"] = "DIAG"; break;
        case JordanShape::BLOCK2_PLUS_1: j["jordan_shape"] = "BLOCK2_PLUS_1"; break;
        case JordanShape::BLOCK3: j["jordan_shape"] = "BLOCK3"; break;
    }
    j["condition"] = e.condition;
    j["residual"] = e.residual;
    j["ill_conditioned"] = e.ill_conditioned;
    return j;
}

Json to_json(const Classification &c) {
    Json j;
    j["class"] = to_string(c.cls);
    j["eigen"] = to_json(c.eig);
    j["rotation"] = to_json(c.rotation);
    j["unit_residual"] = c.unit_residual;
    j["ill_conditioned"] = c.ill_conditioned;
    if (c.hedged_alternative) j["hedged_alternative"] = to_string(*c.hedged_alternative);
    return j;
}

Json to_json(const SolMembership &m) {
    Json j;
    j["family"] = to_string(m.family);
    if (m.family == SolFamily::SOL4_0) {
        j["lambda"] = to_json(m.lambda);
        j["a"] = to_json(m.a);
        j["b"] = to_json(m.b);
    } else if (m.family != SolFamily::NONE) {
        j["eps"] = m.eps;
        j["alpha"] = m.alpha;
        j["a"] = to_json(m.a);
        j["b"] = to_json(m.b);
        j["c"] = m.c;
    }
    return j;
}

Json to_json(const ElementaryCertificate &c) {
    Json j;
    j["type"] = to_string(c.type);
    j["depth_used"] = c.depth_used;
    j["detail"] = c.detail;
    if (c.conjugator) j["conjugator"] = to_json(c.conjugator->lift());
    return j;
}

Json to_json(const SchottkyReport &r) {
    Json j;
    j["valid"] = r.valid;
    j["kissing"] = r.kissing;
    j["disjoint"] = r.disjoint;
    j["covers_sphere"] = r.covers_sphere;
    Json per = Json::array();
    for (const auto &g : r.per_generator) {
        Json e;
        e["generator"] = g.generator;
        e["circle_match"] = g.circle_match;
        e["side_flip"] = g.side_flip;
        e["circle_residual"] = g.circle_residual;
        per.push_back(e);
    }
    j["per_generator"] = per;
    Json tp = Json::array();
    for (auto [i, k] : r.tangent_pairs) tp.push_back(Json::array({i, k}));
    j["tangent_pairs"] = tp;
    return j;
}

Json group_to_json(const GroupSpec &spec) {
    Json j;
    j["name"] = spec.name;
    Json gens = Json::array();
    for (const auto &g : spec.generators) {
        Json e;
        e["name"] = g.name;
        e["matrix"] = to_json(g.transform.lift());
        gens.push_back(e);
    }
    j["generators"] = gens;
    if (spec.fixed_point) j["fixed_point"] = to_json(*spec.fixed_point);
    if (spec.invariant_line) j["invariant_line"] = to_json(*spec.invariant_line);
    return j;
}

GroupSpec group_from_json(const Json &j) {
    GroupSpec spec;
    spec.name = j.value("name", "group");
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw Error("group file: missing generators array");
    for (const auto &e : j.at("generators")) {
        GroupSpec::Generator g;
        g.name = e.at("name").get<std::string>();
        g.transform = ProjTransform(mat3_from_json(e.at("matrix")));
        spec.generators.push_back(std::move(g));
    }
    auto vec3_of = [](const Json &a) {
        if (!a.is_array() || a.size() != 3) throw Error("expected a triple");
        return Vec3{cpx_from_json(a[0]), cpx_from_json(a[1]), cpx_from_json(a[2])};
    };
    if (j.contains("fixed_point"))
        spec.fixed_point = ProjPoint(vec3_of(j.at("fixed_point")));
    if (j.contains("invariant_line"))
        spec.invariant_line = ProjLine(vec3_of(j.at("invariant_line")));
    spec.validate();
    return spec;
}

Json pairing_to_json(const SchottkyPairing &p) {
    Json arr = Json::array();
    for (const auto &pr : p.pairs) {
        Json e;
        e["generator"] = pr.generator;
        e["R"] = to_json(pr.R);
        e["S"] = to_json(pr.S);
        arr.push_back(e);
    }
    Json j;
    j["pairs"] = arr;
    return j;
}

SchottkyPairing pairing_from_json(const Json &j) {
    SchottkyPairing p;
    const Json &arr = j.contains("pairs") ? j.at("pairs") : j;
    if (!arr.is_array()) throw Error("pairing file: expected pairs array");
    for (const auto &e : arr)
        p.pairs.push_back({e.at("generator").get<std::string>(),
                           gencircle_from_json(e.at("R")),
                           gencircle_from_json(e.at("S"))});
    return p;
}

std::string cloud_to_csv(const PointCloud &cloud) {
    std::string out = "chart,re1,im1,re2,im2,word_length\n";
    for (const auto &cp : cloud.points) {
        const Vec3 &v = cp.point.coords();
        int big = 0;
        for (int j = 1; j < 3; ++j)
            if (std::abs(v[j]) > std::abs(v[big])) big = j;
        static const char *charts[3] = {"z1=1", "z2=1", "z3=1"};
        int a = big == 0 ? 1 : 0;
        int b = big == 2 ? 1 : 2;
        Cpx u = v[a] / v[big], w = v[b] / v[big];
        out += charts[big];
        out += ',';
        out += format_double(u.real());
        out += ',';
        out += format_double(u.imag());
        out += ',';
        out += format_double(w.real());
        out += ',';
        out += format_double(w.imag());
        out += ',';
        out += std::to_string(cp.word_length);
        out += '\n';
    }
    return out;
}

std::string mobius_cloud_to_csv(const std::vector<MobiusCloudPoint> &points) {
    std::string out = "re,im,word_length\n";
    for (const auto &p : points) {
        Cpx z = p1_value(p.point);
        out += format_double(z.real());
        out += ',';
        out += format_double(z.imag());
        out += ',';
        out += std::to_string(p.word_length);
        out += '\n';
    }
    return out;
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace kleinian
