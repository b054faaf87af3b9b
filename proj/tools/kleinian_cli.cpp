// Command-line surface over the library: classification of single elements,
// limit-set clouds (table- or oracle-driven), control projections, Schottky
// certificates and the gallery of explicit groups.
//
// Exit codes: 0 success/valid, 1 check failed, 2 usage, 3 precondition.
// Machine-readable JSON goes to stdout; human-oriented notes to stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kleinian/io_json.hpp"

using namespace kleinian;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

Cpx parse_cpx(const std::string &s) {
    // "re" or "re,im"
    auto comma = s.find(',');
    if (comma == std::string::npos) return Cpx(std::stod(s), 0.0);
    return Cpx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

struct CommonOpts {
    std::string out_path;
    uint64_t seed = 1;
    int threads = 1;
    int word_len = 0;
    int samples = 1000;
    int n_min = -1;
    std::string exact_rotations;
};

ClassifyOptions classify_opts_from(const std::string &exact) {
    ClassifyOptions opts;
    if (exact.empty()) return opts;
    std::stringstream ss(exact);
    std::string item;
    int slot = 0;
    while (std::getline(ss, item, ',') && slot < 3) {
        if (item == "*" || item.empty()) {
            ++slot;
            continue;
        }
        if (item == "irr") {
            opts.exact_rotations[slot++] = std::make_pair(0L, 0L);
            continue;
        }
        auto slash = item.find('/');
        if (slash == std::string::npos)
            throw Error("--exact-rotations entries are p/q, irr or *");
        long p = std::stol(item.substr(0, slash));
        long q = std::stol(item.substr(slash + 1));
        opts.exact_rotations[slot++] = std::make_pair(p, q);
    }
    return opts;
}

int cmd_classify(const std::string &matrix_path, const CommonOpts &common) {
    Json j = read_json_file(matrix_path);
    const Json &mj = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
    ProjTransform g(mat3_from_json(mj));
    Classification c = classify(g, default_tol(), classify_opts_from(common.exact_rotations));
    Json out = to_json(c);
    out["limit_sets"] = to_json(kulkarni_limit_set(c));
    out["invariant_lines"] = to_json(invariant_lines(c));
    out["maximal_domains"] = to_json(maximal_domains(c));
    std::cout << dump_json(out);
    return kExitOk;
}

// Distance from every cloud point to the described set, one-sided.
double cloud_to_desc_hausdorff(const PointCloud &cloud, const LimitSetDesc &desc) {
    double worst = 0.0;
    for (const auto &cp : cloud.points)
        worst = std::max(worst, desc.distance(cp.point));
    return worst;
}

int cmd_limit_set(const std::string &group_path, const std::string &mode,
                  const CommonOpts &common) {
    Json gj = read_json_file(group_path);
    GroupSpec spec = group_from_json(gj);
    if (spec.generators.empty()) {
        std::cerr << "limit-set: group has no generators\n";
        return kExitUsage;
    }
    Json out;
    out["group"] = spec.name;
    out["mode"] = mode;

    if (mode == "table") {
        if (spec.generators.size() != 1) {
            std::cerr << "limit-set: table mode requires a single generator\n";
            return kExitUsage;
        }
        Classification c = classify(spec.generators[0].transform, default_tol(),
                                    classify_opts_from(common.exact_rotations));
        out["classification"] = to_json(c);
        out["limit_sets"] = to_json(kulkarni_limit_set(c));
        out["maximal_domains"] = to_json(maximal_domains(c));
        std::cout << dump_json(out);
        return kExitOk;
    }
    if (mode != "oracle") {
        std::cerr << "limit-set: mode must be table or oracle\n";
        return kExitUsage;
    }

    bool single = spec.generators.size() == 1;
    int max_len = common.word_len > 0 ? common.word_len : (single ? 200 : 8);
    ClusterOracleOptions opts;
    opts.n_min = common.n_min >= 0 ? common.n_min
                                   : (single ? 50 : std::max(1, max_len - 1));
    opts.grid_size = common.samples;
    opts.seed = common.seed;
    opts.threads = common.threads;

    auto bases = sample_projective_points(std::max(common.samples / 5, 32),
                                          common.seed + 1, opts.log_span / 2.0);
    ClusterClouds clouds = cluster_oracle(spec, max_len, bases, opts);

    out["cloud_sizes"] = Json::object({{"L0", clouds.L0.points.size()},
                                       {"L1", clouds.L1.points.size()},
                                       {"L2", clouds.L2.points.size()}});

    if (single) {
        Classification c = classify(spec.generators[0].transform, default_tol(),
                                    classify_opts_from(common.exact_rotations));
        auto sets = kulkarni_limit_set(c);
        out["classification"] = to_json(c);
        out["limit_sets"] = to_json(sets);
        if (!sets.Lambda.unknown && !sets.Lambda.empty()) {
            double worst = 0.0;
            for (const auto *cl : clouds.all())
                worst = std::max(worst, cloud_to_desc_hausdorff(*cl, sets.Lambda));
            out["hausdorff_to_description"] = worst;
            out["hausdorff_pass"] = worst <= 0.05;
        }
    } else if (spec.fixed_point && spec.invariant_line) {
        // Containment report against the line-union prediction through the
        // control point over the projected limit set.
        try {
            ControlProjection ctrl = control_projection(spec, 0);
            GreenbergOptions gopts;
            gopts.include_parabolic = true;
            gopts.dedup_resolution = 1e-3;
            GreenbergCloud gcloud = greenberg_limit_approx(
                ctrl.generator_images, std::min(max_len + 2, 10), gopts);
            SuspensionPrediction pred;
            for (const auto &p : gcloud.points)
                pred.control_limit_samples.push_back(p.point);
            pred.empty = pred.control_limit_samples.empty();
            if (!pred.empty) {
                double worst = 0.0;
                for (const auto *cl : clouds.all())
                    for (const auto &cp : cl->points)
                        worst = std::max(worst, pred.distance(cp.point));
                out["containment_worst_distance"] = worst;
                out["containment_pass"] = worst <= 0.05;
            }
        } catch (const Error &e) {
            out["containment_skipped"] = e.what();
        }
    }

    if (!common.out_path.empty()) {
        PointCloud all;
        all.resolution = opts.resolution;
        for (const auto *cl : clouds.all())
            for (const auto &cp : cl->points)
                all.add(cp.point, cp.word_length, cp.base_index);
        write_file(common.out_path, cloud_to_csv(all));
        out["csv"] = common.out_path;
        out["csv_rows"] = all.points.size();
    }
    std::cout << dump_json(out);
    return kExitOk;
}

int cmd_project(const std::string &group_path, const std::string &point_arg,
                const std::string &line_arg, const CommonOpts &common) {
    Json gj = read_json_file(group_path);
    GroupSpec spec = group_from_json(gj);
    if (!point_arg.empty()) {
        Json pj = Json::parse(point_arg);
        spec.fixed_point = ProjPoint(Vec3{cpx_from_json(pj[0]), cpx_from_json(pj[1]),
                                          cpx_from_json(pj[2])});
    }
    if (!line_arg.empty()) {
        Json lj = Json::parse(line_arg);
        spec.invariant_line = ProjLine(Vec3{cpx_from_json(lj[0]), cpx_from_json(lj[1]),
                                            cpx_from_json(lj[2])});
    }
    int depth = common.word_len > 0 ? common.word_len : 8;
    ControlProjection ctrl = control_projection(spec, 0);
    Json out;
    Json gens = Json::array();
    for (size_t i = 0; i < ctrl.generator_images.size(); ++i) {
        Json e;
        e["name"] = spec.generators[i].name;
        e["lift"] = to_json(ctrl.generator_images[i].lift());
        gens.push_back(e);
    }
    out["mobius_generators"] = gens;
    out["certificate"] = to_json(elementary_certificate(ctrl.generator_images, std::min(depth, 6)));
    GreenbergCloud cloud = greenberg_limit_approx(ctrl.generator_images, depth);
    out["greenberg_points"] = cloud.points.size();
    if (cloud.fit) {
        Json f;
        f["circle"] = to_json(cloud.fit->circle);
        f["residual"] = cloud.fit->residual;
        f["circle_compatible"] = cloud.fit->circle_compatible;
        out["circle_fit"] = f;
    }
    if (!common.out_path.empty()) {
        write_file(common.out_path, mobius_cloud_to_csv(cloud.points));
        out["csv"] = common.out_path;
    }
    std::cout << dump_json(out);
    return kExitOk;
}

int cmd_schottky_verify(const std::string &group_path,
                        const std::string &pairing_path) {
    GroupSpec spec = group_from_json(read_json_file(group_path));
    SchottkyPairing pairing = pairing_from_json(read_json_file(pairing_path));
    SchottkyReport report = schottky_certificate(spec, pairing);
    std::cout << dump_json(to_json(report));
    return report.valid ? kExitOk : kExitCheckFailed;
}

int cmd_gallery(const std::string &family, const CLI::App &sub,
                const CommonOpts &common, double theta, const std::string &eps2,
                const std::string &eps3, const std::string &a_arg,
                const std::string &int_matrix, long r, const std::string &t_arg,
                const std::string &c1_arg, const std::string &c2_arg, int sign,
                const std::string &scalars) {
    (void)sub;
    Json out;
    GroupSpec spec;
    if (family == "kissing-schottky") {
        KissingSchottky ks = make_kissing_schottky(theta, parse_cpx(eps2), parse_cpx(eps3));
        spec = ks.group;
        Json d;
        d["eps1"] = to_json(ks.eps1);
        d["char_poly_residual"] = ks.char_poly_residual;
        d["predicted_eigenvalues"] = Json::array({to_json(ks.predicted_eigenvalues[0]),
                                                  to_json(ks.predicted_eigenvalues[1]),
                                                  to_json(ks.predicted_eigenvalues[2])});
        d["p1"] = to_json(ks.p1);
        d["p2"] = to_json(ks.p2);
        d["k_plus"] = to_json(ks.k_plus);
        d["k_minus"] = to_json(ks.k_minus);
        d["rational_theta_warning"] = ks.rational_theta_warning;
        d["degenerate_affine_case"] = ks.degenerate_affine_case;
        out["diagnostics"] = d;
        out["pairing"] = pairing_to_json(ks.pairing);
    } else if (family == "gamma-a") {
        spec = make_gamma_a(parse_cpx(a_arg));
    } else if (family == "suspension") {
        // Built-in two-generator classical Schottky control group.
        std::vector<MobiusMap> gens = {
            MobiusMap(Mat2{{Cpx(-1.0), Cpx(-2.0), Cpx(1.0), Cpx(6.0)}}),
            MobiusMap(Mat2{{Cpx(7.0), Cpx(-20.0), Cpx(1.0), Cpx(-3.0)}})};
        std::vector<Cpx> scal;
        std::stringstream ss(scalars.empty() ? std::string("-1") : scalars);
        std::string item;
        while (std::getline(ss, item, ';')) scal.push_back(parse_cpx(item));
        Suspension s = make_suspension(gens, scal);
        spec = s.group;
        Json d;
        d["scalar_group_infinite"] = s.scalar_group_infinite;
        d["control_limit_samples"] = s.prediction.control_limit_samples.size();
        out["diagnostics"] = d;
    } else if (family == "inoue-sm") {
        std::array<std::array<long, 3>, 3> M{};
        std::stringstream ss(int_matrix);
        std::string row;
        int i = 0;
        while (std::getline(ss, row, ';') && i < 3) {
            std::stringstream rs(row);
            std::string cell;
            int j = 0;
            while (std::getline(rs, cell, ',') && j < 3) M[i][j++] = std::stol(cell);
            ++i;
        }
        InoueSM sm = make_inoue_sm(M);
        spec = sm.group;
        Json d;
        d["alpha"] = sm.alpha;
        d["beta"] = to_json(sm.beta);
        Json mem = Json::array();
        for (const auto &m : sm.memberships) mem.push_back(to_json(m));
        d["memberships"] = mem;
        out["diagnostics"] = d;
    } else if (family == "inoue-sn") {
        std::array<std::array<long, 2>, 2> N{};
        std::stringstream ss(int_matrix);
        std::string row;
        int i = 0;
        while (std::getline(ss, row, ';') && i < 2) {
            std::stringstream rs(row);
            std::string cell;
            int j = 0;
            while (std::getline(rs, cell, ',') && j < 2) N[i][j++] = std::stol(cell);
            ++i;
        }
        InoueSN sn = make_inoue_sn(N, r, parse_cpx(t_arg), parse_cpx(c1_arg),
                                   parse_cpx(c2_arg), sign);
        spec = sn.group;
        Json d;
        d["alpha"] = sn.alpha;
        d["gamma3_translation"] = to_json(sn.gamma3_translation);
        d["integrability_unchecked"] = sn.integrability_unchecked;
        Json mem = Json::array();
        for (const auto &m : sn.memberships) mem.push_back(to_json(m));
        d["memberships"] = mem;
        out["diagnostics"] = d;
    } else {
        std::cerr << "unknown gallery family: " << family << "\n";
        return kExitUsage;
    }
    out["group"] = group_to_json(spec);
    if (!common.out_path.empty())
        write_file(common.out_path, dump_json(out));
    std::cout << dump_json(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"projective-transformation classification and limit-set toolkit"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--seed", common.seed, "random seed for sampled grids");
    app.add_option("--threads", common.threads, "worker cap for orbit mapping");
    app.add_option("--out", common.out_path, "output path for CSV/JSON artifacts");
    app.add_option("--word-len", common.word_len, "maximum word length");
    app.add_option("--samples", common.samples, "grid samples for the oracle");
    app.add_option("--n-min", common.n_min, "minimum word length for orbit layers");
    app.add_option("--exact-rotations", common.exact_rotations,
                   "per-eigenvalue rotation declarations: p/q, irr or *");

    std::string matrix_path, group_path, pairing_path, mode = "table";
    std::string point_arg, line_arg;

    auto *classify_cmd = app.add_subcommand("classify", "classify one transformation");
    classify_cmd->add_option("--matrix", matrix_path, "JSON 3x3 matrix file")->required();

    auto *limit_cmd = app.add_subcommand("limit-set", "limit set, table or oracle driven");
    limit_cmd->add_option("--group", group_path, "group spec JSON file")->required();
    limit_cmd->add_option("--mode", mode, "table | oracle");

    auto *project_cmd = app.add_subcommand("project", "control projection onto a line");
    project_cmd->add_option("--group", group_path, "group spec JSON file")->required();
    project_cmd->add_option("--point", point_arg, "control point as a JSON triple");
    project_cmd->add_option("--line", line_arg, "control line dual as a JSON triple");

    auto *schottky_cmd = app.add_subcommand("schottky-verify", "ping-pong certificate");
    schottky_cmd->add_option("--group", group_path, "group spec JSON file")->required();
    schottky_cmd->add_option("--pairing", pairing_path, "pairing JSON file")->required();

    std::string family, eps2 = "1", eps3 = "1", a_arg = "2", int_matrix;
    std::string t_arg = "0", c1_arg = "0", c2_arg = "0", scalars;
    double theta = std::sqrt(2.0) - 1.0;
    long r = 1;
    int sign = +1;
    auto *gallery_cmd = app.add_subcommand("gallery", "construct an explicit family");
    gallery_cmd->add_option("family", family,
                            "kissing-schottky | gamma-a | suspension | inoue-sm | inoue-sn")
        ->required();
    gallery_cmd->add_option("--theta", theta, "rotation parameter");
    gallery_cmd->add_option("--eps2", eps2, "complex parameter re[,im]");
    gallery_cmd->add_option("--eps3", eps3, "complex parameter re[,im]");
    gallery_cmd->add_option("--a", a_arg, "diagonal parameter re[,im]");
    gallery_cmd->add_option("--int-matrix", int_matrix, "rows 'a,b,c;d,e,f;g,h,i'");
    gallery_cmd->add_option("--r", r, "nonzero integer");
    gallery_cmd->add_option("--t", t_arg, "complex parameter re[,im]");
    gallery_cmd->add_option("--c1", c1_arg, "complex parameter re[,im]");
    gallery_cmd->add_option("--c2", c2_arg, "complex parameter re[,im]");
    gallery_cmd->add_option("--sign", sign, "+1 or -1 family branch");
    gallery_cmd->add_option("--scalars", scalars, "scalar generators 'g1;g2;...'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(matrix_path, common);
        if (limit_cmd->parsed()) return cmd_limit_set(group_path, mode, common);
        if (project_cmd->parsed())
            return cmd_project(group_path, point_arg, line_arg, common);
        if (schottky_cmd->parsed())
            return cmd_schottky_verify(group_path, pairing_path);
        if (gallery_cmd->parsed())
            return cmd_gallery(family, *gallery_cmd, common, theta, eps2, eps3,
                               a_arg, int_matrix, r, t_arg, c1_arg, c2_arg, sign,
                               scalars);
    } catch (const PreconditionViolation &e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        std::cout << dump_json(Json{{"error", e.what()}, {"kind", "precondition"}});
        return kExitPrecondition;
    } catch (const NotControllable &e) {
        std::cerr << "not controllable: " << e.what() << "\n";
        std::cout << dump_json(Json{{"error", e.what()}, {"kind", "not_controllable"}});
        return kExitPrecondition;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << dump_json(Json{{"error", e.what()}});
        return kExitUsage;
    }
    return kExitUsage;
}
