#include "kleinian/actions.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "kleinian/rng.hpp"

namespace kleinian {

void GroupSpec::validate() const {
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].name.empty())
            throw PreconditionViolation("GroupSpec: empty generator name");
        for (size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i].name == generators[j].name)
                throw PreconditionViolation("GroupSpec: duplicate generator name " +
                                            generators[i].name);
    }
}

std::string Word::format(const GroupSpec &spec) const {
    if (letters.empty()) return "id";
    std::string out;
    for (const auto &[idx, sign] : letters) {
        if (!out.empty()) out += ".";
        out += spec.generators[idx].name;
        if (sign < 0) out += "^-1";
    }
    return out;
}

void parallel_for(long n, int threads, const std::function<void(long, long)> &chunk) {
    if (threads <= 1 || n < 256) {
        chunk(0, n);
        return;
    }
    threads = std::min<long>(threads, std::max<long>(1, n / 64));
    std::vector<std::thread> pool;
    long per = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long lo = t * per, hi = std::min(n, lo + per);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] { chunk(lo, hi); });
    }
    for (auto &th : pool) th.join();
}

namespace {

// Canonical representative of a unimodular lift modulo scalars: scale by the
// Frobenius norm, then rotate the phase of the largest entry to be positive
// real. Quantizing this absorbs the cube-root ambiguity.
std::array<double, 18> canonical_lift_floats(const Mat3 &m) {
    double n = norm_frob(m);
    int big = 0;
    for (int i = 1; i < 9; ++i)
        if (std::abs(m.a[i]) > std::abs(m.a[big])) big = i;
    Cpx phase = std::conj(m.a[big]) / std::abs(m.a[big]);
    std::array<double, 18> out;
    for (int i = 0; i < 9; ++i) {
        Cpx v = m.a[i] * phase / n;
        out[2 * i] = v.real();
        out[2 * i + 1] = v.imag();
    }
    return out;
}

uint64_t quantized_key(const std::array<double, 18> &floats, double quantum) {
    uint64_t h = 1469598103934665603ull;
    for (double f : floats) {
        int64_t q = static_cast<int64_t>(std::llround(f / quantum));
        h ^= static_cast<uint64_t>(q);
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t point_key(const ProjPoint &p, double quantum) {
    uint64_t h = 1469598103934665603ull;
    for (const Cpx &c : p.coords()) {
        for (double f : {c.real(), c.imag()}) {
            int64_t q = static_cast<int64_t>(std::llround(f / quantum));
            h ^= static_cast<uint64_t>(q);
            h *= 1099511628211ull;
        }
    }
    return h;
}

}  // namespace

std::vector<WordElement> enumerate_words(const GroupSpec &spec, int max_len,
                                         const EnumerationOptions &opts,
                                         const Tolerances &tol) {
    spec.validate();
    int n = static_cast<int>(spec.generators.size());
    std::vector<ProjTransform> alphabet;
    std::vector<std::pair<int, int>> alphabet_letters;
    for (int i = 0; i < n; ++i) {
        alphabet.push_back(spec.generators[i].transform);
        alphabet_letters.push_back({i, +1});
        alphabet.push_back(spec.generators[i].transform.inverse());
        alphabet_letters.push_back({i, -1});
    }

    std::vector<WordElement> out;
    std::unordered_map<uint64_t, std::vector<int>> seen;
    auto try_insert = [&](const Word &w, const ProjTransform &g) {
        uint64_t key = quantized_key(canonical_lift_floats(g.lift()), opts.hash_quantum);
        auto &bucket = seen[key];
        for (int idx : bucket)
            if (out[idx].transform.proj_equal(g, tol.tau_cmp)) return false;
        if (static_cast<long>(out.size()) >= opts.dedup_cap)
            throw BudgetExceeded("enumerate_words: deduplicated count exceeds cap");
        bucket.push_back(static_cast<int>(out.size()));
        out.push_back({w, g});
        return true;
    };

    Word id;
    try_insert(id, ProjTransform());
    // BFS over distinct group elements: every element of length L is a
    // length-(L-1) element times a letter, so extending only the newly
    // discovered elements is complete and keeps collapsing groups small.
    struct Node {
        Word word;
        ProjTransform g;
    };
    std::vector<Node> frontier;
    for (int a = 0; a < 2 * n; ++a) {
        Node nd{Word{{alphabet_letters[a]}, true}, alphabet[a]};
        if (try_insert(nd.word, nd.g)) frontier.push_back(std::move(nd));
    }
    for (int len = 2; len <= max_len; ++len) {
        std::vector<Node> next;
        for (const auto &nd : frontier) {
            auto [last_idx, last_sign] = nd.word.letters.back();
            for (int a = 0; a < 2 * n; ++a) {
                auto [idx, sign] = alphabet_letters[a];
                if (idx == last_idx && sign == -last_sign) continue;
                Node child;
                child.word.letters = nd.word.letters;
                child.word.letters.push_back({idx, sign});
                child.g = nd.g * alphabet[a];
                if (try_insert(child.word, child.g))
                    next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

bool PointCloud::add(const ProjPoint &p, int word_length, int base_index) {
    uint64_t key = point_key(p, resolution);
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it != keys_.end() && *it == key) return false;
    keys_.insert(it, key);
    points.push_back({p, word_length, base_index});
    return true;
}

double PointCloud::distance(const ProjPoint &x) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &cp : points) best = std::min(best, fs_distance(x, cp.point));
    return best;
}

std::vector<ProjPoint> sample_projective_points(int count, uint64_t seed,
                                                double log_span) {
    Rng rng(seed);
    std::vector<ProjPoint> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Vec3 v;
        for (int j = 0; j < 3; ++j) {
            double mag = std::pow(10.0, -rng.uniform(0.0, log_span));
            v[j] = mag * rng.unit_circle();
        }
        // Rescale so the largest coordinate is 1; only the coordinate ratios
        // matter projectively and the raw triples can be arbitrarily small.
        double m = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
        out.emplace_back(Vec3{v[0] / m, v[1] / m, v[2] / m});
    }
    return out;
}

bool classifies_infinite_order(const Classification &c) {
    switch (c.cls) {
        case ElementClass3::IDENTITY:
        case ElementClass3::DIAG_TORSION:
            return false;
        default:
            return true;
    }
}

namespace {

// Deterministic covering sample of the projective line spanned by two
// orthonormal-ish column vectors.
void sample_projective_line(const Vec3 &u, const Vec3 &v, int samples,
                            int word_length, PointCloud &cloud) {
    int rings = std::max(4, static_cast<int>(std::sqrt(double(samples))));
    for (int i = 0; i <= rings; ++i) {
        double t = M_PI_2 * double(i) / double(rings);  // polar angle on P^1
        double cu = std::cos(t), sv = std::sin(t);
        int m = std::max(1, static_cast<int>(std::ceil(2.0 * rings * sv)));
        for (int k = 0; k < m; ++k) {
            double phi = 2.0 * M_PI * double(k) / double(m);
            Cpx phase = std::polar(1.0, phi);
            Vec3 w{cu * u[0] + sv * phase * v[0], cu * u[1] + sv * phase * v[1],
                   cu * u[2] + sv * phase * v[2]};
            cloud.add(ProjPoint(w), word_length, -1);
        }
    }
}

struct ElementAnalysis {
    bool infinite_order = false;
    std::vector<Vec3> isolated_fixed;       // eigenvector fixed points
    std::optional<std::pair<Vec3, Vec3>> fixed_line;  // pointwise-fixed plane
};

// Every candidate below is re-verified against the element itself: for
// extreme powers the rescaled eigenanalysis can cluster tiny eigenvalues and
// hallucinate fixed structures, and a direct application test is cheap.
ElementAnalysis analyze_element(const ProjTransform &g, const Tolerances &tol) {
    ElementAnalysis out;
    double scale = norm_inf(g.lift());

    // Verification via the max-normalized lift: for extreme powers a
    // candidate can sit numerically in the kernel, where its image is pure
    // cancellation noise; such candidates are dropped, their structures are
    // rediscovered from lower powers.
    Mat3 normalized = g.lift();
    {
        double m = 0.0;
        for (const auto &e : normalized.a) m = std::max(m, std::abs(e));
        normalized = (Cpx(1.0 / m)) * normalized;
    }
    auto genuinely_fixed = [&](const Vec3 &v) {
        Vec3 w = normalized * v;
        double m = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2])});
        if (!(m > 1e-12) || !std::isfinite(m)) return false;
        return fs_distance(w, v) <= 1e-8;
    };

    EigenData e;
    if (scale <= 1e6) {
        Classification c = classify(g, tol);
        if (c.cls == ElementClass3::IDENTITY) return out;
        out.infinite_order = classifies_infinite_order(c);
        if (!out.infinite_order) return out;
        e = c.eig;
    } else {
        // Huge lifts are automatically infinite order (torsion and
        // unit-rotation elements stay bounded; unipotent blocks grow only
        // polynomially).
        out.infinite_order = true;
        e = eigen_decompose((Cpx(1.0 / scale)) * g.lift(), tol);
    }

    std::vector<Vec3> candidates;
    std::optional<std::pair<Vec3, Vec3>> plane;
    if (e.shape == JordanShape::DIAG) {
        auto sizes = e.cluster_sizes();
        if (sizes[0] == 1) {
            for (int j = 0; j < 3; ++j) candidates.push_back(e.basis_column(j));
        } else if (sizes[0] == 2) {
            int pair_start =
                std::abs(e.eigenvalues[0] - e.eigenvalues[1]) == 0.0 ? 0 : 1;
            int lone = pair_start == 0 ? 2 : 0;
            plane = {e.basis_column(pair_start), e.basis_column(pair_start + 1)};
            candidates.push_back(e.basis_column(lone));
        }
    } else if (e.shape == JordanShape::BLOCK2_PLUS_1) {
        if (e.cluster_sizes()[0] == 3) {
            // lambda1 = lambda3: the kernel plane is fixed pointwise.
            plane = {e.basis_column(0), e.basis_column(2)};
        } else {
            candidates.push_back(e.basis_column(e.block_start));
            candidates.push_back(e.basis_column(e.block_start == 0 ? 2 : 0));
        }
    } else {
        candidates.push_back(e.basis_column(0));  // BLOCK3
    }

    for (const auto &v : candidates)
        if (genuinely_fixed(v)) out.isolated_fixed.push_back(v);
    if (plane) {
        const auto &[u, v] = *plane;
        Vec3 mix1{u[0] + v[0], u[1] + v[1], u[2] + v[2]};
        Vec3 mix2{u[0] + Cpx(0, 1) * v[0], u[1] + Cpx(0, 1) * v[1],
                  u[2] + Cpx(0, 1) * v[2]};
        if (genuinely_fixed(u) && genuinely_fixed(v) && genuinely_fixed(mix1) &&
            genuinely_fixed(mix2))
            out.fixed_line = plane;
        else
            for (const auto &w : {u, v})
                if (genuinely_fixed(w)) out.isolated_fixed.push_back(w);
    }
    return out;
}

}  // namespace

ClusterClouds cluster_oracle(const GroupSpec &spec, int max_len,
                             const std::vector<ProjPoint> &base_points,
                             const ClusterOracleOptions &opts,
                             const Tolerances &tol) {
    EnumerationOptions eopts;
    eopts.dedup_cap = opts.dedup_cap;
    auto words = enumerate_words(spec, max_len, eopts, tol);

    ClusterClouds out;
    out.L0.resolution = out.L1.resolution = out.L2.resolution = opts.resolution;

    // L0: fixed points of infinite-order elements; pointwise-fixed lines are
    // provably inside L0 and get sampled densely.
    for (const auto &we : words) {
        if (we.word.letters.empty()) continue;
        ElementAnalysis an = analyze_element(we.transform, tol);
        if (!an.infinite_order) continue;
        for (const auto &v : an.isolated_fixed)
            out.L0.add(ProjPoint(v), we.word.length(), -1);
        if (an.fixed_line)
            sample_projective_line(an.fixed_line->first, an.fixed_line->second,
                                   opts.fixed_line_samples, we.word.length(),
                                   out.L0);
    }

    // Long words only, applied to base points (L1) and to a compact grid
    // excluded from neighborhoods of the earlier layers (L2).
    std::vector<const WordElement *> long_words;
    for (const auto &we : words)
        if (we.word.length() >= std::max(1, opts.n_min)) long_words.push_back(&we);

    // Coarsened copies make the exclusion tests cheap; the effective
    // exclusion radius widens by at most the coarsening resolution.
    double coarse_res = std::max(opts.exclusion / 2.0, opts.resolution);
    PointCloud coarse_l0;
    coarse_l0.resolution = coarse_res;
    for (const auto &cp : out.L0.points) coarse_l0.add(cp.point, 0, -1);

    std::vector<ProjPoint> bases;
    for (const auto &b : base_points)
        if (coarse_l0.distance(b) > opts.exclusion) bases.push_back(b);
    if (!base_points.empty() && bases.empty())
        throw EmptyDomain("cluster_oracle: every base point is excluded");

    // One word at a time: a per-word image buffer keeps memory flat and the
    // serial insertion order deterministic regardless of the thread count.
    std::vector<ProjPoint> buffer;
    auto sweep = [&](const std::vector<ProjPoint> &sources, PointCloud &cloud) {
        buffer.assign(sources.size(), ProjPoint());
        for (const auto *wep : long_words) {
            const auto &we = *wep;
            parallel_for(static_cast<long>(sources.size()), opts.threads,
                         [&](long lo, long hi) {
                             for (long i = lo; i < hi; ++i)
                                 buffer[i] = apply(we.transform, sources[i]);
                         });
            for (size_t i = 0; i < sources.size(); ++i)
                cloud.add(buffer[i], we.word.length(), static_cast<int>(i));
        }
    };
    sweep(bases, out.L1);

    // Rejection-sample the compact grid K outside the excluded
    // neighborhoods. Each draw has exactly one log-small coordinate: that is
    // what lets orbit sweeps traverse the invariant lines at every scale,
    // while two independent imbalances would put mid-sweep images into
    // generic territory far from any limit structure.
    PointCloud coarse_l1;
    coarse_l1.resolution = coarse_res;
    for (const auto &cp : out.L1.points) coarse_l1.add(cp.point, 0, -1);
    std::vector<ProjPoint> kept;
    {
        Rng rng(opts.seed);
        long attempts = 0, cap = 200L * std::max(opts.grid_size, 1);
        while (static_cast<int>(kept.size()) < opts.grid_size &&
               attempts++ < cap) {
            int small = static_cast<int>(rng.next_u64() % 3);
            Vec3 v;
            for (int j = 0; j < 3; ++j) {
                double decades = j == small ? rng.uniform(0.0, opts.log_span)
                                            : rng.uniform(0.0, 2.0);
                v[j] = std::pow(10.0, -decades) * rng.unit_circle();
            }
            double m = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
            ProjPoint k(Vec3{v[0] / m, v[1] / m, v[2] / m});
            if (coarse_l0.distance(k) > opts.exclusion &&
                coarse_l1.distance(k) > opts.exclusion)
                kept.push_back(k);
        }
    }
    sweep(kept, out.L2);
    return out;
}

// --- control projection ------------------------------------------------------

namespace {

Mat3 standardizer_for(const ProjPoint &p, const ProjLine &l) {
    // Recognize the coordinate configurations exactly so the control chart is
    // the natural one there; otherwise build columns from the line span.
    auto is = [&](const ProjPoint &q) { return p.equals(q, 1e-12); };
    auto isl = [&](const Vec3 &dual) {
        return l.equals(ProjLine(dual), 1e-12);
    };
    if (is(ProjPoint::e3()) && isl(Vec3{0.0, 0.0, 1.0})) return Mat3::identity();
    if (is(ProjPoint::e1()) && isl(Vec3{1.0, 0.0, 0.0})) {
        // columns of h^{-1}: (e2, e3, e1)
        Mat3 hinv{};
        hinv(1, 0) = 1.0;
        hinv(2, 1) = 1.0;
        hinv(0, 2) = 1.0;
        return hinv.adjugate();  // det = +1
    }
    if (is(ProjPoint::e2()) && isl(Vec3{0.0, 1.0, 0.0})) {
        Mat3 hinv{};
        hinv(0, 0) = 1.0;
        hinv(2, 1) = 1.0;
        hinv(1, 2) = 1.0;
        Cpx d = hinv.det();
        hinv = (Cpx(1.0) / principal_root(d, 3)) * hinv;
        return hinv.adjugate();
    }
    Vec3 d = l.dual();
    Vec3 cands[3] = {cross(d, Vec3{1.0, 0.0, 0.0}), cross(d, Vec3{0.0, 1.0, 0.0}),
                     cross(d, Vec3{0.0, 0.0, 1.0})};
    std::sort(cands, cands + 3,
              [](const Vec3 &a, const Vec3 &b) { return norm(a) > norm(b); });
    Vec3 q1 = cands[0], q2 = cands[1];
    Mat3 hinv;
    for (int i = 0; i < 3; ++i) {
        hinv(i, 0) = q1[i];
        hinv(i, 1) = q2[i];
        hinv(i, 2) = p.coords()[i];
    }
    Cpx det = hinv.det();
    if (std::abs(det) < 1e-12)
        throw NotControllable("control point lies on the control line");
    hinv = (Cpx(1.0) / principal_root(det, 3)) * hinv;
    return hinv.adjugate();
}

}  // namespace

MobiusMap ControlProjection::project(const ProjTransform &g) const {
    Mat3 m = standardizer.lift() * g.lift() * standardizer.inverse().lift();
    Mat2 block{{m(0, 0), m(0, 1), m(1, 0), m(1, 1)}};
    return MobiusMap(block);
}

ControlProjection control_projection(const GroupSpec &spec, int kernel_search_len,
                                     const Tolerances &tol) {
    spec.validate();
    if (!spec.fixed_point || !spec.invariant_line)
        throw NotControllable("control_projection: no control point/line");
    const ProjPoint &p = *spec.fixed_point;
    const ProjLine &l = *spec.invariant_line;
    if (fs_point_line_distance(p, l) < 1e-6)
        throw NotControllable("control_projection: point lies on the line");

    for (const auto &g : spec.generators) {
        ProjPoint img = apply(g.transform, p);
        if (fs_distance(img, p) > 1e-8)
            throw PreconditionViolation("control_projection: generator " +
                                        g.name + " does not fix the control point");
    }

    ControlProjection out;
    out.standardizer = ProjTransform::from_lift_unchecked(standardizer_for(p, l));
    for (const auto &g : spec.generators)
        out.generator_images.push_back(out.project(g.transform));

    if (kernel_search_len > 0) {
        auto words = enumerate_words(spec, kernel_search_len, {}, tol);
        MobiusMap id2;
        for (const auto &we : words) {
            if (we.word.letters.empty()) continue;
            // Pi is a homomorphism, so the image is the product of letters.
            MobiusMap img = id2;
            for (auto [idx, sign] : we.word.letters) {
                const MobiusMap &gi = out.generator_images[idx];
                img = img * (sign > 0 ? gi : gi.inverse());
            }
            if (!img.proj_equal(id2, 1e-9)) continue;
            if (we.transform.proj_equal(ProjTransform(), tol.tau_cmp)) continue;
            ControlProjection::KernelWord kw;
            kw.word = we.word;
            kw.transform = we.transform;
            Mat3 m = out.standardizer.lift() * we.transform.lift() *
                     out.standardizer.inverse().lift();
            Cpx c = (m(0, 0) + m(1, 1)) / 2.0;
            m = (Cpx(1.0) / c) * m;
            double off = std::max({std::abs(m(0, 1)), std::abs(m(1, 0)),
                                   std::abs(m(0, 2)), std::abs(m(1, 2))});
            double diag = std::max(std::abs(m(0, 0) - Cpx(1.0)),
                                   std::abs(m(1, 1) - Cpx(1.0)));
            double z33 = std::abs(m(2, 2) - Cpx(1.0));
            Cpx shear_a = m(2, 0), shear_b = m(2, 1);
            double shear = std::hypot(std::abs(shear_a), std::abs(shear_b));
            kw.unipotent_shear_form =
                off <= 1e-8 && diag <= 1e-8 && z33 <= 1e-8 && shear > 1e-10;
            kw.tau = shear;  // canonical after rotating the line basis
            out.kernel.push_back(std::move(kw));
        }
    }
    return out;
}

// --- Schottky certificate ----------------------------------------------------

namespace {

// Disjointness / tangency of two flagged circular regions on the sphere.
struct RegionRelation {
    bool disjoint;
    bool tangent;
};

RegionRelation region_relation(const GenCircle &x, const GenCircle &y,
                               double tau) {
    bool xin = !x.region_contains(p1_infinity());
    bool yin = !y.region_contains(p1_infinity());
    if (x.is_line() || y.is_line()) {
        // Not needed by the certificates we produce; treat conservatively.
        return {false, false};
    }
    Cpx cx = x.center(), cy = y.center();
    double rx = x.radius(), ry = y.radius();
    double d = std::abs(cx - cy);
    if (xin && yin) {
        bool tangent = std::abs(d - (rx + ry)) <= tau;
        return {d >= rx + ry - tau, tangent};
    }
    if (!xin && !yin) return {false, false};  // both contain infinity
    if (!xin) {
        std::swap(cx, cy);
        std::swap(rx, ry);
    }
    // One disk interior vs one disk complement: disjoint iff the disk sits
    // inside the complement's hole.
    bool tangent = std::abs((ry - rx) - d) <= tau;
    return {d <= ry - rx + tau, tangent};
}

}  // namespace

SchottkyReport schottky_certificate(const GroupSpec &spec,
                                    const SchottkyPairing &pairing,
                                    const Tolerances &tol) {
    ControlProjection ctrl = control_projection(spec, 0, tol);

    SchottkyReport out;
    std::vector<const GenCircle *> regions;
    for (const auto &pr : pairing.pairs) {
        int gi = -1;
        for (size_t i = 0; i < spec.generators.size(); ++i)
            if (spec.generators[i].name == pr.generator) gi = static_cast<int>(i);
        if (gi < 0)
            throw PreconditionViolation("schottky_certificate: unknown generator " +
                                        pr.generator);
        const MobiusMap &m = ctrl.generator_images[gi];
        GenCircle image = mobius_circle_image(m, pr.R);
        SchottkyReport::PerGenerator rep;
        rep.generator = pr.generator;
        rep.circle_match = image.same_circle(pr.S, 1e-9);
        // gamma(R) must be the complement of closure(S): image side opposite
        // to the S-flagged side.
        rep.side_flip = rep.circle_match &&
                        !image.region_contains(pr.S.region_sample());
        double direct = std::max({std::abs(image.A() - pr.S.A()),
                                  std::abs(image.B() - pr.S.B()),
                                  std::abs(image.C() - pr.S.C())});
        double flipped = std::max({std::abs(image.A() + pr.S.A()),
                                   std::abs(image.B() + pr.S.B()),
                                   std::abs(image.C() + pr.S.C())});
        rep.circle_residual = std::min(direct, flipped);
        out.per_generator.push_back(rep);
        regions.push_back(&pr.R);
        regions.push_back(&pr.S);
    }

    out.disjoint = true;
    double tangency_tau = 1e-9;
    for (size_t i = 0; i < regions.size(); ++i)
        for (size_t j = i + 1; j < regions.size(); ++j) {
            auto rel = region_relation(*regions[i], *regions[j], tangency_tau);
            if (!rel.disjoint) out.disjoint = false;
            if (rel.tangent)
                out.tangent_pairs.push_back({static_cast<int>(i),
                                             static_cast<int>(j)});
        }
    out.kissing = !out.tangent_pairs.empty();

    // The closed regions must leave room: probe a deterministic sphere grid.
    out.covers_sphere = true;
    for (int i = 0; i < 400 && out.covers_sphere; ++i) {
        double t = M_PI * (double(i) + 0.5) / 400.0;
        for (int k = 0; k < 40; ++k) {
            double phi = 2.0 * M_PI * double(k) / 40.0;
            Vec2 z{std::sin(t) * std::polar(1.0, phi), Cpx(std::cos(t))};
            bool inside_any = false;
            for (const auto *r : regions) {
                // closed region: flagged side or on the circle
                double q = r->quad_form(z);
                if (q * r->side() < tangency_tau) inside_any = true;
            }
            if (!inside_any) {
                out.covers_sphere = false;
                break;
            }
        }
    }

    out.valid = out.disjoint && !out.covers_sphere &&
                std::all_of(out.per_generator.begin(), out.per_generator.end(),
                            [](const auto &r) {
                                return r.circle_match && r.side_flip;
                            });
    return out;
}

FinitenessResult finiteness_heuristic(const GroupSpec &spec, int max_len,
                                      const EnumerationOptions &opts,
                                      const Tolerances &tol) {
    auto words = enumerate_words(spec, max_len, opts, tol);
    FinitenessResult out;
    for (const auto &we : words) {
        if (we.word.letters.empty()) continue;
        if (norm_inf(we.transform.lift()) > 1e6) {
            out.verdict = FinitenessResult::INFINITE;
            out.witness = we.word;
            return out;
        }
        Classification c = classify(we.transform, tol);
        if (classifies_infinite_order(c)) {
            out.verdict = FinitenessResult::INFINITE;
            out.witness = we.word;
            out.witness_class = c.cls;
            return out;
        }
    }
    out.verdict = FinitenessResult::UNDETERMINED;
    return out;
}

}  // namespace kleinian
