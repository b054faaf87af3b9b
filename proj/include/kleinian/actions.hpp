#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kleinian/cyclic_limits.hpp"
#include "kleinian/mobius.hpp"

namespace kleinian {

struct GroupSpec {
    struct Generator {
        std::string name;
        ProjTransform transform;
    };
    std::string name;
    std::vector<Generator> generators;
    std::optional<ProjPoint> fixed_point;   // distinguished control point
    std::optional<ProjLine> invariant_line; // control line (not through it)

    void validate() const;  // unique names, finite lifts
};

// Reduced word over the generators: (index, +-1) letters with no adjacent
// inverse pairs.
struct Word {
    std::vector<std::pair<int, int>> letters;
    bool reduced = true;

    int length() const { return static_cast<int>(letters.size()); }
    std::string format(const GroupSpec &spec) const;
};

struct WordElement {
    Word word;
    ProjTransform transform;
};

struct EnumerationOptions {
    long dedup_cap = 200000;      // BudgetExceeded past this many elements
    double hash_quantum = 1e-7;   // canonical-lift quantization for dedup
};

// All reduced words up to max_len, deduplicated projectively, in
// deterministic (length, lexicographic) order.
std::vector<WordElement> enumerate_words(const GroupSpec &spec, int max_len,
                                         const EnumerationOptions &opts = {},
                                         const Tolerances &tol = default_tol());

struct CloudPoint {
    ProjPoint point;
    int word_length;
    int base_index;  // source sample index; -1 for fixed-point layers
};

struct PointCloud {
    std::vector<CloudPoint> points;
    double resolution = 5e-3;

    bool add(const ProjPoint &p, int word_length, int base_index);
    double distance(const ProjPoint &x) const;  // min FS distance to the cloud

  private:
    std::vector<uint64_t> keys_;  // sorted quantized keys for dedup
};

struct ClusterOracleOptions {
    int n_min = 50;            // words shorter than this are not applied
    int grid_size = 1000;      // compact-grid samples for the L2 layer
    double resolution = 2e-3;  // cloud dedup resolution (FS scale)
    double exclusion = 0.02;   // grid exclusion radius around L0 u L1
    double log_span = 63.0;    // grid moduli sampled from 10^[-log_span, 0]
    uint64_t seed = 1;
    int fixed_line_samples = 600;  // samples along pointwise-fixed lines
    long dedup_cap = 200000;
    int threads = 1;
};

struct ClusterClouds {
    PointCloud L0, L1, L2;
    std::vector<const PointCloud *> all() const { return {&L0, &L1, &L2}; }
};

// Brute-force approximation of the three limit-set layers. L0 collects fixed
// points of infinite-order elements (whole pointwise-fixed lines are sampled);
// L1 and L2 collect images of base points / a compact grid under words of
// length >= n_min. The result is a subset-with-resolution, never exact.
ClusterClouds cluster_oracle(const GroupSpec &spec, int max_len,
                             const std::vector<ProjPoint> &base_points,
                             const ClusterOracleOptions &opts = {},
                             const Tolerances &tol = default_tol());

// Deterministic sample of base points / grids with log-uniform coordinate
// moduli, which is what lets orbit sweeps traverse invariant lines.
std::vector<ProjPoint> sample_projective_points(int count, uint64_t seed,
                                                double log_span);

// Whether an element provably has infinite order (a non-unit or irrational
// eigenvalue, or a nontrivial Jordan block).
bool classifies_infinite_order(const Classification &c);

struct ControlProjection {
    ProjTransform standardizer;  // h with h(p) = e3, h(line) = line(e1,e2)
    std::vector<MobiusMap> generator_images;
    MobiusMap project(const ProjTransform &g) const;  // Pi on one element

    struct KernelWord {
        Word word;
        ProjTransform transform;
        bool unipotent_shear_form;  // lift fixes a line through p pointwise
        Cpx tau;                    // shear magnitude in the standard frame
    };
    std::vector<KernelWord> kernel;  // nontrivial words with Pi(w) = id
};

// The holonomy-style projection Pi(g)(x) = pi(g(x)) onto the control line
// from the control point; every generator must fix the point.
ControlProjection control_projection(const GroupSpec &spec, int kernel_search_len = 0,
                                     const Tolerances &tol = default_tol());

struct SchottkyPairing {
    struct Pair {
        std::string generator;
        GenCircle R;
        GenCircle S;
    };
    std::vector<Pair> pairs;
};

struct SchottkyReport {
    struct PerGenerator {
        std::string generator;
        bool circle_match;    // Pi(g)(dR) = dS as circles
        bool side_flip;       // interior of R maps onto the complement of S
        double circle_residual;
    };
    bool valid = false;
    bool kissing = false;
    bool covers_sphere = false;  // union of closed regions leaves no room
    bool disjoint = false;
    std::vector<PerGenerator> per_generator;
    std::vector<std::pair<int, int>> tangent_pairs;  // region indices
};

// Ping-pong certificate on the control line: the regions are pi-preimages of
// the given disks, so the planar pairing condition is exactly the projected
// Moebius condition.
SchottkyReport schottky_certificate(const GroupSpec &spec,
                                    const SchottkyPairing &pairing,
                                    const Tolerances &tol = default_tol());

struct FinitenessResult {
    enum { INFINITE, UNDETERMINED } verdict = UNDETERMINED;
    std::optional<Word> witness;
    std::optional<ElementClass3> witness_class;
};

// INFINITE when some enumerated word classifies into an infinite-order class
// (off-unit or irrational-rotation eigenvalue, or a nontrivial Jordan
// block); UNDETERMINED otherwise -- finiteness itself is never certified.
FinitenessResult finiteness_heuristic(const GroupSpec &spec, int max_len,
                                      const EnumerationOptions &opts = {},
                                      const Tolerances &tol = default_tol());

// Simple index-chunked parallel map with deterministic output placement.
void parallel_for(long n, int threads, const std::function<void(long, long)> &chunk);

}  // namespace kleinian
