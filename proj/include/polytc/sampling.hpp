#pragma once

#include <cstdint>
#include <vector>

#include "polytc/motion_planner.hpp"

namespace polytc {

/**
 * Deterministic counter-based generator: a SplitMix64 stream whose initial
 * state is derived from (seed, substream) by a 64-bit finalizer hash.  Equal
 * pairs reproduce the same draws no matter how other substreams interleave,
 * so parallel and serial verification runs see identical data.
 */
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t substream);

    /** Next raw 64-bit word. */
    std::uint64_t next_u64();
    /** Uniform double in [0, 1). */
    double next_double();
    /** Uniform integer in {0, ..., bound-1}; requires bound >= 1 (std::domain_error). */
    int next_below(int bound);
    /** Standard normal deviate (Box-Muller; the spare deviate is cached). */
    double next_normal();

private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/** Uniform point on S^k drawn from normalized Gaussian coordinates, k >= 1. */
[[nodiscard]] SpherePoint uniform_sphere(int k, SubstreamRng& rng);

enum class SampleMode {
    /**
     * Points drawn uniformly on the open part of each chosen cell, kept at
     * sup-norm distance >= margin from both poles and from +- every other
     * point in the same row, so classification never sits near a threshold.
     */
    generic,
    /**
     * Generic draw followed by independent probability-1/2 injections of
     * exact degeneracies: a repeated column, a +- coincidence within a row,
     * an exact pole entry, and an opposite-pole pair anchored at column 1.
     */
    degenerate,
};

/**
 * Configuration with column supports equal to the given faces: entries on the
 * support are uniform sphere points kept clear of the poles and of +- each
 * other by `margin` in sup norm; entries off the support are exactly the base
 * point.  Throws std::domain_error on a tuple entry that is not a face.
 */
[[nodiscard]] Configuration sample_on_cell(const Carrier& carrier, const std::vector<Face>& tuple,
                                           SubstreamRng& rng, double margin = 1e-7,
                                           double tol = 1e-9);

/**
 * Random configuration for an s-stage planning problem: cell faces drawn
 * uniformly from the faces of the complex, points per SampleMode.  The
 * generic margin (1e-7) keeps every non-exact comparison at least a decade
 * away from the classification ambiguity band.
 */
[[nodiscard]] Configuration sample_configuration(const Carrier& carrier, int s, SubstreamRng& rng,
                                                 SampleMode mode, double tol = 1e-9);

/**
 * Nearby configuration for continuity probes: every entry that is exactly a
 * pole stays fixed, exact +- aliases between columns are preserved as exact
 * aliases of the perturbed value, and each remaining entry moves by roughly
 * `delta` along a random tangent direction.  The classification is unchanged
 * whenever delta is far below the sampling margin of the input.
 */
[[nodiscard]] Configuration perturb_configuration(const Configuration& config, SubstreamRng& rng,
                                                  double delta);

/** Largest sup-norm coordinate distance between corresponding entries. */
[[nodiscard]] double configuration_distance(const Configuration& a, const Configuration& b);

}  // namespace polytc
