#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polytc/certificate.hpp"
#include "polytc/sampling.hpp"
#include "polytc/tc_formulas.hpp"

namespace polytc {

/** One violated property: what failed, on which data, and how. */
struct VerificationFailure {
    std::string property;
    std::string configuration;
    std::string detail;
};

/**
 * Outcome of a verification batch.  Failures are data, not exceptions: an
 * empty list means every check passed.  Reports are reproducible functions of
 * (corpus, s, trials, tol, seed); worker threads never affect the content.
 */
struct VerificationReport {
    std::string spec_id;
    int s = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    int grid = 0;
    long long checks = 0;
    int max_norm_seen = 0;
    /** Largest observed (path distance)/(configuration distance) over continuity pairs. */
    double continuity_max_ratio = 0.0;
    std::string note;
    std::vector<VerificationFailure> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/**
 * Randomized planner checks on `trials` sampled configurations, alternating
 * generic and degenerate draws.  Per configuration: the plan must classify
 * without ambiguity, start and end at the prescribed columns within tol (sup
 * norm), stay on the spheres and inside the complex on a 256-point t-grid,
 * satisfy the two-section structure bitwise on a 257-point grid containing
 * t = 1/2, and report a stratum norm within [0, tc_s].  Additionally runs
 * continuity pairs at perturbation scale 1e-5 (path grid distance at most 100
 * times the configuration distance), a deterministic witness-cell
 * configuration realizing the top stratum norm, and an exhaustive pass over
 * all cell tuples when |faces|^s <= 4096.  The maximal observed stratum norm
 * must equal tc_s.  Trials run in independent substreams, so reports are
 * byte-identical for any worker count (capped by POLYTC_THREADS).
 */
[[nodiscard]] VerificationReport verify_planner(const Carrier& carrier, int s, int trials,
                                                double tol, std::uint64_t seed);

/**
 * Exhaustive formula cross-checks over a corpus: both norm routes per ordered
 * maximal-face tuple, the two parity-aware norm routes plus a third direct
 * evaluation, parity specializations (all-odd reduces to the symmetric norm,
 * all-even to s(1+dim)), generic bounds, linear growth for all-odd members,
 * join additivity and the wedge three-way maximum on deterministic pairs, and
 * the skeleton closed-form grid.
 */
[[nodiscard]] VerificationReport verify_formulas(std::span<const Carrier> corpus,
                                                 std::span<const int> s_values);

/**
 * Certificate soundness over a corpus: for the norm witness of every spec and
 * stage count, the certificate must carry exactly tc_s factors, each factor
 * killed by the diagonal pullback, a nonzero product, and distinguished
 * coefficient of magnitude 2^|J'|; additionally the even-generator power
 * identity (zd_bar u)^s = (1-s) s! u^{tensor s} on one even vertex per spec.
 */
[[nodiscard]] VerificationReport verify_certificates(std::span<const Carrier> corpus,
                                                     std::span<const int> s_values);

/**
 * Oracle agreement of the symbolic search with the combinatorial norm:
 * zcl_lower_search must reach exactly tc_s, untruncated, on every entry.
 */
[[nodiscard]] VerificationReport verify_zcl_search(std::span<const Carrier> corpus,
                                                   std::span<const int> s_values);

/**
 * Deterministic corpus: every simplicial complex on n <= 4 vertices with at
 * most four maximal faces covering [n] (plus the complex with only the empty
 * face), each under three dimension patterns: mixed k_i in {1,2,3}, all odd
 * k_i in {1,3}, and all even k_i = 2.  At least 50 specs.
 */
[[nodiscard]] std::vector<Carrier> standard_corpus();

/** Corpus members on at most three vertices (the planner-sized subset). */
[[nodiscard]] std::vector<Carrier> planner_corpus();

/**
 * Small-instance corpus for the symbolic search oracle: the complexes on
 * n <= 3 vertices under four dimension patterns with k_i in {1,2}.
 */
[[nodiscard]] std::vector<Carrier> tiny_corpus();

/** One reproduced reference value: a named claim with expected and computed results. */
struct ReferenceExample {
    std::string claim;
    long long expected = 0;
    long long computed = 0;
};

/**
 * The reference computations: named topological complexity values and
 * closed-form grids with their expected results, recomputed by the engine.
 * Grid rows report the number of matching cases.
 */
[[nodiscard]] std::vector<ReferenceExample> reference_examples();

/** Worker count for verification batches: POLYTC_THREADS, else the hardware count. */
[[nodiscard]] int worker_count();

}  // namespace polytc
