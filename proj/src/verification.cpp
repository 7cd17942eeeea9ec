#include "polytc/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

namespace polytc {

namespace {

constexpr int kGridPoints = 256;
constexpr int kContinuityPairs = 32;
constexpr double kContinuityDelta = 1e-5;
constexpr double kContinuityLimit = 100.0;
constexpr double kGenericMargin = 1e-7;
constexpr double kStableMargin = 1e-3;
constexpr double kContinuityMargin = 0.05;
constexpr double kSphereTol = 1e-9;
constexpr long long kExhaustiveCellCap = 4096;

void run_indexed(int total, const std::function<void(int)>& fn) {
    const int workers = std::min(worker_count(), total);
    if (workers <= 1) {
        for (int i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= total) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

double sup_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - b).lpNorm<Eigen::Infinity>();
}

std::string tuple_str(std::span<const Face> tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += tuple[i].to_string();
    }
    return out + ")";
}

/** Compact dump in the configuration JSON layout, full double precision. */
std::string config_brief(const Configuration& config) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"columns\":[";
    for (int j = 1; j <= config.stages(); ++j) {
        if (j > 1) os << ",";
        os << "[";
        for (int i = 1; i <= config.rows(); ++i) {
            if (i > 1) os << ",";
            os << "[";
            const auto& c = config.point(i, j).coords();
            for (int k = 0; k < c.size(); ++k) {
                if (k > 0) os << ",";
                os << c[k];
            }
            os << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

struct ConfigCheck {
    std::vector<VerificationFailure> failures;
    int norm = 0;
};

/** All per-configuration planner properties; failures are collected, not thrown. */
ConfigCheck check_config(const Configuration& config, int tc_value, double tol) {
    ConfigCheck out;
    const auto fail = [&](const char* property, std::string detail) {
        out.failures.push_back({property, config_brief(config), std::move(detail)});
    };

    std::optional<PlanResult> pr;
    try {
        pr.emplace(plan(config, tol));
    } catch (const AmbiguityError& e) {
        fail("classification-ambiguity", e.what());
        return out;
    } catch (const std::exception& e) {
        fail("planner-exception", e.what());
        return out;
    }
    out.norm = pr->stratum.norm();
    if (pr->domain_index != out.norm || out.norm < 0 || out.norm > tc_value) {
        fail("domain-index", "index " + std::to_string(pr->domain_index) + ", norm " +
                                 std::to_string(out.norm) + ", tc " + std::to_string(tc_value));
    }

    const int s = config.stages();
    const int n = config.rows();
    const auto& paths = pr->paths;
    std::vector<SpherePoint> base;
    base.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        base.push_back(SpherePoint::base_point(config.spec()->dim_of(i)));

    for (int j = 1; j <= s; ++j) {
        for (int i = 1; i <= n; ++i) {
            const auto& p = paths.path(i, j);
            if (sup_dist(p.eval(0.0).coords(), config.point(i, 1).coords()) > tol)
                fail("endpoint-start", "row " + std::to_string(i) + ", column " + std::to_string(j));
            if (sup_dist(p.eval(1.0).coords(), config.point(i, j).coords()) > tol)
                fail("endpoint-end", "row " + std::to_string(i) + ", column " + std::to_string(j));
        }
    }

    for (int g = 0; g < kGridPoints; ++g) {
        const double t = static_cast<double>(g) / (kGridPoints - 1);
        for (int j = 1; j <= s; ++j) {
            std::uint64_t supp = 0;
            for (int i = 1; i <= n; ++i) {
                const SpherePoint p = paths.path(i, j).eval(t);
                if (std::abs(p.coords().norm() - 1.0) > kSphereTol)
                    fail("on-sphere", "row " + std::to_string(i) + ", column " + std::to_string(j) +
                                          ", t " + std::to_string(t));
                if (sup_dist(p.coords(), base[static_cast<std::size_t>(i - 1)].coords()) > tol)
                    supp |= std::uint64_t{1} << (i - 1);
            }
            if (!config.spec()->complex().contains(Face(supp)))
                fail("containment", "column " + std::to_string(j) + ", t " + std::to_string(t) +
                                        ", support " + Face(supp).to_string());
        }
    }

    // Two-section structure, bitwise, on a grid containing t = 1/2 exactly:
    // rows pinned at the base point in column 1 hold still through the first
    // half; entries prescribed at the base point are reached by the second.
    for (int i = 1; i <= n; ++i) {
        const bool stationary = config.point(i, 1) == base[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= s; ++j) {
            const bool lands = config.point(i, j) == base[static_cast<std::size_t>(i - 1)];
            if (!stationary && !lands) continue;
            for (int g = 0; g <= kGridPoints; ++g) {
                const double t = static_cast<double>(g) / kGridPoints;
                if (stationary && t <= 0.5 &&
                    !(paths.path(i, j).eval(t) == config.point(i, 1)))
                    fail("two-section-first", "row " + std::to_string(i) + ", column " +
                                                  std::to_string(j) + ", t " + std::to_string(t));
                if (lands && t >= 0.5 &&
                    !(paths.path(i, j).eval(t) == base[static_cast<std::size_t>(i - 1)]))
                    fail("two-section-second", "row " + std::to_string(i) + ", column " +
                                                   std::to_string(j) + ", t " + std::to_string(t));
            }
        }
    }
    return out;
}

struct PlannerSlot {
    std::vector<VerificationFailure> failures;
    int norm = 0;
    double ratio = 0.0;
};

Rational rational_pow2(int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= 2;
    return r;
}

Rational rational_factorial(int m) {
    Rational r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

/** All nonempty subsets of [n] in ascending bitmask order. */
std::vector<Face> nonempty_subsets(int n) {
    std::vector<Face> out;
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
    return out;
}

bool is_antichain(std::span<const Face> faces) {
    for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t b = 0; b < faces.size(); ++b)
            if (a != b && faces[a].subset_of(faces[b])) return false;
    return true;
}

/** All covering antichains on [n] with 1..4 members, plus {∅} for n = 1. */
std::vector<SimplicialComplex> corpus_complexes(int max_n) {
    std::vector<SimplicialComplex> out;
    out.push_back(SimplicialComplex::from_maximal_faces(1, {}));
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Face> subs = nonempty_subsets(n);
        const Face full(~std::uint64_t{0} >> (64 - n));
        const int m = static_cast<int>(subs.size());
        for (int size = 1; size <= 4; ++size) {
            if (size > m) break;
            std::vector<int> idx(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
            for (;;) {
                std::vector<Face> pick;
                Face join_all;
                for (int i : idx) {
                    pick.push_back(subs[static_cast<std::size_t>(i)]);
                    join_all = join_all | subs[static_cast<std::size_t>(i)];
                }
                if (join_all == full && is_antichain(pick))
                    out.push_back(SimplicialComplex::from_maximal_faces(n, pick));
                int pos = size - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int i = pos + 1; i < size; ++i)
                    idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
    }
    return out;
}

Carrier make_spec(const SimplicialComplex& k, std::vector<int> dims, std::string name) {
    return std::make_shared<const SphereProductSpec>(k, std::move(dims), std::move(name));
}

std::vector<Carrier> build_corpus(int max_n) {
    const std::vector<SimplicialComplex> complexes = corpus_complexes(max_n);
    std::vector<Carrier> out;
    out.reserve(complexes.size() * 3);
    for (std::size_t c = 0; c < complexes.size(); ++c) {
        const SimplicialComplex& k = complexes[c];
        const int n = k.vertex_count();
        std::vector<int> mixed(static_cast<std::size_t>(n));
        std::vector<int> odd(static_cast<std::size_t>(n));
        std::vector<int> even(static_cast<std::size_t>(n), 2);
        for (int i = 0; i < n; ++i) {
            mixed[static_cast<std::size_t>(i)] = static_cast<int>((i + c) % 3) + 1;
            odd[static_cast<std::size_t>(i)] = static_cast<int>((i + c) % 2) * 2 + 1;
        }
        const std::string stem = "K" + std::to_string(n) + "-" + std::to_string(c);
        out.push_back(make_spec(k, std::move(mixed), stem + "A"));
        out.push_back(make_spec(k, std::move(odd), stem + "B"));
        out.push_back(make_spec(k, std::move(even), stem + "C"));
    }
    return out;
}

bool all_odd_on_support(const SphereProductSpec& spec) {
    return (spec.even_vertices() & spec.complex().vertex_support()).empty();
}

bool all_even_on_support(const SphereProductSpec& spec) {
    return (spec.odd_vertices() & spec.complex().vertex_support()).empty();
}

/** Visits every s-tuple over the list, in odometer order. */
void for_each_tuple(std::span<const Face> list, int s,
                    const std::function<void(std::span<const Face>)>& fn) {
    std::vector<Face> tuple(static_cast<std::size_t>(s), list[0]);
    std::vector<int> idx(static_cast<std::size_t>(s), 0);
    const int m = static_cast<int>(list.size());
    for (;;) {
        fn(tuple);
        int pos = s - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1) {
            idx[static_cast<std::size_t>(pos)] = 0;
            tuple[static_cast<std::size_t>(pos)] = list[0];
            --pos;
        }
        if (pos < 0) return;
        ++idx[static_cast<std::size_t>(pos)];
        tuple[static_cast<std::size_t>(pos)] =
            list[static_cast<std::size_t>(idx[static_cast<std::size_t>(pos)])];
    }
}

/** The fat-wedge family member on [n] missing the facets indexed by 1..removed. */
SimplicialComplex fat_wedge_complex(int n, int removed) {
    std::vector<Face> maximal;
    const Face full(~std::uint64_t{0} >> (64 - n));
    const Face removed_set((std::uint64_t{1} << removed) - 1);
    for (int i = 1; i <= n; ++i) {
        if (!removed_set.contains(i)) maximal.push_back(full - Face::from_vertices({i}));
    }
    for (int a = 1; a <= removed; ++a)
        for (int b = a + 1; b <= removed; ++b)
            maximal.push_back(full - Face::from_vertices({a, b}));
    return SimplicialComplex::from_maximal_faces(n, std::move(maximal));
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("POLYTC_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 4 : static_cast<int>(std::min<unsigned>(hw, 64));
}

std::vector<Carrier> standard_corpus() { return build_corpus(4); }

std::vector<Carrier> planner_corpus() {
    std::vector<Carrier> out;
    for (Carrier& c : build_corpus(4))
        if (c->complex().vertex_count() <= 3) out.push_back(std::move(c));
    return out;
}

std::vector<Carrier> tiny_corpus() {
    std::vector<Carrier> out;
    const std::vector<SimplicialComplex> complexes = corpus_complexes(3);
    for (std::size_t c = 0; c < complexes.size(); ++c) {
        const SimplicialComplex& k = complexes[c];
        const int n = k.vertex_count();
        std::vector<std::vector<int>> patterns;
        patterns.emplace_back(static_cast<std::size_t>(n), 1);
        patterns.emplace_back(static_cast<std::size_t>(n), 2);
        std::vector<int> alt1(static_cast<std::size_t>(n));
        std::vector<int> alt2(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            alt1[static_cast<std::size_t>(i)] = 1 + i % 2;
            alt2[static_cast<std::size_t>(i)] = 2 - i % 2;
        }
        patterns.push_back(std::move(alt1));
        patterns.push_back(std::move(alt2));
        std::vector<std::vector<int>> used;
        for (std::size_t p = 0; p < patterns.size(); ++p) {
            if (std::find(used.begin(), used.end(), patterns[p]) != used.end()) continue;
            used.push_back(patterns[p]);
            out.push_back(make_spec(k, patterns[p],
                                    "T" + std::to_string(n) + "-" + std::to_string(c) + "-" +
                                        std::to_string(p)));
        }
    }
    return out;
}

VerificationReport verify_planner(const Carrier& carrier, int s, int trials, double tol,
                                  std::uint64_t seed) {
    if (!carrier) throw std::domain_error("verify_planner: null spec");
    if (s < 2) throw std::domain_error("verify_planner requires s >= 2");
    if (trials < 0) throw std::domain_error("verify_planner: negative trial count");

    VerificationReport rep;
    rep.spec_id = carrier->id();
    rep.s = s;
    rep.trials = trials;
    rep.seed = seed;
    rep.tol = tol;
    rep.grid = kGridPoints;
    rep.note = "continuity bound L=100 at delta<=1e-4 is an empirical smoke-test threshold, "
               "not a proven bound";
    if (trials == 0) return rep;

    const NormWitness wit = tc_s(*carrier, s);
    const int tc = wit.value;

    const std::vector<Face> all_faces = carrier->complex().faces();
    long long cells = 1;
    for (int j = 0; j < s && cells <= kExhaustiveCellCap; ++j)
        cells *= static_cast<long long>(all_faces.size());
    std::vector<std::vector<Face>> exhaustive;
    if (cells <= kExhaustiveCellCap) {
        exhaustive.reserve(static_cast<std::size_t>(cells));
        for_each_tuple(all_faces, s, [&](std::span<const Face> tuple) {
            exhaustive.emplace_back(tuple.begin(), tuple.end());
        });
    }

    const int witness_idx = trials + kContinuityPairs;
    const int total = witness_idx + 1 + static_cast<int>(exhaustive.size());
    std::vector<PlannerSlot> slots(static_cast<std::size_t>(total));

    const auto job = [&](int idx) {
        PlannerSlot& slot = slots[static_cast<std::size_t>(idx)];
        try {
            if (idx < trials) {
                SubstreamRng rng(seed, static_cast<std::uint64_t>(idx));
                const SampleMode mode =
                    idx % 2 == 0 ? SampleMode::generic : SampleMode::degenerate;
                const Configuration config = sample_configuration(carrier, s, rng, mode, tol);
                ConfigCheck res = check_config(config, tc, tol);
                slot.failures = std::move(res.failures);
                slot.norm = res.norm;
            } else if (idx < witness_idx) {
                const int pair = idx - trials;
                SubstreamRng rng(seed, 3000000 + static_cast<std::uint64_t>(pair));
                std::vector<Face> tuple;
                for (int j = 0; j < s; ++j)
                    tuple.push_back(all_faces[static_cast<std::size_t>(
                        rng.next_below(static_cast<int>(all_faces.size())))]);
                const Configuration base =
                    sample_on_cell(carrier, tuple, rng, kContinuityMargin, tol);
                const Configuration moved =
                    perturb_configuration(base, rng, kContinuityDelta);
                const double dm = configuration_distance(base, moved);
                if (dm == 0.0) return;
                if (dm > 1e-4) {
                    slot.failures.push_back({"continuity-scale", config_brief(base),
                                             "pair distance " + std::to_string(dm)});
                    return;
                }
                const PlanResult a = plan(base, tol);
                const PlanResult b = plan(moved, tol);
                slot.norm = a.stratum.norm();
                if (!(a.stratum == b.stratum)) {
                    slot.failures.push_back({"continuity-stratum", config_brief(base),
                                             "perturbation changed the stratum"});
                    return;
                }
                double dpath = 0.0;
                for (int g = 0; g <= kGridPoints; ++g) {
                    const double t = static_cast<double>(g) / kGridPoints;
                    for (int j = 1; j <= s; ++j)
                        for (int i = 1; i <= base.rows(); ++i)
                            dpath = std::max(dpath,
                                             sup_dist(a.paths.path(i, j).eval(t).coords(),
                                                      b.paths.path(i, j).eval(t).coords()));
                }
                slot.ratio = dpath / dm;
                if (dpath > kContinuityLimit * dm) {
                    slot.failures.push_back(
                        {"continuity", config_brief(base),
                         "path distance " + std::to_string(dpath) + " for pair distance " +
                             std::to_string(dm)});
                }
            } else if (idx == witness_idx) {
                SubstreamRng rng(seed, 2000000);
                const Configuration config =
                    sample_on_cell(carrier, wit.tuple, rng, kStableMargin, tol);
                ConfigCheck res = check_config(config, tc, tol);
                slot.failures = std::move(res.failures);
                slot.norm = res.norm;
                if (res.norm != tc)
                    slot.failures.push_back(
                        {"norm-coverage-witness", config_brief(config),
                         "witness cell " + tuple_str(wit.tuple) + " classified to norm " +
                             std::to_string(res.norm) + ", expected " + std::to_string(tc)});
            } else {
                const int cell = idx - witness_idx - 1;
                SubstreamRng rng(seed, 1000000 + static_cast<std::uint64_t>(cell));
                const Configuration config = sample_on_cell(
                    carrier, exhaustive[static_cast<std::size_t>(cell)], rng, kStableMargin, tol);
                ConfigCheck res = check_config(config, tc, tol);
                slot.failures = std::move(res.failures);
                slot.norm = res.norm;
            }
        } catch (const std::exception& e) {
            slot.failures.push_back({"harness-exception", "", e.what()});
        }
    };
    run_indexed(total, job);

    int max_norm = 0;
    for (const PlannerSlot& slot : slots) {
        max_norm = std::max(max_norm, slot.norm);
        rep.continuity_max_ratio = std::max(rep.continuity_max_ratio, slot.ratio);
        for (const VerificationFailure& f : slot.failures) rep.failures.push_back(f);
    }
    rep.checks = total;
    rep.max_norm_seen = max_norm;
    if (max_norm != tc)
        rep.failures.push_back({"norm-coverage", "",
                                "maximal observed stratum norm " + std::to_string(max_norm) +
                                    " differs from tc_s " + std::to_string(tc)});
    return rep;
}

VerificationReport verify_formulas(std::span<const Carrier> corpus,
                                   std::span<const int> s_values) {
    VerificationReport rep;
    rep.spec_id = "formula-corpus[" + std::to_string(corpus.size()) + "]";
    const auto fail = [&](const char* property, const std::string& where, std::string detail) {
        rep.failures.push_back({property, where, std::move(detail)});
    };

    for (const Carrier& carrier : corpus) {
        const SphereProductSpec& spec = *carrier;
        const SimplicialComplex& k = spec.complex();
        const std::vector<Face>& maximal = k.maximal_faces();
        const Face odd = spec.odd_vertices();

        for (int s : s_values) {
            // Both norm routes per ordered tuple, plus the direct parity-aware
            // maximum recomputed here as an independent oracle.
            int direct_mixed = 0;
            bool tuple_trouble = false;
            for_each_tuple(maximal, s, [&](std::span<const Face> tuple) {
                ++rep.checks;
                int total = 0;
                Face meet = tuple[0];
                for (Face f : tuple) {
                    total += f.size();
                    meet = meet & f;
                }
                direct_mixed = std::max(direct_mixed, total - (meet & odd).size());
                try {
                    const int v = norm_nk(k, tuple);
                    if (v != total - meet.size()) {
                        fail("norm-routes", spec.id(),
                             "tuple " + tuple_str(tuple) + " norm " + std::to_string(v));
                        tuple_trouble = true;
                    }
                } catch (const std::exception& e) {
                    fail("norm-routes", spec.id(), e.what());
                    tuple_trouble = true;
                }
            });
            if (tuple_trouble) continue;

            NormWitness mixed{};
            try {
                mixed = mixed_norm(spec, s);
            } catch (const std::exception& e) {
                fail("mixed-routes", spec.id(), e.what());
                continue;
            }
            ++rep.checks;
            if (mixed.value != direct_mixed)
                fail("mixed-routes", spec.id(),
                     "s " + std::to_string(s) + ": engine " + std::to_string(mixed.value) +
                         ", direct " + std::to_string(direct_mixed));
            if (tc_s(spec, s).value != mixed.value)
                fail("tc-equals-norm", spec.id(), "s " + std::to_string(s));

            if (all_odd_on_support(spec)) {
                ++rep.checks;
                if (mixed.value != norm_ns(k, s).value)
                    fail("parity-odd", spec.id(), "s " + std::to_string(s));
            }
            if (all_even_on_support(spec)) {
                ++rep.checks;
                if (mixed.value != s * (1 + k.dim()))
                    fail("parity-even", spec.id(), "s " + std::to_string(s));
            }

            const GenericBounds gb = generic_bounds(spec, s);
            ++rep.checks;
            if (gb.lower != mixed.value || mixed.value > gb.upper)
                fail("generic-bounds", spec.id(),
                     "s " + std::to_string(s) + ": [" + std::to_string(gb.lower) + "," +
                         std::to_string(gb.upper) + "] around " + std::to_string(mixed.value));

            int witness_sum = 0;
            for (Face f : mixed.tuple) witness_sum += f.size();
            if (norm_nk(k, mixed.tuple) > witness_sum)
                fail("norm-sum-bound", spec.id(), "s " + std::to_string(s));
        }

        if (all_odd_on_support(spec)) {
            const int w = k.num_maximal();
            for (int sp = w; sp <= w + 2; ++sp) {
                ++rep.checks;
                try {
                    if (!linear_growth_check(spec, sp))
                        fail("linear-growth", spec.id(), "s " + std::to_string(sp));
                } catch (const std::exception& e) {
                    fail("linear-growth", spec.id(), e.what());
                }
            }
        }

        if (spec.complex().is_pure() && all_odd_on_support(spec)) {
            for (int s : s_values) {
                ++rep.checks;
                try {
                    if (tc_pure_closed_form(spec, s) != tc_s(spec, s).value)
                        fail("pure-closed-form", spec.id(), "s " + std::to_string(s));
                } catch (const std::exception& e) {
                    fail("pure-closed-form", spec.id(), e.what());
                }
            }
        }
    }

    // Join additivity and the wedge three-way maximum on deterministic pairs.
    if (!corpus.empty()) {
        SubstreamRng rng(0xC0FFEE, 0);
        const int pair_count = 20;
        for (int p = 0; p < pair_count; ++p) {
            const Carrier& a = corpus[static_cast<std::size_t>(
                rng.next_below(static_cast<int>(corpus.size())))];
            const Carrier& b = corpus[static_cast<std::size_t>(
                rng.next_below(static_cast<int>(corpus.size())))];
            std::vector<int> dims = a->dims();
            dims.insert(dims.end(), b->dims().begin(), b->dims().end());
            const SphereProductSpec joined(join(a->complex(), b->complex()), dims);
            const Carrier& x = (1 + a->complex().dim() >= 1 + b->complex().dim()) ? a : b;
            const Carrier& y = (&x == &a) ? b : a;
            for (int s : s_values) {
                ++rep.checks;
                if (tc_s(joined, s).value != tc_s(*a, s).value + tc_s(*b, s).value)
                    fail("join-additivity", a->id() + "*" + b->id(), "s " + std::to_string(s));
                ++rep.checks;
                try {
                    const int wedge = tc_wedge(*x, *y, s);
                    const int expected = std::max({tc_s(*x, s).value, tc_s(*y, s).value,
                                                   (s - 1) * (1 + x->complex().dim()) +
                                                       (1 + y->complex().dim())});
                    if (wedge != expected)
                        fail("wedge-three-way", x->id() + "v" + y->id(),
                             "s " + std::to_string(s));
                } catch (const std::exception& e) {
                    fail("wedge-three-way", x->id() + "v" + y->id(), e.what());
                }
            }
        }
    }

    // Skeleton closed-form grid (self-asserting against the engine).
    for (int n = 2; n <= 6; ++n) {
        for (int d = 1; d <= n; ++d) {
            for (int s : s_values) {
                ++rep.checks;
                try {
                    if (tc_skeleton_closed_form(n, d, s) != std::min(s * d, (s - 1) * n))
                        fail("skeleton-grid", "skeleton(" + std::to_string(n) + "," +
                                                  std::to_string(d) + ")",
                             "s " + std::to_string(s));
                } catch (const std::exception& e) {
                    fail("skeleton-grid",
                         "skeleton(" + std::to_string(n) + "," + std::to_string(d) + ")",
                         e.what());
                }
            }
        }
    }

    // Fat-wedge grid at s = n, all dimensions odd: removing m facets from the
    // full skeleton family costs m for m <= 1 and ceil(m/2) afterwards.
    for (int n = 4; n <= 5; ++n) {
        for (int removed = 0; removed < n; ++removed) {
            ++rep.checks;
            const int expected = removed <= 1 ? n * (n - 1) - removed
                                 : removed % 2 == 1 ? n * (n - 1) - (removed / 2 + 1)
                                                    : n * (n - 1) - removed / 2;
            const SphereProductSpec spec(
                fat_wedge_complex(n, removed),
                std::vector<int>(static_cast<std::size_t>(n), 1));
            if (tc_s(spec, n).value != expected)
                fail("fat-wedge-grid", "n " + std::to_string(n),
                     "removed " + std::to_string(removed));
        }
    }
    return rep;
}

VerificationReport verify_certificates(std::span<const Carrier> corpus,
                                       std::span<const int> s_values) {
    VerificationReport rep;
    rep.spec_id = "certificate-corpus[" + std::to_string(corpus.size()) + "]";

    struct Job {
        const Carrier* carrier;
        int s;
    };
    std::vector<Job> jobs;
    for (const Carrier& c : corpus)
        for (int s : s_values) jobs.push_back({&c, s});
    std::vector<std::vector<VerificationFailure>> slots(jobs.size());
    std::vector<long long> counts(jobs.size(), 0);

    const auto job = [&](int idx) {
        const Carrier& carrier = *jobs[static_cast<std::size_t>(idx)].carrier;
        const int s = jobs[static_cast<std::size_t>(idx)].s;
        auto& failures = slots[static_cast<std::size_t>(idx)];
        auto& checks = counts[static_cast<std::size_t>(idx)];
        const auto fail = [&](const char* property, std::string detail) {
            failures.push_back({property, carrier->id() + " s=" + std::to_string(s),
                                std::move(detail)});
        };
        try {
            const NormWitness wit = tc_s(*carrier, s);
            const Certificate cert = build_certificate(carrier, s, wit.tuple);
            ++checks;
            if (static_cast<int>(cert.factors.size()) != wit.value)
                fail("certificate-count", std::to_string(cert.factors.size()) + " factors for norm " +
                                              std::to_string(wit.value));
            for (const TensorElement& factor : cert.factors) {
                ++checks;
                if (!is_zero_divisor(factor)) fail("certificate-zero-divisor", "factor survives");
            }
            ++checks;
            if (cert.product.is_zero()) fail("certificate-product", "product vanished");
            Rational mag = cert.distinguished.second;
            if (mag < 0) mag = -mag;
            ++checks;
            if (mag != rational_pow2(cert.j_prime.size()))
                fail("certificate-coefficient",
                     "magnitude " + rational_to_string(cert.distinguished.second) +
                         " for |J'| = " + std::to_string(cert.j_prime.size()));
            const auto it = cert.product.terms().find(cert.distinguished.first);
            ++checks;
            if (it == cert.product.terms().end() || !(it->second == cert.distinguished.second))
                fail("certificate-distinguished", "anchor term missing from the product");
        } catch (const std::exception& e) {
            fail("certificate-build", e.what());
        }

        // Even-generator power identity on the first even vertex spanning a face.
        for (int v = 1; v <= carrier->complex().vertex_count(); ++v) {
            if (carrier->dim_of(v) % 2 != 0) continue;
            const Face fv = Face::from_vertices({v});
            if (!carrier->complex().contains(fv)) continue;
            try {
                const TensorElement bar = zd_bar(AlgebraElement::generator(carrier, v), s);
                TensorElement power = bar;
                for (int m = 1; m < s; ++m) power = tensor_multiply(power, bar);
                TensorElement expected =
                    TensorElement::basis(carrier, std::vector<Face>(static_cast<std::size_t>(s), fv));
                Rational scale = rational_factorial(s);
                scale *= 1 - s;
                expected *= scale;
                ++checks;
                if (!(power == expected)) fail("even-power-identity", "vertex " + std::to_string(v));
            } catch (const std::exception& e) {
                fail("even-power-identity", e.what());
            }
            break;
        }
    };
    run_indexed(static_cast<int>(jobs.size()), job);

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        rep.checks += counts[i];
        for (VerificationFailure& f : slots[i]) rep.failures.push_back(std::move(f));
    }
    return rep;
}

VerificationReport verify_zcl_search(std::span<const Carrier> corpus,
                                     std::span<const int> s_values) {
    VerificationReport rep;
    rep.spec_id = "zcl-corpus[" + std::to_string(corpus.size()) + "]";

    struct Job {
        const Carrier* carrier;
        int s;
    };
    std::vector<Job> jobs;
    for (const Carrier& c : corpus)
        for (int s : s_values) jobs.push_back({&c, s});
    std::vector<std::vector<VerificationFailure>> slots(jobs.size());

    const auto job = [&](int idx) {
        const Carrier& carrier = *jobs[static_cast<std::size_t>(idx)].carrier;
        const int s = jobs[static_cast<std::size_t>(idx)].s;
        auto& failures = slots[static_cast<std::size_t>(idx)];
        try {
            const int target = tc_s(*carrier, s).value;
            const ZclSearchResult res = zcl_lower_search(carrier, s);
            if (res.truncated)
                failures.push_back({"zcl-truncated", carrier->id() + " s=" + std::to_string(s),
                                    "node budget exhausted"});
            else if (res.value != target)
                failures.push_back({"zcl-oracle", carrier->id() + " s=" + std::to_string(s),
                                    "search " + std::to_string(res.value) + ", norm " +
                                        std::to_string(target)});
        } catch (const std::exception& e) {
            failures.push_back(
                {"zcl-oracle", carrier->id() + " s=" + std::to_string(s), e.what()});
        }
    };
    run_indexed(static_cast<int>(jobs.size()), job);

    rep.checks = static_cast<long long>(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i)
        for (VerificationFailure& f : slots[i]) rep.failures.push_back(std::move(f));
    return rep;
}

std::vector<ReferenceExample> reference_examples() {
    std::vector<ReferenceExample> out;

    const auto odd_spec = [](const SimplicialComplex& k) {
        return SphereProductSpec(k, std::vector<int>(static_cast<std::size_t>(k.vertex_count()), 1));
    };

    const SimplicialComplex path4 = SimplicialComplex::from_maximal_faces(
        4, {Face::from_vertices({1, 2}), Face::from_vertices({2, 3}), Face::from_vertices({3, 4})});
    out.push_back({"TC_3 of the four-vertex path complex, odd dimensions", 6,
                   tc_s(odd_spec(path4), 3).value});

    const SimplicialComplex star4 = SimplicialComplex::from_maximal_faces(
        4, {Face::from_vertices({1, 2}), Face::from_vertices({1, 3}), Face::from_vertices({1, 4})});
    out.push_back({"TC_3 of the four-vertex star complex, odd dimensions", 5,
                   tc_s(odd_spec(star4), 3).value});

    long long blocks = 0;
    for (int c1 = 3; c1 <= 5; ++c1) {
        for (int c2 = 2; c2 < c1; ++c2) {
            std::vector<int> left(static_cast<std::size_t>(c1));
            std::vector<int> right(static_cast<std::size_t>(c2));
            for (int i = 0; i < c1; ++i) left[static_cast<std::size_t>(i)] = i + 1;
            for (int i = 0; i < c2; ++i) right[static_cast<std::size_t>(i)] = c1 + i + 1;
            const SimplicialComplex k = SimplicialComplex::from_maximal_faces(
                c1 + c2, {Face::from_vertices(left), Face::from_vertices(right)});
            for (int s = 2; s <= 5; ++s)
                if (tc_s(odd_spec(k), s).value == (s - 1) * c1 + c2) ++blocks;
        }
    }
    out.push_back({"two disjoint blocks, (s-1)c1+c2 over 2<=c2<c1<=5, s in [2,5]", 24, blocks});

    long long skeleton_hits = 0;
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= n; ++d)
            for (int s = 2; s <= 5; ++s)
                if (tc_skeleton_closed_form(n, d, s) == std::min(s * d, (s - 1) * n))
                    ++skeleton_hits;
    out.push_back({"odd skeleton grid min{sd,(s-1)n}, n in [2,6], d in [1,n], s in [2,5]", 80,
                   skeleton_hits});

    long long fat_hits = 0;
    for (int n = 4; n <= 5; ++n) {
        for (int removed = 0; removed < n; ++removed) {
            const int expected = removed <= 1 ? n * (n - 1) - removed
                                 : removed % 2 == 1 ? n * (n - 1) - (removed / 2 + 1)
                                                    : n * (n - 1) - removed / 2;
            if (tc_s(odd_spec(fat_wedge_complex(n, removed)), n).value == expected) ++fat_hits;
        }
    }
    out.push_back({"fat-wedge family with removed facets, n in {4,5}, s = n", 9, fat_hits});

    const SimplicialComplex single = SimplicialComplex::from_maximal_faces(1, {Face::from_vertices({1})});
    long long odd_sphere_hits = 0;
    long long even_sphere_hits = 0;
    for (int s = 2; s <= 5; ++s) {
        if (tc_s(SphereProductSpec(single, {3}), s).value == s - 1) ++odd_sphere_hits;
        if (tc_s(SphereProductSpec(single, {2}), s).value == s) ++even_sphere_hits;
    }
    out.push_back({"TC_s of a single odd sphere equals s-1, s in [2,5]", 4, odd_sphere_hits});
    out.push_back({"TC_s of a single even sphere equals s, s in [2,5]", 4, even_sphere_hits});

    const SimplicialComplex two_full = SimplicialComplex::from_maximal_faces(
        2, {Face::from_vertices({1, 2})});
    out.push_back({"TC_2 of the product of an odd and an even sphere", 3,
                   tc_s(SphereProductSpec(two_full, {1, 2}), 2).value});

    return out;
}

}  // namespace polytc
