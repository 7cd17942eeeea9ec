#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <set>

#include "polytc/verification.hpp"

using namespace polytc;

namespace {

Face F(std::initializer_list<int> vs) { return Face::from_vertices(vs); }

Carrier make_carrier(int n, std::vector<Face> maximal, std::vector<int> dims) {
    return std::make_shared<const SphereProductSpec>(
        SimplicialComplex::from_maximal_faces(n, maximal), std::move(dims));
}

bool reports_equal(const VerificationReport& a, const VerificationReport& b) {
    if (a.spec_id != b.spec_id || a.s != b.s || a.trials != b.trials || a.seed != b.seed ||
        a.tol != b.tol || a.grid != b.grid || a.checks != b.checks ||
        a.max_norm_seen != b.max_norm_seen ||
        a.continuity_max_ratio != b.continuity_max_ratio || a.note != b.note ||
        a.failures.size() != b.failures.size())
        return false;
    for (std::size_t i = 0; i < a.failures.size(); ++i) {
        if (a.failures[i].property != b.failures[i].property ||
            a.failures[i].configuration != b.failures[i].configuration ||
            a.failures[i].detail != b.failures[i].detail)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("substream rng determinism and independence") {
    SubstreamRng a(7, 3);
    SubstreamRng b(7, 3);
    SubstreamRng c(7, 4);
    bool all_equal = true;
    bool any_diff = false;
    for (int i = 0; i < 64; ++i) {
        const auto x = a.next_u64();
        if (x != b.next_u64()) all_equal = false;
        if (x != c.next_u64()) any_diff = true;
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("substream rng ranges") {
    SubstreamRng rng(11, 0);
    for (int i = 0; i < 2000; ++i) {
        const double d = rng.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }
    std::set<int> seen;
    for (int i = 0; i < 2000; ++i) {
        const int v = rng.next_below(7);
        CHECK(v >= 0);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
    CHECK_THROWS_AS(rng.next_below(0), std::domain_error);
    double sum = 0.0;
    double sq = 0.0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
        const double g = rng.next_normal();
        sum += g;
        sq += g * g;
    }
    CHECK(std::abs(sum / draws) < 0.05);
    CHECK(std::abs(sq / draws - 1.0) < 0.05);
}

TEST_CASE("uniform sphere points are unit and reproducible") {
    SubstreamRng a(5, 9);
    SubstreamRng b(5, 9);
    for (int k : {1, 2, 3}) {
        const SpherePoint p = uniform_sphere(k, a);
        const SpherePoint q = uniform_sphere(k, b);
        CHECK(p.sphere_dim() == k);
        CHECK(std::abs(p.coords().norm() - 1.0) <= 1e-12);
        CHECK(p == q);
    }
}

TEST_CASE("sampled configurations live on cells of the complex") {
    const auto c = make_carrier(3, {F({1, 2}), F({2, 3})}, {1, 2, 1});
    for (int idx = 0; idx < 40; ++idx) {
        SubstreamRng rng(21, static_cast<std::uint64_t>(idx));
        const SampleMode mode = idx % 2 == 0 ? SampleMode::generic : SampleMode::degenerate;
        const Configuration config = sample_configuration(c, 3, rng, mode, 1e-9);
        for (int j = 1; j <= 3; ++j) {
            CHECK(c->complex().contains(config.column_support(j, 1e-9)));
        }
    }
}

TEST_CASE("sampling is a pure function of seed and substream") {
    const auto c = make_carrier(2, {F({1, 2})}, {2, 3});
    SubstreamRng r1(88, 5);
    SubstreamRng r2(88, 5);
    const Configuration a = sample_configuration(c, 2, r1, SampleMode::degenerate, 1e-9);
    const Configuration b = sample_configuration(c, 2, r2, SampleMode::degenerate, 1e-9);
    CHECK(configuration_distance(a, b) == 0.0);
    for (int j = 1; j <= 2; ++j)
        for (int i = 1; i <= 2; ++i) CHECK(a.point(i, j) == b.point(i, j));
}

TEST_CASE("cell sampler pins off-support rows to the base point exactly") {
    const auto c = make_carrier(3, {F({1, 2}), F({2, 3})}, {1, 2, 1});
    SubstreamRng rng(31, 0);
    const std::vector<Face> tuple{F({1}), F({2, 3}), Face()};
    const Configuration config = sample_on_cell(c, tuple, rng, 1e-7, 1e-9);
    for (int j = 1; j <= 3; ++j) {
        CHECK(config.column_support(j, 1e-9) == tuple[static_cast<std::size_t>(j - 1)]);
        for (int i = 1; i <= 3; ++i) {
            if (!tuple[static_cast<std::size_t>(j - 1)].contains(i))
                CHECK(config.point(i, j) == SpherePoint::base_point(c->dim_of(i)));
        }
    }
}

TEST_CASE("all-equal columns classify within the even support budget") {
    const auto c = make_carrier(2, {F({1, 2})}, {1, 2});
    SubstreamRng rng(77, 0);
    const std::vector<Face> one_col{F({1, 2})};
    const Configuration seed_col = sample_on_cell(c, one_col, rng, 1e-7, 1e-9);
    std::vector<std::vector<SpherePoint>> cols;
    for (int j = 0; j < 3; ++j) cols.push_back({seed_col.point(1, 1), seed_col.point(2, 1)});
    const Configuration config(c, cols, 1e-9);
    const Stratum st = classify(config, 1e-9);
    CHECK(st.norm() <= 1);
}

TEST_CASE("perturbation stays small and preserves the stratum") {
    const auto c = make_carrier(2, {F({1, 2})}, {2, 1});
    for (int idx = 0; idx < 20; ++idx) {
        SubstreamRng rng(99, static_cast<std::uint64_t>(idx));
        const std::vector<Face> tuple{F({1, 2}), F({1}), F({2})};
        const Configuration base = sample_on_cell(c, tuple, rng, 0.05, 1e-9);
        const Configuration moved = perturb_configuration(base, rng, 1e-5);
        const double d = configuration_distance(base, moved);
        CHECK(d > 0.0);
        CHECK(d <= 2e-5);
        CHECK(classify(base, 1e-9) == classify(moved, 1e-9));
    }
}

TEST_CASE("planner verification passes on single spheres") {
    const auto odd = make_carrier(1, {F({1})}, {1});
    const auto even = make_carrier(1, {F({1})}, {2});
    const auto rep_odd = verify_planner(odd, 2, 40, 1e-9, 0);
    const auto rep_even = verify_planner(even, 2, 40, 1e-9, 0);
    for (const auto& f : rep_odd.failures) UNSCOPED_INFO(f.property + ": " + f.detail);
    CHECK(rep_odd.passed());
    CHECK(rep_odd.max_norm_seen == 1);
    for (const auto& f : rep_even.failures) UNSCOPED_INFO(f.property + ": " + f.detail);
    CHECK(rep_even.passed());
    CHECK(rep_even.max_norm_seen == 2);
    CHECK(rep_even.checks > 40);
}

TEST_CASE("planner verification passes on a two-vertex mixed product") {
    const auto c = make_carrier(2, {F({1, 2})}, {1, 2});
    const auto rep = verify_planner(c, 2, 60, 1e-9, 0);
    for (const auto& f : rep.failures) UNSCOPED_INFO(f.property + ": " + f.detail);
    CHECK(rep.passed());
    CHECK(rep.max_norm_seen == tc_s(*c, 2).value);
    CHECK(rep.continuity_max_ratio > 0.0);
    CHECK(rep.continuity_max_ratio < 100.0);
}

TEST_CASE("planner verification handles the empty-face complex") {
    const auto c = make_carrier(1, {}, {1});
    const auto rep = verify_planner(c, 3, 10, 1e-9, 4);
    CHECK(rep.passed());
    CHECK(rep.max_norm_seen == 0);
}

TEST_CASE("planner verification validates its inputs") {
    const auto c = make_carrier(1, {F({1})}, {1});
    CHECK_THROWS_AS(verify_planner(c, 1, 10, 1e-9, 0), std::domain_error);
    CHECK_THROWS_AS(verify_planner(c, 2, -1, 1e-9, 0), std::domain_error);
    const auto rep = verify_planner(c, 2, 0, 1e-9, 0);
    CHECK(rep.passed());
    CHECK(rep.checks == 0);
}

TEST_CASE("planner verification reports are independent of the worker count") {
    const auto c = make_carrier(2, {F({1}), F({2})}, {1, 2});
    setenv("POLYTC_THREADS", "4", 1);
    const auto rep_par = verify_planner(c, 2, 30, 1e-9, 12);
    setenv("POLYTC_THREADS", "1", 1);
    const auto rep_ser = verify_planner(c, 2, 30, 1e-9, 12);
    unsetenv("POLYTC_THREADS");
    CHECK(reports_equal(rep_par, rep_ser));
    CHECK(rep_par.passed());
}

TEST_CASE("formula verification passes on a corpus slice") {
    const auto corpus = standard_corpus();
    const std::vector<Carrier> slice(corpus.begin(), corpus.begin() + 15);
    const std::vector<int> s_values{2, 3};
    const auto rep = verify_formulas(slice, s_values);
    for (const auto& f : rep.failures)
        UNSCOPED_INFO(f.property + " at " + f.configuration + ": " + f.detail);
    CHECK(rep.passed());
    CHECK(rep.checks > 100);
}

TEST_CASE("certificate verification passes on a corpus slice") {
    const auto corpus = standard_corpus();
    const std::vector<Carrier> slice(corpus.begin(), corpus.begin() + 12);
    const std::vector<int> s_values{2, 3};
    const auto rep = verify_certificates(slice, s_values);
    for (const auto& f : rep.failures)
        UNSCOPED_INFO(f.property + " at " + f.configuration + ": " + f.detail);
    CHECK(rep.passed());
    CHECK(rep.checks > 24);
}

TEST_CASE("search verification matches the norm on tiny instances") {
    const auto corpus = tiny_corpus();
    const std::vector<Carrier> slice(corpus.begin(), corpus.begin() + 8);
    const std::vector<int> s_values{2};
    const auto rep = verify_zcl_search(slice, s_values);
    for (const auto& f : rep.failures)
        UNSCOPED_INFO(f.property + " at " + f.configuration + ": " + f.detail);
    CHECK(rep.passed());
    CHECK(rep.checks == 8);
}

TEST_CASE("corpus sizes and naming") {
    const auto standard = standard_corpus();
    const auto planner = planner_corpus();
    const auto tiny = tiny_corpus();
    CHECK(standard.size() == 360);
    CHECK(planner.size() == 39);
    CHECK(tiny.size() == 48);
    CHECK(standard.size() >= 50);
    std::set<std::string> names;
    for (const auto& c : standard) names.insert(c->name());
    CHECK(names.size() == standard.size());
    for (const auto& c : planner) CHECK(c->complex().vertex_count() <= 3);
    for (const auto& c : standard) {
        CHECK(c->complex().vertex_count() <= 4);
        CHECK(c->complex().num_maximal() <= 4);
    }
}

TEST_CASE("reference examples all reproduce") {
    const auto rows = reference_examples();
    CHECK(rows.size() == 8);
    for (const auto& row : rows) {
        UNSCOPED_INFO(row.claim);
        CHECK(row.expected == row.computed);
    }
}

TEST_CASE("worker count respects the environment override") {
    setenv("POLYTC_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    setenv("POLYTC_THREADS", "0", 1);
    CHECK(worker_count() == 1);
    unsetenv("POLYTC_THREADS");
    CHECK(worker_count() >= 1);
}
