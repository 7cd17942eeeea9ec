#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "polytc/motion_planner.hpp"

using namespace polytc;

namespace {

Face F(std::initializer_list<int> vs) { return Face::from_vertices(vs); }

Carrier make_carrier(int n, std::vector<Face> maximal, std::vector<int> dims) {
    return std::make_shared<const SphereProductSpec>(
        SimplicialComplex::from_maximal_faces(n, maximal), std::move(dims));
}

SpherePoint pt(std::initializer_list<double> cs) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(cs.size()));
    Eigen::Index i = 0;
    for (double c : cs) v[i++] = c;
    return SpherePoint(v / v.norm());
}

}  // namespace

TEST_CASE("constant base-point configuration") {
    const auto c = make_carrier(2, {F({1, 2})}, {1, 2});
    const auto e1 = SpherePoint::base_point(1);
    const auto e2 = SpherePoint::base_point(2);
    const std::vector<SpherePoint> column{e1, e2};
    const Configuration config(c, {column, column, column});

    const auto st = classify(config);
    CHECK(st.partitions.weight() == 0);
    CHECK(st.partitions.rows[0].parts == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(st.k_set == Face{});
    CHECK(st.beta[0] == std::vector<int>{2, 3});
    CHECK(st.beta[1] == std::vector<int>{2, 3});
    CHECK(st.epsilon == std::map<int, int>{{2, 1}});
    CHECK(stratum_norm(st) == 0);
    CHECK(classify(config) == st);

    const auto result = plan(config);
    CHECK(result.domain_index == 0);
    for (int j = 1; j <= 3; ++j) {
        for (double t : {0.0, 0.3, 0.5, 0.77, 1.0}) {
            CHECK(result.paths.eval_column(j, t)[0] == e1);
            CHECK(result.paths.eval_column(j, t)[1] == e2);
            CHECK(result.paths.support(j, t) == Face{});
        }
    }
}

TEST_CASE("even sphere antipodal pair") {
    const auto c = make_carrier(1, {F({1})}, {2});
    const auto x = pt({0.6, 0.8, 0.0});
    const Configuration config(c, {{x}, {x.antipode()}});

    const auto st = classify(config);
    CHECK(st.partitions.rows[0].parts == std::vector<std::vector<int>>{{1, 2}});
    CHECK(st.k_set == F({1}));
    CHECK(st.beta[0].empty());
    CHECK(st.epsilon.empty());
    CHECK(stratum_norm(st) == 1);

    const auto result = plan(config);
    CHECK(result.domain_index == 1);
    const auto& p = result.paths.path(1, 2);
    CHECK(p.delay() == 0.5 - dist(x, SpherePoint::base_point(2)));
    CHECK(p.eval(p.delay() / 2) == x);
    CHECK(p.eval(1.0) == x.antipode());
    const auto quarter = p.eval(p.delay() + 0.25);
    CHECK((quarter.coords() - field_upsilon(x)).lpNorm<Eigen::Infinity>() <= 1e-12);
    CHECK(result.paths.path(1, 1).eval(0.42) == x);
}

TEST_CASE("odd sphere antipodal pair") {
    const auto c = make_carrier(1, {F({1})}, {1});
    const auto x = pt({0.6, 0.8});
    const Configuration config(c, {{x}, {x.antipode()}});

    const auto st = classify(config);
    CHECK(stratum_norm(st) == 0);
    CHECK(st.k_set == Face{});
    CHECK(st.epsilon.empty());

    const auto result = plan(config);
    CHECK(result.domain_index == 0);
    const auto& p = result.paths.path(1, 2);
    const double expected_delay = 0.5 - dist(x, SpherePoint::base_point(1));
    CHECK(p.delay() == expected_delay);
    CHECK(p.eval(expected_delay) == x);
    CHECK(p.eval(1.0) == x.antipode());
    CHECK((p.eval(expected_delay + 0.25).coords() - field_nu(x)).lpNorm<Eigen::Infinity>() <=
          1e-12);
}

TEST_CASE("generic torus configuration fills the top domain") {
    const auto c = make_carrier(2, {F({1, 2})}, {1, 1});
    const Configuration config(
        c, {{pt({0.6, 0.8}), pt({0.0, 1.0})}, {pt({-0.8, 0.6}), pt({0.28, -0.96})}});
    const auto st = classify(config);
    CHECK(st.partitions.weight() == 2);
    CHECK(st.k_set == Face{});
    CHECK(stratum_norm(st) == 2);
    CHECK(stratum_norm(st) == tc_s(*c, 2).value);
    CHECK(plan(config).domain_index == 2);
    CHECK(domain_count(*c, 2) == 3);
}

TEST_CASE("pole in a later part still avoids the meridian") {
    const auto c = make_carrier(1, {F({1})}, {2});
    const auto x = pt({0.6, 0.8, 0.0});
    const Configuration config(c, {{x}, {SpherePoint::base_point(2)}});
    const auto st = classify(config);
    CHECK(st.partitions.rows[0].parts == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(st.k_set == Face{});
    CHECK(st.epsilon == std::map<int, int>{{1, 0}});
    CHECK(stratum_norm(st) == 1);
    const auto result = plan(config);
    const auto& p = result.paths.path(1, 2);
    CHECK(p.eval(0.5) == SpherePoint::base_point(2));
    CHECK(p.eval(1.0) == SpherePoint::base_point(2));
}

TEST_CASE("meridian stratum with exact poles") {
    const auto c = make_carrier(1, {F({1})}, {2});
    const auto e0 = SpherePoint::base_point(2);
    const Configuration config(c, {{e0}, {e0.antipode()}});
    const auto st = classify(config);
    CHECK(st.partitions.rows[0].parts == std::vector<std::vector<int>>{{1, 2}});
    CHECK(st.epsilon == std::map<int, int>{{1, 1}});
    CHECK(stratum_norm(st) == 0);
    const auto result = plan(config);
    const auto& p = result.paths.path(1, 2);
    CHECK(p.delay() == 0.5);
    CHECK(p.eval(0.5) == e0);
    CHECK(p.eval(1.0) == e0.antipode());
    CHECK(std::abs(p.eval(0.75).coords()[1] - 1.0) <= 1e-12);
}

TEST_CASE("wedge plans run in two sections") {
    const auto c = make_carrier(2, {F({1}), F({2})}, {1, 1});
    const auto e1 = SpherePoint::base_point(1);
    const auto x = pt({0.6, 0.8});
    const auto y = pt({-1.0, 0.1});
    const Configuration config(c, {{x, e1}, {e1, y}});
    const auto result = plan(config);
    CHECK(result.domain_index == 2);
    for (int g = 0; g <= 256; ++g) {
        const double t = g / 256.0;
        const Face supp = result.paths.support(2, t);
        CHECK(supp != F({1, 2}));
        CHECK(c->complex().contains(supp));
    }
    CHECK(result.paths.support(2, 0.5) == Face{});
    CHECK(result.paths.support(2, 0.0) == F({1}));
    CHECK(result.paths.support(2, 1.0) == F({2}));
}

TEST_CASE("ambiguous configurations are refused") {
    SECTION("sign-equality band") {
        const auto c = make_carrier(1, {F({1})}, {1});
        const double d = 5e-9;
        const auto x = pt({std::cos(0.7), std::sin(0.7)});
        const auto y = pt({std::cos(0.7 + d), std::sin(0.7 + d)});
        const Configuration config(c, {{x}, {y}});
        CHECK_THROWS_AS(classify(config), AmbiguityError);
    }
    SECTION("pole proximity band") {
        const auto c = make_carrier(1, {F({1})}, {2});
        const double eps = 5e-9;
        const auto near_pole = pt({std::sqrt(1.0 - eps * eps), eps, 0.0});
        const auto far = pt({0.0, 0.0, 1.0});
        const Configuration config(c, {{near_pole}, {far}});
        CHECK_THROWS_AS(classify(config), AmbiguityError);
    }
    SECTION("pole hit without an exact pole") {
        const auto c = make_carrier(1, {F({1})}, {2});
        const double eps = 1e-10;
        const auto near_pole = pt({std::sqrt(1.0 - eps * eps), eps, 0.0});
        const Configuration config(c, {{near_pole}, {near_pole.antipode()}});
        const auto st = classify(config);
        CHECK(st.epsilon == std::map<int, int>{{1, 1}});
        CHECK_THROWS_AS(local_rule(config, st), AmbiguityError);
    }
}

TEST_CASE("configuration validation") {
    const auto wedge = make_carrier(2, {F({1}), F({2})}, {1, 1});
    const auto e1 = SpherePoint::base_point(1);
    const auto x = pt({0.6, 0.8});
    CHECK_NOTHROW(Configuration(wedge, {{x, e1}}));
    CHECK_THROWS_AS(Configuration(wedge, {{x, x}}), std::domain_error);
    CHECK_THROWS_AS(Configuration(wedge, {{x}}), std::domain_error);
    CHECK_THROWS_AS(Configuration(wedge, {{x, SpherePoint::base_point(2)}}),
                    std::domain_error);
    CHECK_THROWS_AS(Configuration(wedge, {}), std::domain_error);

    const Configuration config(wedge, {{x, e1}, {e1, e1}});
    CHECK(config.stages() == 2);
    CHECK(config.rows() == 2);
    CHECK(config.column_support(1, 1e-9) == F({1}));
    CHECK(config.column_support(2, 1e-9) == Face{});
    CHECK(config.point(1, 1) == x);
}

TEST_CASE("planner domain counts") {
    const auto odd = make_carrier(1, {F({1})}, {1});
    const auto odd3 = make_carrier(1, {F({1})}, {3});
    const auto even = make_carrier(1, {F({1})}, {2});
    for (int s = 2; s <= 4; ++s) {
        CHECK(domain_count(*odd, s) == s);
        CHECK(domain_count(*odd3, s) == s);
        CHECK(domain_count(*even, s) == s + 1);
    }
    const auto path4 = make_carrier(
        4, {F({1, 2}), F({2, 3}), F({3, 4})}, {1, 1, 1, 1});
    CHECK(domain_count(*path4, 3) == 7);
}

TEST_CASE("stratum norm never exceeds the planner budget") {
    const auto c = make_carrier(2, {F({1, 2})}, {1, 2});
    const auto e1 = SpherePoint::base_point(1);
    const auto e2 = SpherePoint::base_point(2);
    const std::vector<Configuration> configs{
        Configuration(c, {{e1, e2}, {e1, e2}}),
        Configuration(c, {{pt({0.6, 0.8}), e2}, {pt({0.0, 1.0}), pt({0.6, 0.0, 0.8})}}),
        Configuration(c, {{pt({0.6, 0.8}), pt({0.6, 0.0, 0.8})},
                          {pt({-0.6, -0.8}), pt({-0.6, 0.0, -0.8})}}),
    };
    const int budget = tc_s(*c, 2).value;
    for (const auto& config : configs) {
        CHECK(stratum_norm(classify(config)) <= budget);
    }
}
