#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "polytc/sphere_geometry.hpp"

using namespace polytc;

namespace {

SpherePoint make_point(std::initializer_list<double> cs) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(cs.size()));
    Eigen::Index i = 0;
    for (double c : cs) v[i++] = c;
    return SpherePoint(v / v.norm());
}

SpherePoint random_point(int k, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::VectorXd v(k + 1);
    do {
        for (Eigen::Index i = 0; i <= k; ++i) v[i] = gauss(rng);
    } while (v.norm() < 1e-3);
    return SpherePoint(v / v.norm());
}

/** Shared contract of every rule: endpoints, sphere membership, speed, hold. */
void check_rule_properties(const SpherePath& p) {
    CHECK(p.eval(0.0) == p.start());
    CHECK(p.eval(1.0) == p.end());
    const double arrive = p.delay() + p.duration();
    const double h = 1e-3;
    for (int i = 0; i <= 1000; ++i) {
        const double t = i * h;
        const auto pt = p.eval(t);
        REQUIRE(std::abs(pt.coords().norm() - 1.0) <= 1e-9);
        if (t + h <= 1.0) REQUIRE(dist(pt, p.eval(t + h)) <= h * (1.0 + 1e-6));
        if (t >= arrive) REQUIRE(pt == p.end());
    }
}

}  // namespace

TEST_CASE("sphere point construction") {
    CHECK_THROWS_AS(SpherePoint(Eigen::VectorXd::Constant(3, 0.6)), std::domain_error);
    CHECK_THROWS_AS(SpherePoint(Eigen::VectorXd::Constant(1, 1.0)), std::domain_error);
    const auto e0 = SpherePoint::base_point(2);
    CHECK(e0.sphere_dim() == 2);
    CHECK(e0.coords()[0] == 1.0);
    CHECK(e0.antipode().coords()[0] == -1.0);
    CHECK(e0.antipode().antipode() == e0);
    CHECK_THROWS_AS(SpherePoint::base_point(0), std::domain_error);
}

TEST_CASE("normalized distance") {
    const auto e0 = SpherePoint::base_point(3);
    CHECK(dist(e0, e0) == 0.0);
    CHECK(dist(e0, e0.antipode()) == 0.5);
    const auto m = make_point({0, 1, 0, 0});
    CHECK(dist(e0, m) == Catch::Approx(0.25).margin(1e-15));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_point(3, rng);
        const auto y = random_point(3, rng);
        const auto z = random_point(3, rng);
        const double dxy = dist(x, y);
        CHECK(dxy >= 0.0);
        CHECK(dxy <= 0.5);
        CHECK(dxy == dist(y, x));
        CHECK(dxy <= dist(x, z) + dist(z, y) + 1e-12);
        CHECK(dist(x, x.antipode()) == 0.5);
    }
    CHECK_THROWS_AS(dist(e0, SpherePoint::base_point(2)), std::domain_error);
}

TEST_CASE("pairing field on odd spheres") {
    const auto x = make_point({1, 0});
    const auto nu = field_nu(x);
    CHECK(nu[0] == 0.0);
    CHECK(nu[1] == 1.0);

    std::mt19937_64 rng(11);
    for (int k : {1, 3, 5}) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto p = random_point(k, rng);
            const auto v = field_nu(p);
            CHECK(std::abs(v.dot(p.coords())) <= 1e-12);
            CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
            const auto q = random_point(k, rng);
            CHECK((field_nu(p) - field_nu(q)).norm() <=
                  (p.coords() - q.coords()).norm() * (1.0 + 1e-12));
        }
    }
    CHECK_THROWS_AS(field_nu(SpherePoint::base_point(2)), std::domain_error);
}

TEST_CASE("equatorial field on even spheres") {
    const auto x = make_point({0, 1, 0});
    const auto up = field_upsilon(x);
    CHECK(up[0] == 0.0);
    CHECK(up[1] == 0.0);
    CHECK(up[2] == 1.0);

    std::mt19937_64 rng(13);
    for (int k : {2, 4}) {
        int done = 0;
        while (done < 50) {
            const auto p = random_point(k, rng);
            if (std::abs(p.coords()[0]) > 0.9) continue;
            ++done;
            const auto v = field_upsilon(p);
            CHECK(std::abs(v.dot(p.coords())) <= 1e-12);
            CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
            // Lipschitz-style continuity away from the poles.
            Eigen::VectorXd nudged = p.coords();
            nudged[1] += 1e-6;
            nudged /= nudged.norm();
            const SpherePoint q(nudged);
            CHECK((field_upsilon(p) - field_upsilon(q)).norm() <=
                  10.0 * (p.coords() - q.coords()).norm() + 1e-15);
        }
    }
    CHECK_THROWS_AS(field_upsilon(SpherePoint::base_point(2)), std::domain_error);
    CHECK_THROWS_AS(field_upsilon(SpherePoint::base_point(2).antipode()), std::domain_error);
    CHECK_THROWS_AS(field_upsilon(SpherePoint::base_point(3)), std::domain_error);
}

TEST_CASE("geodesic rule") {
    const auto e0 = SpherePoint::base_point(3);
    const auto m = make_point({0, 1, 0, 0});
    const auto p = rule_geodesic(e0, m);
    CHECK(p.duration() == Catch::Approx(0.25).margin(1e-15));
    const auto mid = p.eval(0.125);
    CHECK(std::abs(mid.coords()[0] - std::numbers::sqrt2 / 2) <= 1e-12);
    CHECK(std::abs(mid.coords()[1] - std::numbers::sqrt2 / 2) <= 1e-12);
    CHECK(p.eval(0.25) == m);
    CHECK(p.eval(0.9) == m);
    check_rule_properties(p);

    SECTION("endpoints of random geodesics are exact and reached on time") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_point(2, rng);
            const auto y = random_point(2, rng);
            const auto g = rule_geodesic(x, y);
            CHECK(g.eval(0.0) == x);
            CHECK(g.eval(dist(x, y)) == y);
            check_rule_properties(g);
        }
    }
    SECTION("coincident endpoints give the constant path") {
        const auto g = rule_geodesic(m, m);
        CHECK(g.duration() == 0.0);
        CHECK(g.eval(0.37) == m);
    }
    SECTION("antipodal endpoints are rejected") {
        CHECK_THROWS_AS(rule_geodesic(e0, e0.antipode()), std::domain_error);
        CHECK_THROWS_AS(rule_geodesic(e0, SpherePoint::base_point(2)), std::domain_error);
    }
}

TEST_CASE("odd semicircle rule") {
    std::mt19937_64 rng(19);
    for (int k : {1, 3}) {
        const auto x = random_point(k, rng);
        const auto p = rule_semicircle_odd(x);
        CHECK(p.eval(0.5) == x.antipode());
        CHECK(p.eval(0.75) == x.antipode());
        CHECK((p.eval(0.25).coords() - field_nu(x)).lpNorm<Eigen::Infinity>() <= 1e-12);
        check_rule_properties(p);
    }
    CHECK_THROWS_AS(rule_semicircle_odd(SpherePoint::base_point(2)), std::domain_error);
}

TEST_CASE("even semicircle rule") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 3) {
        const auto x = random_point(2, rng);
        if (std::abs(x.coords()[0]) > 0.9) continue;
        ++done;
        const auto p = rule_semicircle_even(x);
        CHECK(p.eval(0.5) == x.antipode());
        CHECK((p.eval(0.25).coords() - field_upsilon(x)).lpNorm<Eigen::Infinity>() <= 1e-12);
        check_rule_properties(p);
    }
    CHECK_THROWS_AS(rule_semicircle_even(SpherePoint::base_point(2)), std::domain_error);
    CHECK_THROWS_AS(rule_semicircle_even(SpherePoint::base_point(3)), std::domain_error);
}

TEST_CASE("meridian rule") {
    const auto e0 = SpherePoint::base_point(2);
    const auto p = rule_meridian(e0, e0.antipode());
    CHECK(p.eval(0.5) == e0.antipode());
    CHECK(std::abs(p.eval(0.25).coords()[1] - 1.0) <= 1e-12);
    check_rule_properties(p);

    const auto q = rule_meridian(e0.antipode(), e0);
    CHECK(q.eval(0.0) == e0.antipode());
    CHECK(q.eval(0.5) == e0);
    CHECK(std::abs(q.eval(0.25).coords()[1] - 1.0) <= 1e-12);
    check_rule_properties(q);

    CHECK_THROWS_AS(rule_meridian(e0, e0), std::domain_error);
    std::mt19937_64 rng(29);
    const auto x = random_point(2, rng);
    CHECK_THROWS_AS(rule_meridian(x, x.antipode()), std::domain_error);
}

TEST_CASE("delayed paths") {
    const auto e0 = SpherePoint::base_point(3);
    const auto m = make_point({0, 1, 0, 0});
    const auto p = rule_geodesic(e0, m).delayed(0.3);
    CHECK(p.eval(0.0) == e0);
    CHECK(p.eval(0.3) == e0);
    CHECK(p.eval(0.2999) == e0);
    CHECK(p.eval(0.3 + 0.25) == m);
    CHECK(p.eval(1.0) == m);
    const auto mid = p.eval(0.3 + 0.125);
    CHECK(std::abs(mid.coords()[0] - std::numbers::sqrt2 / 2) <= 1e-12);
    check_rule_properties(p);

    CHECK_THROWS_AS(rule_semicircle_odd(SpherePoint::base_point(1)).delayed(0.51),
                    std::domain_error);
    CHECK_THROWS_AS(rule_geodesic(e0, m).delayed(-0.1), std::domain_error);
}

TEST_CASE("path construction guards") {
    const auto e0 = SpherePoint::base_point(2);
    CHECK_THROWS_AS(SpherePath(e0, e0, Eigen::VectorXd::Zero(3), -0.1), std::domain_error);
    CHECK_THROWS_AS(SpherePath(e0, e0, Eigen::VectorXd::Zero(3), 0.6), std::domain_error);
    CHECK_THROWS_AS(SpherePath(e0, e0, Eigen::VectorXd::Zero(4), 0.1), std::domain_error);
    CHECK_THROWS_AS(SpherePath(e0, SpherePoint::base_point(3), Eigen::VectorXd::Zero(3), 0.1),
                    std::domain_error);
}
