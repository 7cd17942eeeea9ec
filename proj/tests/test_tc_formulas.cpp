#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "polytc/tc_formulas.hpp"

using namespace polytc;

namespace {

Face F(std::initializer_list<int> vs) { return Face::from_vertices(vs); }

SimplicialComplex path4() {
    return SimplicialComplex::from_maximal_faces(4, {F({1, 2}), F({2, 3}), F({3, 4})});
}

SimplicialComplex two_simplexes(int c1, int c2) {
    return disjoint_union(SimplicialComplex::skeleton(c1, c1),
                          SimplicialComplex::skeleton(c2, c2));
}

SphereProductSpec odd_spec(const SimplicialComplex& k) {
    return SphereProductSpec(k, std::vector<int>(static_cast<std::size_t>(k.vertex_count()), 1));
}

}  // namespace

TEST_CASE("tc_pure_closed_form") {
    CHECK(tc_pure_closed_form(odd_spec(path4()), 3) == 6);

    const auto full3 = SimplicialComplex::skeleton(3, 3);
    for (int s = 2; s <= 5; ++s) {
        CHECK(tc_pure_closed_form(odd_spec(full3), s) == (s - 1) * 3);
    }

    CHECK(tc_pure_closed_form(odd_spec(SimplicialComplex::skeleton(4, 2)), 3) == 6);

    const auto impure = SimplicialComplex::from_maximal_faces(3, {F({1, 2}), F({3})});
    CHECK_THROWS_AS(tc_pure_closed_form(odd_spec(impure), 2), std::domain_error);
    const SphereProductSpec even_spec(path4(), {2, 2, 2, 2});
    CHECK_THROWS_AS(tc_pure_closed_form(even_spec, 2), std::domain_error);
}

TEST_CASE("tc_skeleton_closed_form matches the engine on a grid") {
    CHECK(tc_skeleton_closed_form(4, 2, 3) == 6);
    CHECK(tc_skeleton_closed_form(2, 1, 3) == 3);
    for (int n = 2; n <= 5; ++n) {
        for (int s = 2; s <= 4; ++s) {
            CHECK(tc_skeleton_closed_form(n, n, s) == (s - 1) * n);
        }
    }
    CHECK_THROWS_AS(tc_skeleton_closed_form(3, 0, 2), std::domain_error);
    CHECK_THROWS_AS(tc_skeleton_closed_form(3, 4, 2), std::domain_error);
}

TEST_CASE("linear growth in s beyond the number of maximal faces") {
    const auto spec1 = odd_spec(path4());
    for (int s = 3; s <= 6; ++s) CHECK(linear_growth_check(spec1, s));
    CHECK_THROWS_AS(linear_growth_check(spec1, 2), std::domain_error);

    const auto single = odd_spec(SimplicialComplex::skeleton(3, 3));
    for (int s = 2; s <= 5; ++s) CHECK(linear_growth_check(single, s));

    const auto spec32 = odd_spec(two_simplexes(3, 2));
    CHECK(tc_s(spec32, 4).value == 11);
    CHECK(linear_growth_check(spec32, 4));

    const SphereProductSpec even_spec(path4(), {2, 2, 2, 2});
    CHECK_THROWS_AS(linear_growth_check(even_spec, 4), std::domain_error);
}

TEST_CASE("two disjoint simplexes closed form") {
    for (int c1 = 3; c1 <= 5; ++c1) {
        for (int c2 = 2; c2 < c1; ++c2) {
            const auto spec = odd_spec(two_simplexes(c1, c2));
            for (int s = 2; s <= 5; ++s) {
                CHECK(tc_s(spec, s).value == (s - 1) * c1 + c2);
            }
        }
    }
}

TEST_CASE("tc_wedge three-way maximum") {
    const auto circle = SphereProductSpec(SimplicialComplex::skeleton(1, 1), {1});
    for (int s = 2; s <= 5; ++s) {
        CHECK(tc_wedge(circle, circle, s) == s);
    }

    const auto s2 = SphereProductSpec(SimplicialComplex::skeleton(1, 1), {2});
    CHECK(tc_wedge(s2, s2, 2) == 2);

    const auto point = SphereProductSpec(SimplicialComplex::from_maximal_faces(1, {}), {1});
    const auto x = odd_spec(path4());
    for (int s = 2; s <= 4; ++s) {
        CHECK(tc_wedge(x, point, s) == tc_s(x, s).value);
    }
    CHECK_THROWS_AS(tc_wedge(point, s2, 2), std::domain_error);
}

TEST_CASE("generic bounds sandwich the exact value") {
    const SphereProductSpec s3(SimplicialComplex::skeleton(1, 1), {3});
    const auto b1 = generic_bounds(s3, 3);
    CHECK(b1.lower == 2);
    CHECK(b1.upper == 3);

    const SphereProductSpec s2(SimplicialComplex::skeleton(1, 1), {2});
    const auto b2 = generic_bounds(s2, 2);
    CHECK(b2.lower == 2);
    CHECK(b2.upper == 2);

    const SphereProductSpec torus(SimplicialComplex::skeleton(2, 2), {1, 1});
    const auto b3 = generic_bounds(torus, 2);
    CHECK(b3.lower == 2);
    CHECK(b3.upper == 4);

    const SphereProductSpec empty(SimplicialComplex::from_maximal_faces(2, {}), {1, 2});
    const auto b4 = generic_bounds(empty, 3);
    CHECK(b4.lower == 0);
    CHECK(b4.upper == 0);
}

TEST_CASE("weighted dimension") {
    const auto k = path4();
    const std::vector<int> ones(4, 1);
    CHECK(weighted_dim(k, ones) == k.dim());

    const auto full2 = SimplicialComplex::skeleton(2, 2);
    const std::vector<int> w32 = {3, 2};
    CHECK(weighted_dim(full2, w32) == 4);

    const std::vector<int> zeros(4, 0);
    CHECK(weighted_dim(k, zeros) == -1);
    const auto empty = SimplicialComplex::from_maximal_faces(3, {});
    CHECK(weighted_dim(empty, std::vector<int>(3, 5)) == -1);

    CHECK_THROWS_AS(weighted_dim(k, std::vector<int>{1, 2}), std::domain_error);
    CHECK_THROWS_AS(weighted_dim(k, std::vector<int>{1, -1, 1, 1}), std::domain_error);
}

TEST_CASE("general polyhedral formula") {
    const auto k = path4();
    const std::vector<int> ones(4, 1);
    for (int s = 2; s <= 4; ++s) {
        CHECK(tc_polyhedral_general(k, ones, s) == s * (1 + k.dim()));
        const SphereProductSpec all_even(k, {2, 2, 2, 2});
        CHECK(tc_polyhedral_general(k, ones, s) == tc_s(all_even, s).value);
    }

    const auto full3 = SimplicialComplex::skeleton(3, 3);
    const std::vector<int> w = {2, 3, 4};
    CHECK(tc_polyhedral_general(full3, w, 2) == 2 * 9);

    CHECK(tc_polyhedral_general(k, std::vector<int>(4, 0), 3) == 0);
}

TEST_CASE("category of powers") {
    CHECK(cat_power(path4(), 2) == 4);
    CHECK(cat_power(SimplicialComplex::from_maximal_faces(2, {}), 5) == 0);
    for (int p = 1; p <= 4; ++p) {
        CHECK(cat_power(two_simplexes(3, 2), p) == 3 * p);
    }
    CHECK_THROWS_AS(cat_power(path4(), 0), std::domain_error);
}
