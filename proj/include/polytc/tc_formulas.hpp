#pragma once

#include <span>

#include "polytc/norms.hpp"

namespace polytc {

struct GenericBounds {
    int lower = 0;
    int upper = 0;
};

/**
 * Closed form for a pure complex with all-odd sphere dimensions:
 * s*d - min |J_1 ∩...∩ J_s| over s-tuples of maximal faces, d = 1 + dim.
 * Asserted equal to tc_s (std::logic_error on mismatch); preconditions
 * violated -> std::domain_error.
 */
[[nodiscard]] int tc_pure_closed_form(const SphereProductSpec& spec, int s);

/**
 * Closed form min{s*d, (s-1)*n} for the complex of all subsets of [n] of
 * cardinality <= d with all-odd sphere dimensions, 1 <= d <= n, s >= 2.
 * Asserted equal to tc_s on skeleton(n, d).
 */
[[nodiscard]] int tc_skeleton_closed_form(int n, int d, int s);

/**
 * For all-odd dims and s >= w (w = number of maximal faces), checks the
 * linear-growth identity tc_s = (1 + dim)(s - w) + tc_w.  Also asserts that
 * some norm-maximizing multiset at stage w contains a face of maximal
 * cardinality.  Throws std::domain_error if s < w or some dim is even.
 */
[[nodiscard]] bool linear_growth_check(const SphereProductSpec& spec, int s);

/**
 * Topological complexity of the one-point union of the two sphere products:
 * max{tc_s(x), tc_s(y), (s-1)*cat_x + cat_y} with cat = 1 + dim of the index
 * complex.  Requires cat_x >= cat_y (std::domain_error otherwise; swap the
 * arguments).  Asserted equal to tc_s on the disjoint-union index.
 */
[[nodiscard]] int tc_wedge(const SphereProductSpec& x, const SphereProductSpec& y, int s);

/**
 * lower = the exact tc_s value (realized by the zero-divisor certificates);
 * upper = floor(s * hdim / (conn + 1)) with hdim the maximal total cell degree
 * max_J sum_{i in J} k_i and conn = min k_i - 1 over vertices in some face
 * (upper = 0 when the complex has no nonempty face).
 */
[[nodiscard]] GenericBounds generic_bounds(const SphereProductSpec& spec, int s);

/**
 * Weighted dimension: max over faces J of sum_{i in J} weights[i] minus one,
 * so the empty complex or all-zero weights give -1.  weights must have length
 * n and nonnegative entries (std::domain_error otherwise).
 */
[[nodiscard]] int weighted_dim(const SimplicialComplex& k, std::span<const int> weights);

/**
 * s * (1 + weighted_dim(k, weights)): topological complexity of a polyhedral
 * product whose factors have the given spherical cone lengths, assuming each
 * factor satisfies the even-case hypotheses (caller's responsibility).
 */
[[nodiscard]] int tc_polyhedral_general(const SimplicialComplex& k, std::span<const int> weights,
                                        int s);

/** Category of the p-fold product: p * (1 + dim k), p >= 1. */
[[nodiscard]] int cat_power(const SimplicialComplex& k, int p);

}  // namespace polytc
