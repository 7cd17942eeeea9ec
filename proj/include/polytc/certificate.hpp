#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "polytc/exterior_algebra.hpp"
#include "polytc/norms.hpp"

namespace polytc {

/** Raised when an assembled certificate fails one of its structural checks. */
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** A block of spread zero-divisors together with their product. */
struct GammaFactor {
    TensorElement product;
    std::vector<TensorElement> factors;

    [[nodiscard]] int factor_count() const { return static_cast<int>(factors.size()); }
};

/**
 * Cup-length certificate for the lower bound tc >= |factors|: an explicit
 * ordered list of zero-divisors whose product is nonzero, anchored by a
 * distinguished basis term of coefficient +-2^{|j_prime|}.
 */
struct Certificate {
    std::vector<Face> tuple;
    Face j_prime;
    std::vector<TensorElement> factors;
    TensorElement product;
    std::pair<std::vector<Face>, Rational> distinguished;
};

/**
 * Product of the spread zero-divisors eps_j(ell) over
 * j in ((J_1 cap ... cap J_{ell-1}) - J_ell) cup J_ell in ascending vertex
 * order, where the prefix is (J_1,...,J_{ell-1}).  Requires 2 <= ell <= s and
 * faces of the carrier complex.
 */
[[nodiscard]] GammaFactor gamma_product_factor(const Carrier& carrier,
                                               const std::vector<Face>& prefix, Face j_ell,
                                               int ell, int s);

/**
 * Squared-spread block for an even-vertex face j_prime: the product of
 * eps_j(2)^2 over j in j_prime ascending, which collapses to the closed form
 * (-2)^{|j_prime|} eps_{j_prime} (x) eps_{j_prime} (x) 1 (x) ... (x) 1
 * (internally asserted).  Requires j_prime to be a face consisting of
 * even-dimension vertices; counts 2|j_prime| factors.
 */
[[nodiscard]] GammaFactor eps_bar_even(const Carrier& carrier, Face j_prime, int s);

/**
 * Stage-two block for the mixed-parity certificate: the product of eps_j(2)
 * over j in (J_1 - J_2) cup (J_2 - j_prime) ascending, where j_prime is the
 * even part of the full tuple intersection supplied by the caller.
 */
[[nodiscard]] GammaFactor gamma_bar(const Carrier& carrier, Face j1, Face j2, Face j_prime,
                                    int s);

/**
 * Assembles the full certificate for an s-tuple of faces: the squared-spread
 * block for j_prime = J_1 cap ... cap J_s cap J_E, the stage-two block, and
 * the stage-ell blocks for ell = 3..s.  Verifies that every factor is a zero
 * divisor, that the factor count equals norm_nk(tuple) + |j_prime|, that the
 * product is nonzero, and that the distinguished basis term
 * (j_prime cup (J_1 - cap J), J_2, ..., J_s) appears with coefficient of
 * magnitude 2^{|j_prime|}; any violation raises CertificateError.
 */
[[nodiscard]] Certificate build_certificate(const Carrier& carrier, int s,
                                            const std::vector<Face>& tuple);

/** Outcome of the zero-divisor product search. */
struct ZclSearchResult {
    int value = 0;
    bool truncated = false;
};

/**
 * Backtracking search for the longest nonzero product of zero-divisors drawn
 * from the family { zd_spread(eps_J, ell) : J nonempty face, 2 <= ell <= s }
 * plus { zd_bar(eps_J) : J nonempty face } (the bar family is omitted when
 * s = 2, where it duplicates the spreads).  Repeated factors are allowed; the
 * result is a lower bound for the zero-divisor cup length.  Exploration stops
 * early once the tc value is reached unless stop_at_norm_bound is false, and
 * is truncated (flag set) when node_budget expansions are exhausted.
 */
[[nodiscard]] ZclSearchResult zcl_lower_search(const Carrier& carrier, int s,
                                               long long node_budget = 2000000,
                                               bool stop_at_norm_bound = true);

}  // namespace polytc
