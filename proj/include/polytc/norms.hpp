#pragma once

#include <span>
#include <vector>

#include "polytc/sphere_product.hpp"

namespace polytc {

/** A tuple of faces together with the norm value it realizes. */
struct NormWitness {
    int value = 0;
    std::vector<Face> tuple;
};

/**
 * Norm of an ordered tuple of faces of k: sum of cardinalities minus the
 * cardinality of the common intersection.  The value is computed both by that
 * symmetric formula and by the recursive accumulation
 * sum_{l>=2} |(J_1 ∩...∩ J_{l-1}) - J_l| + |J_l|; the two must agree
 * (std::logic_error otherwise).  Throws std::domain_error if some J_i is not
 * a face of k.  Invariant under permutation of the tuple.
 */
[[nodiscard]] int norm_nk(const SimplicialComplex& k, std::span<const Face> tuple);

/**
 * Maximum of norm_nk over all s-tuples of faces, s >= 2.  The maximum is
 * attained on multisets of maximal faces, which is what the search enumerates;
 * ties are broken toward the lexicographically least non-decreasing tuple.
 */
[[nodiscard]] NormWitness norm_ns(const SimplicialComplex& k, int s);

/**
 * Parity-aware norm of a sphere product, s >= 2: maximum over s-tuples of
 * maximal faces of  sum |J_l| - |J_1 ∩...∩ J_s ∩ J_O|  where J_O is the set of
 * odd vertices.  Computed independently a second time as
 * max { norm_nk(tuple) + |J_1 ∩...∩ J_s ∩ J_E| } with an internal agreement
 * assertion (std::logic_error on mismatch).
 */
[[nodiscard]] NormWitness mixed_norm(const SphereProductSpec& spec, int s);

/**
 * Sequential topological complexity of the sphere product, s >= 2; equals
 * mixed_norm.  For a single odd sphere this is s-1, for a single even sphere s.
 */
[[nodiscard]] NormWitness tc_s(const SphereProductSpec& spec, int s);

}  // namespace polytc
