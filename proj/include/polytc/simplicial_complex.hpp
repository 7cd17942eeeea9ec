#pragma once

#include <vector>

#include "polytc/face.hpp"

namespace polytc {

/**
 * Abstract simplicial complex on the vertex set {1,...,n}, stored by its
 * inclusion-maximal faces.  The empty face is always a member, so the complex
 * with no nonempty faces is represented by the single maximal face {}.
 * Vertices that appear in no face ("ghost" vertices) are permitted.
 */
class SimplicialComplex {
public:
    /**
     * Canonicalizes the input: drops duplicates and faces contained in another,
     * sorts the survivors.  An empty input yields the complex {∅}.
     * Throws std::domain_error for n outside [1,64] or a face not within [1,n].
     */
    static SimplicialComplex from_maximal_faces(int n, std::vector<Face> faces);

    /** Complex whose faces are all subsets of [n] of cardinality <= d, 0 <= d <= n. */
    static SimplicialComplex skeleton(int n, int d);

    [[nodiscard]] int vertex_count() const { return n_; }
    /** Maximal faces in lexicographic order; {∅} is reported as the single face {}. */
    [[nodiscard]] const std::vector<Face>& maximal_faces() const { return maximal_; }
    /** All faces including the empty one, in lexicographic order. */
    [[nodiscard]] std::vector<Face> faces() const;
    [[nodiscard]] bool contains(Face f) const;
    /** Max face cardinality minus one, so dim({∅}) = -1. */
    [[nodiscard]] int dim() const;
    /** True iff all maximal faces share one cardinality ({∅} counts as pure). */
    [[nodiscard]] bool is_pure() const;
    [[nodiscard]] int num_maximal() const { return static_cast<int>(maximal_.size()); }
    /** Union of all faces (the non-ghost vertices). */
    [[nodiscard]] Face vertex_support() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<Face> maximal);

    int n_ = 1;
    std::vector<Face> maximal_;
};

/**
 * Join on [n1+n2]: faces are unions of a face of k1 with a shifted face of k2;
 * dim(join) = dim(k1) + dim(k2) + 1.
 */
[[nodiscard]] SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/**
 * Disjoint union on [n1+n2]: the maximal faces of k1 together with the shifted
 * maximal faces of k2 (empty sides contribute nothing beyond the empty face).
 */
[[nodiscard]] SimplicialComplex disjoint_union(const SimplicialComplex& k1,
                                               const SimplicialComplex& k2);

}  // namespace polytc
