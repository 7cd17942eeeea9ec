#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polytc/simplicial_complex.hpp"

namespace polytc {

/**
 * A product-of-spheres subcomplex: a simplicial complex on {1,...,n} together
 * with sphere dimensions k_i >= 1 per vertex.  The space it describes is the
 * subspace of S^{k_1} x ... x S^{k_n} of points whose support (set of
 * non-base-point coordinates) is a face of the complex.
 */
class SphereProductSpec {
public:
    /** Throws std::domain_error if dims.size() != n or some k_i < 1. */
    SphereProductSpec(SimplicialComplex complex, std::vector<int> dims, std::string name = "");

    [[nodiscard]] const SimplicialComplex& complex() const { return complex_; }
    [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
    /** Sphere dimension of the 1-based vertex v. */
    [[nodiscard]] int dim_of(int v) const { return dims_[static_cast<std::size_t>(v - 1)]; }
    /** Vertices with even sphere dimension. */
    [[nodiscard]] Face even_vertices() const { return even_; }
    /** Vertices with odd sphere dimension. */
    [[nodiscard]] Face odd_vertices() const { return odd_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    /** The name if set, otherwise a canonical description of complex and dims. */
    [[nodiscard]] std::string id() const;

    /** Equality of the mathematical content (complex and dims); names are ignored. */
    friend bool operator==(const SphereProductSpec& a, const SphereProductSpec& b) {
        return a.complex_ == b.complex_ && a.dims_ == b.dims_;
    }

private:
    SimplicialComplex complex_;
    std::vector<int> dims_;
    Face even_;
    Face odd_;
    std::string name_;
};

/** Shared immutable spec, the carrier that algebra and planner data reference. */
using Carrier = std::shared_ptr<const SphereProductSpec>;

}  // namespace polytc
