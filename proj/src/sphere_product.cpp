#include "polytc/sphere_product.hpp"

#include <stdexcept>
#include <utility>

namespace polytc {

SphereProductSpec::SphereProductSpec(SimplicialComplex complex, std::vector<int> dims,
                                     std::string name)
    : complex_(std::move(complex)), dims_(std::move(dims)), name_(std::move(name)) {
    if (static_cast<int>(dims_.size()) != complex_.vertex_count()) {
        throw std::domain_error("dims length must equal the vertex count");
    }
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] < 1) throw std::domain_error("sphere dimensions must be >= 1");
        if (dims_[i] % 2 == 0) {
            even |= std::uint64_t{1} << i;
        } else {
            odd |= std::uint64_t{1} << i;
        }
    }
    even_ = Face(even);
    odd_ = Face(odd);
}

std::string SphereProductSpec::id() const {
    if (!name_.empty()) return name_;
    std::string out = "n=" + std::to_string(complex_.vertex_count()) + ";k=(";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(dims_[i]);
    }
    out += ");K={";
    bool first = true;
    for (Face m : complex_.maximal_faces()) {
        if (!first) out += ",";
        out += m.to_string();
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace polytc
