#include "polytc/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polytc {

Face Face::from_vertices(std::span<const int> vertices) {
    std::uint64_t bits = 0;
    for (int v : vertices) {
        if (v < 1 || v > 64) {
            throw std::domain_error("Face vertex " + std::to_string(v) + " outside [1,64]");
        }
        bits |= std::uint64_t{1} << (v - 1);
    }
    return Face(bits);
}

Face Face::from_vertices(std::initializer_list<int> vertices) {
    return from_vertices(std::span<const int>(vertices.begin(), vertices.size()));
}

int Face::size() const { return std::popcount(bits_); }

int Face::max_vertex() const {
    if (bits_ == 0) return 0;
    return 64 - std::countl_zero(bits_);
}

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    std::uint64_t b = bits_;
    while (b) {
        out.push_back(std::countr_zero(b) + 1);
        b &= b - 1;
    }
    return out;
}

std::string Face::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : vertices()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

bool lex_less(Face a, Face b) {
    const std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    const std::uint64_t low = d & (~d + 1);
    const std::uint64_t above = ~((low << 1) - 1);
    if (a.bits() & low) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

bool lex_less(std::span<const Face> a, std::span<const Face> b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (lex_less(a[i], b[i])) return true;
        if (lex_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> maximal)
    : n_(n), maximal_(std::move(maximal)) {}

SimplicialComplex SimplicialComplex::from_maximal_faces(int n, std::vector<Face> faces) {
    if (n < 1 || n > 64) throw std::domain_error("vertex count must lie in [1,64]");
    const std::uint64_t universe = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (Face f : faces) {
        if ((f.bits() & ~universe) != 0) {
            throw std::domain_error("face " + f.to_string() + " not within [1," +
                                    std::to_string(n) + "]");
        }
    }
    std::vector<Face> maximal;
    for (Face f : faces) {
        bool dominated = false;
        for (Face g : faces) {
            if (f.subset_of(g) && !(f == g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated && std::find(maximal.begin(), maximal.end(), f) == maximal.end()) {
            maximal.push_back(f);
        }
    }
    if (maximal.empty()) maximal.push_back(Face{});
    std::sort(maximal.begin(), maximal.end(),
              [](Face a, Face b) { return lex_less(a, b); });
    return SimplicialComplex(n, std::move(maximal));
}

SimplicialComplex SimplicialComplex::skeleton(int n, int d) {
    if (n < 1 || n > 64) throw std::domain_error("vertex count must lie in [1,64]");
    if (d < 0 || d > n) throw std::domain_error("skeleton cardinality outside [0,n]");
    if (d == 0) return from_maximal_faces(n, {});
    const std::uint64_t universe = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    if (d == n) return from_maximal_faces(n, {Face(universe)});
    std::vector<Face> faces;
    std::uint64_t m = (std::uint64_t{1} << d) - 1;
    while (m <= universe) {
        faces.emplace_back(m);
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        if (r < m || r > universe) break;
        m = (((m ^ r) >> 2) / c) | r;
    }
    return from_maximal_faces(n, std::move(faces));
}

std::vector<Face> SimplicialComplex::faces() const {
    std::vector<Face> out;
    for (Face m : maximal_) {
        std::uint64_t sub = m.bits();
        while (true) {
            out.emplace_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m.bits();
        }
    }
    std::sort(out.begin(), out.end(), [](Face a, Face b) { return lex_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SimplicialComplex::contains(Face f) const {
    for (Face m : maximal_) {
        if (f.subset_of(m)) return true;
    }
    return false;
}

int SimplicialComplex::dim() const {
    int best = 0;
    for (Face m : maximal_) best = std::max(best, m.size());
    return best - 1;
}

bool SimplicialComplex::is_pure() const {
    for (Face m : maximal_) {
        if (m.size() != maximal_.front().size()) return false;
    }
    return true;
}

Face SimplicialComplex::vertex_support() const {
    Face u;
    for (Face m : maximal_) u = u | m;
    return u;
}

namespace {

std::vector<Face> shifted_maximal(const SimplicialComplex& k, int shift) {
    std::vector<Face> out;
    out.reserve(k.maximal_faces().size());
    for (Face m : k.maximal_faces()) out.emplace_back(m.bits() << shift);
    return out;
}

}  // namespace

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    const int n = k1.vertex_count() + k2.vertex_count();
    if (n > 64) throw std::domain_error("join exceeds 64 vertices");
    std::vector<Face> maximal;
    for (Face a : k1.maximal_faces()) {
        for (Face b : shifted_maximal(k2, k1.vertex_count())) {
            maximal.push_back(a | b);
        }
    }
    return SimplicialComplex::from_maximal_faces(n, std::move(maximal));
}

SimplicialComplex disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    const int n = k1.vertex_count() + k2.vertex_count();
    if (n > 64) throw std::domain_error("disjoint_union exceeds 64 vertices");
    std::vector<Face> maximal;
    for (Face a : k1.maximal_faces()) {
        if (!a.empty()) maximal.push_back(a);
    }
    for (Face b : shifted_maximal(k2, k1.vertex_count())) {
        if (!b.empty()) maximal.push_back(b);
    }
    return SimplicialComplex::from_maximal_faces(n, std::move(maximal));
}

}  // namespace polytc
