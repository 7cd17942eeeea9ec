#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polytc {

/**
 * A face on the vertex set {1,...,n} with n <= 64, stored as a bitmask
 * (bit v-1 set iff vertex v belongs to the face).  Vertices are 1-based.
 */
class Face {
public:
    Face() = default;
    explicit constexpr Face(std::uint64_t bits) : bits_(bits) {}

    /** Builds a face from 1-based vertex labels; throws std::domain_error on labels outside [1,64]. */
    static Face from_vertices(std::span<const int> vertices);
    static Face from_vertices(std::initializer_list<int> vertices);

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] int size() const;
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr bool contains(int v) const {
        return v >= 1 && v <= 64 && (bits_ >> (v - 1)) & 1u;
    }
    [[nodiscard]] constexpr bool subset_of(Face other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    /** Largest vertex label, or 0 for the empty face. */
    [[nodiscard]] int max_vertex() const;
    /** Sorted 1-based vertex labels. */
    [[nodiscard]] std::vector<int> vertices() const;
    [[nodiscard]] std::string to_string() const;

    friend constexpr Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
    friend constexpr Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
    friend constexpr Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/**
 * Lexicographic order on sorted vertex lists, so {1} < {1,2} < {1,3} < {2}.
 * Used everywhere a deterministic face ordering is required.
 */
[[nodiscard]] bool lex_less(Face a, Face b);

/** Elementwise lexicographic order on face tuples; a proper prefix precedes its extensions. */
[[nodiscard]] bool lex_less(std::span<const Face> a, std::span<const Face> b);

struct FaceLexLess {
    bool operator()(Face a, Face b) const { return lex_less(a, b); }
};

struct FaceTupleLexLess {
    bool operator()(const std::vector<Face>& a, const std::vector<Face>& b) const {
        return lex_less(std::span<const Face>(a), std::span<const Face>(b));
    }
};

}  // namespace polytc
