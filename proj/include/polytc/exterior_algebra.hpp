#pragma once

#include <map>
#include <memory>
#include <vector>

#include "polytc/rational.hpp"
#include "polytc/sphere_product.hpp"

namespace polytc {

/**
 * Element of the rational cohomology of a sphere product: the exterior algebra
 * on one generator per vertex (degree k_i) modulo the monomial ideal of
 * non-faces.  Basis monomials are indexed by faces; every generator squares to
 * zero, including even-degree ones.  Sparse terms, exact coefficients, no zero
 * coefficients stored.
 */
class AlgebraElement {
public:
    using Terms = std::map<Face, Rational, FaceLexLess>;

    static AlgebraElement zero(Carrier carrier);
    static AlgebraElement one(Carrier carrier);
    /** Basis monomial for a face of the carrier complex (std::domain_error otherwise). */
    static AlgebraElement basis(Carrier carrier, Face f);
    /** The degree-k_v generator of the 1-based vertex v. */
    static AlgebraElement generator(Carrier carrier, int v);

    [[nodiscard]] const Carrier& carrier() const { return carrier_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /** True iff the element is a rational multiple of the basis monomial for the empty face. */
    [[nodiscard]] bool is_scalar() const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_;
    }

private:
    friend AlgebraElement multiply(const AlgebraElement&, const AlgebraElement&);
    friend class TensorElement;

    explicit AlgebraElement(Carrier carrier) : carrier_(std::move(carrier)) {}
    void add_term(Face f, const Rational& c);

    Carrier carrier_;
    Terms terms_;
};

/** Graded-commutative product in the quotient algebra; carriers must agree. */
[[nodiscard]] AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b);
}

/** Total degree sum_{i in f} k_i of a basis monomial. */
[[nodiscard]] int monomial_degree(const SphereProductSpec& spec, Face f);

/**
 * Element of the s-fold tensor power of the cohomology algebra.  Basis tensors
 * are s-tuples of faces; products follow the Koszul sign rule.
 */
class TensorElement {
public:
    using Terms = std::map<std::vector<Face>, Rational, FaceTupleLexLess>;

    TensorElement(Carrier carrier, int s);
    static TensorElement one(Carrier carrier, int s);
    static TensorElement basis(Carrier carrier, std::vector<Face> tuple);

    [[nodiscard]] const Carrier& carrier() const { return carrier_; }
    [[nodiscard]] int stages() const { return s_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement& operator*=(const Rational& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.s_ == b.s_ && a.terms_ == b.terms_;
    }

private:
    friend TensorElement tensor_multiply(const TensorElement&, const TensorElement&);

    void add_term(std::vector<Face> tuple, const Rational& c);

    Carrier carrier_;
    int s_;
    Terms terms_;
};

/**
 * Componentwise product with the Koszul sign
 * (-1)^{sum_{i<j} deg(b_i) deg(a_j)} on basis tensors, extended bilinearly.
 * Stage counts and carriers must agree.
 */
[[nodiscard]] TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);
inline TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    return tensor_multiply(a, b);
}

/** Ring map induced by the diagonal: multiplies the tensor slots together. */
[[nodiscard]] AlgebraElement diagonal_pullback(const TensorElement& t);

/** True iff diagonal_pullback(t) = 0. */
[[nodiscard]] bool is_zero_divisor(const TensorElement& t);

/** u ⊗ 1 ⊗...⊗ 1 with u in the given slot (1-based). */
[[nodiscard]] TensorElement embed(const AlgebraElement& u, int slot, int s);

/** The zero divisor u(l) = embed(u,1) - embed(u,l), 2 <= l <= s. */
[[nodiscard]] TensorElement zd_spread(const AlgebraElement& u, int l, int s);

/**
 * The zero divisor sum_{i<s} embed(u,i) - (s-1) embed(u,s) for u of positive
 * degree; a term in degree 0 makes the element fail to be a zero divisor and
 * raises std::domain_error.
 */
[[nodiscard]] TensorElement zd_bar(const AlgebraElement& u, int s);

}  // namespace polytc
