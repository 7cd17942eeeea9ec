#include "polytc/exterior_algebra.hpp"

#include <bit>
#include <stdexcept>

namespace polytc {

std::string rational_to_string(const Rational& r) { return r.str(); }

Rational rational_from_string(const std::string& text) {
    using Integer = boost::multiprecision::mpz_int;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("zero denominator: " + text);
        return Rational(num) / Rational(den);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("malformed rational: " + text);
    }
}

namespace {

void require_same_carrier(const Carrier& a, const Carrier& b) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    throw std::domain_error("elements live over different carriers");
}

/**
 * Sign of sorting the concatenation of the monomials for f then g into one
 * monomial: (-1)^{number of transposed odd-degree generator pairs}.
 */
int merge_sign(const SphereProductSpec& spec, Face f, Face g) {
    const std::uint64_t odd = spec.odd_vertices().bits();
    const std::uint64_t a = f.bits() & odd;
    std::uint64_t b = g.bits() & odd;
    int crossings = 0;
    while (b) {
        const int v = std::countr_zero(b);
        crossings += std::popcount(a & ((~std::uint64_t{0} << 1) << v));
        b &= b - 1;
    }
    return (crossings % 2 == 0) ? 1 : -1;
}

int degree_parity(const SphereProductSpec& spec, Face f) {
    return std::popcount(f.bits() & spec.odd_vertices().bits()) % 2;
}

}  // namespace

int monomial_degree(const SphereProductSpec& spec, Face f) {
    int total = 0;
    for (int v : f.vertices()) total += spec.dim_of(v);
    return total;
}

AlgebraElement AlgebraElement::zero(Carrier carrier) { return AlgebraElement(std::move(carrier)); }

AlgebraElement AlgebraElement::one(Carrier carrier) {
    AlgebraElement out(std::move(carrier));
    out.terms_.emplace(Face{}, Rational(1));
    return out;
}

AlgebraElement AlgebraElement::basis(Carrier carrier, Face f) {
    if (!carrier->complex().contains(f)) {
        throw std::domain_error("basis monomial index " + f.to_string() + " is not a face");
    }
    AlgebraElement out(std::move(carrier));
    out.terms_.emplace(f, Rational(1));
    return out;
}

AlgebraElement AlgebraElement::generator(Carrier carrier, int v) {
    return basis(std::move(carrier), Face::from_vertices({v}));
}

bool AlgebraElement::is_scalar() const {
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

void AlgebraElement::add_term(Face f, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    require_same_carrier(carrier_, other.carrier_);
    for (const auto& [f, c] : other.terms_) add_term(f, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    require_same_carrier(carrier_, other.carrier_);
    for (const auto& [f, c] : other.terms_) add_term(f, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [f, coef] : terms_) coef *= c;
    return *this;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_carrier(a.carrier(), b.carrier());
    const SphereProductSpec& spec = *a.carrier();
    AlgebraElement out(a.carrier());
    for (const auto& [f, cf] : a.terms()) {
        for (const auto& [g, cg] : b.terms()) {
            if (!(f & g).empty()) continue;
            const Face u = f | g;
            if (!spec.complex().contains(u)) continue;
            Rational c = cf * cg;
            if (merge_sign(spec, f, g) < 0) c = -c;
            out.add_term(u, c);
        }
    }
    return out;
}

TensorElement::TensorElement(Carrier carrier, int s) : carrier_(std::move(carrier)), s_(s) {
    if (s < 1) throw std::domain_error("tensor power requires s >= 1");
}

TensorElement TensorElement::one(Carrier carrier, int s) {
    TensorElement out(std::move(carrier), s);
    out.terms_.emplace(std::vector<Face>(static_cast<std::size_t>(s)), Rational(1));
    return out;
}

TensorElement TensorElement::basis(Carrier carrier, std::vector<Face> tuple) {
    TensorElement out(carrier, static_cast<int>(tuple.size()));
    for (Face f : tuple) {
        if (!carrier->complex().contains(f)) {
            throw std::domain_error("tensor slot " + f.to_string() + " is not a face");
        }
    }
    out.terms_.emplace(std::move(tuple), Rational(1));
    return out;
}

void TensorElement::add_term(std::vector<Face> tuple, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(std::move(tuple), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    require_same_carrier(carrier_, other.carrier_);
    if (s_ != other.s_) throw std::domain_error("tensor stage counts differ");
    for (const auto& [t, c] : other.terms_) add_term(t, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
    require_same_carrier(carrier_, other.carrier_);
    if (s_ != other.s_) throw std::domain_error("tensor stage counts differ");
    for (const auto& [t, c] : other.terms_) add_term(t, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coef] : terms_) coef *= c;
    return *this;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
    require_same_carrier(a.carrier(), b.carrier());
    if (a.stages() != b.stages()) throw std::domain_error("tensor stage counts differ");
    const SphereProductSpec& spec = *a.carrier();
    const int s = a.stages();
    TensorElement out(a.carrier(), s);
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            bool dead = false;
            std::vector<Face> prod(static_cast<std::size_t>(s));
            int sign_parity = 0;
            for (int i = 0; i < s; ++i) {
                const Face fa = ta[static_cast<std::size_t>(i)];
                const Face fb = tb[static_cast<std::size_t>(i)];
                if (!(fa & fb).empty() || !spec.complex().contains(fa | fb)) {
                    dead = true;
                    break;
                }
                prod[static_cast<std::size_t>(i)] = fa | fb;
                if (merge_sign(spec, fa, fb) < 0) sign_parity ^= 1;
            }
            if (dead) continue;
            // Koszul crossings: deg(b_i) passes deg(a_j) for every i < j.
            int b_prefix_parity = 0;
            int koszul = 0;
            for (int j = 0; j < s; ++j) {
                if (degree_parity(spec, ta[static_cast<std::size_t>(j)]) == 1) {
                    koszul ^= b_prefix_parity;
                }
                if (degree_parity(spec, tb[static_cast<std::size_t>(j)]) == 1) {
                    b_prefix_parity ^= 1;
                }
            }
            sign_parity ^= koszul;
            Rational c = ca * cb;
            if (sign_parity) c = -c;
            out.add_term(std::move(prod), c);
        }
    }
    return out;
}

AlgebraElement diagonal_pullback(const TensorElement& t) {
    AlgebraElement out = AlgebraElement::zero(t.carrier());
    for (const auto& [tuple, c] : t.terms()) {
        AlgebraElement acc = AlgebraElement::one(t.carrier());
        for (Face f : tuple) {
            acc = multiply(acc, AlgebraElement::basis(t.carrier(), f));
            if (acc.is_zero()) break;
        }
        acc *= c;
        out += acc;
    }
    return out;
}

bool is_zero_divisor(const TensorElement& t) { return diagonal_pullback(t).is_zero(); }

TensorElement embed(const AlgebraElement& u, int slot, int s) {
    if (slot < 1 || slot > s) throw std::domain_error("embed slot outside [1,s]");
    TensorElement out(u.carrier(), s);
    for (const auto& [f, c] : u.terms()) {
        std::vector<Face> tuple(static_cast<std::size_t>(s));
        tuple[static_cast<std::size_t>(slot - 1)] = f;
        out += TensorElement::basis(u.carrier(), std::move(tuple)) * c;
    }
    return out;
}

TensorElement zd_spread(const AlgebraElement& u, int l, int s) {
    if (l < 2 || l > s) throw std::domain_error("zd_spread slot outside [2,s]");
    return embed(u, 1, s) - embed(u, l, s);
}

TensorElement zd_bar(const AlgebraElement& u, int s) {
    if (s < 2) throw std::domain_error("zd_bar requires s >= 2");
    if (u.terms().count(Face{}) != 0) {
        throw std::domain_error("zd_bar requires a positive-degree element");
    }
    TensorElement out(u.carrier(), s);
    for (int i = 1; i < s; ++i) out += embed(u, i, s);
    out -= embed(u, s, s) * Rational(s - 1);
    return out;
}

}  // namespace polytc
