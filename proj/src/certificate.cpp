#include "polytc/certificate.hpp"

#include <algorithm>
#include <string>

namespace polytc {

namespace {

void require_face(const Carrier& carrier, Face f, const char* what) {
    if (!carrier->complex().contains(f)) {
        throw std::domain_error(std::string(what) + " " + f.to_string() +
                                " is not a face of the carrier complex");
    }
}

GammaFactor spread_block(const Carrier& carrier, const std::vector<int>& vertices, int ell,
                         int s) {
    GammaFactor block{TensorElement::one(carrier, s), {}};
    for (int v : vertices) {
        block.factors.push_back(zd_spread(AlgebraElement::generator(carrier, v), ell, s));
        block.product = block.product * block.factors.back();
    }
    return block;
}

Rational pow2(int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= 2;
    return r;
}

}  // namespace

GammaFactor gamma_product_factor(const Carrier& carrier, const std::vector<Face>& prefix,
                                 Face j_ell, int ell, int s) {
    if (ell < 2 || ell > s) throw std::domain_error("stage index outside [2,s]");
    if (static_cast<int>(prefix.size()) != ell - 1) {
        throw std::domain_error("stage " + std::to_string(ell) + " expects a prefix of " +
                                std::to_string(ell - 1) + " faces");
    }
    require_face(carrier, j_ell, "stage face");
    Face prefix_meet(~std::uint64_t{0});
    for (Face f : prefix) {
        require_face(carrier, f, "prefix face");
        prefix_meet = prefix_meet & f;
    }
    return spread_block(carrier, ((prefix_meet - j_ell) | j_ell).vertices(), ell, s);
}

GammaFactor eps_bar_even(const Carrier& carrier, Face j_prime, int s) {
    require_face(carrier, j_prime, "even block face");
    if (!j_prime.subset_of(carrier->even_vertices())) {
        throw std::domain_error("even block face " + j_prime.to_string() +
                                " contains an odd-dimension vertex");
    }
    GammaFactor block{TensorElement::one(carrier, s), {}};
    for (int v : j_prime.vertices()) {
        const auto spread = zd_spread(AlgebraElement::generator(carrier, v), 2, s);
        block.factors.push_back(spread);
        block.factors.push_back(spread);
        block.product = block.product * spread * spread;
    }
    std::vector<Face> closed_tuple(static_cast<std::size_t>(s));
    closed_tuple[0] = j_prime;
    closed_tuple[1] = j_prime;
    Rational closed_coef = pow2(j_prime.size());
    if (j_prime.size() % 2) closed_coef = -closed_coef;
    const auto closed_form =
        TensorElement::basis(carrier, std::move(closed_tuple)) * closed_coef;
    if (!(block.product == closed_form)) {
        throw std::logic_error("squared-spread block disagrees with its closed form");
    }
    return block;
}

GammaFactor gamma_bar(const Carrier& carrier, Face j1, Face j2, Face j_prime, int s) {
    require_face(carrier, j1, "first face");
    require_face(carrier, j2, "second face");
    return spread_block(carrier, ((j1 - j2) | (j2 - j_prime)).vertices(), 2, s);
}

Certificate build_certificate(const Carrier& carrier, int s, const std::vector<Face>& tuple) {
    if (s < 2) throw std::domain_error("certificates require s >= 2");
    if (static_cast<int>(tuple.size()) != s) {
        throw std::domain_error("tuple length does not match s");
    }
    Face meet(~std::uint64_t{0});
    for (Face f : tuple) {
        require_face(carrier, f, "tuple face");
        meet = meet & f;
    }
    const Face j_prime = meet & carrier->even_vertices();

    Certificate cert{tuple,
                     j_prime,
                     {},
                     TensorElement::one(carrier, s),
                     {std::vector<Face>(static_cast<std::size_t>(s)), Rational(0)}};

    auto append = [&cert](const GammaFactor& block) {
        cert.factors.insert(cert.factors.end(), block.factors.begin(), block.factors.end());
        cert.product = cert.product * block.product;
    };
    append(eps_bar_even(carrier, j_prime, s));
    append(gamma_bar(carrier, tuple[0], tuple[1], j_prime, s));
    for (int ell = 3; ell <= s; ++ell) {
        const std::vector<Face> prefix(tuple.begin(), tuple.begin() + (ell - 1));
        append(gamma_product_factor(carrier, prefix, tuple[static_cast<std::size_t>(ell - 1)],
                                    ell, s));
    }

    for (const auto& factor : cert.factors) {
        if (!is_zero_divisor(factor)) {
            throw CertificateError("assembled factor is not a zero divisor");
        }
    }
    const int expected_count = norm_nk(carrier->complex(), tuple) + j_prime.size();
    if (static_cast<int>(cert.factors.size()) != expected_count) {
        throw CertificateError("factor count " + std::to_string(cert.factors.size()) +
                               " does not match norm contribution " +
                               std::to_string(expected_count));
    }
    if (cert.product.is_zero()) {
        throw CertificateError("certificate product vanishes");
    }

    std::vector<Face>& anchor = cert.distinguished.first;
    anchor[0] = j_prime | (tuple[0] - meet);
    for (int i = 1; i < s; ++i) anchor[static_cast<std::size_t>(i)] = tuple[static_cast<std::size_t>(i)];
    const auto it = cert.product.terms().find(anchor);
    if (it == cert.product.terms().end()) {
        throw CertificateError("distinguished basis term is absent from the product");
    }
    cert.distinguished.second = it->second;
    if (abs(it->second) != pow2(j_prime.size())) {
        throw CertificateError("distinguished coefficient " + rational_to_string(it->second) +
                               " does not have magnitude 2^" +
                               std::to_string(j_prime.size()));
    }
    return cert;
}

ZclSearchResult zcl_lower_search(const Carrier& carrier, int s, long long node_budget,
                                 bool stop_at_norm_bound) {
    if (s < 2) throw std::domain_error("zero-divisor search requires s >= 2");
    std::vector<TensorElement> family;
    for (Face f : carrier->complex().faces()) {
        if (f.empty()) continue;
        const auto u = AlgebraElement::basis(carrier, f);
        for (int ell = 2; ell <= s; ++ell) family.push_back(zd_spread(u, ell, s));
        if (s > 2) family.push_back(zd_bar(u, s));
    }
    const int target = tc_s(*carrier, s).value;

    ZclSearchResult result;
    long long nodes = 0;
    auto dfs = [&](auto&& self, const TensorElement& product, int first, int depth) -> void {
        result.value = std::max(result.value, depth);
        if (stop_at_norm_bound && result.value >= target) return;
        for (int i = first; i < static_cast<int>(family.size()); ++i) {
            if (++nodes > node_budget) {
                result.truncated = true;
                return;
            }
            const auto next = product * family[static_cast<std::size_t>(i)];
            if (next.is_zero()) continue;
            self(self, next, i, depth + 1);
            if (result.truncated || (stop_at_norm_bound && result.value >= target)) return;
        }
    };
    dfs(dfs, TensorElement::one(carrier, s), 0, 0);
    return result;
}

}  // namespace polytc
