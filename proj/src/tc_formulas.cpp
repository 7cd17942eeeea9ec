#include "polytc/tc_formulas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polytc {

namespace {

bool all_odd_on_support(const SphereProductSpec& spec) {
    return (spec.even_vertices() & spec.complex().vertex_support()).empty();
}

/** Minimum of |J_1 ∩...∩ J_s| over multisets of maximal faces. */
int min_intersection(const SimplicialComplex& k, int s) {
    const auto& choices = k.maximal_faces();
    int best = 65;
    auto rec = [&](auto&& self, int pos, int start, std::uint64_t inter) -> void {
        if (best == 0) return;
        if (pos == s) {
            best = std::min(best, std::popcount(inter));
            return;
        }
        for (int c = start; c < static_cast<int>(choices.size()); ++c) {
            self(self, pos + 1, c, inter & choices[static_cast<std::size_t>(c)].bits());
        }
    };
    rec(rec, 0, 0, ~std::uint64_t{0});
    return best;
}

/**
 * True iff some multiset of maximal faces realizing the stage-w maximum of
 * norm_nk contains a face of maximal cardinality.
 */
bool witness_with_full_face_exists(const SimplicialComplex& k, int w) {
    const auto& choices = k.maximal_faces();
    const int d = k.dim() + 1;
    int best = -1;
    bool best_has_full = false;
    std::vector<Face> cur(static_cast<std::size_t>(w));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == w) {
            const int value = norm_nk(k, cur);
            bool full = false;
            for (Face f : cur) full = full || (f.size() == d);
            if (value > best) {
                best = value;
                best_has_full = full;
            } else if (value == best && full) {
                best_has_full = true;
            }
            return;
        }
        for (int c = start; c < static_cast<int>(choices.size()); ++c) {
            cur[static_cast<std::size_t>(pos)] = choices[static_cast<std::size_t>(c)];
            self(self, pos + 1, c);
        }
    };
    rec(rec, 0, 0);
    return best_has_full;
}

}  // namespace

int tc_pure_closed_form(const SphereProductSpec& spec, int s) {
    if (s < 2) throw std::domain_error("tc_pure_closed_form requires s >= 2");
    if (!spec.complex().is_pure()) {
        throw std::domain_error("tc_pure_closed_form requires a pure complex");
    }
    if (!all_odd_on_support(spec)) {
        throw std::domain_error("tc_pure_closed_form requires all-odd sphere dimensions");
    }
    const int d = spec.complex().dim() + 1;
    const int value = s * d - min_intersection(spec.complex(), s);
    if (value != tc_s(spec, s).value) {
        throw std::logic_error("pure closed form disagrees with the norm engine");
    }
    return value;
}

int tc_skeleton_closed_form(int n, int d, int s) {
    if (d < 1 || d > n) throw std::domain_error("skeleton closed form requires 1 <= d <= n");
    if (s < 2) throw std::domain_error("tc_skeleton_closed_form requires s >= 2");
    const int value = std::min(s * d, (s - 1) * n);
    const SphereProductSpec spec(SimplicialComplex::skeleton(n, d),
                                 std::vector<int>(static_cast<std::size_t>(n), 1));
    if (value != tc_s(spec, s).value) {
        throw std::logic_error("skeleton closed form disagrees with the norm engine");
    }
    return value;
}

bool linear_growth_check(const SphereProductSpec& spec, int s) {
    if (!all_odd_on_support(spec)) {
        throw std::domain_error("linear_growth_check requires all-odd sphere dimensions");
    }
    const int w = spec.complex().num_maximal();
    if (s < w) throw std::domain_error("linear_growth_check requires s >= num_maximal");
    const int d = spec.complex().dim() + 1;
    const int tc_at_w = (w >= 2) ? tc_s(spec, w).value : 0;
    const int lhs = (s >= 2) ? tc_s(spec, s).value : 0;
    if (w >= 2 && !witness_with_full_face_exists(spec.complex(), w)) {
        throw std::logic_error("no stage-w norm witness contains a maximal-cardinality face");
    }
    return lhs == d * (s - w) + tc_at_w;
}

int tc_wedge(const SphereProductSpec& x, const SphereProductSpec& y, int s) {
    if (s < 2) throw std::domain_error("tc_wedge requires s >= 2");
    const int cat_x = 1 + x.complex().dim();
    const int cat_y = 1 + y.complex().dim();
    if (cat_x < cat_y) {
        throw std::domain_error("tc_wedge requires cat(x) >= cat(y); swap the arguments");
    }
    const int value = std::max({tc_s(x, s).value, tc_s(y, s).value, (s - 1) * cat_x + cat_y});

    std::vector<int> dims = x.dims();
    dims.insert(dims.end(), y.dims().begin(), y.dims().end());
    const SphereProductSpec wedge(disjoint_union(x.complex(), y.complex()), std::move(dims));
    if (value != tc_s(wedge, s).value) {
        throw std::logic_error("wedge formula disagrees with the norm engine");
    }
    return value;
}

GenericBounds generic_bounds(const SphereProductSpec& spec, int s) {
    GenericBounds out;
    out.lower = mixed_norm(spec, s).value;
    const Face support = spec.complex().vertex_support();
    if (support.empty()) {
        out.upper = 0;
    } else {
        int hdim = 0;
        for (Face m : spec.complex().maximal_faces()) {
            int total = 0;
            for (int v : m.vertices()) total += spec.dim_of(v);
            hdim = std::max(hdim, total);
        }
        int conn = 65;
        for (int v : support.vertices()) conn = std::min(conn, spec.dim_of(v) - 1);
        out.upper = (s * hdim) / (conn + 1);
    }
    if (out.lower > out.upper) {
        throw std::logic_error("dimension-connectivity upper bound fell below the norm");
    }
    return out;
}

int weighted_dim(const SimplicialComplex& k, std::span<const int> weights) {
    if (static_cast<int>(weights.size()) != k.vertex_count()) {
        throw std::domain_error("weights length must equal the vertex count");
    }
    for (int c : weights) {
        if (c < 0) throw std::domain_error("weights must be nonnegative");
    }
    int best = 0;
    for (Face m : k.maximal_faces()) {
        int total = 0;
        for (int v : m.vertices()) total += weights[static_cast<std::size_t>(v - 1)];
        best = std::max(best, total);
    }
    return best - 1;
}

int tc_polyhedral_general(const SimplicialComplex& k, std::span<const int> weights, int s) {
    if (s < 2) throw std::domain_error("tc_polyhedral_general requires s >= 2");
    return s * (1 + weighted_dim(k, weights));
}

int cat_power(const SimplicialComplex& k, int p) {
    if (p < 1) throw std::domain_error("cat_power requires p >= 1");
    return p * (1 + k.dim());
}

}  // namespace polytc
