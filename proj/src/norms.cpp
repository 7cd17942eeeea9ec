#include "polytc/norms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polytc {

namespace {

int popcount(Face f) { return std::popcount(f.bits()); }

int norm_symmetric(std::span<const Face> tuple) {
    int total = 0;
    std::uint64_t inter = ~std::uint64_t{0};
    for (Face f : tuple) {
        total += popcount(f);
        inter &= f.bits();
    }
    if (tuple.empty()) return 0;
    return total - std::popcount(inter);
}

int norm_recursive(std::span<const Face> tuple) {
    if (tuple.empty()) return 0;
    int total = 0;
    std::uint64_t prefix = tuple.front().bits();
    for (std::size_t l = 1; l < tuple.size(); ++l) {
        const std::uint64_t jl = tuple[l].bits();
        total += std::popcount(prefix & ~jl) + std::popcount(jl);
        prefix &= jl;
    }
    return total;
}

/**
 * Depth-first enumeration of non-decreasing index tuples into `choices`,
 * maximizing sum |J_i| - |intersection & weight_mask|.  Branch and bound on
 * the optimistic completion sum |J_i| + remaining * max_size; the first
 * maximizer found in lexicographic order is kept.
 */
struct TupleSearch {
    std::span<const Face> choices;
    int s = 0;
    std::uint64_t weight_mask = 0;
    int max_size = 0;

    int best = -1;
    std::vector<int> best_idx;
    std::vector<int> cur;

    void run() {
        cur.assign(static_cast<std::size_t>(s), 0);
        descend(0, 0, 0, ~std::uint64_t{0});
    }

    void descend(int pos, int start, int sum, std::uint64_t inter) {
        if (pos == s) {
            const int value = sum - std::popcount(inter & weight_mask);
            if (value > best) {
                best = value;
                best_idx = cur;
            }
            return;
        }
        if (sum + (s - pos) * max_size <= best) return;
        for (int c = start; c < static_cast<int>(choices.size()); ++c) {
            cur[static_cast<std::size_t>(pos)] = c;
            descend(pos + 1, c, sum + popcount(choices[static_cast<std::size_t>(c)]),
                    inter & choices[static_cast<std::size_t>(c)].bits());
        }
    }
};

NormWitness maximize(const SimplicialComplex& k, int s, Face weight) {
    if (s < 2) throw std::domain_error("stage count s must be >= 2");
    const auto& choices = k.maximal_faces();
    TupleSearch search;
    search.choices = choices;
    search.s = s;
    search.weight_mask = weight.bits();
    for (Face f : choices) search.max_size = std::max(search.max_size, popcount(f));
    search.run();
    NormWitness out;
    out.value = search.best;
    out.tuple.reserve(static_cast<std::size_t>(s));
    for (int c : search.best_idx) out.tuple.push_back(choices[static_cast<std::size_t>(c)]);
    return out;
}

/** Exhaustive multiset maximum of norm_nk(tuple) + |intersection & bonus|, for cross-checking. */
int maximize_recursive_route(const SimplicialComplex& k, int s, Face bonus) {
    const auto& choices = k.maximal_faces();
    int best = -1;
    std::vector<Face> cur(static_cast<std::size_t>(s));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == s) {
            std::uint64_t inter = ~std::uint64_t{0};
            for (Face f : cur) inter &= f.bits();
            const int value = norm_nk(k, cur) + std::popcount(inter & bonus.bits());
            best = std::max(best, value);
            return;
        }
        for (int c = start; c < static_cast<int>(choices.size()); ++c) {
            cur[static_cast<std::size_t>(pos)] = choices[static_cast<std::size_t>(c)];
            self(self, pos + 1, c);
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

int norm_nk(const SimplicialComplex& k, std::span<const Face> tuple) {
    for (Face f : tuple) {
        if (!k.contains(f)) {
            throw std::domain_error("tuple entry " + f.to_string() + " is not a face");
        }
    }
    const int symmetric = norm_symmetric(tuple);
    const int recursive = norm_recursive(tuple);
    if (symmetric != recursive) {
        throw std::logic_error("norm formulas disagree on a tuple");
    }
    return symmetric;
}

NormWitness norm_ns(const SimplicialComplex& k, int s) {
    return maximize(k, s, Face(~std::uint64_t{0}));
}

NormWitness mixed_norm(const SphereProductSpec& spec, int s) {
    NormWitness out = maximize(spec.complex(), s, spec.odd_vertices());
    const int other_route = maximize_recursive_route(spec.complex(), s, spec.even_vertices());
    if (other_route != out.value) {
        throw std::logic_error("parity-aware norm routes disagree");
    }
    return out;
}

NormWitness tc_s(const SphereProductSpec& spec, int s) {
    if (s < 2) throw std::domain_error("tc_s requires s >= 2");
    return mixed_norm(spec, s);
}

}  // namespace polytc
