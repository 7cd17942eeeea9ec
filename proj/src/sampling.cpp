#include "polytc/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polytc {

namespace {

/** 64-bit finalizer (murmur3 style): bijective avalanche mix. */
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
}

double sup_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - b).lpNorm<Eigen::Infinity>();
}

/** Sup distance to the nearer of +p and -p. */
double signed_sup_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& p) {
    return std::min(sup_dist(a, p), sup_dist(a, -p));
}

bool is_exact(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return a.size() == b.size() && a == b;
}

}  // namespace

SubstreamRng::SubstreamRng(std::uint64_t seed, std::uint64_t substream)
    : state_(mix64(seed) ^ mix64(substream * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL)) {}

std::uint64_t SubstreamRng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

double SubstreamRng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int SubstreamRng::next_below(int bound) {
    if (bound < 1) throw std::domain_error("next_below: bound must be positive");
    const auto b = static_cast<std::uint64_t>(bound);
    const std::uint64_t min_accept = (0 - b) % b;
    for (;;) {
        const std::uint64_t v = next_u64();
        if (v >= min_accept) return static_cast<int>(v % b);
    }
}

double SubstreamRng::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

SpherePoint uniform_sphere(int k, SubstreamRng& rng) {
    if (k < 1) throw std::domain_error("uniform_sphere: k must be >= 1");
    Eigen::VectorXd v(k + 1);
    for (;;) {
        for (int c = 0; c <= k; ++c) v[c] = rng.next_normal();
        const double norm = v.norm();
        if (norm > 1e-6) return SpherePoint(v / norm);
    }
}

Configuration sample_on_cell(const Carrier& carrier, const std::vector<Face>& tuple,
                             SubstreamRng& rng, double margin, double tol) {
    if (!carrier) throw std::domain_error("sample_on_cell: null spec");
    const int n = carrier->complex().vertex_count();
    const int s = static_cast<int>(tuple.size());
    if (s < 1) throw std::domain_error("sample_on_cell: empty tuple");
    for (Face f : tuple)
        if (!carrier->complex().contains(f))
            throw std::domain_error("sample_on_cell: tuple entry is not a face");

    std::vector<std::vector<SpherePoint>> columns;
    columns.reserve(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) {
        std::vector<SpherePoint> col;
        col.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            const int k = carrier->dim_of(i);
            if (!tuple[static_cast<std::size_t>(j)].contains(i)) {
                col.push_back(SpherePoint::base_point(k));
                continue;
            }
            const Eigen::VectorXd pole = SpherePoint::base_point(k).coords();
            for (int attempt = 0;; ++attempt) {
                if (attempt >= 10000)
                    throw std::logic_error("sample_on_cell: margin rejection did not terminate");
                SpherePoint p = uniform_sphere(k, rng);
                if (signed_sup_dist(p.coords(), pole) < margin) continue;
                bool clear = true;
                for (int jp = 0; jp < j && clear; ++jp) {
                    if (!tuple[static_cast<std::size_t>(jp)].contains(i)) continue;
                    const auto& q = columns[static_cast<std::size_t>(jp)][static_cast<std::size_t>(i - 1)];
                    if (signed_sup_dist(p.coords(), q.coords()) < margin) clear = false;
                }
                if (!clear) continue;
                col.push_back(std::move(p));
                break;
            }
        }
        columns.push_back(std::move(col));
    }
    return Configuration(carrier, std::move(columns), tol);
}

Configuration sample_configuration(const Carrier& carrier, int s, SubstreamRng& rng,
                                   SampleMode mode, double tol) {
    if (!carrier) throw std::domain_error("sample_configuration: null spec");
    if (s < 1) throw std::domain_error("sample_configuration: s must be >= 1");
    const std::vector<Face> all_faces = carrier->complex().faces();
    std::vector<Face> tuple;
    tuple.reserve(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j)
        tuple.push_back(all_faces[static_cast<std::size_t>(rng.next_below(
            static_cast<int>(all_faces.size())))]);

    Configuration base = sample_on_cell(carrier, tuple, rng, 1e-7, tol);
    if (mode == SampleMode::generic) return base;

    const int n = carrier->complex().vertex_count();
    std::vector<std::vector<SpherePoint>> columns;
    columns.reserve(static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j) columns.push_back(base.column(j));

    // Repeated column: copy one column (cell face and points) over another.
    if (s >= 2 && rng.next_double() < 0.5) {
        const int src = rng.next_below(s);
        int dst = rng.next_below(s - 1);
        if (dst >= src) ++dst;
        columns[static_cast<std::size_t>(dst)] = columns[static_cast<std::size_t>(src)];
        tuple[static_cast<std::size_t>(dst)] = tuple[static_cast<std::size_t>(src)];
    }

    // Exact +- coincidence between two support entries of one row.
    if (rng.next_double() < 0.5) {
        std::vector<std::tuple<int, int, int>> eligible;
        for (int i = 1; i <= n; ++i)
            for (int ja = 0; ja < s; ++ja)
                for (int jb = 0; jb < s; ++jb)
                    if (ja != jb && tuple[static_cast<std::size_t>(ja)].contains(i) &&
                        tuple[static_cast<std::size_t>(jb)].contains(i))
                        eligible.emplace_back(i, ja, jb);
        if (!eligible.empty()) {
            const auto [i, ja, jb] =
                eligible[static_cast<std::size_t>(rng.next_below(static_cast<int>(eligible.size())))];
            const bool negate = rng.next_double() < 0.5;
            Eigen::VectorXd v = columns[static_cast<std::size_t>(ja)][static_cast<std::size_t>(i - 1)].coords();
            if (negate) v = -v;
            columns[static_cast<std::size_t>(jb)][static_cast<std::size_t>(i - 1)] = SpherePoint(v);
        }
    }

    // Exact pole entry inside a support cell.
    if (rng.next_double() < 0.5) {
        std::vector<std::pair<int, int>> eligible;
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j < s; ++j)
                if (tuple[static_cast<std::size_t>(j)].contains(i)) eligible.emplace_back(i, j);
        if (!eligible.empty()) {
            const auto [i, j] =
                eligible[static_cast<std::size_t>(rng.next_below(static_cast<int>(eligible.size())))];
            Eigen::VectorXd pole = SpherePoint::base_point(carrier->dim_of(i)).coords();
            if (rng.next_double() < 0.5) pole = -pole;
            columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] = SpherePoint(pole);
        }
    }

    // Opposite poles anchored at the pivot column.
    if (s >= 2 && rng.next_double() < 0.5) {
        std::vector<std::pair<int, int>> eligible;
        for (int i = 1; i <= n; ++i)
            if (tuple[0].contains(i))
                for (int j = 1; j < s; ++j)
                    if (tuple[static_cast<std::size_t>(j)].contains(i)) eligible.emplace_back(i, j);
        if (!eligible.empty()) {
            const auto [i, j] =
                eligible[static_cast<std::size_t>(rng.next_below(static_cast<int>(eligible.size())))];
            Eigen::VectorXd pole = SpherePoint::base_point(carrier->dim_of(i)).coords();
            if (rng.next_double() < 0.5) pole = -pole;
            columns[0][static_cast<std::size_t>(i - 1)] = SpherePoint(pole);
            columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] =
                SpherePoint(Eigen::VectorXd(-pole));
        }
    }

    return Configuration(carrier, std::move(columns), tol);
}

Configuration perturb_configuration(const Configuration& config, SubstreamRng& rng, double delta) {
    if (!(delta > 0.0)) throw std::domain_error("perturb_configuration: delta must be positive");
    const Carrier& carrier = config.spec();
    const int n = config.rows();
    const int s = config.stages();

    std::vector<std::vector<SpherePoint>> columns;
    columns.reserve(static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j) columns.push_back(config.column(j));

    for (int i = 1; i <= n; ++i) {
        const Eigen::VectorXd pole = SpherePoint::base_point(carrier->dim_of(i)).coords();
        for (int j = 0; j < s; ++j) {
            const Eigen::VectorXd orig = config.point(i, j + 1).coords();
            if (is_exact(orig, pole) || is_exact(orig, Eigen::VectorXd(-pole))) continue;
            bool aliased = false;
            for (int jp = 0; jp < j && !aliased; ++jp) {
                const Eigen::VectorXd prev = config.point(i, jp + 1).coords();
                if (is_exact(orig, prev)) {
                    columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] =
                        columns[static_cast<std::size_t>(jp)][static_cast<std::size_t>(i - 1)];
                    aliased = true;
                } else if (is_exact(orig, Eigen::VectorXd(-prev))) {
                    columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] =
                        columns[static_cast<std::size_t>(jp)][static_cast<std::size_t>(i - 1)]
                            .antipode();
                    aliased = true;
                }
            }
            if (aliased) continue;
            Eigen::VectorXd u(orig.size());
            for (;;) {
                for (int c = 0; c < u.size(); ++c) u[c] = rng.next_normal();
                u -= u.dot(orig) * orig;
                const double norm = u.norm();
                if (norm > 1e-9) {
                    u /= norm;
                    break;
                }
            }
            Eigen::VectorXd moved = orig + delta * u;
            moved /= moved.norm();
            columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] =
                SpherePoint(std::move(moved));
        }
    }
    return Configuration(carrier, std::move(columns), config.tol());
}

double configuration_distance(const Configuration& a, const Configuration& b) {
    if (a.stages() != b.stages() || a.rows() != b.rows())
        throw std::domain_error("configuration_distance: shape mismatch");
    double out = 0.0;
    for (int j = 1; j <= a.stages(); ++j)
        for (int i = 1; i <= a.rows(); ++i)
            out = std::max(out, sup_dist(a.point(i, j).coords(), b.point(i, j).coords()));
    return out;
}

}  // namespace polytc
