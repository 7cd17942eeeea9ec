#include "polytc/motion_planner.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace polytc {

namespace {

constexpr double kExactPoleTol = 1e-12;

double sup_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - b).lpNorm<Eigen::Infinity>();
}

/** Sup-norm distance from x to the nearer of +-y. */
double signed_sup_dist(const SpherePoint& x, const SpherePoint& y) {
    return std::min(sup_dist(x.coords(), y.coords()),
                    (x.coords() + y.coords()).lpNorm<Eigen::Infinity>());
}

double sup_dist_to_base(const SpherePoint& x) {
    double m = std::abs(x.coords()[0] - 1.0);
    for (Eigen::Index c = 1; c < x.coords().size(); ++c) {
        m = std::max(m, std::abs(x.coords()[c]));
    }
    return m;
}

/** Sup-norm distance from x to the nearer of the two poles +-e^0. */
double pole_sup_dist(const SpherePoint& x) {
    double plus = std::abs(x.coords()[0] - 1.0);
    double minus = std::abs(x.coords()[0] + 1.0);
    for (Eigen::Index c = 1; c < x.coords().size(); ++c) {
        plus = std::max(plus, std::abs(x.coords()[c]));
        minus = std::max(minus, std::abs(x.coords()[c]));
    }
    return std::min(plus, minus);
}

}  // namespace

Configuration::Configuration(Carrier spec, std::vector<std::vector<SpherePoint>> columns,
                             double tol)
    : spec_(std::move(spec)), columns_(std::move(columns)), tol_(tol) {
    if (!spec_) throw std::domain_error("configurations need a carrier spec");
    if (columns_.empty()) throw std::domain_error("configurations need at least one column");
    const int n = spec_->complex().vertex_count();
    for (int j = 1; j <= stages(); ++j) {
        const auto& col = columns_[static_cast<std::size_t>(j - 1)];
        if (static_cast<int>(col.size()) != n) {
            throw std::domain_error("column " + std::to_string(j) + " has " +
                                    std::to_string(col.size()) + " rows, expected " +
                                    std::to_string(n));
        }
        for (int i = 1; i <= n; ++i) {
            if (col[static_cast<std::size_t>(i - 1)].sphere_dim() != spec_->dim_of(i)) {
                throw std::domain_error("entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") lives on the wrong sphere");
            }
        }
        const Face supp = column_support(j, tol);
        if (!spec_->complex().contains(supp)) {
            throw std::domain_error("support " + supp.to_string() + " of column " +
                                    std::to_string(j) + " is not a face");
        }
    }
}

const SpherePoint& Configuration::point(int i, int j) const {
    return columns_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

const std::vector<SpherePoint>& Configuration::column(int j) const {
    return columns_[static_cast<std::size_t>(j - 1)];
}

Face Configuration::column_support(int j, double tol) const {
    Face supp;
    for (int i = 1; i <= rows(); ++i) {
        if (sup_dist_to_base(point(i, j)) > tol) {
            supp = supp | Face::from_vertices({i});
        }
    }
    return supp;
}

int OrderedPartitionTuple::weight() const {
    int w = 0;
    for (const auto& row : rows) w += row.excess();
    return w;
}

Stratum classify(const Configuration& config, double tol) {
    const SphereProductSpec& spec = *config.spec();
    const int n = config.rows();
    const int s = config.stages();

    Stratum st;
    st.beta.resize(static_cast<std::size_t>(n));

    // Pole proximity per entry, with the ambiguity band screened first.
    std::vector<std::vector<bool>> pole_hit(static_cast<std::size_t>(n + 1),
                                            std::vector<bool>(static_cast<std::size_t>(s + 1)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= s; ++j) {
            const double d = pole_sup_dist(config.point(i, j));
            if (d <= tol) {
                pole_hit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
            } else if (d < 10.0 * tol) {
                throw AmbiguityError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") sits in the pole ambiguity band");
            }
        }
    }

    for (int i = 1; i <= n; ++i) {
        std::vector<int> parent(static_cast<std::size_t>(s + 1));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](int a) {
            while (parent[static_cast<std::size_t>(a)] != a) {
                a = parent[static_cast<std::size_t>(a)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            }
            return a;
        };
        for (int j = 1; j <= s; ++j) {
            for (int k = j + 1; k <= s; ++k) {
                const double m = signed_sup_dist(config.point(i, j), config.point(i, k));
                if (m <= tol) {
                    parent[static_cast<std::size_t>(find(k))] = find(j);
                } else if (m < 10.0 * tol) {
                    throw AmbiguityError("entries (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") and (" + std::to_string(i) +
                                         "," + std::to_string(k) +
                                         ") sit in the sign-equality ambiguity band");
                }
            }
        }
        std::vector<std::vector<int>> parts;
        for (int j = 1; j <= s; ++j) {
            const int root = find(j);
            auto it = std::find_if(parts.begin(), parts.end(), [&](const auto& p) {
                return find(p.front()) == root;
            });
            if (it == parts.end()) {
                parts.push_back({j});
            } else {
                it->push_back(j);
            }
        }
        // Scanning columns in order already yields parts ordered by least element.
        st.partitions.rows.push_back(OrderedPartition{std::move(parts)});

        for (int k : st.partitions.rows.back().parts.front()) {
            if (k == 1) continue;
            if (sup_dist(config.point(i, k).coords(), config.point(i, 1).coords()) <= tol) {
                st.beta[static_cast<std::size_t>(i - 1)].push_back(k);
            }
        }
    }

    for (int i = 1; i <= n; ++i) {
        if (!spec.even_vertices().contains(i)) continue;
        bool any_hit = false;
        for (int j = 1; j <= s; ++j) {
            any_hit = any_hit || pole_hit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        if (!any_hit) {
            st.k_set = st.k_set | Face::from_vertices({i});
            continue;
        }
        bool first_part_hit = false;
        for (int j : st.partitions.rows[static_cast<std::size_t>(i - 1)].parts.front()) {
            first_part_hit =
                first_part_hit || pole_hit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        st.epsilon[i] = first_part_hit ? 1 : 0;
    }
    return st;
}

int stratum_norm(const Stratum& st) { return st.norm(); }

PathPlan::PathPlan(Carrier spec, std::vector<std::vector<SpherePath>> columns)
    : spec_(std::move(spec)), columns_(std::move(columns)) {
    if (!spec_) throw std::domain_error("path plans need a carrier spec");
    for (const auto& col : columns_) {
        if (static_cast<int>(col.size()) != spec_->complex().vertex_count()) {
            throw std::domain_error("path plan columns must cover every row");
        }
    }
}

const SpherePath& PathPlan::path(int i, int j) const {
    return columns_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

std::vector<SpherePoint> PathPlan::eval_column(int j, double t) const {
    std::vector<SpherePoint> out;
    out.reserve(columns_[static_cast<std::size_t>(j - 1)].size());
    for (const auto& p : columns_[static_cast<std::size_t>(j - 1)]) out.push_back(p.eval(t));
    return out;
}

Face PathPlan::support(int j, double t, double tol) const {
    Face supp;
    const auto& col = columns_[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i <= static_cast<int>(col.size()); ++i) {
        if (sup_dist_to_base(col[static_cast<std::size_t>(i - 1)].eval(t)) > tol) {
            supp = supp | Face::from_vertices({i});
        }
    }
    return supp;
}

PathPlan local_rule(const Configuration& config, const Stratum& st) {
    const SphereProductSpec& spec = *config.spec();
    const int n = config.rows();
    const int s = config.stages();
    if (static_cast<int>(st.partitions.rows.size()) != n ||
        static_cast<int>(st.beta.size()) != n) {
        throw std::domain_error("stratum shape does not match the configuration");
    }

    std::vector<double> delay(static_cast<std::size_t>(n + 1));
    for (int i = 1; i <= n; ++i) {
        const auto base = SpherePoint::base_point(spec.dim_of(i));
        delay[static_cast<std::size_t>(i)] = 0.5 - dist(config.point(i, 1), base);
    }

    std::vector<std::vector<SpherePath>> columns;
    columns.reserve(static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j) {
        std::vector<SpherePath> col;
        col.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            const SpherePoint& x = config.point(i, 1);
            const SpherePoint& y = config.point(i, j);
            const auto& alpha1 = st.partitions.rows[static_cast<std::size_t>(i - 1)].parts.front();
            const bool in_alpha1 = std::find(alpha1.begin(), alpha1.end(), j) != alpha1.end();
            const auto& beta = st.beta[static_cast<std::size_t>(i - 1)];
            const bool in_beta = std::find(beta.begin(), beta.end(), j) != beta.end();
            const SpherePath raw = [&]() -> SpherePath {
                try {
                    if (j == 1 || !in_alpha1 || in_beta) return rule_geodesic(x, y);
                    if (spec.odd_vertices().contains(i)) return rule_semicircle_odd(x);
                    const int flag = st.k_set.contains(i) ? 0 : st.epsilon.at(i);
                    if (flag == 0) return rule_semicircle_even(x);
                    if (pole_sup_dist(x) > kExactPoleTol ||
                        (x.coords() + y.coords()).lpNorm<Eigen::Infinity>() > kExactPoleTol) {
                        throw AmbiguityError(
                            "row " + std::to_string(i) +
                            " is classified at a pole it does not hit exactly");
                    }
                    return rule_meridian(x, y);
                } catch (const AmbiguityError&) {
                    throw;
                } catch (const std::out_of_range&) {
                    throw std::logic_error("stratum misses the pole flag for row " +
                                           std::to_string(i));
                } catch (const std::domain_error& e) {
                    throw std::logic_error(
                        std::string("rule precondition violated on a valid stratum: ") +
                        e.what());
                }
            }();
            col.push_back(raw.delayed(delay[static_cast<std::size_t>(i)]));
        }
        columns.push_back(std::move(col));
    }
    return PathPlan(config.spec(), std::move(columns));
}

PlanResult plan(const Configuration& config, double tol) {
    Stratum st = classify(config, tol);
    const int index = st.norm();
    PathPlan paths = local_rule(config, st);
    return PlanResult{index, std::move(st), std::move(paths)};
}

int domain_count(const SphereProductSpec& spec, int s) { return tc_s(spec, s).value + 1; }

}  // namespace polytc
