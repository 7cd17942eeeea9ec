#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "polytc/norms.hpp"
#include "polytc/sphere_geometry.hpp"
#include "polytc/sphere_product.hpp"

namespace polytc {

/**
 * Raised when a configuration sits too close to a classification threshold to
 * assign a stratum reliably: some comparison falls in the band (tol, 10 tol),
 * or a pole hit is asserted by tolerance without the point being an exact pole.
 */
class AmbiguityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A point of the s-fold product of the sphere product: an n x s matrix of
 * sphere points b_{ij} stored column-major, where row i lives on S^{k_i}.
 * Each column's support (rows away from the base point, detected with the
 * ingestion tolerance) must be a face of the carrier complex.
 */
class Configuration {
public:
    Configuration(Carrier spec, std::vector<std::vector<SpherePoint>> columns,
                  double tol = 1e-9);

    [[nodiscard]] const Carrier& spec() const { return spec_; }
    [[nodiscard]] int stages() const { return static_cast<int>(columns_.size()); }
    [[nodiscard]] int rows() const { return spec_->complex().vertex_count(); }
    /** Entry b_{ij}; row i in [1,n], column j in [1,s]. */
    [[nodiscard]] const SpherePoint& point(int i, int j) const;
    [[nodiscard]] const std::vector<SpherePoint>& column(int j) const;
    /** Rows of column j farther than tol from the base point, as a face. */
    [[nodiscard]] Face column_support(int j, double tol) const;
    /** Tolerance used at ingestion to validate the column supports. */
    [[nodiscard]] double tol() const { return tol_; }

private:
    Carrier spec_;
    std::vector<std::vector<SpherePoint>> columns_;
    double tol_ = 1e-9;
};

/** Partition of the column set [1,s] with parts ordered by least element. */
struct OrderedPartition {
    std::vector<std::vector<int>> parts;

    /** Number of parts beyond the first. */
    [[nodiscard]] int excess() const { return static_cast<int>(parts.size()) - 1; }

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/** One ordered partition per row; the weight sums the per-row excesses. */
struct OrderedPartitionTuple {
    std::vector<OrderedPartition> rows;

    [[nodiscard]] int weight() const;

    friend bool operator==(const OrderedPartitionTuple&, const OrderedPartitionTuple&) =
        default;
};

/**
 * Stratum data of a configuration: the partition tuple P, the set K of
 * even rows avoiding both poles in every column, the per-row sets beta of
 * first-part columns equal to column 1 with a plus sign, and the pole flag
 * epsilon on even rows outside K.
 */
struct Stratum {
    OrderedPartitionTuple partitions;
    Face k_set;
    std::vector<std::vector<int>> beta;
    std::map<int, int> epsilon;

    /** Domain index |P| + |K| of the stratum. */
    [[nodiscard]] int norm() const { return partitions.weight() + k_set.size(); }

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

/**
 * The emitted plan: one path per matrix entry, with plan column j joining
 * configuration column 1 (at t = 0) to configuration column j (at t = 1).
 */
class PathPlan {
public:
    PathPlan(Carrier spec, std::vector<std::vector<SpherePath>> columns);

    [[nodiscard]] int stages() const { return static_cast<int>(columns_.size()); }
    [[nodiscard]] const SpherePath& path(int i, int j) const;
    [[nodiscard]] std::vector<SpherePoint> eval_column(int j, double t) const;
    /** Rows of plan column j farther than tol from the base point at time t. */
    [[nodiscard]] Face support(int j, double t, double tol = 1e-9) const;

private:
    Carrier spec_;
    std::vector<std::vector<SpherePath>> columns_;
};

/**
 * Assigns the stratum of a configuration.  Rows group columns whose points
 * agree up to sign within tol; comparisons landing in (tol, 10 tol) raise
 * AmbiguityError instead of guessing.
 */
[[nodiscard]] Stratum classify(const Configuration& config, double tol = 1e-9);

/** Domain index |P| + |K| of a stratum. */
[[nodiscard]] int stratum_norm(const Stratum& st);

/**
 * Emits the path plan for a configuration in a given stratum.  Every path of
 * row i holds its start until 1/2 - dist(b_{i1}, e^0) and then follows the
 * rule selected by the stratum: a geodesic for columns outside the first part
 * or tied to column 1 with a plus sign, the pairing-field semicircle on odd
 * rows, the equatorial semicircle on even rows away from the poles, and the
 * fixed meridian on even rows whose first part hits a pole.  A rule
 * precondition failure on a valid stratum raises std::logic_error.
 */
[[nodiscard]] PathPlan local_rule(const Configuration& config, const Stratum& st);

/** Result of planning: the stratum, its domain index, and the paths. */
struct PlanResult {
    int domain_index;
    Stratum stratum;
    PathPlan paths;
};

/** classify followed by local_rule; the domain index is the stratum norm. */
[[nodiscard]] PlanResult plan(const Configuration& config, double tol = 1e-9);

/** Number of local domains of the optimal planner: tc_s + 1. */
[[nodiscard]] int domain_count(const SphereProductSpec& spec, int s);

}  // namespace polytc
