#pragma once

#include <Eigen/Core>

namespace polytc {

/**
 * Point on the unit sphere S^k in R^{k+1}, k >= 1.  The coordinate norm must
 * be 1 within 1e-12 at public construction; the base point is
 * e^0 = (1,0,...,0).
 */
class SpherePoint {
public:
    explicit SpherePoint(Eigen::VectorXd coords);

    /** The base point e^0 of S^k. */
    static SpherePoint base_point(int k);

    [[nodiscard]] const Eigen::VectorXd& coords() const { return coords_; }
    [[nodiscard]] int sphere_dim() const { return static_cast<int>(coords_.size()) - 1; }

    /** Coordinatewise negation; exact in floating point. */
    [[nodiscard]] SpherePoint antipode() const;

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
    }

private:
    friend class SpherePath;
    struct Unchecked {};
    SpherePoint(Eigen::VectorXd coords, Unchecked) : coords_(std::move(coords)) {}

    Eigen::VectorXd coords_;
};

/**
 * Normalized geodesic distance angle(x,y)/(2 pi), so antipodes are exactly
 * 1/2 apart and every value lies in [0, 1/2].  Throws std::domain_error on a
 * dimension mismatch.
 */
[[nodiscard]] double dist(const SpherePoint& x, const SpherePoint& y);

/**
 * Unit tangent field on an odd sphere: pairs consecutive coordinates as
 * (-x_2, x_1, -x_4, x_3, ...).  Throws std::domain_error on even spheres.
 */
[[nodiscard]] Eigen::VectorXd field_nu(const SpherePoint& x);

/**
 * Unit tangent field on an even sphere away from +-e^0: the odd-sphere pairing
 * applied to coordinates 2..k+1 with first component 0, normalized.  Throws
 * std::domain_error on odd spheres or when the first coordinate is within
 * 1e-12 of +-1.
 */
[[nodiscard]] Eigen::VectorXd field_upsilon(const SpherePoint& x);

/**
 * Great-circle motion with a hold phase: for t in [delay, delay+duration] the
 * path follows cos(2 pi (t-delay)) x + sin(2 pi (t-delay)) w at unit speed in
 * the normalized metric; outside that window it sits at the cached endpoints,
 * bitwise.  Paths are defined on [0,1].
 */
class SpherePath {
public:
    SpherePath(SpherePoint x, SpherePoint y, Eigen::VectorXd w, double duration);

    [[nodiscard]] SpherePoint eval(double t) const;
    [[nodiscard]] const SpherePoint& start() const { return x_; }
    [[nodiscard]] const SpherePoint& end() const { return y_; }
    [[nodiscard]] double delay() const { return delay_; }
    [[nodiscard]] double duration() const { return duration_; }

    /** The same motion started later; delay + duration must stay within [0,1]. */
    [[nodiscard]] SpherePath delayed(double delay) const;

private:
    SpherePoint x_;
    SpherePoint y_;
    Eigen::VectorXd w_;
    double delay_ = 0.0;
    double duration_;
};

/**
 * Constant-speed shortest geodesic from x to y, holding at y from time
 * dist(x,y) on.  Throws std::domain_error when x and y are antipodal within
 * 1e-9 or live on different spheres.
 */
[[nodiscard]] SpherePath rule_geodesic(const SpherePoint& x, const SpherePoint& y);

/** Semicircle from x to -x along the direction field_nu(x); odd spheres only. */
[[nodiscard]] SpherePath rule_semicircle_odd(const SpherePoint& x);

/** Semicircle from x to -x along field_upsilon(x); even spheres, x off the poles. */
[[nodiscard]] SpherePath rule_semicircle_even(const SpherePoint& x);

/**
 * The fixed meridian through (0,1,0,...,0) joining the poles; accepts exactly
 * the ordered pairs (e^0,-e^0) and (-e^0,e^0) up to 1e-12 per coordinate and
 * rejects anything else with std::domain_error.
 */
[[nodiscard]] SpherePath rule_meridian(const SpherePoint& x, const SpherePoint& y);

}  // namespace polytc
