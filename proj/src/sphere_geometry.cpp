#include "polytc/sphere_geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polytc {

namespace {

constexpr double kConstructionTol = 1e-12;
constexpr double kAntipodalTol = 1e-9;

void require_same_sphere(const SpherePoint& x, const SpherePoint& y) {
    if (x.sphere_dim() != y.sphere_dim()) {
        throw std::domain_error("points live on spheres of different dimension");
    }
}

/** Pairing (-x_2, x_1, -x_4, x_3, ...) on an even number of coordinates. */
Eigen::VectorXd rotate_pairs(const Eigen::VectorXd& x) {
    Eigen::VectorXd out(x.size());
    for (Eigen::Index i = 0; i + 1 < x.size(); i += 2) {
        out[i] = -x[i + 1];
        out[i + 1] = x[i];
    }
    return out;
}

bool near_pole(const SpherePoint& x, double tol) {
    if (std::abs(x.coords()[0] - 1.0) > tol && std::abs(x.coords()[0] + 1.0) > tol) {
        return false;
    }
    for (Eigen::Index i = 1; i < x.coords().size(); ++i) {
        if (std::abs(x.coords()[i]) > tol) return false;
    }
    return true;
}

}  // namespace

SpherePoint::SpherePoint(Eigen::VectorXd coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) {
        throw std::domain_error("sphere points need at least two coordinates");
    }
    if (std::abs(coords_.norm() - 1.0) > kConstructionTol) {
        throw std::domain_error("coordinates are not on the unit sphere: norm " +
                                std::to_string(coords_.norm()));
    }
}

SpherePoint SpherePoint::base_point(int k) {
    if (k < 1) throw std::domain_error("sphere dimension must be at least 1");
    Eigen::VectorXd c = Eigen::VectorXd::Zero(k + 1);
    c[0] = 1.0;
    return SpherePoint(std::move(c), Unchecked{});
}

SpherePoint SpherePoint::antipode() const { return SpherePoint(-coords_, Unchecked{}); }

double dist(const SpherePoint& x, const SpherePoint& y) {
    require_same_sphere(x, y);
    const double diff = (x.coords() - y.coords()).norm();
    const double sum = (x.coords() + y.coords()).norm();
    return std::atan2(diff, sum) / std::numbers::pi;
}

Eigen::VectorXd field_nu(const SpherePoint& x) {
    if (x.sphere_dim() % 2 == 0) {
        throw std::domain_error("the pairing field needs an odd sphere");
    }
    return rotate_pairs(x.coords());
}

Eigen::VectorXd field_upsilon(const SpherePoint& x) {
    if (x.sphere_dim() % 2 != 0) {
        throw std::domain_error("the equatorial field needs an even sphere");
    }
    if (std::abs(std::abs(x.coords()[0]) - 1.0) <= kConstructionTol) {
        throw std::domain_error("the equatorial field is undefined at the poles");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(x.coords().size());
    out.tail(x.coords().size() - 1) = rotate_pairs(x.coords().tail(x.coords().size() - 1));
    out /= out.norm();
    return out;
}

SpherePath::SpherePath(SpherePoint x, SpherePoint y, Eigen::VectorXd w, double duration)
    : x_(std::move(x)), y_(std::move(y)), w_(std::move(w)), duration_(duration) {
    if (x_.sphere_dim() != y_.sphere_dim() ||
        w_.size() != x_.coords().size()) {
        throw std::domain_error("path data dimensions disagree");
    }
    if (!(duration_ >= 0.0) || duration_ > 0.5) {
        throw std::domain_error("path durations lie in [0, 1/2]");
    }
}

SpherePoint SpherePath::eval(double t) const {
    if (t <= delay_) return x_;
    if (t >= delay_ + duration_) return y_;
    const double angle = 2.0 * std::numbers::pi * (t - delay_);
    return SpherePoint(std::cos(angle) * x_.coords() + std::sin(angle) * w_,
                       SpherePoint::Unchecked{});
}

SpherePath SpherePath::delayed(double delay) const {
    if (!(delay >= 0.0) || delay + duration_ > 1.0) {
        throw std::domain_error("delayed paths must fit inside [0,1]");
    }
    SpherePath out = *this;
    out.delay_ = delay;
    return out;
}

SpherePath rule_geodesic(const SpherePoint& x, const SpherePoint& y) {
    require_same_sphere(x, y);
    if ((x.coords() + y.coords()).norm() <= kAntipodalTol) {
        throw std::domain_error("no shortest geodesic between antipodal points");
    }
    const double d = dist(x, y);
    Eigen::VectorXd w = y.coords() - x.coords().dot(y.coords()) * x.coords();
    const double wn = w.norm();
    if (wn <= kConstructionTol) {
        // Degenerate direction between near-identical points: any tangent
        // works, the motion window has length dist(x,y) <= ~1e-12.
        Eigen::Index m = 0;
        x.coords().cwiseAbs().minCoeff(&m);
        w = Eigen::VectorXd::Zero(x.coords().size());
        w[m] = 1.0;
        w -= x.coords().dot(w) * x.coords();
        w /= w.norm();
    } else {
        w /= wn;
    }
    return SpherePath(x, y, std::move(w), d);
}

SpherePath rule_semicircle_odd(const SpherePoint& x) {
    return SpherePath(x, x.antipode(), field_nu(x), 0.5);
}

SpherePath rule_semicircle_even(const SpherePoint& x) {
    return SpherePath(x, x.antipode(), field_upsilon(x), 0.5);
}

SpherePath rule_meridian(const SpherePoint& x, const SpherePoint& y) {
    require_same_sphere(x, y);
    const bool antipodal_pair =
        (x.coords() + y.coords()).lpNorm<Eigen::Infinity>() <= kConstructionTol;
    if (!near_pole(x, kConstructionTol) || !antipodal_pair) {
        throw std::domain_error("the meridian rule only joins the two poles");
    }
    Eigen::VectorXd m = Eigen::VectorXd::Zero(x.coords().size());
    m[1] = 1.0;
    return SpherePath(x, y, std::move(m), 0.5);
}

}  // namespace polytc
