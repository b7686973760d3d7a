#pragma once

#include <map>
#include <string>

#include "lemnichor/orbit.hpp"

namespace lemnichor {

/// Closed-form values of the conserved quantities on the choreographic orbit.
namespace conserved {
inline const double kMomentOfInertia = std::sqrt(3.0);
inline const double kVelocitySquareSum = 0.75;
inline const double kCurvatureSquareSum = 9.0 * std::sqrt(3.0);
inline const double kSumSquareDistances = 3.0 * std::sqrt(3.0);
inline const double kProductSquareDistances = 1.5 * std::sqrt(3.0);
} // namespace conserved

struct InvariantReport {
    double t = 0.0;
    Vec2 center_of_mass;
    double moment_of_inertia = 0.0;
    double angular_momentum = 0.0;
    double kinetic_energy = 0.0;  // sum of v_i^2, no factor 1/2
    double curvature_sq_sum = 0.0;
    double sum_sq_distances = 0.0;
    double product_sq_distances = 0.0;
    /// |observed - closed form| keyed by quantity name.
    std::map<std::string, double> residuals;
};

Vec2 center_of_mass(const TripleState &s);
double moment_of_inertia(const TripleState &s);
/// z-component of sum x_i x v_i.
double angular_momentum(const TripleState &s);
/// Sum of v_i^2.
double kinetic_energy(const TripleState &s);

/// |v x a| / |v|^3. Throws DegenerateVelocityError when |v| < 1e-12.
double curvature(const Vec2 &vel, const Vec2 &acc);
double curvature(double t, const EllipticContext &ctx);
double curvature_sq_sum(const TripleState &s);

/// |v^2 + (m - 1/2) x^2 - 1/2| at phase t for parameter m.
double velocity_relation_residual(double t, double m);
double velocity_relation_residual(double t, const EllipticContext &ctx);

double sum_sq_distances(const Positions &p);
double sum_sq_distances(const TripleState &s);
double product_sq_distances(const Positions &p);
double product_sq_distances(const TripleState &s);

InvariantReport full_report(double t, const EllipticContext &ctx);

} // namespace lemnichor
