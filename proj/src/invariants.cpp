#include "lemnichor/invariants.hpp"

#include <cmath>

#include "lemnichor/errors.hpp"

namespace lemnichor {

namespace {
constexpr double kMinSpeed = 1e-12;
}

Vec2 center_of_mass(const TripleState &s) {
    return s.bodies[0].pos + s.bodies[1].pos + s.bodies[2].pos;
}

double moment_of_inertia(const TripleState &s) {
    double sum = 0.0;
    for (const auto &b : s.bodies)
        sum += norm2(b.pos);
    return sum;
}

double angular_momentum(const TripleState &s) {
    double sum = 0.0;
    for (const auto &b : s.bodies)
        sum += cross(b.pos, b.vel);
    return sum;
}

double kinetic_energy(const TripleState &s) {
    double sum = 0.0;
    for (const auto &b : s.bodies)
        sum += norm2(b.vel);
    return sum;
}

double curvature(const Vec2 &vel, const Vec2 &acc) {
    const double speed = norm(vel);
    if (speed < kMinSpeed)
        throw DegenerateVelocityError("curvature undefined: speed below 1e-12");
    return std::abs(cross(vel, acc)) / (speed * speed * speed);
}

double curvature(double t, const EllipticContext &ctx) {
    const auto b = body_state(t, ctx);
    return curvature(b.vel, b.acc);
}

double curvature_sq_sum(const TripleState &s) {
    double sum = 0.0;
    for (const auto &b : s.bodies) {
        const double k = curvature(b.vel, b.acc);
        sum += k * k;
    }
    return sum;
}

double velocity_relation_residual(double t, const EllipticContext &ctx) {
    const Vec2 x = position(t, ctx);
    const Vec2 v = velocity(t, ctx);
    return std::abs(norm2(v) + (ctx.m() - 0.5) * norm2(x) - 0.5);
}

double velocity_relation_residual(double t, double m) {
    return velocity_relation_residual(t, make_context(m));
}

double sum_sq_distances(const Positions &p) {
    return norm2(p[0] - p[1]) + norm2(p[1] - p[2]) + norm2(p[2] - p[0]);
}

double sum_sq_distances(const TripleState &s) { return sum_sq_distances(s.positions()); }

double product_sq_distances(const Positions &p) {
    return norm2(p[0] - p[1]) * norm2(p[1] - p[2]) * norm2(p[2] - p[0]);
}

double product_sq_distances(const TripleState &s) {
    return product_sq_distances(s.positions());
}

InvariantReport full_report(double t, const EllipticContext &ctx) {
    const TripleState s = triple(t, ctx);
    InvariantReport r;
    r.t = t;
    r.center_of_mass = center_of_mass(s);
    r.moment_of_inertia = moment_of_inertia(s);
    r.angular_momentum = angular_momentum(s);
    r.kinetic_energy = kinetic_energy(s);
    r.curvature_sq_sum = curvature_sq_sum(s);
    r.sum_sq_distances = sum_sq_distances(s);
    r.product_sq_distances = product_sq_distances(s);

    r.residuals["center_of_mass"] = norm(r.center_of_mass);
    r.residuals["moment_of_inertia"] =
        std::abs(r.moment_of_inertia - conserved::kMomentOfInertia);
    r.residuals["angular_momentum"] = std::abs(r.angular_momentum);
    r.residuals["kinetic_energy"] = std::abs(r.kinetic_energy - conserved::kVelocitySquareSum);
    r.residuals["curvature_sq_sum"] =
        std::abs(r.curvature_sq_sum - conserved::kCurvatureSquareSum);
    r.residuals["sum_sq_distances"] =
        std::abs(r.sum_sq_distances - conserved::kSumSquareDistances);
    r.residuals["product_sq_distances"] =
        std::abs(r.product_sq_distances - conserved::kProductSquareDistances);
    return r;
}

} // namespace lemnichor
