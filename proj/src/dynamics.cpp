#include "lemnichor/dynamics.hpp"

#include <cmath>
#include <string>

namespace lemnichor {

namespace {

const double kSqrt3 = std::sqrt(3.0);

double pair_distance_sq(const Positions &p, std::size_t i, std::size_t j) {
    const double r2 = norm2(p[j] - p[i]);
    if (r2 < kCollisionDistance * kCollisionDistance)
        throw CollisionError("bodies " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                             " closer than collision threshold");
    return r2;
}

double energy_of(const PhaseState &s, PotentialVariant variant) {
    return total_energy(s.pos, s.vel, variant);
}

} // namespace

std::string_view to_string(PotentialVariant v) {
    return v == PotentialVariant::Central ? "U" : "V";
}

PotentialVariant parse_variant(std::string_view s) {
    if (s == "U" || s == "u" || s == "central" || s == "U_CENTRAL")
        return PotentialVariant::Central;
    if (s == "V" || s == "v" || s == "pairwise" || s == "V_PAIRWISE")
        return PotentialVariant::Pairwise;
    throw DomainError("unknown potential variant '" + std::string(s) + "' (expected U or V)");
}

Vec2 force_newton(const Positions &p, std::size_t i) {
    Vec2 f;
    for (std::size_t j = 0; j < 3; ++j) {
        if (j == i)
            continue;
        f += (p[j] - p[i]) / pair_distance_sq(p, i, j);
    }
    return 0.5 * f;
}

Vec2 force_repulsive_central(const Vec2 &x) { return (kSqrt3 / 4.0) * x; }

Vec2 force_repulsive_pairwise(const Positions &p, std::size_t i) {
    Vec2 sum;
    for (std::size_t j = 0; j < 3; ++j)
        if (j != i)
            sum += p[j] - p[i];
    return (-kSqrt3 / 12.0) * sum;
}

std::array<Vec2, 3> forces(const Positions &p, PotentialVariant variant) {
    std::array<Vec2, 3> f;
    for (std::size_t i = 0; i < 3; ++i) {
        const Vec2 repulsive = variant == PotentialVariant::Central
                                   ? force_repulsive_central(p[i])
                                   : force_repulsive_pairwise(p, i);
        f[i] = force_newton(p, i) + repulsive;
    }
    return f;
}

double potential(const Positions &p, PotentialVariant variant) {
    double energy = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            const double r2 = pair_distance_sq(p, i, j);
            // 1/2 ln r = 1/4 ln r^2
            energy += 0.25 * std::log(r2);
            if (variant == PotentialVariant::Pairwise)
                energy -= kSqrt3 / 24.0 * r2;
        }
    }
    if (variant == PotentialVariant::Central)
        for (const auto &x : p)
            energy -= kSqrt3 / 8.0 * norm2(x);
    return energy;
}

double eom_residual(double t, PotentialVariant variant, const EllipticContext &ctx) {
    const TripleState s = triple(t, ctx);
    const auto f = forces(s.positions(), variant);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        worst = std::max(worst, norm(s.bodies[i].acc - f[i]));
    return worst;
}

double total_energy(const Positions &p, const Velocities &v, PotentialVariant variant) {
    double kinetic = 0.0;
    for (const auto &vi : v)
        kinetic += norm2(vi);
    return 0.5 * kinetic + potential(p, variant);
}

PhaseState analytic_phase_state(double t, const EllipticContext &ctx) {
    const TripleState s = triple(t, ctx);
    return {s.positions(), s.velocities()};
}

Trajectory integrate(const PhaseState &init, PotentialVariant variant, double dt,
                     std::size_t n_steps) {
    if (!(dt > 0.0))
        throw DomainError("integration step must be positive");
    Trajectory traj;
    traj.dt = dt;
    traj.variant = variant;
    traj.samples.reserve(n_steps + 1);

    PhaseState state = init;
    std::array<Vec2, 3> acc;
    try {
        acc = forces(state.pos, variant);
        traj.samples.push_back({0.0, state, energy_of(state, variant)});
    } catch (const CollisionError &e) {
        throw IntegrationCollision(e.what(), 0, std::move(traj));
    }

    for (std::size_t step = 1; step <= n_steps; ++step) {
        try {
            for (std::size_t i = 0; i < 3; ++i)
                state.pos[i] += dt * state.vel[i] + (0.5 * dt * dt) * acc[i];
            const auto next = forces(state.pos, variant);
            for (std::size_t i = 0; i < 3; ++i)
                state.vel[i] += (0.5 * dt) * (acc[i] + next[i]);
            acc = next;
            traj.samples.push_back(
                {static_cast<double>(step) * dt, state, energy_of(state, variant)});
        } catch (const CollisionError &e) {
            throw IntegrationCollision(e.what(), step, std::move(traj));
        }
    }
    return traj;
}

PhaseState interpolate(const Trajectory &traj, double t) {
    const auto &s = traj.samples;
    if (s.empty() || t < s.front().t || t > s.back().t)
        throw DomainError("interpolation time outside trajectory");
    const double h = traj.dt;
    std::size_t k = static_cast<std::size_t>(std::floor((t - s.front().t) / h));
    if (k + 1 >= s.size())
        k = s.size() - 2;
    const auto &a = s[k].state;
    const auto &b = s[k + 1].state;
    const double u = (t - s[k].t) / h;
    const double u2 = u * u, u3 = u2 * u;
    const double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
    const double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
    const double d00 = 6 * u2 - 6 * u, d10 = 3 * u2 - 4 * u + 1;
    const double d01 = -6 * u2 + 6 * u, d11 = 3 * u2 - 2 * u;
    PhaseState out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.pos[i] = h00 * a.pos[i] + (h10 * h) * a.vel[i] + h01 * b.pos[i] + (h11 * h) * b.vel[i];
        out.vel[i] = (d00 / h) * a.pos[i] + d10 * a.vel[i] + (d01 / h) * b.pos[i] + d11 * b.vel[i];
    }
    return out;
}

namespace {

struct OneBodyMotion {
    Vec2 pos;
    Vec2 acc;
    double r = 0.0;
    double theta_dot = 0.0;
};

OneBodyMotion one_body_motion(double l, double t) {
    const double s = 2.0 * l * t;
    if (!(std::abs(s) < 1.0 - 1e-6))
        throw DomainError("one-body lemniscate motion requires |2 l t| < 1 - 1e-6");
    const double w = 1.0 - s * s;  // cos 2 theta
    const double theta = 0.5 * std::asin(s);
    const double r = std::pow(w, 0.25);
    const double theta_dot = l / std::sqrt(w);
    const double theta_ddot = 2.0 * l * l * s * std::pow(w, -1.5);
    const double r_dot = -l * s * std::pow(w, -0.75);
    const double r_ddot = -l * l * (2.0 + s * s) * std::pow(w, -1.75);

    const double radial = r_ddot - r * theta_dot * theta_dot;
    const double transverse = 2.0 * r_dot * theta_dot + r * theta_ddot;
    const double c = std::cos(theta), sn = std::sin(theta);
    OneBodyMotion m;
    m.pos = {r * c, r * sn};
    m.acc = {radial * c - transverse * sn, radial * sn + transverse * c};
    m.r = r;
    m.theta_dot = theta_dot;
    return m;
}

} // namespace

double one_body_lemniscate_residual(double l, double t) {
    const auto m = one_body_motion(l, t);
    // -grad of -l^2 / (2 r^6) is -3 l^2 x / r^8.
    const double r2 = norm2(m.pos);
    const Vec2 force = (-3.0 * l * l / (r2 * r2 * r2 * r2)) * m.pos;
    return norm(m.acc - force);
}

double one_body_angular_momentum(double l, double t) {
    const auto m = one_body_motion(l, t);
    return m.r * m.r * m.theta_dot;
}

} // namespace lemnichor
