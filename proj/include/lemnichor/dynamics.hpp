#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "lemnichor/errors.hpp"
#include "lemnichor/orbit.hpp"

namespace lemnichor {

/// Which repulsive term accompanies the logarithmic attraction.
///   Central:  U = sum_{i<j} 1/2 ln r_ij - sum_i sqrt3/8 |x_i|^2
///   Pairwise: V = sum_{i<j} (1/2 ln r_ij - sqrt3/24 r_ij^2)
enum class PotentialVariant { Central, Pairwise };

std::string_view to_string(PotentialVariant v);
/// Accepts "U" / "V" (and the long names); throws DomainError otherwise.
PotentialVariant parse_variant(std::string_view s);

inline constexpr double kCollisionDistance = 1e-10;

/// 1/2 sum_{j != i} (x_j - x_i) / |x_j - x_i|^2.
Vec2 force_newton(const Positions &p, std::size_t i);
/// sqrt3/4 x.
Vec2 force_repulsive_central(const Vec2 &x);
/// -sqrt3/12 sum_{j != i} (x_j - x_i).
Vec2 force_repulsive_pairwise(const Positions &p, std::size_t i);

/// Total force on every body under the given variant.
std::array<Vec2, 3> forces(const Positions &p, PotentialVariant variant);

double potential(const Positions &p, PotentialVariant variant);

/// max_i |a_i - F_newton(i) - F_repulsive(i)| on the analytic orbit.
double eom_residual(double t, PotentialVariant variant, const EllipticContext &ctx);

/// 1/2 sum |v_i|^2 + potential.
double total_energy(const Positions &p, const Velocities &v, PotentialVariant variant);

struct PhaseState {
    Positions pos;
    Velocities vel;
};

struct TrajectorySample {
    double t = 0.0;
    PhaseState state;
    double energy = 0.0;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    double dt = 0.0;
    PotentialVariant variant = PotentialVariant::Central;
};

/// Integration stopped because two bodies met. Carries everything computed
/// up to the last good step.
class IntegrationCollision : public CollisionError {
public:
    IntegrationCollision(const std::string &what, std::size_t step, Trajectory partial)
        : CollisionError(what), step_(step), partial_(std::move(partial)) {}

    [[nodiscard]] std::size_t step() const { return step_; }
    [[nodiscard]] const Trajectory &partial() const { return partial_; }

private:
    std::size_t step_;
    Trajectory partial_;
};

/// Fixed-step velocity Verlet with unit masses. Returns n_steps + 1 samples
/// at t = k dt, starting from `init` at t = 0.
Trajectory integrate(const PhaseState &init, PotentialVariant variant, double dt,
                     std::size_t n_steps);

/// Analytic triple at phase t as an initial condition.
PhaseState analytic_phase_state(double t, const EllipticContext &ctx);

/// Cubic Hermite interpolation of the state between the two samples that
/// bracket t.
PhaseState interpolate(const Trajectory &traj, double t);

// Single particle on r^2 = cos 2 theta with theta = asin(2 l t) / 2, moving
// under U(r) = -l^2 / (2 r^6).

/// |acceleration - (-grad U)| from closed-form derivatives. Throws
/// DomainError when |2 l t| >= 1 - 1e-6.
double one_body_lemniscate_residual(double l, double t);
/// r^2 dtheta/dt along the same motion.
double one_body_angular_momentum(double l, double t);

} // namespace lemnichor
