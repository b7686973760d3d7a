#pragma once

#include <array>

#include "lemnichor/elliptic.hpp"
#include "lemnichor/vec2.hpp"

namespace lemnichor {

struct BodyState {
    Vec2 pos;
    Vec2 vel;
    Vec2 acc;
    double t = 0.0;
};

using Positions = std::array<Vec2, 3>;
using Velocities = std::array<Vec2, 3>;

/// The three bodies at phases (t, t + 4K/3, t - 4K/3), in that order.
struct TripleState {
    std::array<BodyState, 3> bodies;
    double t = 0.0;

    [[nodiscard]] Positions positions() const {
        return {bodies[0].pos, bodies[1].pos, bodies[2].pos};
    }
    [[nodiscard]] Velocities velocities() const {
        return {bodies[0].vel, bodies[1].vel, bodies[2].vel};
    }
};

/// Phase offset between neighbouring bodies, a third of the period.
inline double phase_offset(const EllipticContext &ctx) { return 4.0 * ctx.K() / 3.0; }

/// x(t) = (sn, sn cn) / (1 + cn^2). Lies on (x^2 + y^2)^2 = x^2 - y^2.
Vec2 position(double t, const EllipticContext &ctx);
Vec2 velocity(double t, const EllipticContext &ctx);
Vec2 acceleration(double t, const EllipticContext &ctx);

BodyState body_state(double t, const EllipticContext &ctx);

/// Choreographic configuration. Only a true choreography when
/// ctx.m() == kChoreographicModulus; other moduli are accepted so the
/// negative controls can be evaluated.
TripleState triple(double t, const EllipticContext &ctx);

/// (x^2 + y^2)^2 - (x^2 - y^2).
double lemniscate_residual(const Vec2 &p);

// Complex-variable form of the orbit. For real t, x_plus(t) = x + iy and
// x_minus(t) = x - iy; off the real axis both are elliptic functions of t.
// Near the lines Im t = (2q+1)K' the shifted representations
//   x+(w + iK') = 1 / (k sn w - dn w),  x-(w + iK') = 1 / (k sn w + dn w)
// are used, so these stay finite at t = iK' where sn and cn blow up.

/// sn / (1 - i cn).
Cplx x_plus(Cplx t, const EllipticContext &ctx);
/// sn / (1 + i cn).
Cplx x_minus(Cplx t, const EllipticContext &ctx);
/// 1 / (1 - i cn).
Cplx inv_one_minus_icn(Cplx t, const EllipticContext &ctx);
/// d/dt x_plus = -i dn (1 + i cn) / (1 - i cn)^2.
Cplx x_plus_dot(Cplx t, const EllipticContext &ctx);
/// d^2/dt^2 x_plus.
Cplx x_plus_ddot(Cplx t, const EllipticContext &ctx);
/// d/dt [1 / (1 - i cn)] = -i sn dn / (1 - i cn)^2.
Cplx inv_one_minus_icn_dot(Cplx t, const EllipticContext &ctx);
/// x_minus(t + 4K/3) - x_minus(t).
Cplx delta_x_minus(Cplx t, const EllipticContext &ctx);

} // namespace lemnichor
