#include "lemnichor/orbit.hpp"

#include <cmath>

namespace lemnichor {

namespace {

constexpr Cplx kI{0.0, 1.0};

template <typename T>
Cplx first_derivative(const T &cn, const T &dn) {
    const Cplx d = Cplx(1.0) - kI * Cplx(cn);
    return -kI * Cplx(dn) * (Cplx(1.0) + kI * Cplx(cn)) / (d * d);
}

// Second derivative of sn / (1 - i cn) using sn' = cn dn, cn' = -sn dn,
// dn' = -m sn cn.
template <typename T>
Cplx second_derivative(const T &sn, const T &cn, const T &dn, double m) {
    const Cplx s(sn), c(cn), d(dn);
    const Cplx den = Cplx(1.0) - kI * c;
    const Cplx bracket = d * d * c - m * c * (Cplx(1.0) + c * c) - 3.0 * kI * d * d;
    return -kI * s * bracket / (den * den * den);
}

// Distance of Im t from the nearest line Im t = (2q+1)K', in units of K'.
bool near_odd_line(Cplx t, const EllipticContext &ctx) {
    const double kp = ctx.Kprime();
    const double shifted = (t.imag() - kp) / (2.0 * kp);
    return std::abs(shifted - std::round(shifted)) < 0.25;
}

// sn and dn at w = t - iK'.
std::pair<Cplx, Cplx> shifted_sn_dn(Cplx t, const EllipticContext &ctx) {
    const auto j = ctx.sn_cn_dn(t - kI * ctx.Kprime());
    return {j.sn, j.dn};
}

Vec2 planar_velocity(double cn, double dn) {
    const double den = 1.0 + cn * cn;
    const double den2 = den * den;
    return {dn * cn * (3.0 - cn * cn) / den2, dn * (3.0 * cn * cn - 1.0) / den2};
}

} // namespace

Vec2 position(double t, const EllipticContext &ctx) {
    const auto [sn, cn, dn] = ctx.sn_cn_dn(t);
    const double den = 1.0 + cn * cn;
    return {sn / den, sn * cn / den};
}

Vec2 velocity(double t, const EllipticContext &ctx) {
    const auto [sn, cn, dn] = ctx.sn_cn_dn(t);
    return planar_velocity(cn, dn);
}

Vec2 acceleration(double t, const EllipticContext &ctx) {
    const auto [sn, cn, dn] = ctx.sn_cn_dn(t);
    return to_vec(second_derivative(sn, cn, dn, ctx.m()));
}

BodyState body_state(double t, const EllipticContext &ctx) {
    const auto [sn, cn, dn] = ctx.sn_cn_dn(t);
    const double den = 1.0 + cn * cn;
    BodyState b;
    b.t = t;
    b.pos = {sn / den, sn * cn / den};
    b.vel = planar_velocity(cn, dn);
    b.acc = to_vec(second_derivative(sn, cn, dn, ctx.m()));
    return b;
}

TripleState triple(double t, const EllipticContext &ctx) {
    const double shift = phase_offset(ctx);
    TripleState s;
    s.t = t;
    s.bodies = {body_state(t, ctx), body_state(t + shift, ctx), body_state(t - shift, ctx)};
    return s;
}

double lemniscate_residual(const Vec2 &p) {
    const double r2 = norm2(p);
    return r2 * r2 - (p.x * p.x - p.y * p.y);
}

Cplx x_plus(Cplx t, const EllipticContext &ctx) {
    if (near_odd_line(t, ctx)) {
        const auto [sn, dn] = shifted_sn_dn(t, ctx);
        return 1.0 / (ctx.k() * sn - dn);
    }
    const auto j = ctx.sn_cn_dn(t);
    return j.sn / (1.0 - kI * j.cn);
}

Cplx x_minus(Cplx t, const EllipticContext &ctx) {
    if (near_odd_line(t, ctx)) {
        const auto [sn, dn] = shifted_sn_dn(t, ctx);
        return 1.0 / (ctx.k() * sn + dn);
    }
    const auto j = ctx.sn_cn_dn(t);
    return j.sn / (1.0 + kI * j.cn);
}

Cplx inv_one_minus_icn(Cplx t, const EllipticContext &ctx) {
    if (near_odd_line(t, ctx)) {
        const auto [sn, dn] = shifted_sn_dn(t, ctx);
        const Cplx ks = ctx.k() * sn;
        return ks / (ks - dn);
    }
    const auto j = ctx.sn_cn_dn(t);
    return 1.0 / (1.0 - kI * j.cn);
}

Cplx x_plus_dot(Cplx t, const EllipticContext &ctx) {
    const auto j = ctx.sn_cn_dn(t);
    return first_derivative(j.cn, j.dn);
}

Cplx x_plus_ddot(Cplx t, const EllipticContext &ctx) {
    const auto j = ctx.sn_cn_dn(t);
    return second_derivative(j.sn, j.cn, j.dn, ctx.m());
}

Cplx inv_one_minus_icn_dot(Cplx t, const EllipticContext &ctx) {
    const auto j = ctx.sn_cn_dn(t);
    const Cplx den = 1.0 - kI * j.cn;
    return -kI * j.sn * j.dn / (den * den);
}

Cplx delta_x_minus(Cplx t, const EllipticContext &ctx) {
    return x_minus(t + phase_offset(ctx), ctx) - x_minus(t, ctx);
}

} // namespace lemnichor
