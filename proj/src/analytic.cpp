#include "lemnichor/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lemnichor/dynamics.hpp"
#include "lemnichor/errors.hpp"
#include "lemnichor/invariants.hpp"

namespace lemnichor {

namespace {

constexpr Cplx kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kQuarticRoot3 = std::pow(3.0, 0.25);

// Principal-part constants a and b.
const double kA = 2.0 * kSqrt2 / kQuarticRoot3;
const double kB = kQuarticRoot3 / kSqrt2;

CheckResult make_check(std::string name, Cplx claimed, Cplx observed, double tolerance,
                       bool complex_valued = true) {
    CheckResult r;
    r.name = std::move(name);
    r.claimed = claimed;
    r.observed = observed;
    r.residual = std::abs(observed - claimed);
    r.tolerance = tolerance;
    r.pass = r.residual < tolerance;
    r.complex_valued = complex_valued;
    return r;
}

CheckResult make_real_check(std::string name, double claimed, double observed, double tolerance) {
    return make_check(std::move(name), claimed, observed, tolerance, false);
}

void append(AnalyticReport &into, const AnalyticReport &from) {
    into.insert(into.end(), from.begin(), from.end());
}

std::string fmt_point(Cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.6g%+.6gi)", z.real(), z.imag());
    return buf;
}

// Lattice translates of the listed poles by the periods 4K and 4iK'.
std::vector<Cplx> translated(const std::vector<Cplx> &poles, const EllipticContext &ctx) {
    std::vector<Cplx> out;
    const double px = 4.0 * ctx.K(), py = 4.0 * ctx.Kprime();
    for (const Cplx &p : poles)
        for (int a = -1; a <= 1; ++a)
            for (int b = -1; b <= 1; ++b)
                out.push_back(p + Cplx(a * px, b * py));
    return out;
}

double arg_change(const std::function<Cplx(Cplx)> &f, Cplx a, Cplx b, Cplx fa, Cplx fb,
                  int depth) {
    const double d = std::arg(fb / fa);
    if (std::abs(d) < 0.3 || depth > 24)
        return d;
    const Cplx mid = 0.5 * (a + b);
    const Cplx fm = f(mid);
    return arg_change(f, a, mid, fa, fm, depth + 1) + arg_change(f, mid, b, fm, fb, depth + 1);
}

int winding_number(const std::function<Cplx(Cplx)> &f, const std::array<Cplx, 4> &corners,
                   int per_edge = 32) {
    double total = 0.0;
    for (std::size_t e = 0; e < 4; ++e) {
        const Cplx a = corners[e], b = corners[(e + 1) % 4];
        Cplx prev = a, f_prev = f(a);
        for (int k = 1; k <= per_edge; ++k) {
            const Cplx next = a + (b - a) * (static_cast<double>(k) / per_edge);
            const Cplx f_next = f(next);
            total += arg_change(f, prev, next, f_prev, f_next, 0);
            prev = next;
            f_prev = f_next;
        }
    }
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

// Location of a lone simple pole inside the circle: (contour of t f) / (contour of f).
Cplx pole_centroid(const std::function<Cplx(Cplx)> &f, Cplx center, double radius, int nodes) {
    Cplx num = 0.0, den = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const Cplx e = std::polar(1.0, 2.0 * kPi * k / nodes);
        const Cplx z = center + radius * e;
        const Cplx w = f(z) * e;
        num += z * w;
        den += w;
    }
    return num / den;
}

// Representative of z in the cell centred like the census grid.
Cplx reduce_to_cell(Cplx z, const EllipticContext &ctx) {
    const double px = 4.0 * ctx.K(), py = 4.0 * ctx.Kprime();
    const double lo_x = -11.0 * ctx.K() / 6.0, lo_y = -1.5 * ctx.Kprime();
    double x = z.real() - px * std::floor((z.real() - lo_x) / px);
    double y = z.imag() - py * std::floor((z.imag() - lo_y) / py);
    return {x, y};
}

} // namespace

Cplx alpha1(const EllipticContext &ctx) { return {-ctx.K(), ctx.Kprime()}; }
Cplx alpha2(const EllipticContext &ctx) { return {ctx.K() / 3.0, ctx.Kprime()}; }
Cplx alpha3(const EllipticContext &ctx) { return {5.0 * ctx.K() / 3.0, ctx.Kprime()}; }

std::string to_string(OrbitFunction f) {
    switch (f) {
    case OrbitFunction::XPlus: return "x_plus";
    case OrbitFunction::InvOneMinusICn: return "inv_one_minus_icn";
    case OrbitFunction::DeltaXMinus: return "delta_x_minus";
    case OrbitFunction::InvDeltaXMinus: return "inv_delta_x_minus";
    case OrbitFunction::NegInvDeltaXMinusShifted: return "neg_inv_delta_x_minus_shifted";
    case OrbitFunction::XPlusDdot: return "x_plus_ddot";
    }
    return "unknown";
}

std::function<Cplx(Cplx)> evaluator(OrbitFunction f, const EllipticContext &ctx) {
    const EllipticContext *c = &ctx;
    switch (f) {
    case OrbitFunction::XPlus:
        return [c](Cplx t) { return x_plus(t, *c); };
    case OrbitFunction::InvOneMinusICn:
        return [c](Cplx t) { return inv_one_minus_icn(t, *c); };
    case OrbitFunction::DeltaXMinus:
        return [c](Cplx t) { return delta_x_minus(t, *c); };
    case OrbitFunction::InvDeltaXMinus:
        return [c](Cplx t) { return 1.0 / delta_x_minus(t, *c); };
    case OrbitFunction::NegInvDeltaXMinusShifted:
        return [c](Cplx t) { return -1.0 / delta_x_minus(t - phase_offset(*c), *c); };
    case OrbitFunction::XPlusDdot:
        return [c](Cplx t) { return x_plus_ddot(t, *c); };
    }
    throw DomainError("unknown orbit function");
}

std::vector<Cplx> known_poles(OrbitFunction f, const EllipticContext &ctx) {
    const Cplx a1 = alpha1(ctx), a2 = alpha2(ctx), a3 = alpha3(ctx);
    switch (f) {
    case OrbitFunction::XPlus:
    case OrbitFunction::InvOneMinusICn:
    case OrbitFunction::XPlusDdot:
        return {a2, a3, -a2, -a3};
    case OrbitFunction::DeltaXMinus:
        return {std::conj(a1), -std::conj(a1), std::conj(a2), -std::conj(a2), std::conj(a3),
                -std::conj(a3)};
    case OrbitFunction::InvDeltaXMinus:
        return {a2, -a3};
    case OrbitFunction::NegInvDeltaXMinusShifted:
        return {a3, -a2};
    }
    return {};
}

bool all_pass(const AnalyticReport &r) {
    return std::all_of(r.begin(), r.end(), [](const CheckResult &c) { return c.pass; });
}

Cplx laurent_coefficient(const std::function<Cplx(Cplx)> &f, Cplx center, int n, double radius,
                         int nodes) {
    Cplx sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double theta = 2.0 * kPi * k / nodes;
        sum += f(center + std::polar(radius, theta)) * std::polar(1.0, -n * theta);
    }
    return sum / (static_cast<double>(nodes) * std::pow(radius, n));
}

Cplx residue_at(const PoleSpec &pole, OrbitFunction f, const EllipticContext &ctx, double radius,
                int nodes) {
    if (pole.order != 1)
        throw DomainError("contour residue requested for a pole of order " +
                          std::to_string(pole.order));
    for (const Cplx &other : translated(known_poles(f, ctx), ctx)) {
        const double gap = std::abs(other - pole.location);
        if (gap > 1e-9 && gap < 2.0 * radius)
            throw ContourCrossingError("another pole of " + to_string(f) + " lies within " +
                                       std::to_string(2.0 * radius) + " of " +
                                       fmt_point(pole.location));
    }
    return laurent_coefficient(evaluator(f, ctx), pole.location, -1, radius, nodes);
}

AnalyticReport check_special_values(const EllipticContext &ctx, const Tolerances &tol) {
    const double q = kQuarticRoot3;
    struct Row {
        const char *label;
        double t_over_k;
        double sn, cn, dn;
    };
    const Row rows[] = {
        {"K/3", 1.0 / 3.0, kSqrt3 - 1.0, q * (kSqrt3 - 1.0) / kSqrt2, 1.0 / kSqrt2},
        {"2K/3", 2.0 / 3.0, q * (kSqrt3 - 1.0), 2.0 - kSqrt3, (kSqrt3 - 1.0) / 2.0},
        {"4K/3", 4.0 / 3.0, q * (kSqrt3 - 1.0), -2.0 + kSqrt3, (kSqrt3 - 1.0) / 2.0},
        {"5K/3", 5.0 / 3.0, kSqrt3 - 1.0, -q * (kSqrt3 - 1.0) / kSqrt2, 1.0 / kSqrt2},
    };
    AnalyticReport out;
    for (const auto &row : rows) {
        const auto j = ctx.sn_cn_dn(row.t_over_k * ctx.K());
        const std::string at = std::string("(") + row.label + ")";
        out.push_back(make_real_check("sn" + at, row.sn, j.sn, tol.special_value));
        out.push_back(make_real_check("cn" + at, row.cn, j.cn, tol.special_value));
        out.push_back(make_real_check("dn" + at, row.dn, j.dn, tol.special_value));
    }
    return out;
}

double modulus_from_sn_third(const EllipticContext &ctx) {
    const double s = ctx.sn_cn_dn(ctx.K() / 3.0).sn;
    return (1.0 - 2.0 * s) / (s * s * s * s - 2.0 * s * s * s);
}

AnalyticReport check_modulus_identity(const EllipticContext &ctx, const Tolerances &tol) {
    AnalyticReport out;
    const double s_exact = kSqrt3 - 1.0;
    const double from_exact =
        (1.0 - 2.0 * s_exact) / (std::pow(s_exact, 4) - 2.0 * std::pow(s_exact, 3));
    out.push_back(make_real_check("modulus_from_exact_sn(K/3)", kChoreographicModulus,
                                  from_exact, tol.special_value));
    out.push_back(make_real_check("modulus_from_computed_sn(K/3)", kChoreographicModulus,
                                  modulus_from_sn_third(ctx), tol.special_value));

    const auto j = ctx.sn_cn_dn(ctx.K() / 3.0);
    const double via_quarter_shift = -j.cn / j.dn;  // sn(3K + K/3)
    const double s4 = std::pow(j.sn, 4);
    const double via_duplication = -2.0 * j.sn * j.cn * j.dn / (1.0 - ctx.m() * s4);  // sn(4K - 2K/3)
    out.push_back(make_real_check("sn(10K/3)_two_forms", via_quarter_shift, via_duplication,
                                  tol.special_value));
    out.push_back(make_real_check("sn(10K/3)_direct", via_quarter_shift,
                                  ctx.sn_cn_dn(10.0 * ctx.K() / 3.0).sn, tol.special_value));
    return out;
}

AnalyticReport check_residue_table(const EllipticContext &ctx, const Tolerances &tol) {
    const Cplx a2 = alpha2(ctx), a3 = alpha3(ctx);
    const double rx = kSqrt2 / kQuarticRoot3;
    const double rc = 1.0 / kQuarticRoot3;
    struct Entry {
        OrbitFunction f;
        const char *pole_label;
        Cplx pole;
        double claimed;
    };
    const Entry entries[] = {
        {OrbitFunction::XPlus, "alpha2", a2, rx},
        {OrbitFunction::XPlus, "alpha3", a3, -rx},
        {OrbitFunction::XPlus, "-alpha2", -a2, rx},
        {OrbitFunction::XPlus, "-alpha3", -a3, -rx},
        {OrbitFunction::InvOneMinusICn, "alpha2", a2, rc},
        {OrbitFunction::InvOneMinusICn, "alpha3", a3, -rc},
        {OrbitFunction::InvOneMinusICn, "-alpha2", -a2, -rc},
        {OrbitFunction::InvOneMinusICn, "-alpha3", -a3, rc},
    };
    AnalyticReport out;
    for (const auto &e : entries) {
        PoleSpec spec;
        spec.location = e.pole;
        spec.claimed_residue = e.claimed;
        const Cplx res = residue_at(spec, e.f, ctx);
        out.push_back(make_check("residue[" + to_string(e.f) + "," + e.pole_label + "]", e.claimed,
                                 res, tol.residue));
    }
    return out;
}

AnalyticReport check_sum_identities(Cplx t, const EllipticContext &ctx, const Tolerances &tol) {
    const double shift = phase_offset(ctx);
    const bool real_axis = t.imag() == 0.0;
    const double tolerance = real_axis ? tol.cn_sum : 100.0 * tol.cn_sum;
    const Cplx xsum = x_plus(t, ctx) + x_plus(t + shift, ctx) + x_plus(t - shift, ctx);
    const Cplx csum = inv_one_minus_icn(t, ctx) + inv_one_minus_icn(t + shift, ctx) +
                      inv_one_minus_icn(t - shift, ctx);
    const std::string at = "@" + fmt_point(t);
    return {make_check("x_plus_sum" + at, 0.0, xsum, tolerance),
            make_check("inv_one_minus_icn_sum" + at, (3.0 + kSqrt3) / 2.0, csum, tolerance)};
}

double cn_sum_spread(int n, const EllipticContext &ctx) {
    const double shift = phase_offset(ctx);
    double re_lo = INFINITY, re_hi = -INFINITY, im_lo = INFINITY, im_hi = -INFINITY;
    for (int k = 0; k < n; ++k) {
        const double t = ctx.period() * k / n;
        const Cplx s = inv_one_minus_icn(t, ctx) + inv_one_minus_icn(t + shift, ctx) +
                       inv_one_minus_icn(t - shift, ctx);
        re_lo = std::min(re_lo, s.real());
        re_hi = std::max(re_hi, s.real());
        im_lo = std::min(im_lo, s.imag());
        im_hi = std::max(im_hi, s.imag());
    }
    return std::hypot(re_hi - re_lo, im_hi - im_lo);
}

AnalyticReport check_j_identity(double t, const EllipticContext &ctx, const Tolerances &tol) {
    const double shift = phase_offset(ctx);
    AnalyticReport out;
    const std::string at = "@" + fmt_point(t);
    Cplx sum_product = 0.0, sum_derivative = 0.0;
    double worst_gap = 0.0;
    for (double phase : {t, t + shift, t - shift}) {
        const Cplx product = x_minus(phase, ctx) * x_plus_dot(phase, ctx);
        const Cplx derivative = inv_one_minus_icn_dot(phase, ctx);
        worst_gap = std::max(worst_gap, std::abs(product - derivative));
        sum_product += product;
        sum_derivative += derivative;
    }
    out.push_back(make_real_check("j_plus_two_forms" + at, 0.0, worst_gap, 1e-10));
    out.push_back(make_check("j_plus_sum" + at, 0.0, sum_derivative, 1e-10));

    const TripleState s = triple(t, ctx);
    double radial = 0.0;
    for (const auto &b : s.bodies)
        radial += dot(b.pos, b.vel);
    out.push_back(make_real_check("j_plus_sum_real_vs_half_dI/dt" + at, radial, sum_product.real(),
                                  tol.velocity_relation));
    out.push_back(make_real_check("j_plus_sum_imag_vs_angular_momentum" + at,
                                  angular_momentum(s), sum_product.imag(),
                                  tol.velocity_relation));
    return out;
}

double zero_order_slope(const std::function<Cplx(Cplx)> &f, Cplx t0, double h_min, double h_max,
                        double theta, int points) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const Cplx dir = std::polar(1.0, theta);
    for (int k = 0; k < points; ++k) {
        const double lx = std::log(h_min) + (std::log(h_max) - std::log(h_min)) * k / (points - 1);
        const double ly = std::log(std::abs(f(t0 + std::exp(lx) * dir)));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = points;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

AnalyticReport check_triple_zero_and_pole(Cplx t0, const EllipticContext &ctx,
                                          const Tolerances &tol) {
    const Cplx a2 = alpha2(ctx), a3 = alpha3(ctx);
    double sign = 0.0;
    std::string label;
    if (std::abs(t0 - a2) < 1e-12) {
        sign = 1.0;
        label = "alpha2";
    } else if (std::abs(t0 + a3) < 1e-12) {
        sign = -1.0;
        label = "-alpha3";
    } else {
        throw DomainError("triple-zero check is defined at alpha2 and -alpha3 only");
    }
    const auto delta = evaluator(OrbitFunction::DeltaXMinus, ctx);
    const auto inv_delta = evaluator(OrbitFunction::InvDeltaXMinus, ctx);
    const double c3 = sign * kQuarticRoot3 / (4.0 * kSqrt2);
    const double c5 = sign * std::pow(3.0, 0.75) / (32.0 * kSqrt2);
    const std::string at = "@" + label;

    AnalyticReport out;
    out.push_back(make_real_check("zero_order_slope" + at, 3.0, zero_order_slope(delta, t0),
                                  tol.series_order));
    out.push_back(make_check("leading_coefficient" + at, c3,
                             laurent_coefficient(delta, t0, 3, 1e-2), tol.leading_coefficient));
    out.push_back(make_check("leading_coefficient_r5e-3" + at, c3,
                             laurent_coefficient(delta, t0, 3, 5e-3), tol.leading_coefficient));
    out.push_back(make_check("next_coefficient" + at, c5, laurent_coefficient(delta, t0, 5, 1e-2),
                             tol.next_coefficient));
    out.push_back(make_check("next_coefficient_r5e-3" + at, c5,
                             laurent_coefficient(delta, t0, 5, 5e-3), tol.next_coefficient));
    double odd_gap = 0.0;
    for (Cplx h : {Cplx(0.05), Cplx(0.2), Cplx(0.1, 0.05)})
        odd_gap = std::max(odd_gap, std::abs(delta(t0 + h) + delta(t0 - h)));
    out.push_back(make_real_check("odd_around_zero" + at, 0.0, odd_gap, 1e-10));
    out.push_back(make_check("inverse_cubic_coefficient" + at, sign * 2.0 * kA,
                             laurent_coefficient(inv_delta, t0, -3, 1e-2),
                             tol.leading_coefficient));
    out.push_back(make_check("inverse_simple_coefficient" + at, -sign * kB,
                             laurent_coefficient(inv_delta, t0, -1, 1e-2),
                             tol.leading_coefficient));
    return out;
}

AnalyticReport check_principal_parts(const EllipticContext &ctx, const Tolerances &tol) {
    const Cplx a2 = alpha2(ctx), a3 = alpha3(ctx);
    struct Entry {
        OrbitFunction f;
        const char *pole_label;
        Cplx pole;
        int order;
        double leading;  // coefficient of (t - p)^-order
        double simple;   // coefficient of (t - p)^-1 (for order 3)
    };
    const Entry entries[] = {
        {OrbitFunction::InvDeltaXMinus, "alpha2", a2, 3, 2 * kA, -kB},
        {OrbitFunction::InvDeltaXMinus, "-alpha3", -a3, 3, -2 * kA, kB},
        {OrbitFunction::NegInvDeltaXMinusShifted, "alpha3", a3, 3, -2 * kA, kB},
        {OrbitFunction::NegInvDeltaXMinusShifted, "-alpha2", -a2, 3, 2 * kA, -kB},
        {OrbitFunction::XPlusDdot, "alpha2", a2, 3, kA, 0.0},
        {OrbitFunction::XPlusDdot, "alpha3", a3, 3, -kA, 0.0},
        {OrbitFunction::XPlusDdot, "-alpha2", -a2, 3, kA, 0.0},
        {OrbitFunction::XPlusDdot, "-alpha3", -a3, 3, -kA, 0.0},
        {OrbitFunction::XPlus, "alpha2", a2, 1, 1.0 / kB, 0.0},
        {OrbitFunction::XPlus, "alpha3", a3, 1, -1.0 / kB, 0.0},
        {OrbitFunction::XPlus, "-alpha2", -a2, 1, 1.0 / kB, 0.0},
        {OrbitFunction::XPlus, "-alpha3", -a3, 1, -1.0 / kB, 0.0},
    };
    AnalyticReport out;
    for (const auto &e : entries) {
        const auto f = evaluator(e.f, ctx);
        const std::string where = "[" + to_string(e.f) + "," + e.pole_label + "]";
        out.push_back(make_check("principal_part_leading" + where, e.leading,
                                 laurent_coefficient(f, e.pole, -e.order, 1e-2),
                                 tol.leading_coefficient));
        if (e.order == 3)
            out.push_back(make_check("principal_part_simple" + where, e.simple,
                                     laurent_coefficient(f, e.pole, -1, 1e-2),
                                     tol.leading_coefficient));
    }
    return out;
}

Cplx complex_eom_residual(Cplx t, const EllipticContext &ctx) {
    const double shift = phase_offset(ctx);
    const Cplx newton = 0.5 * (1.0 / delta_x_minus(t, ctx) - 1.0 / delta_x_minus(t - shift, ctx));
    return x_plus_ddot(t, ctx) - newton - (kSqrt3 / 4.0) * x_plus(t, ctx);
}

AnalyticReport check_eom_pole_cancellation(const std::vector<Cplx> &samples,
                                           const EllipticContext &ctx, const Tolerances &tol,
                                           double tolerance_override) {
    AnalyticReport out;
    for (const Cplx &t : samples) {
        const double tolerance = tolerance_override > 0.0 ? tolerance_override : tol.complex_eom;
        out.push_back(make_check("complex_eom" + std::string("@") + fmt_point(t), 0.0,
                                 complex_eom_residual(t, ctx), tolerance));
        if (t.imag() == 0.0) {
            // On the real axis the complex equation is body 1's planar equation of motion.
            const TripleState s = triple(t.real(), ctx);
            const Positions p = s.positions();
            const Vec2 planar =
                s.bodies[0].acc - force_newton(p, 0) - force_repulsive_central(p[0]);
            out.push_back(make_check("complex_eom_matches_planar@" + fmt_point(t),
                                     to_cplx(planar), complex_eom_residual(t, ctx), tolerance));
        }
    }
    return out;
}

std::vector<CensusEntry> pole_census(OrbitFunction f, const EllipticContext &ctx) {
    const auto fn = evaluator(f, ctx);
    const double K = ctx.K(), Kp = ctx.Kprime();
    const double half_w = K / 6.0, half_h = Kp / 2.0;
    const double radius = 0.8 * std::min(half_w, half_h);
    std::vector<CensusEntry> out;
    for (int q = -1; q <= 2; ++q) {
        for (int j = -5; j <= 6; ++j) {
            const Cplx center(j * K / 3.0, q * Kp);
            const std::array<Cplx, 4> corners = {
                center + Cplx(-half_w, -half_h), center + Cplx(half_w, -half_h),
                center + Cplx(half_w, half_h), center + Cplx(-half_w, half_h)};
            const int w = winding_number(fn, corners);
            if (w == 0)
                continue;
            CensusEntry e;
            e.box_center = center;
            e.winding = w;
            if (w == -1)
                e.pole_location = pole_centroid(fn, center, radius, 256);
            out.push_back(e);
        }
    }
    return out;
}

AnalyticReport check_pole_census(OrbitFunction f, const EllipticContext &ctx,
                                 double location_tolerance) {
    const auto census = pole_census(f, ctx);
    const auto claimed = known_poles(f, ctx);
    int poles = 0;
    for (const auto &e : census)
        if (e.winding < 0)
            poles -= e.winding;

    AnalyticReport out;
    const std::string name = to_string(f);
    out.push_back(make_real_check("pole_count[" + name + "]", static_cast<double>(claimed.size()),
                                  poles, 0.5));
    for (const Cplx &p : claimed) {
        const Cplx target = reduce_to_cell(p, ctx);
        Cplx best = INFINITY;
        for (const auto &e : census)
            if (e.pole_location && std::abs(*e.pole_location - target) < std::abs(best - target))
                best = *e.pole_location;
        out.push_back(make_check("pole_location[" + name + "]" + fmt_point(p), target, best,
                                 location_tolerance));
    }
    return out;
}

AnalyticReport run_all_checks(const EllipticContext &ctx, const Tolerances &tol) {
    AnalyticReport out;
    append(out, check_special_values(ctx, tol));
    append(out, check_modulus_identity(ctx, tol));
    append(out, check_residue_table(ctx, tol));
    for (Cplx t : {Cplx(0.0), Cplx(1.3), Cplx(0.2, 0.3)})
        append(out, check_sum_identities(t, ctx, tol));
    out.push_back(make_real_check("inv_one_minus_icn_sum_spread", 0.0, cn_sum_spread(500, ctx),
                                  tol.cn_sum));
    append(out, check_j_identity(ctx.K() / 4.0, ctx, tol));
    append(out, check_j_identity(0.9, ctx, tol));
    append(out, check_triple_zero_and_pole(alpha2(ctx), ctx, tol));
    append(out, check_triple_zero_and_pole(-alpha3(ctx), ctx, tol));
    append(out, check_principal_parts(ctx, tol));
    append(out, check_eom_pole_cancellation({Cplx(0.5, 0.4)}, ctx, tol));
    append(out, check_eom_pole_cancellation({Cplx(ctx.K() / 6.0)}, ctx, tol, 1e-10));
    append(out, check_eom_pole_cancellation({alpha2(ctx) + 0.05}, ctx, tol, 1e-6));
    append(out, check_pole_census(OrbitFunction::XPlus, ctx));
    append(out, check_pole_census(OrbitFunction::DeltaXMinus, ctx));
    return out;
}

} // namespace lemnichor
