// Runs every acceptance criterion once and prints one PASS/FAIL line each.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lemnichor/analytic.hpp"
#include "lemnichor/dynamics.hpp"
#include "lemnichor/geometry.hpp"
#include "lemnichor/invariants.hpp"

using namespace lemnichor;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

const EllipticContext ctx = make_context(kChoreographicModulus);
const Tolerances tol;

Outcome conservation() {
    Outcome o;
    const double r3 = std::sqrt(3.0);
    double com = 0, I = 0, L = 0, v2 = 0, curv = 0, dist = 0, prod = 0;
    for (int j = 0; j < 1000; ++j) {
        const auto s = triple(ctx.period() * j / 1000, ctx);
        com = std::max(com, norm(center_of_mass(s)));
        I = std::max(I, std::abs(moment_of_inertia(s) - r3));
        L = std::max(L, std::abs(angular_momentum(s)));
        v2 = std::max(v2, std::abs(kinetic_energy(s) - 0.75));
        curv = std::max(curv, std::abs(curvature_sq_sum(s) - 9 * r3));
        dist = std::max(dist, std::abs(sum_sq_distances(s) - 3 * r3));
        prod = std::max(prod, std::abs(product_sq_distances(s) - 1.5 * r3));
    }
    o.require(com < 1e-10, "center of mass " + num(com));
    o.require(I < 1e-10, "moment of inertia " + num(I));
    o.require(L < 1e-10, "angular momentum " + num(L));
    o.require(v2 < 1e-10, "sum v^2 " + num(v2));
    o.require(curv < 1e-9, "curvature sum " + num(curv));
    o.require(dist < 1e-10, "distance sum " + num(dist));
    o.require(prod < 1e-10, "distance product " + num(prod));
    if (o.ok)
        o.detail = "max residual " + num(std::max({com, I, L, v2, dist, prod})) +
                   ", curvature " + num(curv);
    return o;
}

Outcome modulus_exclusivity() {
    Outcome o;
    const auto half = make_context(0.5);
    double worst = 0.0;
    for (int j = 0; j < 1000; ++j)
        worst = std::max(worst, norm(center_of_mass(triple(half.period() * j / 1000, half))));
    o.require(worst > 1e-3, "max |center of mass| at m = 1/2 only " + num(worst));
    if (o.ok)
        o.detail = "max |center of mass| at m = 1/2: " + num(worst);
    return o;
}

Outcome equation_of_motion() {
    Outcome o;
    double u = 0, v = 0, gap = 0;
    for (int j = 0; j < 1000; ++j) {
        const double t = ctx.period() * j / 1000;
        const double a = eom_residual(t, PotentialVariant::Central, ctx);
        const double b = eom_residual(t, PotentialVariant::Pairwise, ctx);
        u = std::max(u, a);
        v = std::max(v, b);
        gap = std::max(gap, std::abs(a - b));
    }
    o.require(u < tol.eom, "U residual " + num(u));
    o.require(v < tol.eom, "V residual " + num(v));
    o.require(gap < tol.variant_agreement, "U/V disagreement " + num(gap));
    if (o.ok)
        o.detail = "U " + num(u) + ", V " + num(v) + ", U-V " + num(gap);
    return o;
}

double max_orbit_error(const Trajectory &tr) {
    double e = 0.0;
    for (const auto &s : tr.samples) {
        const auto a = triple(s.t, ctx);
        for (int i = 0; i < 3; ++i)
            e = std::max(e, norm(s.state.pos[i] - a.bodies[i].pos));
    }
    return e;
}

double max_energy_drift(const Trajectory &tr) {
    double d = 0.0;
    for (const auto &s : tr.samples)
        d = std::max(d, std::abs(s.energy - tr.samples.front().energy));
    return d;
}

Outcome dynamical_reproduction() {
    Outcome o;
    const auto init = analytic_phase_state(0.0, ctx);
    const std::size_t n = 1u << 16;
    const double dt = ctx.period() / n;
    std::string summary;
    for (auto variant : {PotentialVariant::Central, PotentialVariant::Pairwise}) {
        const std::string tag(to_string(variant));
        const auto tr = integrate(init, variant, dt, n);
        const auto &end = tr.samples.back().state;
        double ret = 0.0;
        for (int i = 0; i < 3; ++i) {
            ret = std::max(ret, norm(end.pos[i] - init.pos[i]));
            ret = std::max(ret, norm(end.vel[i] - init.vel[i]));
        }
        o.require(ret < tol.period_return, tag + " return error " + num(ret));

        // 2^16 steps do not land on 4K/3, so interpolate there.
        const auto third = interpolate(tr, phase_offset(ctx));
        double perm = 0.0;
        for (int i = 0; i < 3; ++i)
            perm = std::max(perm, norm(third.pos[i] - init.pos[(i + 1) % 3]));
        o.require(perm < tol.period_return, tag + " T/3 permutation error " + num(perm));
        summary += tag + ": return " + num(ret) + ", T/3 " + num(perm) + "; ";
    }

    // dt-halving study on coarser steps, where the error is well above roundoff
    std::vector<double> err, drift, steps;
    for (int p = 10; p <= 13; ++p) {
        const std::size_t m = 1u << p;
        const auto tr = integrate(init, PotentialVariant::Central, ctx.period() / m, m);
        steps.push_back(ctx.period() / m);
        err.push_back(max_orbit_error(tr));
        drift.push_back(max_energy_drift(tr));
    }
    const double C = drift.front() / (steps.front() * steps.front());
    for (std::size_t k = 1; k < err.size(); ++k) {
        const double ratio = err[k - 1] / err[k];
        o.require(ratio > 3.5 && ratio < 4.5, "error ratio " + num(ratio));
        const double dratio = drift[k - 1] / drift[k];
        o.require(dratio > 3.5 && dratio < 4.5, "energy drift ratio " + num(dratio));
        o.require(drift[k] <= 1.05 * C * steps[k] * steps[k],
                  "energy drift exceeds C dt^2 at dt = " + num(steps[k]));
    }
    const auto ref = integrate(init, PotentialVariant::Central, dt, n);
    o.require(max_energy_drift(ref) <= 1.05 * C * dt * dt,
              "energy drift exceeds C dt^2 at the reference step");
    if (o.ok)
        o.detail = summary + "error ratios " + num(err[0] / err[1]) + " " + num(err[1] / err[2]) +
                   " " + num(err[2] / err[3]) + ", C = " + num(C);
    return o;
}

Outcome report_outcome(const AnalyticReport &r, const std::string &label) {
    Outcome o;
    double worst = 0.0;
    for (const auto &c : r) {
        o.require(c.pass, c.name + " residual " + num(c.residual));
        worst = std::max(worst, c.residual / c.tolerance);
    }
    if (o.ok)
        o.detail = std::to_string(r.size()) + " " + label + ", worst residual/tolerance " +
                   num(worst);
    return o;
}

Outcome special_values() {
    auto r = check_special_values(ctx, tol);
    const auto m = check_modulus_identity(ctx, tol);
    r.insert(r.end(), m.begin(), m.end());
    Outcome o = report_outcome(r, "checks");
    o.require(r.size() >= 16, "expected 12 table entries and 4 identity checks");
    return o;
}

Outcome complex_analysis() {
    AnalyticReport r = check_residue_table(ctx, tol);
    Outcome o;
    o.require(r.size() == 8, "expected 8 residues");
    for (Cplx t : {Cplx{0, 0}, Cplx{1.3, 0}, Cplx{ctx.K() / 5, 0}}) {
        const auto s = check_sum_identities(t, ctx, tol);
        r.insert(r.end(), s.begin(), s.end());
    }
    const double spread = cn_sum_spread(500, ctx);
    o.require(spread < tol.cn_sum, "cn-sum spread " + num(spread));
    for (Cplx t0 : {alpha2(ctx), -alpha3(ctx)}) {
        const auto z = check_triple_zero_and_pole(t0, ctx, tol);
        r.insert(r.end(), z.begin(), z.end());
    }
    const auto pp = check_principal_parts(ctx, tol);
    r.insert(r.end(), pp.begin(), pp.end());
    Outcome inner = report_outcome(r, "checks");
    o.require(inner.ok, inner.detail);
    if (o.ok)
        o.detail = inner.detail + ", cn-sum spread " + num(spread);
    return o;
}

Outcome geometry_suite() {
    Outcome o;
    int usable = 0, n = 200;
    std::vector<GeometrySample> sweep;
    // widen the sweep until it holds 200 non-degenerate samples
    while (true) {
        sweep = geometry_sweep(n, ctx);
        usable = static_cast<int>(std::count_if(sweep.begin(), sweep.end(),
                                                [](const auto &g) { return g.non_degenerate(); }));
        if (usable >= 200)
            break;
        n += 200 - usable;
    }
    double conc = 0, hyp = 0, trip_c = 0, trip_p = 0;
    int separated = 0, rounds = 0;
    for (const auto &g : sweep) {
        if (!g.non_degenerate())
            continue;
        conc = std::max(conc, g.concurrency_residual);
        hyp = std::max(hyp, std::abs(g.hyperbola_residual));
        auto q = g.quadrants;
        std::sort(q.begin(), q.end());
        if (std::adjacent_find(q.begin(), q.end()) == q.end())
            ++separated;

        const auto s = triple(g.t, ctx);
        try {
            const auto search = tangents_from_point(g.concurrency.c, ctx);
            const auto sel = select_choreographic(g.concurrency.c, search.candidates, ctx);
            for (const auto &b : s.bodies) {
                double best = INFINITY;
                for (const auto &cand : sel.chosen)
                    best = std::min(best, norm(cand.point - b.pos));
                trip_c = std::max(trip_c, best);
            }
            const auto done = complete_triple_from_point(g.t, ctx);
            trip_p = std::max({trip_p, norm(done.others[0] - s.bodies[1].pos),
                               norm(done.others[1] - s.bodies[2].pos)});
            ++rounds;
        } catch (const std::exception &e) {
            o.require(false, "t = " + num(g.t) + ": " + e.what());
        }
    }
    o.require(conc < tol.concurrency, "concurrency " + num(conc));
    o.require(hyp < tol.hyperbola, "hyperbola " + num(hyp));
    o.require(separated == usable, "quadrant separation failed at " +
                                       std::to_string(usable - separated) + " samples");
    o.require(trip_c < tol.round_trip, "c round trip " + num(trip_c));
    o.require(trip_p < tol.round_trip, "point round trip " + num(trip_p));
    if (o.ok)
        o.detail = std::to_string(usable) + " samples, concurrency " + num(conc) + ", hyperbola " +
                   num(hyp) + ", round trips " + num(trip_c) + " / " + num(trip_p) + " (" +
                   std::to_string(rounds) + " with both rules agreeing)";
    return o;
}

Outcome one_body() {
    Outcome o;
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double t = -0.98 + 1.96 * k / 49;
        worst = std::max(worst, one_body_lemniscate_residual(0.5, t));
    }
    o.require(worst < tol.one_body, "residual " + num(worst));
    if (o.ok)
        o.detail = "max residual " + num(worst);
    return o;
}

Outcome property_suite() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> td(-20.0, 20.0), md(0.02, 0.98), pd(-1.5, 1.5);
    double pyth = 0, deriv = 0, rel = 0, grad = 0;
    const double h = 1e-6;
    for (int k = 0; k < 1000; ++k) {
        const double t = td(rng);
        const auto j = ctx.sn_cn_dn(t);
        pyth = std::max({pyth, std::abs(j.sn * j.sn + j.cn * j.cn - 1),
                         std::abs(j.dn * j.dn + ctx.m() * j.sn * j.sn - 1)});
        const auto p = ctx.sn_cn_dn(t + h), q = ctx.sn_cn_dn(t - h);
        deriv = std::max({deriv, std::abs((p.sn - q.sn) / (2 * h) - j.cn * j.dn),
                          std::abs((p.cn - q.cn) / (2 * h) + j.sn * j.dn),
                          std::abs((p.dn - q.dn) / (2 * h) + ctx.m() * j.sn * j.cn)});
    }
    for (int k = 0; k < 5; ++k) {
        const double m = md(rng);
        for (int j = 0; j < 20; ++j)
            rel = std::max(rel, velocity_relation_residual(td(rng), m));
    }
    int triples = 0;
    while (triples < 100) {
        Positions x = {Vec2{pd(rng), pd(rng)}, Vec2{pd(rng), pd(rng)}, Vec2{pd(rng), pd(rng)}};
        if (norm(x[0] - x[1]) < 0.2 || norm(x[1] - x[2]) < 0.2 || norm(x[2] - x[0]) < 0.2)
            continue;
        ++triples;
        for (auto variant : {PotentialVariant::Central, PotentialVariant::Pairwise}) {
            const auto F = forces(x, variant);
            for (std::size_t i = 0; i < 3; ++i) {
                Positions a = x, b = x, c = x, d = x;
                a[i].x += h;
                b[i].x -= h;
                c[i].y += h;
                d[i].y -= h;
                const Vec2 g{(potential(a, variant) - potential(b, variant)) / (2 * h),
                             (potential(c, variant) - potential(d, variant)) / (2 * h)};
                grad = std::max(grad, norm(F[i] + g));
            }
        }
    }
    o.require(pyth < 1e-13, "Jacobi identities " + num(pyth));
    o.require(deriv < 1e-8, "derivative identities " + num(deriv));
    o.require(rel < tol.velocity_relation, "velocity relation " + num(rel));
    o.require(grad < tol.force_gradient, "force gradient " + num(grad));
    if (o.ok)
        o.detail = "identities " + num(pyth) + ", derivatives " + num(deriv) +
                   ", velocity relation " + num(rel) + ", force gradient " + num(grad);
    return o;
}

struct Criterion {
    int id;
    const char *name;
    double budget;  // seconds
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "conservation suite", 1.0, conservation},
        {2, "modulus exclusivity", 1.0, modulus_exclusivity},
        {3, "equation of motion", 1.0, equation_of_motion},
        {4, "dynamical reproduction", 10.0, dynamical_reproduction},
        {5, "special values", 0.1, special_values},
        {6, "complex analysis", 5.0, complex_analysis},
        {7, "geometry", 5.0, geometry_suite},
        {8, "one-body check", 0.1, one_body},
        {9, "property suite", 5.0, property_suite},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget)
            o.require(false, "runtime " + num(secs) + " s over budget " + num(c.budget) + " s");
        std::printf("%s criterion %d (%s): %s [%.3f s]\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs);
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
