#include "lemnichor/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lemnichor/errors.hpp"

namespace lemnichor {

namespace {

constexpr double kParallelCross = 1e-10;
constexpr double kBisectionWidth = 1e-13;
constexpr double kDuplicateRoot = 1e-9;
constexpr double kDiscriminantSlack = 1e-12;

double wrap_phase(double s, double period) {
    s = std::fmod(s, period);
    return s < 0.0 ? s + period : s;
}

// Signed phase difference b - a wrapped into [-period/2, period/2).
double phase_delta(double a, double b, double period) {
    return std::remainder(b - a, period);
}

double tangent_gap(double s, const Vec2 &c, const EllipticContext &ctx) {
    const auto b = body_state(s, ctx);
    return cross(c - b.pos, b.vel);
}

TangencyCandidate make_candidate(double s, const EllipticContext &ctx) {
    TangencyCandidate cand;
    cand.s = wrap_phase(s, ctx.period());
    cand.point = position(cand.s, ctx);
    cand.quadrant = quadrant_of(cand.point).value_or(0);
    return cand;
}

// Nudges c upward along its level set cx^2 - cy^2 = const.
Vec2 nudge_upward(const Vec2 &c, double delta) {
    const double level = c.x * c.x - c.y * c.y;
    const double y = c.y + delta;
    return {std::copysign(std::sqrt(level + y * y), c.x), y};
}

std::size_t nearest_by_phase(const std::vector<TangencyCandidate> &list, double s, double period) {
    std::size_t best = 0;
    double best_gap = INFINITY;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const double gap = std::abs(phase_delta(s, list[k].s, period));
        if (gap < best_gap) {
            best_gap = gap;
            best = k;
        }
    }
    return best;
}

} // namespace

std::optional<int> quadrant_of(const Vec2 &p, double eps) {
    if (std::abs(p.x) < eps || std::abs(p.y) < eps)
        return std::nullopt;
    if (p.x > 0)
        return p.y > 0 ? 1 : 4;
    return p.y > 0 ? 2 : 3;
}

int quadrant(const Vec2 &p, double eps) {
    const auto q = quadrant_of(p, eps);
    if (!q)
        throw AmbiguityError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                             ") lies on a coordinate axis");
    return *q;
}

ConcurrencyPoint concurrency_point(const TripleState &s) {
    ConcurrencyPoint out;
    std::array<double, 3> moment{};
    for (std::size_t i = 0; i < 3; ++i)
        moment[i] = cross(s.bodies[i].pos, s.bodies[i].vel);

    std::array<Vec2, 3> pair_c;
    std::array<double, 3> pair_cross{};
    std::size_t best = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3;
        const Vec2 &vi = s.bodies[i].vel;
        const Vec2 &vj = s.bodies[j].vel;
        pair_cross[i] = cross(vi, vj);
        if (std::abs(pair_cross[i]) >= kParallelCross)
            pair_c[i] = -1.0 / pair_cross[i] * (moment[i] * vj - moment[j] * vi);
        if (std::abs(pair_cross[i]) > std::abs(pair_cross[best]))
            best = i;
    }
    if (std::abs(pair_cross[best]) < kParallelCross)
        return out;

    out.finite = true;
    out.c = pair_c[best];
    for (std::size_t i = 0; i < 3; ++i)
        if (std::abs(pair_cross[i]) >= kParallelCross)
            out.pair_spread = std::max(out.pair_spread, norm(pair_c[i] - out.c));

    for (std::size_t i = 0; i < 3; ++i) {
        // Use whichever partner gives the better-conditioned denominator.
        const std::size_t j1 = (i + 1) % 3, j2 = (i + 2) % 3;
        const Vec2 &vi = s.bodies[i].vel;
        const std::size_t j =
            std::abs(cross(vi, s.bodies[j1].vel)) >= std::abs(cross(vi, s.bodies[j2].vel)) ? j1
                                                                                            : j2;
        const Vec2 &vj = s.bodies[j].vel;
        out.lambdas[i] = cross(s.bodies[j].pos - s.bodies[i].pos, vj) / cross(vi, vj);
    }
    return out;
}

double concurrency_residual(const TripleState &s, const Vec2 &c) {
    double worst = 0.0;
    for (const auto &b : s.bodies)
        worst = std::max(worst, std::abs(cross(c - b.pos, b.vel)) / norm(b.vel));
    return worst;
}

double hyperbola_residual(const Vec2 &c) { return c.x * c.x - c.y * c.y - 1.0; }

TangentSearch tangents_from_point(const Vec2 &c, const EllipticContext &ctx) {
    if (std::abs(lemniscate_residual(c)) < 1e-12)
        throw DomainError("tangent construction needs a point off the lemniscate");
    const double period = ctx.period();
    const double step = period / kTangentScanPoints;

    std::vector<double> roots;
    double s_prev = 0.0;
    double g_prev = tangent_gap(0.0, c, ctx);
    for (int k = 1; k <= kTangentScanPoints; ++k) {
        const double s_next = k * step;
        const double g_next = k == kTangentScanPoints ? tangent_gap(0.0, c, ctx)
                                                      : tangent_gap(s_next, c, ctx);
        if (g_prev == 0.0) {
            roots.push_back(s_prev);
        } else if ((g_prev < 0.0) != (g_next < 0.0) && g_next != 0.0) {
            double lo = s_prev, hi = s_next, g_lo = g_prev;
            while (hi - lo > kBisectionWidth) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                const double g_mid = tangent_gap(mid, c, ctx);
                if (g_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((g_mid < 0.0) == (g_lo < 0.0)) {
                    lo = mid;
                    g_lo = g_mid;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        s_prev = s_next;
        g_prev = g_next;
    }

    TangentSearch out;
    for (double s : roots) {
        const double w = wrap_phase(s, period);
        const bool duplicate = std::any_of(out.candidates.begin(), out.candidates.end(),
                                           [&](const TangencyCandidate &t) {
                                               return std::abs(phase_delta(t.s, w, period)) <
                                                      kDuplicateRoot;
                                           });
        if (!duplicate)
            out.candidates.push_back(make_candidate(w, ctx));
    }
    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const auto &a, const auto &b) { return a.s < b.s; });
    out.count_warning = out.candidates.size() != 4;
    return out;
}

ChoreographicSelection select_choreographic(const Vec2 &c,
                                            const std::vector<TangencyCandidate> &candidates,
                                            const EllipticContext &ctx) {
    if (candidates.size() != 4)
        throw DomainError("choreographic selection needs exactly 4 tangency candidates, got " +
                          std::to_string(candidates.size()));
    const int qc = quadrant(c);
    const double period = ctx.period();

    // Quadrant rule.
    std::vector<std::size_t> by_quadrant;
    for (std::size_t k = 0; k < 4; ++k)
        if (quadrant(candidates[k].point) != qc)
            by_quadrant.push_back(k);
    if (by_quadrant.size() != 3)
        throw AmbiguityError("quadrant rule selected " + std::to_string(by_quadrant.size()) +
                             " contact points instead of 3");

    // Forward-motion rule: nudge c upward and follow each contact point.
    const Vec2 c_up = nudge_upward(c, kSelectionPerturbation);
    const auto moved = tangents_from_point(c_up, ctx);
    if (moved.candidates.size() != 4)
        throw DisagreementError("perturbed point has " +
                                std::to_string(moved.candidates.size()) + " tangents");
    std::vector<std::size_t> forward;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto &next = moved.candidates[nearest_by_phase(moved.candidates, candidates[k].s, period)];
        if (phase_delta(candidates[k].s, next.s, period) > 0.0)
            forward.push_back(k);
    }
    if (forward != by_quadrant)
        throw DisagreementError("forward-motion rule and quadrant rule disagree");

    ChoreographicSelection sel;
    std::size_t slot = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (std::find(by_quadrant.begin(), by_quadrant.end(), k) != by_quadrant.end())
            sel.chosen[slot++] = candidates[k];
        else
            sel.rejected = candidates[k];
    }
    // candidates are sorted by phase, so chosen is (s, s + 4K/3, s + 8K/3).
    std::sort(sel.chosen.begin(), sel.chosen.end(),
              [](const auto &a, const auto &b) { return a.s < b.s; });
    return sel;
}

std::vector<Vec2> hyperbola_line_intersections(const Vec2 &p, const Vec2 &v) {
    const double a = v.x * v.x - v.y * v.y;
    const double b = 2.0 * (p.x * v.x - p.y * v.y);
    const double c = p.x * p.x - p.y * p.y - 1.0;
    std::vector<double> lambdas;
    if (std::abs(a) < 1e-14 * norm2(v)) {
        if (b == 0.0)
            throw NoIntersectionError("tangent line parallel to an asymptote misses the hyperbola");
        lambdas.push_back(-c / b);
    } else {
        const double disc = b * b - 4.0 * a * c;
        if (disc < -kDiscriminantSlack)
            throw NoIntersectionError("tangent line misses the hyperbola");
        if (std::abs(disc) <= kDiscriminantSlack) {
            lambdas.push_back(-b / (2.0 * a));
        } else {
            const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
            lambdas.push_back(q / a);
            lambdas.push_back(c / q);
        }
    }
    std::vector<Vec2> out;
    for (double l : lambdas)
        out.push_back(p + l * v);
    return out;
}

PointCompletion complete_triple_from_point(double s1, const EllipticContext &ctx) {
    const double period = ctx.period();
    s1 = wrap_phase(s1, period);
    const auto body = body_state(s1, ctx);
    const int q1 = quadrant(body.pos);

    const auto d = hyperbola_line_intersections(body.pos, body.vel);
    if (d.size() != 2)
        throw AmbiguityError("tangent line touches the hyperbola at a single point");

    // Quadrant rule.
    std::vector<std::size_t> by_quadrant;
    for (std::size_t k = 0; k < 2; ++k)
        if (quadrant(d[k]) != q1)
            by_quadrant.push_back(k);
    if (by_quadrant.size() != 1)
        throw AmbiguityError("quadrant rule does not single out one crossing point");
    const std::size_t pick = by_quadrant.front();

    // Forward-motion rule: the chosen crossing moves upward.
    const auto nudged = body_state(s1 + kSelectionPerturbation, ctx);
    const auto d_next = hyperbola_line_intersections(nudged.pos, nudged.vel);
    if (d_next.size() != 2)
        throw DisagreementError("perturbed tangent line lost a crossing point");
    std::array<bool, 2> upward{};
    for (std::size_t k = 0; k < 2; ++k) {
        const Vec2 &follow = norm(d_next[0] - d[k]) < norm(d_next[1] - d[k]) ? d_next[0] : d_next[1];
        upward[k] = follow.y > d[k].y;
    }
    if (!upward[pick] || upward[1 - pick])
        throw DisagreementError("forward-motion rule and quadrant rule pick different crossings");

    const Vec2 c = d[pick];
    const auto search = tangents_from_point(c, ctx);
    const auto sel = select_choreographic(c, search.candidates, ctx);

    // Rotate so the contact point nearest s1 comes first.
    std::size_t first = 0;
    double best_gap = INFINITY;
    for (std::size_t k = 0; k < 3; ++k) {
        const double gap = std::abs(phase_delta(s1, sel.chosen[k].s, period));
        if (gap < best_gap) {
            best_gap = gap;
            first = k;
        }
    }
    PointCompletion out;
    out.x1 = body.pos;
    out.crossings = {d[0], d[1]};
    out.selected = pick;
    TripleState constructed;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto &cand = sel.chosen[(first + k) % 3];
        out.phases[k] = cand.s;
        constructed.bodies[k] = body_state(cand.s, ctx);
    }
    out.others = {constructed.bodies[1].pos, constructed.bodies[2].pos};
    out.concurrency = concurrency_point(constructed);
    return out;
}

bool GeometrySample::non_degenerate() const {
    return concurrency.finite &&
           std::all_of(quadrants.begin(), quadrants.end(), [](int q) { return q != 0; });
}

GeometrySample geometry_sample(double t, const EllipticContext &ctx) {
    const TripleState s = triple(t, ctx);
    GeometrySample g;
    g.t = t;
    g.concurrency = concurrency_point(s);
    for (std::size_t i = 0; i < 3; ++i)
        g.quadrants[i + 1] = quadrant_of(s.bodies[i].pos).value_or(0);
    if (g.concurrency.finite) {
        g.quadrants[0] = quadrant_of(g.concurrency.c).value_or(0);
        g.hyperbola_residual = hyperbola_residual(g.concurrency.c);
        g.concurrency_residual = concurrency_residual(s, g.concurrency.c);
    }
    return g;
}

std::vector<GeometrySample> geometry_sweep(int n, const EllipticContext &ctx) {
    std::vector<GeometrySample> out;
    out.reserve(static_cast<std::size_t>(n));
    const double step = ctx.period() / n;
    for (int k = 0; k < n; ++k)
        out.push_back(geometry_sample((k + 0.5) * step, ctx));
    return out;
}

std::vector<LeafJump> find_leaf_jumps(const std::vector<GeometrySample> &sweep) {
    std::vector<LeafJump> jumps;
    for (std::size_t k = 1; k < sweep.size(); ++k) {
        const auto &a = sweep[k - 1];
        const auto &b = sweep[k];
        if (!a.concurrency.finite || !b.concurrency.finite ||
            (a.concurrency.c.x < 0.0) != (b.concurrency.c.x < 0.0))
            jumps.push_back({a.t, b.t});
    }
    return jumps;
}

std::vector<AxisCrossing> find_axis_crossings(const std::vector<GeometrySample> &sweep,
                                              const EllipticContext &ctx) {
    auto cy_at = [&](double t) { return concurrency_point(triple(t, ctx)).c.y; };
    std::vector<AxisCrossing> out;
    for (std::size_t k = 1; k < sweep.size(); ++k) {
        const auto &a = sweep[k - 1].concurrency;
        const auto &b = sweep[k].concurrency;
        if (!a.finite || !b.finite || (a.c.x < 0.0) != (b.c.x < 0.0))
            continue;
        if ((a.c.y < 0.0) == (b.c.y < 0.0))
            continue;
        double lo = sweep[k - 1].t, hi = sweep[k].t;
        const bool lo_negative = a.c.y < 0.0;
        while (hi - lo > kBisectionWidth) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if ((cy_at(mid) < 0.0) == lo_negative)
                lo = mid;
            else
                hi = mid;
        }
        AxisCrossing ev;
        ev.t = 0.5 * (lo + hi);
        const TripleState s = triple(ev.t, ctx);
        ev.c = concurrency_point(s).c;
        ev.c_upward = lo_negative;
        double best = INFINITY;
        for (std::size_t i = 0; i < 3; ++i) {
            const double gap = norm(s.bodies[i].pos - ev.c);
            if (gap < best) {
                best = gap;
                ev.body = i;
            }
        }
        ev.body_pos = s.bodies[ev.body].pos;
        ev.body_vel = s.bodies[ev.body].vel;
        out.push_back(ev);
    }
    return out;
}

} // namespace lemnichor
