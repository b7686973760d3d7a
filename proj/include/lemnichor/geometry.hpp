#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lemnichor/orbit.hpp"

namespace lemnichor {

/// Points closer than this to a coordinate axis have no well-defined quadrant.
inline constexpr double kAxisEpsilon = 1e-8;
/// Step used when nudging c or x1 to tell forward from backward motion.
inline constexpr double kSelectionPerturbation = 1e-5;
inline constexpr int kTangentScanPoints = 4096;

/// Common point of the three tangent lines, c = x_i + lambda_i v_i.
struct ConcurrencyPoint {
    Vec2 c;
    std::array<double, 3> lambdas{};
    bool finite = false;
    /// Largest disagreement between the three pairwise formulas for c.
    double pair_spread = 0.0;
};

struct TangencyCandidate {
    double s = 0.0;  // orbit phase of the contact point, in [0, 4K)
    Vec2 point;
    int quadrant = 0;  // 1..4, or 0 when within kAxisEpsilon of an axis
};

struct TangentSearch {
    std::vector<TangencyCandidate> candidates;
    /// Set when the scan did not find exactly four tangents.
    bool count_warning = false;
};

struct ChoreographicSelection {
    /// Contact points ordered as a choreographic triple (s, s + 4K/3, s - 4K/3).
    std::array<TangencyCandidate, 3> chosen;
    TangencyCandidate rejected;
};

struct PointCompletion {
    Vec2 x1;
    std::array<Vec2, 2> others;  // x2, x3
    std::array<double, 3> phases{};
    /// Both crossings of the tangent line at x1 with the hyperbola; the
    /// selected one is crossings[selected].
    std::array<Vec2, 2> crossings;
    std::size_t selected = 0;
    ConcurrencyPoint concurrency;
};

/// 1 = (+,+), 2 = (-,+), 3 = (-,-), 4 = (+,-); nullopt within eps of an axis.
std::optional<int> quadrant_of(const Vec2 &p, double eps = kAxisEpsilon);
/// As quadrant_of but throws AmbiguityError on an axis.
int quadrant(const Vec2 &p, double eps = kAxisEpsilon);

ConcurrencyPoint concurrency_point(const TripleState &s);
/// Largest distance from c to the tangent lines (x_i, v_i).
double concurrency_residual(const TripleState &s, const Vec2 &c);

/// cx^2 - cy^2 - 1.
double hyperbola_residual(const Vec2 &c);

/// All phases whose tangent line passes through c. Throws DomainError when c
/// lies on the lemniscate.
TangentSearch tangents_from_point(const Vec2 &c, const EllipticContext &ctx);

/// Picks the three contact points outside c's quadrant and confirms that
/// exactly those three move forward when c is nudged upward.
ChoreographicSelection select_choreographic(const Vec2 &c,
                                            const std::vector<TangencyCandidate> &candidates,
                                            const EllipticContext &ctx);

/// Intersections of the line p + lambda v with cx^2 - cy^2 = 1.
std::vector<Vec2> hyperbola_line_intersections(const Vec2 &p, const Vec2 &v);

/// Reconstructs bodies 2 and 3 from body 1 at phase s1 using only the
/// tangent-line construction.
PointCompletion complete_triple_from_point(double s1, const EllipticContext &ctx);

struct GeometrySample {
    double t = 0.0;
    ConcurrencyPoint concurrency;
    std::array<int, 4> quadrants{};  // c, body 1, body 2, body 3 (0 on an axis)
    double hyperbola_residual = 0.0;
    double concurrency_residual = 0.0;

    /// Finite c and every point off the axes.
    [[nodiscard]] bool non_degenerate() const;
};

GeometrySample geometry_sample(double t, const EllipticContext &ctx);
/// Samples at t_k = (k + 1/2) 4K / n, which never hit a multiple of K/3.
std::vector<GeometrySample> geometry_sweep(int n, const EllipticContext &ctx);

struct LeafJump {
    double t_before = 0.0;
    double t_after = 0.0;
};

/// Consecutive sweep samples between which c changes leaf (sign of cx).
std::vector<LeafJump> find_leaf_jumps(const std::vector<GeometrySample> &sweep);

struct AxisCrossing {
    double t = 0.0;
    Vec2 c;
    bool c_upward = false;
    std::size_t body = 0;  // nearest body to c at the crossing
    Vec2 body_pos;
    Vec2 body_vel;
};

/// Times at which c crosses the horizontal axis without changing leaf,
/// refined by bisection.
std::vector<AxisCrossing> find_axis_crossings(const std::vector<GeometrySample> &sweep,
                                              const EllipticContext &ctx);

} // namespace lemnichor
