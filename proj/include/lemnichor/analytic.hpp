#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lemnichor/orbit.hpp"
#include "lemnichor/tolerances.hpp"

namespace lemnichor {

/// alpha_1 = -K + iK'.
Cplx alpha1(const EllipticContext &ctx);
/// alpha_2 = K/3 + iK'.
Cplx alpha2(const EllipticContext &ctx);
/// alpha_3 = 5K/3 + iK'.
Cplx alpha3(const EllipticContext &ctx);

/// Elliptic functions whose pole structure is checked.
enum class OrbitFunction {
    XPlus,           // sn / (1 - i cn)
    InvOneMinusICn,  // 1 / (1 - i cn)
    DeltaXMinus,     // x-(t + 4K/3) - x-(t)
    InvDeltaXMinus,  // 1 / delta_x_minus(t)
    NegInvDeltaXMinusShifted,  // -1 / delta_x_minus(t - 4K/3)
    XPlusDdot,       // d^2 x+ / dt^2
};

std::string to_string(OrbitFunction f);
std::function<Cplx(Cplx)> evaluator(OrbitFunction f, const EllipticContext &ctx);

/// Poles of f inside the cell -2K <= Re t < 2K, -2K' <= Im t < 2K'.
std::vector<Cplx> known_poles(OrbitFunction f, const EllipticContext &ctx);

struct PoleSpec {
    Cplx location;
    int order = 1;
    std::optional<Cplx> claimed_residue;
    std::optional<Cplx> claimed_leading;
};

/// One line of a verification report.
struct CheckResult {
    std::string name;
    Cplx claimed;
    Cplx observed;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool complex_valued = false;
};

using AnalyticReport = std::vector<CheckResult>;

bool all_pass(const AnalyticReport &r);

/// Coefficient of (t - center)^n in the Laurent series of f, from the
/// trapezoid rule on a circle: mean of f(center + r e^{i theta}) r^-n e^{-i n theta}.
Cplx laurent_coefficient(const std::function<Cplx(Cplx)> &f, Cplx center, int n, double radius,
                         int nodes = 256);

/// Residue of a simple pole by contour quadrature. Throws ContourCrossingError
/// when another pole of f lies within 2 * radius, DomainError for order != 1.
Cplx residue_at(const PoleSpec &pole, OrbitFunction f, const EllipticContext &ctx,
                double radius = 1e-2, int nodes = 256);

/// sn, cn, dn at K/3, 2K/3, 4K/3, 5K/3 against their radical closed forms.
AnalyticReport check_special_values(const EllipticContext &ctx, const Tolerances &tol = {});

/// (1 - 2s) / (s^4 - 2s^3) with s = sn(K/3) for this context's modulus.
double modulus_from_sn_third(const EllipticContext &ctx);
/// sn(K/3) = sqrt3 - 1 substituted into the modulus formula, the two
/// evaluations of sn(10K/3), and agreement with the choreographic modulus.
AnalyticReport check_modulus_identity(const EllipticContext &ctx, const Tolerances &tol = {});

/// All eight residues of x+ and 1/(1 - i cn) at +-alpha_2, +-alpha_3.
AnalyticReport check_residue_table(const EllipticContext &ctx, const Tolerances &tol = {});

/// x+ three-term sum = 0 and 1/(1 - i cn) three-term sum = (3 + sqrt3)/2.
AnalyticReport check_sum_identities(Cplx t, const EllipticContext &ctx, const Tolerances &tol = {});

/// max - min of the 1/(1 - i cn) three-term sum over n real samples in [0, 4K).
double cn_sum_spread(int n, const EllipticContext &ctx);

/// j+ = x- dx+/dt = d/dt 1/(1 - i cn): both forms, vanishing sum, and the
/// link of the imaginary part to the angular momentum.
AnalyticReport check_j_identity(double t, const EllipticContext &ctx, const Tolerances &tol = {});

/// Log-log slope of |f(t0 + h e^{i theta})| over h in [h_min, h_max].
double zero_order_slope(const std::function<Cplx(Cplx)> &f, Cplx t0, double h_min = 1e-4,
                        double h_max = 1e-2, double theta = 0.3, int points = 21);

/// Cubic zero of delta_x_minus (and cubic pole of its reciprocal) at
/// t0 in {alpha_2, -alpha_3}.
AnalyticReport check_triple_zero_and_pole(Cplx t0, const EllipticContext &ctx,
                                          const Tolerances &tol = {});

/// Leading and 1/(t - p) coefficients of every principal part in the
/// four-row table of 1/dx-, -1/dx-(t - 4K/3), d^2x+/dt^2 and x+.
AnalyticReport check_principal_parts(const EllipticContext &ctx, const Tolerances &tol = {});

/// |x+'' - 1/2 (1/dx-(t) - 1/dx-(t - 4K/3)) - sqrt3/4 x+|.
Cplx complex_eom_residual(Cplx t, const EllipticContext &ctx);
AnalyticReport check_eom_pole_cancellation(const std::vector<Cplx> &samples,
                                           const EllipticContext &ctx, const Tolerances &tol = {},
                                           double tolerance_override = -1.0);

struct CensusEntry {
    Cplx box_center;
    int winding = 0;  // zeros minus poles inside the box
    std::optional<Cplx> pole_location;  // refined for winding -1 boxes
};

/// Zero/pole census over a fundamental cell split into 12 x 4 boxes
/// centred on the lattice jK/3 + qK'. Only boxes with non-zero winding are
/// returned.
std::vector<CensusEntry> pole_census(OrbitFunction f, const EllipticContext &ctx);

/// Census compared to known_poles: count and locations.
AnalyticReport check_pole_census(OrbitFunction f, const EllipticContext &ctx,
                                 double location_tolerance = 1e-6);

/// Everything above at the points used by the acceptance suite.
AnalyticReport run_all_checks(const EllipticContext &ctx, const Tolerances &tol = {});

} // namespace lemnichor
