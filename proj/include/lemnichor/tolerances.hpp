#pragma once

namespace lemnichor {

/// Every pass/fail threshold used by the verification suites. The CLI
/// multiplies the residual thresholds by --tolerance-scale.
struct Tolerances {
    // invariants
    double conserved = 1e-10;          // I, sum v^2, sum r^2, prod r^2, |com|, |L|
    double curvature_sum = 1e-9;       // sum of squared curvatures
    double velocity_relation = 1e-11;  // v^2 + (m - 1/2) x^2 = 1/2

    // dynamics
    double eom = 1e-9;
    double variant_agreement = 1e-12;
    double period_return = 1e-6;
    double force_gradient = 1e-7;
    double one_body = 1e-8;

    // geometry
    double concurrency = 1e-9;
    double hyperbola = 1e-8;
    double round_trip = 1e-7;

    // analytic
    double special_value = 1e-12;
    double residue = 1e-6;
    double cn_sum = 1e-11;
    double series_order = 1e-2;
    double leading_coefficient = 1e-5;
    double next_coefficient = 1e-4;
    double complex_eom = 1e-8;

    /// Copy with every threshold multiplied by `s`.
    [[nodiscard]] Tolerances scaled(double s) const {
        Tolerances t = *this;
        for (double *p : {&t.conserved, &t.curvature_sum, &t.velocity_relation, &t.eom,
                          &t.variant_agreement, &t.period_return, &t.force_gradient,
                          &t.one_body, &t.concurrency, &t.hyperbola, &t.round_trip,
                          &t.special_value, &t.residue, &t.cn_sum, &t.series_order,
                          &t.leading_coefficient, &t.next_coefficient, &t.complex_eom})
            *p *= s;
        return t;
    }
};

} // namespace lemnichor
