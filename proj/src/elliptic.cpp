#include "lemnichor/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lemnichor/errors.hpp"

namespace lemnichor {

namespace {

constexpr int kMaxLandenSteps = 32;
constexpr double kAgmGap = 1e-16;

} // namespace

LandenTable::LandenTable(double m) : m_(m) {
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    double c = std::sqrt(m);
    a_.push_back(a);
    c_.push_back(c);
    for (int n = 1; n <= kMaxLandenSteps; ++n) {
        const double a_next = 0.5 * (a + b);
        // c_n = c_{n-1}^2 / (4 a_n) avoids the cancellation in (a - b) / 2.
        c = c * c / (4.0 * a_next);
        b = std::sqrt(a * b);
        a = a_next;
        a_.push_back(a);
        c_.push_back(c);
        if (2.0 * c < kAgmGap)
            break;
    }
    K_ = std::numbers::pi / (2.0 * a_.back());
}

JacobiReal LandenTable::evaluate(double u) const {
    u = std::remainder(u, 4.0 * K_);
    const int n_top = iterations();
    double phi = std::ldexp(a_.back() * u, n_top);
    for (int n = n_top; n >= 1; --n)
        phi = 0.5 * (phi + std::asin(c_[n] / a_[n] * std::sin(phi)));
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = std::sqrt(1.0 - m_ * sn * sn);
    return {sn, cn, dn};
}

EllipticContext EllipticContext::make(double m) {
    if (!(m > 0.0 && m < 1.0))
        throw DomainError("elliptic parameter m must lie in (0, 1), got " + std::to_string(m));
    return EllipticContext(LandenTable(m), LandenTable(1.0 - m));
}

double EllipticContext::distance_to_pole(Cplx t) const {
    const double two_k = 2.0 * K();
    const double two_kp = 2.0 * Kprime();
    const double re = t.real() - two_k * std::round(t.real() / two_k);
    const double shifted = t.imag() - Kprime();
    const double im = shifted - two_kp * std::round(shifted / two_kp);
    return std::hypot(re, im);
}

JacobiComplex EllipticContext::sn_cn_dn(Cplx t, double pole_radius) const {
    if (distance_to_pole(t) < pole_radius)
        throw PoleProximityError("complex Jacobi evaluation within " + std::to_string(pole_radius) +
                                 " of a pole");
    const auto [s, c, d] = direct_.evaluate(t.real());
    const auto [s1, c1, d1] = complement_.evaluate(t.imag());
    const double m = direct_.m();
    const double den = c1 * c1 + m * s * s * s1 * s1;
    return {Cplx(s * d1, c * d * s1 * c1) / den,
            Cplx(c * c1, -s * d * s1 * d1) / den,
            Cplx(d * c1 * d1, -m * s * c * s1) / den};
}

} // namespace lemnichor
