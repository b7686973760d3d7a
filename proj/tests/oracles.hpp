#pragma once

// Reference values computed independently of the library under test.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>
#include <cmath>
#include <functional>

#include "lemnichor/vec2.hpp"

namespace oracle {

inline double K_quadrature(double m) {
    auto f = [m](double th) { return 1.0 / std::sqrt(1.0 - m * std::sin(th) * std::sin(th)); };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, M_PI / 2, 15,
                                                                        1e-15);
}

struct Jacobi {
    double sn, cn, dn;
};

// boost takes the modulus k, not m = k^2.
inline Jacobi jacobi(double m, double u) {
    Jacobi j{};
    j.sn = boost::math::jacobi_elliptic(std::sqrt(m), u, &j.cn, &j.dn);
    return j;
}

inline lemnichor::Vec2 position(double m, double t) {
    const auto j = jacobi(m, t);
    const double d = 1.0 + j.cn * j.cn;
    return {j.sn / d, j.sn * j.cn / d};
}

inline lemnichor::Vec2 central_diff(const std::function<lemnichor::Vec2(double)> &f, double t,
                                    double h) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

inline lemnichor::Vec2 second_diff(const std::function<lemnichor::Vec2(double)> &f, double t,
                                   double h) {
    return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

} // namespace oracle
