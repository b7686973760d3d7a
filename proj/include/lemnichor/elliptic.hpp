#pragma once

#include <array>
#include <vector>

#include "lemnichor/vec2.hpp"

namespace lemnichor {

/// Squared modulus k^2 = (2 + sqrt 3) / 4 that makes the three-body
/// lemniscate motion conserve its center of mass.
inline const double kChoreographicModulus = (2.0 + std::sqrt(3.0)) / 4.0;

/// Values of the three Jacobi functions at one argument.
template <typename T>
struct JacobiTriple {
    T sn;
    T cn;
    T dn;
};

using JacobiReal = JacobiTriple<double>;
using JacobiComplex = JacobiTriple<Cplx>;

/// Descending Landen (AGM) table for one parameter m.
class LandenTable {
public:
    explicit LandenTable(double m);

    [[nodiscard]] double m() const { return m_; }
    [[nodiscard]] double K() const { return K_; }

    /// sn, cn, dn at a real argument. The argument is first reduced
    /// modulo 4K into [-2K, 2K].
    [[nodiscard]] JacobiReal evaluate(double u) const;

    [[nodiscard]] int iterations() const { return static_cast<int>(a_.size()) - 1; }

private:
    double m_;
    double K_;
    std::vector<double> a_;  // arithmetic means a_0 .. a_N
    std::vector<double> c_;  // c_n = (a_{n-1} - b_{n-1}) / 2, c_0 = sqrt(m)
};

/// Squared modulus together with both quarter periods. Immutable, so it
/// can be shared freely between threads.
class EllipticContext {
public:
    /// Throws DomainError unless 0 < m < 1.
    static EllipticContext make(double m);

    [[nodiscard]] double m() const { return direct_.m(); }
    [[nodiscard]] double k() const { return std::sqrt(direct_.m()); }
    [[nodiscard]] double K() const { return direct_.K(); }
    [[nodiscard]] double Kprime() const { return complement_.K(); }
    /// Real period of sn, cn and of the orbit.
    [[nodiscard]] double period() const { return 4.0 * direct_.K(); }

    [[nodiscard]] JacobiReal sn_cn_dn(double t) const { return direct_.evaluate(t); }

    /// sn, cn, dn at a complex argument through the addition theorem and
    /// Jacobi's imaginary transformation. Throws PoleProximityError within
    /// `pole_radius` of a pole 2pK + (2q+1)iK'.
    [[nodiscard]] JacobiComplex sn_cn_dn(Cplx t, double pole_radius = kPoleRadius) const;

    /// Distance from t to the nearest lattice pole of sn, cn and dn.
    [[nodiscard]] double distance_to_pole(Cplx t) const;

    [[nodiscard]] const LandenTable &direct() const { return direct_; }
    [[nodiscard]] const LandenTable &complement() const { return complement_; }

    static constexpr double kPoleRadius = 1e-3;

private:
    EllipticContext(LandenTable direct, LandenTable complement)
        : direct_(std::move(direct)), complement_(std::move(complement)) {}

    LandenTable direct_;
    LandenTable complement_;
};

/// Convenience wrapper matching the free-function style used elsewhere.
inline EllipticContext make_context(double m) { return EllipticContext::make(m); }

} // namespace lemnichor
