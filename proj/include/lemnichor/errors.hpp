#pragma once

#include <stdexcept>
#include <string>

namespace lemnichor {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Complex evaluation requested too close to a pole of sn, cn, dn.
class PoleProximityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two bodies closer than the collision threshold.
class CollisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Speed too small to define a curvature or a tangent direction.
class DegenerateVelocityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quadrant-based selection rule was asked about a point on an axis.
class AmbiguityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tangent line does not meet the rectangular hyperbola.
class NoIntersectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The perturbation rule and the quadrant rule picked different answers.
class DisagreementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Another pole lies too close to a residue contour.
class ContourCrossingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lemnichor
