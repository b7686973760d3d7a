#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lemnichor/analytic.hpp"
#include "lemnichor/dynamics.hpp"
#include "lemnichor/geometry.hpp"
#include "lemnichor/invariants.hpp"

namespace lemnichor {

/// Shortest round-trippable form, "%.17g".
std::string format_double(double x);

/// Flat object: one key per quantity plus "<quantity>_residual".
nlohmann::json to_json(const InvariantReport &r);
/// Array of {check, claimed, observed, residual, tolerance, pass}. Complex
/// values are written as [re, im].
nlohmann::json to_json(const AnalyticReport &r);

inline const char *kTrajectoryHeader =
    "t,x1,y1,vx1,vy1,x2,y2,vx2,vy2,x3,y3,vx3,vy3,energy";
inline const char *kGeometryHeader =
    "t,cx,cy,lambda1,lambda2,lambda3,quadrant_c,quadrant_1,quadrant_2,quadrant_3,"
    "hyperbola_residual";

void write_trajectory_csv(std::ostream &out, const Trajectory &traj);
void write_geometry_csv(std::ostream &out, const std::vector<GeometrySample> &sweep);

/// Phase state from the last data row of a trajectory CSV (header required).
/// Throws DomainError on malformed input.
PhaseState read_phase_state_csv(std::istream &in);

} // namespace lemnichor
