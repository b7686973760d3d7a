#include "lemnichor/report_io.hpp"

#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "lemnichor/errors.hpp"

namespace lemnichor {

namespace {

nlohmann::json value_json(Cplx z, bool complex_valued) {
    if (complex_valued)
        return nlohmann::json::array({z.real(), z.imag()});
    return z.real();
}

void write_row(std::ostream &out, const std::vector<std::string> &fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k)
            out << ',';
        out << fields[k];
    }
    out << '\n';
}

} // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json to_json(const InvariantReport &r) {
    nlohmann::json j;
    j["t"] = r.t;
    j["center_of_mass"] = {r.center_of_mass.x, r.center_of_mass.y};
    j["moment_of_inertia"] = r.moment_of_inertia;
    j["angular_momentum"] = r.angular_momentum;
    j["kinetic_energy"] = r.kinetic_energy;
    j["curvature_sq_sum"] = r.curvature_sq_sum;
    j["sum_sq_distances"] = r.sum_sq_distances;
    j["product_sq_distances"] = r.product_sq_distances;
    for (const auto &[name, value] : r.residuals)
        j[name + "_residual"] = value;
    return j;
}

nlohmann::json to_json(const AnalyticReport &r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &c : r) {
        arr.push_back({{"check", c.name},
                       {"claimed", value_json(c.claimed, c.complex_valued)},
                       {"observed", value_json(c.observed, c.complex_valued)},
                       {"residual", c.residual},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    }
    return arr;
}

void write_trajectory_csv(std::ostream &out, const Trajectory &traj) {
    out << kTrajectoryHeader << '\n';
    std::vector<std::string> fields;
    for (const auto &s : traj.samples) {
        fields.clear();
        fields.push_back(format_double(s.t));
        for (std::size_t i = 0; i < 3; ++i) {
            fields.push_back(format_double(s.state.pos[i].x));
            fields.push_back(format_double(s.state.pos[i].y));
            fields.push_back(format_double(s.state.vel[i].x));
            fields.push_back(format_double(s.state.vel[i].y));
        }
        fields.push_back(format_double(s.energy));
        write_row(out, fields);
    }
}

void write_geometry_csv(std::ostream &out, const std::vector<GeometrySample> &sweep) {
    out << kGeometryHeader << '\n';
    for (const auto &g : sweep) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        const auto &cp = g.concurrency;
        write_row(out, {format_double(g.t), format_double(cp.finite ? cp.c.x : nan),
                        format_double(cp.finite ? cp.c.y : nan),
                        format_double(cp.finite ? cp.lambdas[0] : nan),
                        format_double(cp.finite ? cp.lambdas[1] : nan),
                        format_double(cp.finite ? cp.lambdas[2] : nan),
                        std::to_string(g.quadrants[0]), std::to_string(g.quadrants[1]),
                        std::to_string(g.quadrants[2]), std::to_string(g.quadrants[3]),
                        format_double(cp.finite ? g.hyperbola_residual : nan)});
    }
}

PhaseState read_phase_state_csv(std::istream &in) {
    std::string line, last;
    if (!std::getline(in, line))
        throw DomainError("initial-state file is empty");
    if (line.rfind("t,x1", 0) != 0)
        throw DomainError("initial-state file lacks the trajectory header");
    while (std::getline(in, line))
        if (!line.empty())
            last = line;
    if (last.empty())
        throw DomainError("initial-state file has no data rows");

    std::vector<double> values;
    std::stringstream row(last);
    std::string cell;
    while (std::getline(row, cell, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(cell, &used));
            if (used != cell.size())
                throw DomainError("trailing characters in '" + cell + "'");
        } catch (const std::logic_error &) {
            throw DomainError("cannot parse number '" + cell + "' in initial-state file");
        }
    }
    if (values.size() < 13)
        throw DomainError("initial-state row needs at least 13 columns");
    PhaseState s;
    for (std::size_t i = 0; i < 3; ++i) {
        s.pos[i] = {values[1 + 4 * i], values[2 + 4 * i]};
        s.vel[i] = {values[3 + 4 * i], values[4 + 4 * i]};
    }
    return s;
}

} // namespace lemnichor
