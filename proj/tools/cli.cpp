#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "lemnichor/analytic.hpp"
#include "lemnichor/dynamics.hpp"
#include "lemnichor/errors.hpp"
#include "lemnichor/geometry.hpp"
#include "lemnichor/invariants.hpp"
#include "lemnichor/report_io.hpp"
#include "lemnichor/tolerances.hpp"

namespace lemnichor::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct RunConfig {
    std::string command;
    int n_samples = 0;
    double dt = 0.0;
    long long steps = 65536;
    std::string variant = "U";
    std::string output = "-";
    Format format = Format::Json;
    bool format_given = false;
    bool affine = false;
    double tolerance_scale = 1.0;
    std::string init = "analytic";
    std::string init_file;
    double init_phase = 0.0;
    std::string from_c;
    std::string from_point;
};

bool to_stdout(const RunConfig &cfg) { return cfg.output.empty() || cfg.output == "-"; }

void emit(const RunConfig &cfg, std::ostream &out, const std::function<void(std::ostream &)> &fn) {
    if (to_stdout(cfg)) {
        fn(out);
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file)
        throw IoError("cannot open output file '" + cfg.output + "'");
    fn(file);
    if (!file)
        throw IoError("failed writing output file '" + cfg.output + "'");
}

// Run metadata goes next to the data file so the data stays byte-stable.
void write_sidecar(const RunConfig &cfg, const json &summary) {
    if (to_stdout(cfg))
        return;
    json meta = {{"command", cfg.command},
                 {"n_samples", cfg.n_samples},
                 {"format", cfg.format == Format::Csv ? "csv" : "json"},
                 {"tolerance_scale", cfg.tolerance_scale},
                 {"affine", cfg.affine},
                 {"summary", summary}};
    if (cfg.command == "integrate") {
        meta["variant"] = cfg.variant;
        meta["dt"] = cfg.dt;
        meta["steps"] = cfg.steps;
        meta["init"] = cfg.init;
    }
    const std::string path = cfg.output + ".meta.json";
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open sidecar file '" + path + "'");
    file << meta.dump(2) << '\n';
}

Vec2 exported(const Vec2 &p, const RunConfig &cfg, const EllipticContext &ctx) {
    return cfg.affine ? Vec2{p.x, ctx.m() * p.y} : p;
}

std::vector<double> parse_list(const std::string &text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(cell, &used);
        } catch (const std::logic_error &) {
            throw DomainError("cannot parse number '" + cell + "'");
        }
        if (used != cell.size())
            throw DomainError("cannot parse number '" + cell + "'");
        values.push_back(v);
    }
    return values;
}

// Accepts a plain number or a multiple of K such as "0.2K" or "K/5".
double parse_phase(const std::string &text, const EllipticContext &ctx) {
    const auto k_pos = text.find('K');
    if (k_pos == std::string::npos)
        return parse_list(text).at(0);
    const std::string before = text.substr(0, k_pos);
    const std::string after = text.substr(k_pos + 1);
    double factor = before.empty() ? 1.0 : parse_list(before).at(0);
    if (!after.empty()) {
        if (after[0] != '/')
            throw DomainError("phase must look like 0.2K or K/5, got '" + text + "'");
        factor /= parse_list(after.substr(1)).at(0);
    }
    return factor * ctx.K();
}

int cmd_sample(const RunConfig &cfg, std::ostream &out, const EllipticContext &ctx) {
    const int n = cfg.n_samples > 0 ? cfg.n_samples : 12;
    struct Row {
        int j;
        double t;
        Vec2 pos, vel;
    };
    std::vector<Row> rows;
    for (int j = 0; j < n; ++j) {
        const double t = ctx.period() * j / n;
        const auto b = body_state(t, ctx);
        rows.push_back({j, t, exported(b.pos, cfg, ctx), b.vel});
    }
    emit(cfg, out, [&](std::ostream &os) {
        if (cfg.format == Format::Csv) {
            os << "j,t,x,y,vx,vy\n";
            for (const auto &r : rows)
                os << r.j << ',' << format_double(r.t) << ',' << format_double(r.pos.x) << ','
                   << format_double(r.pos.y) << ',' << format_double(r.vel.x) << ','
                   << format_double(r.vel.y) << '\n';
        } else {
            json arr = json::array();
            for (const auto &r : rows)
                arr.push_back({{"j", r.j}, {"t", r.t}, {"position", {r.pos.x, r.pos.y}},
                               {"velocity", {r.vel.x, r.vel.y}}});
            os << json{{"K", ctx.K()}, {"samples", arr}}.dump(2) << '\n';
        }
    });
    write_sidecar(cfg, {{"rows", n}});
    return kSuccess;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, const EllipticContext &ctx,
               const Tolerances &tol) {
    const int n = cfg.n_samples > 0 ? cfg.n_samples : 1000;
    std::map<std::string, double> worst;
    std::vector<InvariantReport> reports;
    std::vector<std::array<double, 3>> extras;
    for (int j = 0; j < n; ++j) {
        const double t = ctx.period() * j / n;
        auto r = full_report(t, ctx);
        for (const auto &[name, value] : r.residuals)
            worst[name] = std::max(worst[name], value);
        const std::array<double, 3> e = {eom_residual(t, PotentialVariant::Central, ctx),
                                         eom_residual(t, PotentialVariant::Pairwise, ctx),
                                         velocity_relation_residual(t, ctx)};
        worst["eom_U"] = std::max(worst["eom_U"], e[0]);
        worst["eom_V"] = std::max(worst["eom_V"], e[1]);
        worst["velocity_relation"] = std::max(worst["velocity_relation"], e[2]);
        reports.push_back(std::move(r));
        extras.push_back(e);
    }
    std::map<std::string, double> limits;
    for (const auto &[name, value] : worst)
        limits[name] = tol.conserved;
    limits["curvature_sq_sum"] = tol.curvature_sum;
    limits["eom_U"] = tol.eom;
    limits["eom_V"] = tol.eom;
    limits["velocity_relation"] = tol.velocity_relation;

    json failures = json::array();
    for (const auto &[name, value] : worst)
        if (!(value < limits[name]))
            failures.push_back({{"quantity", name}, {"max_residual", value},
                                {"tolerance", limits[name]}});
    const bool pass = failures.empty();

    emit(cfg, out, [&](std::ostream &os) {
        if (cfg.format == Format::Csv) {
            os << "t";
            for (const auto &[name, value] : reports.front().residuals)
                os << ',' << name;
            os << ",eom_U,eom_V,velocity_relation\n";
            for (std::size_t k = 0; k < reports.size(); ++k) {
                os << format_double(reports[k].t);
                for (const auto &[name, value] : reports[k].residuals)
                    os << ',' << format_double(value);
                for (double e : extras[k])
                    os << ',' << format_double(e);
                os << '\n';
            }
        } else {
            json j = {{"n_samples", n},
                      {"max_residuals", worst},
                      {"tolerances", limits},
                      {"pass", pass},
                      {"failures", failures}};
            os << j.dump(2) << '\n';
        }
    });
    write_sidecar(cfg, {{"pass", pass}, {"max_residuals", worst}});
    return pass ? kSuccess : kCheckFailed;
}

json trajectory_json(const Trajectory &traj) {
    json samples = json::array();
    for (const auto &s : traj.samples) {
        json pos = json::array(), vel = json::array();
        for (std::size_t i = 0; i < 3; ++i) {
            pos.push_back({s.state.pos[i].x, s.state.pos[i].y});
            vel.push_back({s.state.vel[i].x, s.state.vel[i].y});
        }
        samples.push_back({{"t", s.t}, {"positions", pos}, {"velocities", vel},
                           {"energy", s.energy}});
    }
    return {{"variant", std::string(to_string(traj.variant))}, {"dt", traj.dt},
            {"samples", samples}};
}

int cmd_integrate(const RunConfig &cfg, std::ostream &out, std::ostream &err,
                  const EllipticContext &ctx) {
    const PotentialVariant variant = parse_variant(cfg.variant);
    if (cfg.steps < 1)
        throw DomainError("--steps must be at least 1");
    PhaseState init;
    if (cfg.init == "analytic") {
        init = analytic_phase_state(cfg.init_phase, ctx);
    } else {
        std::ifstream file(cfg.init_file);
        if (!file)
            throw IoError("cannot open initial-state file '" + cfg.init_file + "'");
        init = read_phase_state_csv(file);
    }

    Trajectory traj;
    json failure;
    try {
        traj = integrate(init, variant, cfg.dt, static_cast<std::size_t>(cfg.steps));
    } catch (const IntegrationCollision &e) {
        traj = e.partial();
        failure = {{"error", "collision"}, {"step", e.step()}, {"message", e.what()}};
    }

    if (cfg.affine)
        for (auto &s : traj.samples)
            for (auto &p : s.state.pos)
                p = exported(p, cfg, ctx);

    emit(cfg, out, [&](std::ostream &os) {
        if (cfg.format == Format::Csv)
            write_trajectory_csv(os, traj);
        else
            os << trajectory_json(traj).dump(2) << '\n';
    });

    json summary;
    if (!traj.samples.empty()) {
        const auto &first = traj.samples.front();
        const auto &last = traj.samples.back();
        double position_gap = 0.0, drift = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            position_gap = std::max(position_gap, norm(last.state.pos[i] - first.state.pos[i]));
        for (const auto &s : traj.samples)
            drift = std::max(drift, std::abs(s.energy - first.energy));
        summary = {{"samples", traj.samples.size()},
                   {"final_time", last.t},
                   {"final_vs_initial_position_error", position_gap},
                   {"max_energy_drift", drift}};
        err << "final-vs-initial position error: " << format_double(position_gap)
            << "  max energy drift: " << format_double(drift) << '\n';
    }
    if (!failure.is_null()) {
        summary["failure"] = failure;
        err << failure.dump() << '\n';
    }
    write_sidecar(cfg, summary);
    return failure.is_null() ? kSuccess : kCheckFailed;
}

json candidate_json(const TangencyCandidate &c) {
    return {{"phase", c.s}, {"point", {c.point.x, c.point.y}}, {"quadrant", c.quadrant}};
}

int cmd_geometry(const RunConfig &cfg, std::ostream &out, const EllipticContext &ctx,
                 const Tolerances &tol) {
    if (!cfg.from_c.empty()) {
        const auto xy = parse_list(cfg.from_c);
        if (xy.size() != 2)
            throw DomainError("--from-c expects cx,cy");
        const Vec2 c{xy[0], xy[1]};
        const auto search = tangents_from_point(c, ctx);
        json j = {{"c", {c.x, c.y}}, {"count_warning", search.count_warning}};
        j["candidates"] = json::array();
        for (const auto &cand : search.candidates)
            j["candidates"].push_back(candidate_json(cand));
        const auto sel = select_choreographic(c, search.candidates, ctx);
        j["selected"] = json::array();
        for (const auto &cand : sel.chosen)
            j["selected"].push_back(candidate_json(cand));
        j["rejected"] = candidate_json(sel.rejected);
        emit(cfg, out, [&](std::ostream &os) { os << j.dump(2) << '\n'; });
        write_sidecar(cfg, {{"mode", "from-c"}});
        return kSuccess;
    }
    if (!cfg.from_point.empty()) {
        const double s1 = parse_phase(cfg.from_point, ctx);
        const auto done = complete_triple_from_point(s1, ctx);
        json j = {{"phase", s1},
                  {"x1", {done.x1.x, done.x1.y}},
                  {"x2", {done.others[0].x, done.others[0].y}},
                  {"x3", {done.others[1].x, done.others[1].y}},
                  {"phases", done.phases},
                  {"crossings",
                   {{done.crossings[0].x, done.crossings[0].y},
                    {done.crossings[1].x, done.crossings[1].y}}},
                  {"selected_crossing", done.selected},
                  {"c", {done.concurrency.c.x, done.concurrency.c.y}}};
        emit(cfg, out, [&](std::ostream &os) { os << j.dump(2) << '\n'; });
        write_sidecar(cfg, {{"mode", "from-point"}});
        return kSuccess;
    }

    const int n = cfg.n_samples > 0 ? cfg.n_samples : 200;
    const auto sweep = geometry_sweep(n, ctx);
    double worst_hyperbola = 0.0, worst_concurrency = 0.0;
    int separated = 0, usable = 0;
    for (const auto &g : sweep) {
        if (!g.non_degenerate())
            continue;
        ++usable;
        worst_hyperbola = std::max(worst_hyperbola, std::abs(g.hyperbola_residual));
        worst_concurrency = std::max(worst_concurrency, g.concurrency_residual);
        auto q = g.quadrants;
        std::sort(q.begin(), q.end());
        if (std::adjacent_find(q.begin(), q.end()) == q.end())
            ++separated;
    }
    const bool pass = worst_hyperbola < tol.hyperbola && worst_concurrency < tol.concurrency &&
                      separated == usable;
    emit(cfg, out, [&](std::ostream &os) {
        if (cfg.format == Format::Csv) {
            write_geometry_csv(os, sweep);
        } else {
            json rows = json::array();
            for (const auto &g : sweep)
                rows.push_back({{"t", g.t},
                                {"finite", g.concurrency.finite},
                                {"c", {g.concurrency.c.x, g.concurrency.c.y}},
                                {"lambdas", g.concurrency.lambdas},
                                {"quadrants", g.quadrants},
                                {"hyperbola_residual", g.hyperbola_residual},
                                {"concurrency_residual", g.concurrency_residual}});
            os << json{{"samples", rows},
                       {"max_hyperbola_residual", worst_hyperbola},
                       {"max_concurrency_residual", worst_concurrency},
                       {"pass", pass}}
                      .dump(2)
               << '\n';
        }
    });
    write_sidecar(cfg, {{"pass", pass},
                        {"non_degenerate_samples", usable},
                        {"max_hyperbola_residual", worst_hyperbola},
                        {"max_concurrency_residual", worst_concurrency}});
    return pass ? kSuccess : kCheckFailed;
}

int cmd_analytic(const RunConfig &cfg, std::ostream &out, const EllipticContext &ctx,
                 const Tolerances &tol) {
    const auto report = run_all_checks(ctx, tol);
    const bool pass = all_pass(report);
    emit(cfg, out, [&](std::ostream &os) {
        if (cfg.format == Format::Csv) {
            os << "check,residual,tolerance,pass\n";
            for (const auto &c : report)
                os << '"' << c.name << "\"," << format_double(c.residual) << ','
                   << format_double(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
        } else {
            os << json{{"checks", to_json(report)}, {"pass", pass}}.dump(2) << '\n';
        }
    });
    write_sidecar(cfg, {{"pass", pass}, {"checks", report.size()}});
    return pass ? kSuccess : kCheckFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    const EllipticContext ctx = make_context(kChoreographicModulus);
    RunConfig cfg;
    cfg.dt = ctx.period() / 65536.0;

    CLI::App app{"Three-body choreography on the lemniscate: sampling, verification, "
                 "integration and geometric construction"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--output,-o", cfg.output, "Output path, '-' for stdout");
        sub->add_option("--format", cfg.format, "csv or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
            ->each([&](const std::string &) { cfg.format_given = true; });
        sub->add_option("--n-samples", cfg.n_samples, "Number of samples")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tolerance-scale", cfg.tolerance_scale,
                        "Multiply every pass/fail threshold")
            ->check(CLI::PositiveNumber);
    };

    auto *sample = app.add_subcommand("sample", "Orbit positions at t = j 4K / n");
    add_common(sample);
    sample->add_flag("--affine", cfg.affine, "Scale exported y by k^2");

    auto *verify = app.add_subcommand("verify", "Conserved quantities and equations of motion");
    add_common(verify);

    auto *integ = app.add_subcommand("integrate", "Velocity-Verlet integration of the triple");
    add_common(integ);
    integ->add_option("--variant", cfg.variant, "Potential: U (central) or V (pairwise)")
        ->check(CLI::IsMember({"U", "V", "u", "v"}));
    integ->add_option("--dt", cfg.dt, "Time step (default 4K/65536)")->check(CLI::PositiveNumber);
    integ->add_option("--steps", cfg.steps, "Number of steps")->check(CLI::PositiveNumber);
    integ->add_option("--init", cfg.init, "analytic or file")
        ->check(CLI::IsMember({"analytic", "file"}));
    integ->add_option("--init-file", cfg.init_file,
                      "Trajectory CSV whose last row is the initial state");
    integ->add_option("--init-phase", cfg.init_phase, "Phase of the analytic initial state");
    integ->add_flag("--affine", cfg.affine, "Scale exported y by k^2");

    auto *geo = app.add_subcommand("geometry", "Tangent-line concurrency and constructions");
    add_common(geo);
    geo->add_option("--from-c", cfg.from_c, "Construct the triple from c = cx,cy");
    geo->add_option("--from-point", cfg.from_point,
                    "Complete the triple from body 1 at phase s (number, 0.2K or K/5)");

    auto *analytic = app.add_subcommand("analytic", "Complex-analytic checks");
    add_common(analytic);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return kUsageError;
    }

    const Tolerances tol = Tolerances{}.scaled(cfg.tolerance_scale);
    try {
        if (*sample) {
            cfg.command = "sample";
            if (!cfg.format_given)
                cfg.format = Format::Csv;
            return cmd_sample(cfg, out, ctx);
        }
        if (*verify) {
            cfg.command = "verify";
            return cmd_verify(cfg, out, ctx, tol);
        }
        if (*integ) {
            cfg.command = "integrate";
            if (!cfg.format_given)
                cfg.format = Format::Csv;
            if (cfg.init == "file" && cfg.init_file.empty())
                throw DomainError("--init file requires --init-file");
            return cmd_integrate(cfg, out, err, ctx);
        }
        if (*geo) {
            cfg.command = "geometry";
            if (!cfg.from_c.empty() && !cfg.from_point.empty())
                throw DomainError("--from-c and --from-point are exclusive");
            if (!cfg.format_given && cfg.from_c.empty() && cfg.from_point.empty())
                cfg.format = Format::Csv;
            return cmd_geometry(cfg, out, ctx, tol);
        }
        cfg.command = "analytic";
        return cmd_analytic(cfg, out, ctx, tol);
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception &e) {
        err << json{{"error", e.what()}, {"command", cfg.command}}.dump() << '\n';
        return kCheckFailed;
    }
}

} // namespace lemnichor::cli
