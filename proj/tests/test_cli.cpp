#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "lemnichor/elliptic.hpp"
#include "lemnichor/report_io.hpp"

using namespace lemnichor;
namespace fs = std::filesystem;

namespace {
struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string &name) {
    const auto dir = fs::temp_directory_path() / "lemnichor_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

const EllipticContext ctx = make_context(kChoreographicModulus);
} // namespace

TEST_CASE("sample reproduces the labelled points") {
    const auto r = call({"sample", "--n-samples", "12"});
    REQUIRE(r.code == 0);
    std::stringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "j,t,x,y,vx,vy");
    int rows = 0;
    while (std::getline(in, line)) {
        std::stringstream row(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(row, cell, ','))
            v.push_back(std::stod(cell));
        const double t = rows * ctx.K() / 3;
        CHECK(v[1] == doctest::Approx(t).epsilon(1e-15));
        CHECK(std::abs(v[2] - position(t, ctx).x) < 1e-15);
        CHECK(std::abs(v[3] - position(t, ctx).y) < 1e-15);
        ++rows;
    }
    CHECK(rows == 12);
}

TEST_CASE("affine export scales y only") {
    const auto plain = call({"sample", "--n-samples", "5", "--format", "json"});
    const auto affine = call({"sample", "--n-samples", "5", "--format", "json", "--affine"});
    REQUIRE(plain.code == 0);
    REQUIRE(affine.code == 0);
    const auto a = nlohmann::json::parse(plain.out)["samples"];
    const auto b = nlohmann::json::parse(affine.out)["samples"];
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(b[k]["position"][0] == a[k]["position"][0]);
        CHECK(b[k]["position"][1].get<double>() ==
              doctest::Approx(ctx.m() * a[k]["position"][1].get<double>()));
        CHECK(b[k]["velocity"] == a[k]["velocity"]);
    }
}

TEST_CASE("output is byte-identical across runs and metadata goes to a sidecar") {
    const auto p = scratch("sample.csv");
    REQUIRE(call({"sample", "--output", p.string()}).code == 0);
    const std::string first = slurp(p);
    REQUIRE(call({"sample", "--output", p.string()}).code == 0);
    CHECK(slurp(p) == first);
    const auto meta = nlohmann::json::parse(slurp(p.string() + ".meta.json"));
    CHECK(meta["command"] == "sample");
}

TEST_CASE("verify reports every invariant") {
    const auto r = call({"verify", "--n-samples", "1000"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    for (const char *key : {"moment_of_inertia", "center_of_mass", "angular_momentum",
                            "kinetic_energy", "curvature_sq_sum", "sum_sq_distances",
                            "product_sq_distances", "eom_U", "eom_V", "velocity_relation"})
        CHECK(j["max_residuals"].contains(key));
}

TEST_CASE("verify fails with a machine-readable report when tolerances are too tight") {
    const auto r = call({"verify", "--n-samples", "20", "--tolerance-scale", "1e-12"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK(!j["failures"].empty());
}

TEST_CASE("verify csv has one row per sample") {
    const auto r = call({"verify", "--n-samples", "10", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
}

TEST_CASE("integrate returns to the start after one period") {
    const auto p = scratch("traj.csv");
    const auto r = call({"integrate", "--variant", "V", "--steps", "65536", "--output",
                         p.string()});
    REQUIRE(r.code == 0);
    const auto meta = nlohmann::json::parse(slurp(p.string() + ".meta.json"));
    CHECK(meta["summary"]["final_vs_initial_position_error"].get<double>() < 1e-6);
    CHECK(meta["variant"] == "V");

    // continue from the last row
    const auto q = scratch("traj2.csv");
    const auto r2 = call({"integrate", "--init", "file", "--init-file", p.string(), "--steps",
                          "10", "--output", q.string()});
    REQUIRE(r2.code == 0);
    std::ifstream a(p), b(q);
    std::string la, lb, last;
    while (std::getline(a, la))
        last = la;
    std::getline(b, lb);
    std::getline(b, lb);
    // same state, time restarts at zero; energy is recomputed
    auto state = [](const std::string &l) {
        return l.substr(l.find(','), l.rfind(',') - l.find(','));
    };
    CHECK(state(lb) == state(last));
}

TEST_CASE("integrate json") {
    const auto r = call({"integrate", "--steps", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["samples"].size() == 5);
    CHECK(j["variant"] == "U");
}

TEST_CASE("geometry commands") {
    const auto sweep = call({"geometry", "--n-samples", "50"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.rfind(kGeometryHeader, 0) == 0);

    const auto pt = call({"geometry", "--from-point", "0.2K"});
    REQUIRE(pt.code == 0);
    const auto j = nlohmann::json::parse(pt.out);
    const auto ref = triple(0.2 * ctx.K(), ctx);
    CHECK(std::abs(j["x2"][0].get<double>() - ref.bodies[1].pos.x) < 1e-7);
    CHECK(std::abs(j["x3"][1].get<double>() - ref.bodies[2].pos.y) < 1e-7);

    const Vec2 c = concurrency_point(triple(0.4, ctx)).c;
    const auto fc = call({"geometry", "--from-c", format_double(c.x) + "," + format_double(c.y)});
    REQUIRE(fc.code == 0);
    CHECK(nlohmann::json::parse(fc.out)["selected"].size() == 3);
}

TEST_CASE("analytic command passes") {
    const auto r = call({"analytic"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["pass"] == true);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"sample", "--n-samples", "0"}).code == 2);
    CHECK(call({"integrate", "--dt", "-1"}).code == 2);
    CHECK(call({"integrate", "--variant", "W"}).code == 2);
    CHECK(call({"integrate", "--init", "file"}).code == 2);
    CHECK(call({"sample", "--format", "xml"}).code == 2);
    CHECK(call({"geometry", "--from-c", "1.5"}).code == 2);
    CHECK(call({"geometry", "--from-c", "1,2", "--from-point", "0.3"}).code == 2);
}

TEST_CASE("I/O errors exit 3") {
    CHECK(call({"sample", "--output", "/nonexistent-dir/x.csv"}).code == 3);
    CHECK(call({"integrate", "--init", "file", "--init-file", "/nonexistent-dir/x.csv"}).code ==
          3);
}

TEST_CASE("help exits 0") {
    const auto r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("integrate") != std::string::npos);
}
