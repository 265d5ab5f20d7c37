#include "gsfid/cli.hpp"
#include "gsfid/config.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace gsfid::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

// Scratch file removed on scope exit.
struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& contents) {
        static std::mt19937_64 rng(std::random_device{}());
        path = fs::temp_directory_path() / ("gsfid_test_" + std::to_string(rng()) + ".cfg");
        std::ofstream(path) << contents;
    }
    ~TempFile() { fs::remove(path); }
};

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("load_config: empty file gives the defaults") {
    TempFile f("");
    const RunConfig c = load_config(f.path);
    const RunConfig d;
    CHECK(c.n_sites == d.n_sites);
    CHECK(c.gamma == d.gamma);
    CHECK(c.delta_lambda == d.delta_lambda);
    CHECK(c.n_list == d.n_list);
    CHECK(c.workers == 1);
    CHECK(c.variant == "paper");
}

TEST_CASE("load_config: file values, comments and the shared delta key") {
    TempFile f("# sweep settings\nn_sites = 101\ngamma=0.25   # trailing\n\ndelta = 1e-4\ndelta_gamma = 0\n"
               "n_list = 11, 101, 1001\nvariant = literature\n");
    const RunConfig c = load_config(f.path);
    CHECK(c.n_sites == 101);
    CHECK(c.gamma == 0.25);
    CHECK(c.delta_lambda == 1e-4);
    CHECK(c.delta_gamma == 0.0);
    CHECK(c.n_list == std::vector<std::int64_t>{11, 101, 1001});
    CHECK(c.variant == "literature");
}

TEST_CASE("load_config: flags beat the file") {
    TempFile f("n_sites = 101\n");
    CHECK(merge_config(f.path, {{"n_sites", "3"}}).n_sites == 3);
    CHECK(merge_config(f.path, {}, {{"n_sites", "7"}}).n_sites == 101);
    CHECK(merge_config("", {}, {{"n_sites", "7"}}).n_sites == 7);
}

TEST_CASE("load_config: bad files are usage errors naming the key") {
    {
        TempFile f("n_sites = 4\n");
        try {
            load_config(f.path);
            FAIL("expected UsageError");
        } catch (const UsageError& e) {
            CHECK(std::string(e.what()).find("n_sites must be odd") != std::string::npos);
        }
    }
    {
        TempFile f("temperature = 3\n");
        CHECK_THROWS_AS(load_config(f.path), UsageError);
    }
    {
        TempFile f("gamma = fast\n");
        try {
            load_config(f.path);
            FAIL("expected UsageError");
        } catch (const UsageError& e) {
            CHECK(std::string(e.what()).find("gamma") != std::string::npos);
        }
    }
    {
        TempFile f("just some words\n");
        CHECK_THROWS_AS(load_config(f.path), UsageError);
    }
    CHECK_THROWS_AS(load_config("/nonexistent/gsfid.cfg"), UsageError);
}

TEST_CASE("worker count from the environment sits between file and flags") {
    TempFile f("workers = 2\n");
    ::setenv(workers_env, "5", 1);
    CHECK(merge_config(f.path, {}).workers == 5);
    CHECK(merge_config(f.path, {{"workers", "3"}}).workers == 3);
    ::setenv(workers_env, "zero", 1);
    CHECK_THROWS_AS(merge_config(f.path, {}), UsageError);
    ::unsetenv(workers_env);
    CHECK(merge_config(f.path, {}).workers == 2);
}

TEST_CASE("odd_sites_at_least") {
    CHECK(odd_sites_at_least(100000) == 100001);
    CHECK(odd_sites_at_least(1001) == 1001);
    CHECK(odd_sites_at_least(0) == 3);
}

TEST_CASE("run: usage errors exit with status 2") {
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"xy-grid", "--frobnicate", "1"}).status == 2);
    CHECK(invoke({"no-such-command"}).status == 2);
    const auto even = invoke({"xy-overlap", "--n-sites", "4"});
    CHECK(even.status == 2);
    CHECK(even.err.find("n_sites must be odd") != std::string::npos);
    CHECK(invoke({"xy-overlap", "--gamma", "abc"}).status == 2);
    CHECK(invoke({"xy-scaling", "--quantity", "overlap"}).status == 2);
    CHECK(invoke({"reproduce", "fig9"}).status == 2);
}

TEST_CASE("run: compute errors exit with status 1") {
    const auto r = invoke({"xy-scaling", "--n-list", "101,201,301,401"});
    CHECK(r.status == 1);
    CHECK(r.err.find("decades") != std::string::npos);
    // Window reaching past the critical coupling leaves an error cell inside the fit.
    CHECK(invoke({"dicke-exponent", "--window-max", "0.9"}).status == 1);
}

TEST_CASE("run: xy-overlap CSV") {
    const auto r = invoke({"xy-overlap", "--gamma", "1", "--lambda", "0", "--n-sites", "3", "--delta-lambda", "0.1",
                           "--delta-gamma", "0"});
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "gamma,lambda,n_sites,delta_gamma,delta_lambda,overlap,log_overlap,degenerate");
    CHECK(rows[1].rfind("1,0,3,0,0.10000000000000001,0.9991536157018", 0) == 0);
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("run: xy-scaling reports the critical exponent as JSON") {
    const auto r = invoke({"xy-scaling", "--lambda", "1", "--gamma", "1"});
    REQUIRE(r.status == 0);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["exponent"].get<double>() == doctest::Approx(2.0).epsilon(0.025));
    for (const char* key : {"amplitude", "window", "r_squared", "n_points", "runtime_seconds"})
        CHECK(report.contains(key));
    CHECK(report["window"][0].get<double>() == 1001);
    CHECK(report["window"][1].get<double>() == 100001);

    const auto csv = invoke({"xy-scaling", "--format", "csv"});
    REQUIRE(csv.status == 0);
    CHECK(lines(csv.out).front() == "n_sites,s_lambda,status");
    CHECK(lines(csv.out).size() == 6);
}

TEST_CASE("run: grids are byte-identical for any worker count") {
    const std::vector<std::string> base{"xy-grid", "--n-sites", "2001", "--gamma-points", "21", "--lambda-points", "21"};
    auto with_workers = [&](const std::string& w) {
        auto args = base;
        args.insert(args.end(), {"--workers", w});
        return invoke(args);
    };
    const auto one = with_workers("1");
    REQUIRE(one.status == 0);
    CHECK(lines(one.out).size() == 1 + 21 * 21);
    CHECK(lines(one.out).front() == "gamma,lambda,overlap,status");
    for (const char* w : {"4", "8"})
        CHECK(with_workers(w).out == one.out);
}

TEST_CASE("run: config file and flags combine") {
    TempFile f("n_sites = 101\ngamma = 0.5\n");
    const auto r = invoke({"xy-overlap", "--config", f.path.string(), "--n-sites", "3"});
    REQUIRE(r.status == 0);
    CHECK(lines(r.out)[1].rfind("0.5,0.5,3,", 0) == 0);
}

TEST_CASE("run: output file") {
    const fs::path path = fs::temp_directory_path() / "gsfid_test_echo.csv";
    const auto r = invoke({"loschmidt", "--n-sites", "51", "--t-points", "11", "--output", path.string()});
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,echo");
    fs::remove(path);
}

TEST_CASE("run: reproduce rounds even sizes up and keeps error cells") {
    const auto r = invoke({"reproduce", "fig2a", "--n-sites", "2000", "--delta", "1e-6"});
    REQUIRE(r.status == 0);
    CHECK(r.err.find("2001") != std::string::npos);
    const auto rows = lines(r.out);
    CHECK(rows.size() == 1 + 61 * 61);

    const auto b = invoke({"reproduce", "fig2b", "--n-sites", "101"});
    REQUIRE(b.status == 0);
    // S_lambda is singular on the XX line for lambda = cos x_k; such cells
    // carry an error status instead of disappearing.
    CHECK(lines(b.out).size() == 1 + 61 * 61);
}

TEST_CASE("run: dicke commands") {
    const auto r = invoke({"dicke-exponent"});
    REQUIRE(r.status == 0);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(std::abs(report["exponent"].get<double>() - 0.125) <= 0.01);
    CHECK(report["critical_coupling"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));

    const auto grid = invoke({"dicke-overlap", "--lambda-min", "0.4", "--lambda-max", "0.6", "--lambda-points", "5"});
    REQUIRE(grid.status == 0);
    const auto rows = lines(grid.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[1].find(",ok") != std::string::npos);
    CHECK(rows[5].find(",error: ") != std::string::npos);
}

TEST_CASE("run: verify passes") {
    const auto r = invoke({"verify"});
    CHECK(r.status == 0);
    CHECK(lines(r.out).size() == 7);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
