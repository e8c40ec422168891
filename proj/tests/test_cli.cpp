#include <doctest.h>

#include "dunkl/cli.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/verify.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace dunkl;
using nlohmann::json;

namespace {
struct Result {
    int code;
    std::string out;
    std::string err;
};
Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "dunkl-line");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}
std::filesystem::path temp_dir() {
    auto d = std::filesystem::temp_directory_path() / "dunkl_line_cli_test";
    std::filesystem::create_directories(d);
    return d;
}
std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("params") {
    const auto r = invoke({"params", "--alpha", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("d=2\n") != std::string::npos);
    CHECK(r.out.find("A=0.5\n") != std::string::npos);
    CHECK(r.out.find("b=0.5\n") != std::string::npos);
    CHECK(r.out.find("c=0.3183098862\n") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"check", "--condition", "eq45", "--rho", "pow:C=1,e=1.5"}).code == 2);
    CHECK(invoke({"check", "--condition", "eq45", "--rho", "pow:C=1,e=0.5"}).code == 0);
    CHECK(invoke({"params", "--alpha", "0", "--bogus"}).code == 1);
    CHECK(invoke({"params", "--alpha", "-2"}).code == 1);
    CHECK(invoke({"check", "--condition", "eq45", "--rho", "pow:C=1,e=oops"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("pointwise subcommands") {
    const auto a = invoke({"apply", "--f", "chi1", "--kernel", "bessel_riesz", "--beta", "1", "--gamma", "1", "--at", "0"});
    CHECK(a.code == 0);
    CHECK(a.out == "x,value\n0,0.693147180559946\n");
    const auto t = invoke({"translate", "--alpha", "0.5", "--f", "chi1", "--x", "-1.5", "--at", "1"});
    CHECK(t.out == "y,value\n1,0.234375\n");
    CHECK(invoke({"apply", "--f", "chi1", "--kernel", "fractional", "--at", "0"}).code == 1);
    CHECK(invoke({"norm", "--f", "chi1", "--kind", "lp", "--p", "2"}).code == 0);
    CHECK(invoke({"transform", "--f", "nosuch", "--at", "1"}).code == 1);
}

TEST_CASE("config parsing") {
    const auto c = cli::parse_config(json::parse(R"({"alpha": 0, "suite": "plancherel"})"));
    CHECK(c.suite == "plancherel");
    CHECK(c.grid.points_per_octave == 8);
    CHECK(c.quad.rel_tol == 1e-7);
    CHECK(c.suite_params.at("alpha") == 0);
    CHECK_THROWS_WITH_AS(cli::parse_config(json::parse(R"({"suite": "plancherel", "grid": {"ppo": 3}})")),
                         doctest::Contains("grid.ppo"), DomainError);
    CHECK_THROWS_AS(cli::parse_config(json::parse(R"({"alpha": 0})")), DomainError);
    CHECK_THROWS_AS(cli::parse_config(json::parse(R"({"suite": "nope"})")), DomainError);
    const auto s = cli::parse_config(
        json::parse(R"({"suite": "maximal_strong", "sweep": {"alpha": [0, 0.5, 1], "p": [2, 4]}})"));
    const auto runs = cli::expand_sweep(s);
    CHECK(runs.size() == 6);
    CHECK(runs[0].at("alpha") == 0);
    CHECK(runs[5].at("p") == 4);
}

TEST_CASE("bad growth function in a config names the token") {
    const auto dir = temp_dir();
    const auto cfg = dir / "bad.json";
    std::ofstream(cfg) << R"({"suite": "maximal_morrey", "phi": "pow:C=1,w=2"})";
    const auto r = invoke({"verify", "--config", cfg.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("'w'") != std::string::npos);
}

TEST_CASE("verify writes reports atomically and deterministically") {
    const auto dir = temp_dir();
    const auto cfg = dir / "cfg.json";
    std::ofstream(cfg) << R"({"suite": "kernel_norms", "alpha": 0, "output": {"format": "json"}})";
    const auto p1 = dir / "a.json";
    const auto p2 = dir / "b.json";
    CHECK(invoke({"verify", "--config", cfg.string(), "--out", p1.string()}).code == 0);
    CHECK(invoke({"verify", "--config", cfg.string(), "--out", p2.string()}).code == 0);
    CHECK(slurp(p1) == slurp(p2));
    const auto rep = report_from_json(slurp(p1));
    CHECK(rep.pass);
    CHECK(report_to_json(rep) == slurp(p1));
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        CHECK(e.path().string().find(".tmp.") == std::string::npos);
    }
    const auto csv = invoke({"verify", "--suite", "special_functions", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(report_from_csv(csv.out).rows.size() == 3);
}

TEST_CASE("failing suite exits 2") {
    const auto dir = temp_dir();
    const auto cfg = dir / "loose.json";
    std::ofstream(cfg) << R"({"suite": "translation", "alpha": 0.5, "functions": ["chi1"]})";
    CHECK(invoke({"verify", "--config", cfg.string()}).code == 2);
}

TEST_CASE("sweep") {
    const auto dir = temp_dir();
    const auto cfg = dir / "sweep.json";
    std::ofstream(cfg) << R"({"suite": "kernel_norms", "sweep": {"alpha": [0, 1], "beta": [1, 1.5]}})";
    const auto r = invoke({"sweep", "--config", cfg.string(), "--out", (dir / "sw.json").string()});
    // alpha = 1, beta = 1 violates the t-window, so that run errors
    CHECK(r.code == 2);
    CHECK(std::filesystem::exists(dir / "sw_3.json"));
    CHECK(r.out.find("2,\"{\"\"alpha\"\":1,\"\"beta\"\":1}\",error,") != std::string::npos);
    CHECK(r.out.rfind("run,params,pass,empirical_sup\n", 0) == 0);
    std::ofstream(cfg) << R"({"suite": "kernel_norms", "sweep": {"beta": [1, 1.5]}})";
    CHECK(invoke({"sweep", "--config", cfg.string()}).code == 0);
}
