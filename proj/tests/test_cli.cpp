#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

RunResult run_cli(const std::string& args) {
    const fs::path dir = fs::temp_directory_path() / "cvbench_cli_io";
    fs::create_directories(dir);
    const fs::path out = dir / "stdout.txt";
    const fs::path err = dir / "stderr.txt";
    const std::string cmd = std::string(CVBENCH_CLI_PATH) + " " + args + " > " + out.string() +
                            " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

} // namespace

TEST_CASE("metrics emits the scalar map for |1>") {
    const RunResult r = run_cli("metrics \"fock{n=1,cutoff=80}\"");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["delta"].get<double>() - 0.21306) < 6e-3);
    CHECK(j["parity"].get<double>() == doctest::Approx(-1.0));
    CHECK(j["mean_photon"].get<double>() == doctest::Approx(1.0));
    CHECK(j["w_origin"].get<double>() == doctest::Approx(-0.3183098861837907));
}

TEST_CASE("match solves the odd cat") {
    const RunResult r = run_cli("match --family odd_cat --target-n 3.0");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["feasible"].get<bool>());
    CHECK(std::abs(j["parameter"].get<double>() - 1.7276298) < 1e-6);
}

TEST_CASE("exit codes distinguish failure classes") {
    CHECK(run_cli("state \"what{}\"").exit_code == 2);                      // parse
    CHECK(run_cli("match --family odd_cat --target-n 1.0").exit_code == 3); // infeasible
    CHECK(run_cli("metrics \"squeezed_fock{r_db=12.5,theta=0,n=1,cutoff=80}\"").exit_code ==
          4);                                                               // tail guard
    CHECK(run_cli("--not-a-flag").exit_code == 2);

    const RunResult parse = run_cli("state \"what{}\"");
    const json err = json::parse(parse.err);
    CHECK(err["error"]["type"] == "parse");
}

TEST_CASE("state export is parseable") {
    const RunResult r = run_cli("state \"coherent{re=0.5,cutoff=40}\"");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["cutoff"].get<int>() == 40);
    CHECK(j["amplitudes"].size() == 41);
    CHECK(std::abs(j["mean_photon"].get<double>() - 0.25) < 1e-10);
}

TEST_CASE("help lists the documented flags") {
    const RunResult r = run_cli("--help");
    REQUIRE(r.exit_code == 0);
    for (const char* flag :
         {"--cutoff", "--grid-points", "--window", "--threshold", "--targets", "--families",
          "--angles", "--eps-max", "--eps-steps", "--out", "--format", "--config"})
        CHECK(r.out.find(flag) != std::string::npos);
}

TEST_CASE("verify passes and writes consistency.csv") {
    const fs::path dir = fs::temp_directory_path() / "cvbench_cli_verify";
    fs::remove_all(dir);
    const RunResult r = run_cli("verify --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(fs::exists(dir / "consistency.csv"));
    CHECK(fs::exists(dir / "run.json"));
    fs::remove_all(dir);
}

TEST_CASE("config round trip reproduces identical sweep output") {
    const fs::path dir_a = fs::temp_directory_path() / "cvbench_cli_cfg_a";
    const fs::path dir_b = fs::temp_directory_path() / "cvbench_cli_cfg_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);

    const RunResult first =
        run_cli("sweep-scalar --targets 1.0,2.0 --families fock,odd_cat --out " +
                dir_a.string());
    REQUIRE(first.exit_code == 0);

    const RunResult second = run_cli("sweep-scalar --config " + (dir_a / "run.json").string() +
                                     " --out " + dir_b.string());
    REQUIRE(second.exit_code == 0);

    const std::string csv_a = slurp(dir_a / "scalar_sweep.csv");
    const std::string csv_b = slurp(dir_b / "scalar_sweep.csv");
    CHECK(!csv_a.empty());
    CHECK(csv_a == csv_b);
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
}

TEST_CASE("flags override config values") {
    const fs::path dir = fs::temp_directory_path() / "cvbench_cli_override";
    fs::remove_all(dir);
    fs::create_directories(dir);
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << "{\"cutoff\": 80, \"format\": \"json\"}\n";
    }
    const RunResult r = run_cli("state \"fock{n=1}\" --config " + (dir / "cfg.json").string() +
                                " --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("spec,", 0) == 0);  // csv output despite json in config
    fs::remove_all(dir);
}
