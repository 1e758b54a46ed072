#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("swarmtrack_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

Result cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const auto dir = fs::temp_directory_path() / "swarmtrack_cli_io";
    fs::create_directories(dir);
    const auto out = dir / ("out" + std::to_string(counter) + ".txt");
    const auto err = dir / ("err" + std::to_string(counter++) + ".txt");
    const std::string cmd = env + " " SWARMTRACK_CLI " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

TEST(Cli, PlanRows) {
    auto r = cli("plan --area 1000 --r 2 --R 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1000,2,4,12.566,50.265,54,1.47,Case3\n");
    r = cli("plan --area 4 --r 2 --R 4");
    EXPECT_EQ(r.out, "4,2,4,12.566,50.265,1,0.32,Case1\n");
    r = cli("plan --area 1000 --r 7 --R 9");
    EXPECT_EQ(r.out, "1000,7,9,153.938,254.469,20,0.32,Case1\n");
    r = cli("plan --l 50 --b 20 --r 5 --R 7");
    EXPECT_EQ(r.out, "1000,5,7,78.540,153.938,28,0.45,Case1\n");
}

TEST(Cli, PlanUsageErrors) {
    EXPECT_EQ(cli("plan --area 1000 --r 4 --R 2").code, 2);
    EXPECT_EQ(cli("plan --area 1000 --R 2").code, 2);
    EXPECT_EQ(cli("plan --area 1000 --l 3 --b 4 --r 1 --R 2").code, 2);
    EXPECT_EQ(cli("plan --area abc --r 1 --R 2").code, 2);
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
}

TEST(Cli, TableSelfCheck) {
    auto r = cli("table");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("area,r,R,primary_area,secondary_area,n,k,case\n", 0), 0u);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 18);

    const auto dir = scratch("table");
    std::string doctored = r.out;
    const auto pos = doctored.find("50,2,4,12.566,50.265,4,0.99,Case3");
    ASSERT_NE(pos, std::string::npos);
    doctored.replace(pos, 33, "50,2,4,12.566,50.265,4,0.90,Case3");
    std::ofstream(dir / "expect.csv") << doctored;
    r = cli("table --expect " + (dir / "expect.csv").string());
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("row 5"), std::string::npos);
    EXPECT_EQ(cli("table --expect /nonexistent.csv").code, 4);
}

TEST(Cli, SweepArea) {
    const auto dir = scratch("sweep_area");
    const auto r = cli("sweep --mode area --r 2 --R 4 --values 4,10,20,40,50,80,90,160,210,250 --out " +
                       (dir / "a.csv").string() + " --svg " + (dir / "a.svg").string());
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = slurp(dir / "a.csv");
    EXPECT_EQ(csv.rfind("x,n,k,case\n4,1,0.318310,Case1\n10,1,0.795775,Case3\n", 0), 0u);
    EXPECT_NE(slurp(dir / "a.svg").find("</svg>"), std::string::npos);
}

TEST(Cli, SweepErrors) {
    const auto dir = scratch("sweep_err");
    EXPECT_EQ(cli("sweep --mode area --from 10 --to 5 --out " + (dir / "x.csv").string()).code, 2);
    EXPECT_EQ(cli("sweep --mode area --out " + (dir / "x.csv").string()).code, 2);
    EXPECT_EQ(cli("sweep --mode volume --values 1 --out " + (dir / "x.csv").string()).code, 2);
    EXPECT_EQ(cli("sweep --mode area --values 10 --out /nonexistent-dir/x.csv").code, 4);
    EXPECT_FALSE(fs::exists(dir / "x.csv"));
}

TEST(Cli, SimulateCase4ExitsThreeWithoutOutputs) {
    const auto dir = scratch("sim4");
    const auto r = cli("simulate --config " SWARMTRACK_TEST_DATA "/case4.ini --out " + (dir / "out").string());
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("tracking will not be possible"), std::string::npos);
    EXPECT_FALSE(fs::exists(dir / "out"));
}

TEST(Cli, SimulateBadConfig) {
    const auto dir = scratch("simbad");
    std::ofstream(dir / "bad.ini") << "[scenario]\nspeed = 3\n";
    EXPECT_EQ(cli("simulate --config " + (dir / "bad.ini").string() + " --out " + (dir / "o").string()).code, 2);
    EXPECT_EQ(cli("simulate --config " + (dir / "missing.ini").string() + " --out " + (dir / "o").string()).code, 4);
    EXPECT_EQ(cli("simulate --config " SWARMTRACK_TEST_DATA "/case1.ini --out /proc/forbidden").code, 4);
}

TEST(Cli, SimulateSeedPrecedence) {
    const auto dir = scratch("seed");
    const std::string cfg = "--config " SWARMTRACK_TEST_DATA "/case3.ini ";
    auto run = [&](const std::string& name, const std::string& extra, const std::string& env) {
        const auto r = cli("simulate " + cfg + extra + " --out " + (dir / name).string(), env);
        EXPECT_EQ(r.code, 0) << r.err;
        return slurp(dir / name / "events.csv");
    };
    const auto file_seed = run("file", "", "");
    const auto file_seed_again = run("file2", "", "");
    const auto env_seed = run("env", "", "SWARMTRACK_SEED=99");
    const auto flag_seed = run("flag", "--seed 99", "");
    const auto flag_over_env = run("both", "--seed 99", "SWARMTRACK_SEED=5");
    EXPECT_EQ(file_seed, file_seed_again);
    EXPECT_NE(file_seed, env_seed);
    EXPECT_EQ(env_seed, flag_seed);
    EXPECT_EQ(flag_seed, flag_over_env);
    EXPECT_EQ(cli("simulate " + cfg + "--out " + (dir / "x").string(), "SWARMTRACK_SEED=abc").code, 2);
}

TEST(Cli, SimulateSummaryLine) {
    const auto dir = scratch("summary");
    const auto r = cli("simulate --config " SWARMTRACK_TEST_DATA "/case1.ini --out " + (dir / "o").string());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("mean_continuity=1.000000"), std::string::npos);
    EXPECT_NE(r.out.find("total_handoffs="), std::string::npos);
    EXPECT_NE(r.out.find("missed=0"), std::string::npos);
    const auto events = slurp(dir / "o" / "events.csv");
    EXPECT_NE(events.find(",SPAWN,"), std::string::npos);
    EXPECT_NE(events.find(",CLAIM,"), std::string::npos);
    EXPECT_NE(events.find(",HANDOFF,"), std::string::npos);
    EXPECT_NE(events.find(",EXIT,"), std::string::npos);
}

}  // namespace
