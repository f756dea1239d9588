// Drives the built pgap executable: flag parsing, exit codes, env overrides.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path work = [] {
    std::random_device rd;
    auto p = fs::temp_directory_path() / ("pgap_cli_" + std::to_string(rd()));
    fs::create_directories(p);
    return p;
}();

int pgap(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " '" + std::string(PGAP_CLI_PATH) + "' " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string p(const std::string& name)
{
    return "'" + (work / name).string() + "'";
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST(Cli, GenerateTrainGeometryIris)
{
    ASSERT_EQ(pgap("generate --out " + p("data.csv")), 0);
    EXPECT_EQ(pgap("train --data " + p("data.csv") + " --target A --seed 42 --max-epochs 1000 --trace " +
                   p("trace.csv") + " --out " + p("report.json") + " --memory " + p("mem.txt")),
              0);
    EXPECT_EQ(pgap("geometry --data " + p("data.csv") + " --target A --memory " + p("mem.txt") + " --out " +
                   p("geo.json")),
              0);
    EXPECT_EQ(pgap("iris --length 64 --flip-rate 0 --out " + p("scores.csv")), 0);
}

TEST(Cli, ExitCodes)
{
    ASSERT_EQ(pgap("generate --out " + p("codes.csv")), 0);
    EXPECT_EQ(pgap("train --data " + p("codes.csv") + " --max-epochs 1"), 4);
    EXPECT_EQ(pgap("train --data " + p("codes.csv") + " --target '#'"), 2);
    EXPECT_EQ(pgap("train --data " + p("absent.csv")), 3);
    EXPECT_EQ(pgap("train --data " + p("codes.csv") + " --target AB"), 2);
    EXPECT_EQ(pgap("train --data " + p("codes.csv") + " --max-epochs zero"), 2);
    EXPECT_EQ(pgap("iris --flip-rate 0.9"), 2);
    EXPECT_EQ(pgap("frobnicate"), 2);
    EXPECT_EQ(pgap(""), 2);
    EXPECT_EQ(pgap("--help"), 0);
}

TEST(Cli, EnvironmentOverrides)
{
    ASSERT_EQ(pgap("generate", "PGAP_OUT=" + p("env.csv") + " PGAP_INSTANCES=2"), 0);
    const auto text = slurp(work / "env.csv");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 52);
    // flags beat the environment
    ASSERT_EQ(pgap("generate --instances 1 --out " + p("env2.csv"), "PGAP_INSTANCES=2"), 0);
    const auto text2 = slurp(work / "env2.csv");
    EXPECT_EQ(std::count(text2.begin(), text2.end(), '\n'), 26);
}
