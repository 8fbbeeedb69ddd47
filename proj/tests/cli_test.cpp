// Copyright 2026 The entmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entmeas/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "entmeas/qstate.hpp"

using namespace entmeas;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "entmeas");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, measure_werner) {
    const CliResult r = run({"measure", "--family", "werner", "--param", "0.75"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l[0], "C,E_F,E_N,E_sum,S,separable");
    EXPECT_EQ(l[1].back(), '0');
}

TEST(cli, measure_separable_werner) {
    const CliResult r = run({"measure", "--family", "werner", "--param", "0.4"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(lines(r.out)[1].substr(0, 6), "0,0,0,");
    EXPECT_EQ(lines(r.out)[1].back(), '1');
}

TEST(cli, measure_from_sample_file) {
    const auto path = std::filesystem::temp_directory_path() / "entmeas_cli_states.csv";
    ASSERT_EQ(run({"sample", "--seed", "3", "--count", "5", "--out", path.string()}).code, kExitOk);
    const CliResult r = run({"measure", "--input", path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(lines(r.out).size(), 6u);
    std::ifstream in(path);
    EXPECT_EQ(read_states_csv(in).size(), 5u);
    std::filesystem::remove(path);
}

TEST(cli, sample_to_stdout_deterministic) {
    const CliResult a = run({"sample", "--seed", "8", "--count", "3"});
    const CliResult b = run({"sample", "--seed", "8", "--count", "3"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(lines(a.out).size(), 3u);
}

TEST(cli, werner_table) {
    const CliResult r = run({"werner-table", "--from", "0.5", "--to", "1.0", "--step", "0.25"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 4u);
    EXPECT_EQ(l[0], "F,C,E_F,E_N,E_sum");
    EXPECT_EQ(l[3].substr(0, 2), "1,");
}

TEST(cli, selftest_passes) {
    const CliResult r = run({"selftest", "--samples", "50"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(cli, compare_writes_csvs_independent_of_threads) {
    const auto base = std::filesystem::temp_directory_path() / "entmeas_cli_compare";
    std::filesystem::remove_all(base);
    const CliResult a = run({"compare", "--seed", "5", "--pairs", "1500", "--out", (base / "a").string()});
    const CliResult b = run({"compare", "--seed", "5", "--pairs", "1500", "--threads", "2", "--out", (base / "b").string()});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    ASSERT_EQ(b.code, kExitOk) << b.err;
    EXPECT_EQ(a.out, b.out);
    for (const char *f : {"fig1.csv", "fig2.csv", "fig3.csv", "fig4.csv", "summary.csv"}) {
        const std::string x = slurp(base / "a" / f);
        EXPECT_FALSE(x.empty()) << f;
        EXPECT_EQ(x, slurp(base / "b" / f)) << f;
    }
    std::filesystem::remove_all(base);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"measure"}).code, kExitUsage);
    EXPECT_EQ(run({"measure", "--family", "werner"}).code, kExitUsage);
    EXPECT_EQ(run({"measure", "--family", "werner", "--param", "1.5"}).code, kExitUsage);
    EXPECT_EQ(run({"measure", "--family", "pure", "--param", "-0.1"}).code, kExitUsage);
    EXPECT_EQ(run({"measure", "--family", "ghz"}).code, kExitUsage);
    EXPECT_EQ(run({"compare", "--pairs", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"measure", "--input", "/nonexistent/states.csv"}).code, kExitUsage);
}

TEST(cli, malformed_state_file) {
    const auto path = std::filesystem::temp_directory_path() / "entmeas_cli_bad.csv";
    {
        std::ofstream f(path);
        f << "1,2,3\n";
    }
    const CliResult r = run({"measure", "--input", path.string()});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(cli, invalid_state_is_numerical_error) {
    const auto path = std::filesystem::temp_directory_path() / "entmeas_cli_nonpsd.csv";
    {
        std::ofstream f(path);
        // diag(2, -1, 0, 0): trace one, not positive semidefinite.
        f << "2,0";
        for (int k = 0; k < 8; ++k) f << ",0";
        f << ",-1,0";
        for (int k = 0; k < 20; ++k) f << ",0";
        f << '\n';
    }
    const CliResult r = run({"measure", "--input", path.string()});
    EXPECT_EQ(r.code, kExitNumerical) << r.err;
    std::filesystem::remove(path);
}
