#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "iho/io.hpp"

namespace {

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string(IHO_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string tmp_file(const char* name) {
    return std::string("/tmp/iho_cli_test_") + name + ".csv";
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("") == 2);                          // missing subcommand
    CHECK(run_cli("no-such-subcommand") == 2);        // unknown
    CHECK(run_cli("eval --grid 5:1:10") == 2);        // min >= max
    CHECK(run_cli("lct --matrix 1,0,0,2 --grid -8:8:256") == 2); // det != 1
    CHECK(run_cli("eval --parity sideways") == 2);    // bad enum
}

TEST_CASE("eval emits a parseable CSV and round-trips") {
    const std::string path = tmp_file("eval");
    CHECK(run_cli("-o " + path +
                  " eval --parity even --omega 1 --lambda 0+0i --grid "
                  "-5:5:101") == 0);

    std::ifstream in(path);
    const iho::io::Table t = iho::io::read_csv(in);
    REQUIRE(t.header.size() == 3);
    CHECK(t.header[0] == "x");
    CHECK(t.rows.size() == 101);

    // round-trip at 17 significant digits is bit identical
    std::stringstream ss;
    iho::io::write_csv(ss, t);
    const iho::io::Table t2 = iho::io::read_csv(ss);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(t.rows[i][j] == t2.rows[i][j]);
    std::remove(path.c_str());
}

TEST_CASE("json output carries meta and data") {
    const std::string path = tmp_file("json");
    CHECK(run_cli("-o " + path +
                  " --format json eval --parity odd --lambda 1+0.5i --grid "
                  "-2:2:11") == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string doc = ss.str();
    CHECK(doc.find("\"subcommand\"") != std::string::npos);
    CHECK(doc.find("\"eval\"") != std::string::npos);
    CHECK(doc.find("\"data\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("residual sweep over a lambda grid exits 0 under tolerance") {
    const std::string path = tmp_file("residual");
    CHECK(run_cli("-o " + path +
                  " residual --parity even --omega 1 --lambda-re-grid -2:2:3 "
                  "--lambda-im-grid -1:1:3 --x-grid -4:4:41 --step 1e-3") == 0);
    std::ifstream in(path);
    const iho::io::Table t = iho::io::read_csv(in);
    REQUIRE(t.header.size() == 3);
    CHECK(t.rows.size() == 9);
    for (const auto& row : t.rows) CHECK(row[2] <= 1e-4);
    std::remove(path.c_str());
}

TEST_CASE("group-check and unitarity succeed on well-behaved matrices") {
    CHECK(run_cli("group-check --matrix1 0.9,0.8,-0.5,0.666666666666666667 "
                  "--matrix2 1.1,-0.6,0.4,0.690909090909090909 "
                  "--grid -16:16:2049") == 0);
    CHECK(run_cli("unitarity --matrix 0,1,-1,0 --grid -16:16:2049") == 0);
}

TEST_CASE("spectrum-map places the peak at lambda/(2 omega)") {
    CHECK(run_cli("spectrum-map --omega 1 --lambda 2 --a-param 1") == 0);
}

TEST_CASE("rigged-check verdicts") {
    CHECK(run_cli("rigged-check --lambda 1 --epsilon 0.15 --parity even") == 0);
    CHECK(run_cli("rigged-check --lambda 0.5i --epsilon 0.15 --parity even") ==
          0); // Diverged is a successful verdict
}
