#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zetac/cli.hpp"

using zetac::CommandResult;
using zetac::run_cli;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string golden(const std::string& name) {
    return read_file(std::string(ZETAC_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("cli: decompose csv matches the pinned golden bytes") {
    const CommandResult r =
        run_cli({"decompose", "i*n", "--schedule", "list:2,3", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_payload == golden("decompose_i_n.csv"));
    CHECK(r.stderr_diagnostics.empty());
}

TEST_CASE("cli: decompose json matches the golden bytes") {
    const CommandResult r =
        run_cli({"decompose", "i*n", "--schedule", "list:2,3", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_payload == golden("decompose_i_n.json"));
}

TEST_CASE("cli: csv header row is byte-exact") {
    const CommandResult r =
        run_cli({"decompose", "n", "--schedule", "list:5", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_payload.rfind("n,re,im,g,phi\n", 0) == 0);
    CHECK(r.stdout_payload == "n,re,im,g,phi\n5,5,0,5,0\n");
}

TEST_CASE("cli: deterministic output for identical command lines") {
    const std::vector<std::string> args = {"decompose", "n*log(n)+i*n^2", "--schedule",
                                           "geometric:2:2:12", "--format", "csv"};
    const CommandResult a = run_cli(args);
    const CommandResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_payload == b.stdout_payload);

    const std::vector<std::string> jargs = {"compare", "n", "n^2", "--format", "json"};
    CHECK(run_cli(jargs).stdout_payload == run_cli(jargs).stdout_payload);
}

TEST_CASE("cli: compare relation tokens and exit codes") {
    const CommandResult dominated = run_cli({"compare", "n", "n^2", "--format", "csv"});
    CHECK(dominated.exit_code == 0);
    CHECK(dominated.stdout_payload.find("DOMINATED") != std::string::npos);

    const CommandResult theta = run_cli({"compare", "n", "n", "--format", "csv"});
    CHECK(theta.exit_code == 0);
    CHECK(theta.stdout_payload == golden("compare_n_n.csv"));

    // Undetermined is a truthful verdict, not a failure.
    const CommandResult undet = run_cli({"compare", "2*2^n", "2^n", "--format", "table"});
    CHECK(undet.exit_code == 0);
    CHECK(undet.stdout_payload.find("UNDETERMINED") != std::string::npos);
}

TEST_CASE("cli: transform success, refusal, and usage error") {
    const CommandResult ok =
        run_cli({"transform", "2*n+3", "--alpha", "2", "--beta", "3"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.stdout_payload == "n\n");

    const CommandResult identity = run_cli({"transform", "n"});
    CHECK(identity.exit_code == 0);
    CHECK(identity.stdout_payload == "n\n");

    const CommandResult refused = run_cli({"transform", "n+i*n"});
    CHECK(refused.exit_code == 1);
    CHECK(refused.stdout_payload.empty());
    CHECK(refused.stderr_diagnostics.find("n=2") != std::string::npos);

    // Leading-dash expressions go behind the "--" separator.
    const CommandResult negative = run_cli({"transform", "--", "-n"});
    CHECK(negative.exit_code == 1);
    CHECK(negative.stderr_diagnostics.find("negative") != std::string::npos);

    const CommandResult zero_alpha =
        run_cli({"transform", "n", "--alpha", "0"});
    CHECK(zero_alpha.exit_code == 2);
}

TEST_CASE("cli: eval prints re and im at one point") {
    const CommandResult r = run_cli({"eval", "i*n^2", "3", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_payload == "n,re,im\n3,0,9\n");
    CHECK(run_cli({"eval", "n", "1"}).exit_code == 2);
    CHECK(run_cli({"eval", "n", "x"}).exit_code == 2);
}

TEST_CASE("cli: classify output shape") {
    const CommandResult cubic = run_cli({"classify", "n^3"});
    CHECK(cubic.exit_code == 0);
    CHECK(cubic.stdout_payload.find("Polynomial") != std::string::npos);
    CHECK(cubic.stdout_payload.find("3") != std::string::npos);

    const CommandResult expo = run_cli({"classify", "2^n"});
    CHECK(expo.exit_code == 0);
    CHECK(expo.stdout_payload.rfind("Exponential", 0) == 0);

    const CommandResult mixed = run_cli({"classify", "n*log(n)+i*n^2", "--format", "csv"});
    CHECK(mixed.exit_code == 0);
    CHECK(mixed.stdout_payload.find("Polynomial") != std::string::npos);
    CHECK(mixed.stdout_payload.find("1.57") != std::string::npos);
}

TEST_CASE("cli: plot writes csv with the darg column") {
    const std::string out_path = "cli_test_plot_out.csv";
    std::remove(out_path.c_str());
    const CommandResult r =
        run_cli({"plot", "i*n", "--schedule", "list:2,4,8", "--out", out_path});
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_payload == "3\n");
    const std::string body = read_file(out_path);
    CHECK(body.rfind("n,re,im,g,phi,darg\n", 0) == 0);
    CHECK(body.find("\n4,0,4,4,1.5707963267948966,0\n") != std::string::npos);
    std::remove(out_path.c_str());

    CHECK(run_cli({"plot", "n", "--schedule", "list:2", "--out",
                   "/nonexistent-dir/x.csv"})
              .exit_code == 1);
}

TEST_CASE("cli: plot darg column tracks the phase steps") {
    const std::string out_path = "cli_test_plot_abstract.csv";
    const CommandResult r = run_cli({"plot", "n*log(n)+i*n^2", "--schedule",
                                     "geometric:2:2:12", "--out", out_path});
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_payload == "12\n");
    std::ifstream in(out_path);
    std::string line;
    std::getline(in, line);  // header
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        const std::size_t last_comma = line.rfind(',');
        const std::string darg = line.substr(last_comma + 1);
        if (row == 1) {
            CHECK(darg.empty());
        } else {
            // phi(4) == phi(2) exactly, so the first step is 0; later steps
            // climb strictly.
            const double v = std::stod(darg);
            CHECK(v >= 0.0);
            if (row >= 3) CHECK(v > 0.0);
        }
    }
    CHECK(row == 12);
    in.close();
    std::remove(out_path.c_str());

    const std::string flat_path = "cli_test_plot_flat.csv";
    const CommandResult flat =
        run_cli({"plot", "n", "--schedule", "list:2,4", "--out", flat_path});
    CHECK(flat.exit_code == 0);
    const std::string body = read_file(flat_path);
    CHECK(body.find("\n2,2,0,2,0,\n") != std::string::npos);
    CHECK(body.find("\n4,4,0,4,0,0\n") != std::string::npos);
    std::remove(flat_path.c_str());
}

TEST_CASE("cli: evaluation errors exit 1 with the failing n") {
    const CommandResult r =
        run_cli({"decompose", "n/(n-3)", "--schedule", "list:2,3,4", "--format", "csv"});
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_payload.empty());
    CHECK(r.stderr_diagnostics.find("n=3") != std::string::npos);
}

TEST_CASE("cli: overflow saturates to inf in csv, null in json") {
    const CommandResult csv =
        run_cli({"decompose", "2^n", "--schedule", "list:2000", "--format", "csv"});
    CHECK(csv.exit_code == 0);
    CHECK(csv.stdout_payload.find("inf") != std::string::npos);
    const CommandResult json =
        run_cli({"decompose", "2^n", "--schedule", "list:2000", "--format", "json"});
    CHECK(json.exit_code == 0);
    CHECK(json.stdout_payload.find("null") != std::string::npos);
    CHECK(json.stdout_payload.find("inf") == std::string::npos);
}

TEST_CASE("cli: realness tolerances widen the transform gate") {
    const CommandResult strict = run_cli({"transform", "n + i/n^3"});
    CHECK(strict.exit_code == 1);
    const CommandResult loose =
        run_cli({"transform", "n + i/n^3", "--tol-abs", "1"});
    CHECK(loose.exit_code == 0);
}

TEST_CASE("cli: classify phase flags rescue a drifting tail") {
    const CommandResult strict =
        run_cli({"classify", "n*log(n)+i*n^2", "--schedule", "geometric:2:2:8"});
    CHECK(strict.exit_code == 0);
    CHECK(strict.stdout_payload.find("undetermined") != std::string::npos);
    const CommandResult loose =
        run_cli({"classify", "n*log(n)+i*n^2", "--schedule", "geometric:2:2:8",
                 "--phase-tol", "1.0"});
    CHECK(loose.exit_code == 0);
    CHECK(loose.stdout_payload.find("undetermined") == std::string::npos);
    CHECK(run_cli({"classify", "n", "--phase-tol", "0"}).exit_code == 2);
}

TEST_CASE("cli: parse errors exit 1 with a span diagnostic") {
    const CommandResult r = run_cli({"decompose", "n*log(n"});
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_payload.empty());
    CHECK(r.stderr_diagnostics.find("unbalanced parenthesis") != std::string::npos);
    CHECK(r.stderr_diagnostics.find("n*log(n") != std::string::npos);
    CHECK(r.stderr_diagnostics.find('^') != std::string::npos);

    const CommandResult sched = run_cli({"decompose", "n", "--schedule", "list:10,5"});
    CHECK(sched.exit_code == 1);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"decompose"}).exit_code == 2);
    CHECK(run_cli({"decompose", "n", "--format", "xml"}).exit_code == 2);
    CHECK(run_cli({"decompose", "n", "--log-base", "1"}).exit_code == 2);
    CHECK(run_cli({"decompose", "n", "--schedule", "list:2,4", "--tail-window", "9"})
              .exit_code == 2);
    CHECK(run_cli({"compare", "n"}).exit_code == 2);
    CHECK(run_cli({"--bogus-flag"}).exit_code == 2);
}

TEST_CASE("cli: --help and --version succeed") {
    const CommandResult help = run_cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.stdout_payload.find("decompose") != std::string::npos);
    const CommandResult version = run_cli({"--version"});
    CHECK(version.exit_code == 0);
    CHECK(version.stdout_payload.find("zetac") != std::string::npos);
}

TEST_CASE("cli: ZETA_DEFAULT_SCHEDULE env var, beaten by --schedule") {
    setenv("ZETA_DEFAULT_SCHEDULE", "list:2,3", 1);
    const CommandResult from_env = run_cli({"decompose", "n", "--format", "csv"});
    CHECK(from_env.exit_code == 0);
    CHECK(from_env.stdout_payload == "n,re,im,g,phi\n2,2,0,2,0\n3,3,0,3,0\n");

    const CommandResult flag_wins =
        run_cli({"decompose", "n", "--schedule", "list:5", "--format", "csv"});
    CHECK(flag_wins.stdout_payload == "n,re,im,g,phi\n5,5,0,5,0\n");
    unsetenv("ZETA_DEFAULT_SCHEDULE");

    const CommandResult fallback = run_cli({"decompose", "n", "--format", "csv"});
    CHECK(fallback.stdout_payload.find("\n1099511627776,") != std::string::npos);
}

TEST_CASE("cli: log-base flag changes bare log only") {
    const CommandResult base2 =
        run_cli({"eval", "log(n)", "8", "--log-base", "2", "--format", "csv"});
    CHECK(base2.exit_code == 0);
    const std::size_t row = base2.stdout_payload.find("\n8,");
    REQUIRE(row != std::string::npos);
    const double re = std::stod(base2.stdout_payload.substr(row + 3));
    CHECK(re == doctest::Approx(3.0).epsilon(1e-12));
    const CommandResult ln =
        run_cli({"eval", "ln(n)", "8", "--log-base", "2", "--format", "csv"});
    CHECK(ln.stdout_payload.find("2.0794") != std::string::npos);
}

TEST_CASE("cli: fuzzed garbage never exits 0") {
    std::mt19937 rng(8675309);
    for (int trial = 0; trial < 200; ++trial) {
        std::string s;
        const std::size_t len = 1 + rng() % 24;
        for (std::size_t k = 0; k < len; ++k) s += static_cast<char>(rng() % 94 + 33);
        // Force something unparseable: a character outside the grammar.
        s += '$';
        const CommandResult r = run_cli({"eval", s, "5"});
        CHECK(r.exit_code != 0);
    }
}
