#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {
std::string g_bin;   // path to the frb-dyn executable
std::string g_cfg;   // path to the config directory

int run(const std::string& args) {
    int status = std::system((g_bin + " " + args).c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool exists(const std::string& path) { return std::ifstream(path).good(); }
}  // namespace

TEST_CASE("steady grid run writes the expected table") {
    std::string out = "/tmp/frb_cli_steady.csv";
    std::remove(out.c_str());
    CHECK(run("steady --config " + g_cfg + "/toy_steady.json --out " + out) == 0);
    std::string text = slurp(out);
    CHECK(text.rfind("i,chi,q_s,pbar_s,z_s,i_d,i_s,i_l,mbar\n", 0) == 0);
    // 3x3 grid plus the header line
    int lines = 0;
    for (char c : text) lines += (c == '\n');
    CHECK(lines == 10);
}

TEST_CASE("reruns are byte identical across worker counts") {
    std::string a = "/tmp/frb_cli_a.csv", b = "/tmp/frb_cli_b.csv";
    CHECK(run("steady --config " + g_cfg + "/toy_steady.json --out " + a) == 0);
    setenv("FRB_DYN_THREADS", "1", 1);
    CHECK(run("steady --config " + g_cfg + "/toy_steady.json --out " + b) == 0);
    unsetenv("FRB_DYN_THREADS");
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
}

TEST_CASE("config errors exit 2 and leave no output file") {
    std::string out = "/tmp/frb_cli_bad.csv";
    std::remove(out.c_str());
    CHECK(run("steady --config " + g_cfg + "/unknown_key.json --out " + out + " 2>/dev/null") == 2);
    CHECK(!exists(out));
    CHECK(run("steady --config " + g_cfg + "/malformed.json --out " + out + " 2>/dev/null") == 2);
    CHECK(!exists(out));
    CHECK(run("steady --config /nonexistent.json --out " + out + " 2>/dev/null") == 2);
    CHECK(!exists(out));
}

TEST_CASE("cycles: verified orbit exits 0, infeasible policy exits 3") {
    std::string out = "/tmp/frb_cli_cyc.csv";
    CHECK(run("cycles --config " + g_cfg + "/cycles_ok.json --out " + out + " 2>/dev/null") == 0);
    std::string text = slurp(out);
    CHECK(text.rfind("period,k,z,residual\n", 0) == 0);
    CHECK(text.find("\n2,1,") != std::string::npos);
    std::remove(out.c_str());
    CHECK(run("cycles --config " + g_cfg + "/cycles_none.json --out " + out + " 2>/dev/null") == 3);
    CHECK(!exists(out));
}

TEST_CASE("command-line overrides collapse the policy grid") {
    std::string out = "/tmp/frb_cli_ov.csv";
    CHECK(run("steady --config " + g_cfg + "/toy_steady.json --i 0.05 --chi 0.1 --out " + out) ==
          0);
    std::string text = slurp(out);
    int lines = 0;
    for (char c : text) lines += (c == '\n');
    CHECK(lines == 2);  // header plus the single overridden point
    CHECK(text.find("0.050000000000000003,0.1") != std::string::npos);  // %.17g round trip
}

TEST_CASE("json output carries metadata") {
    std::string out = "/tmp/frb_cli_meta.json";
    CHECK(run("steady --config " + g_cfg + "/toy_steady.json --format json --out " + out) == 0);
    std::string text = slurp(out);
    CHECK(text.find("\"version\": \"1.0.0\"") != std::string::npos);
    CHECK(text.find("\"config_hash\"") != std::string::npos);
    CHECK(text.find("\"rows\"") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <frb-dyn-path> <config-dir>\n");
        return 1;
    }
    g_bin = argv[1];
    g_cfg = argv[2];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
