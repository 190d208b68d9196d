#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

// CLI integration: run the real binary end to end. SUPEROSC_CLI points at
// the built executable (set by CMake).

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* p = std::getenv("SUPEROSC_CLI");
    REQUIRE_MESSAGE(p != nullptr, "SUPEROSC_CLI not set");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("superosc_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("synth writes wavefunction JSON and samples CSV") {
    TempDir tmp;
    RunResult r = run("synth --n 5 --dx 0.1 --pmax pi --alt --out " + tmp.file("wf.json") +
                      " --samples-csv " + tmp.file("wf.csv") + " --samples-per-gap 16");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("synthesized N=5") != std::string::npos);

    nlohmann::json doc = nlohmann::json::parse(slurp(tmp.file("wf.json")));
    CHECK(doc.at("format") == "superosc-wavefunction");
    CHECK(doc.at("precision_bits").get<long>() == 131);  // estimate(5, 0.05) + 32 guard
    CHECK(doc.at("coeffs").size() == 5);

    const std::string csv = slurp(tmp.file("wf.csv"));
    CHECK(csv.rfind("x,re_psi,im_psi\n", 0) == 0);
}

TEST_CASE("byte-identical outputs for identical configs") {
    TempDir tmp;
    RunResult r1 = run("synth --n 4 --dx 0.2 --alt --out " + tmp.file("a.json") +
                       " --samples-csv " + tmp.file("a.csv") + " --samples-per-gap 8");
    RunResult r2 = run("synth --n 4 --dx 0.2 --alt --out " + tmp.file("b.json") +
                       " --samples-csv " + tmp.file("b.csv") + " --samples-per-gap 8");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));
    CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));

    RunResult s1 = run("sweep-dx --n 2 --grid 0.2,0.1,0.05,0.025 --out-csv " + tmp.file("s1.csv"));
    RunResult s2 = run("sweep-dx --n 2 --grid 0.2,0.1,0.05,0.025 --out-csv " + tmp.file("s2.csv"));
    CHECK(s1.exit_code == 0);
    CHECK(s2.exit_code == 0);
    CHECK(slurp(tmp.file("s1.csv")) == slurp(tmp.file("s2.csv")));
}

TEST_CASE("synth JSON reloads through slit with exact amplitudes") {
    TempDir tmp;
    run("synth --n 4 --dx 0.2 --alt --out " + tmp.file("wf.json"));
    nlohmann::json before = nlohmann::json::parse(slurp(tmp.file("wf.json")));

    RunResult r = run("slit --from-wavefunction " + tmp.file("wf.json") +
                      " --window 0,0.6 --nquad 12 --density-points 33 --out-csv " +
                      tmp.file("slit.csv") + " --out-json " + tmp.file("slit.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("captured") != std::string::npos);

    nlohmann::json sj = nlohmann::json::parse(slurp(tmp.file("slit.json")));
    CHECK(sj.at("format") == "superosc-slit-report");
    CHECK(sj.contains("acceleration"));
    const std::string csv = slurp(tmp.file("slit.csv"));
    CHECK(csv.rfind("p,density\n", 0) == 0);

    // the document on disk is unchanged by the read (decimal fidelity)
    nlohmann::json after = nlohmann::json::parse(slurp(tmp.file("wf.json")));
    CHECK(before == after);
}

TEST_CASE("config file supplies defaults and flags override") {
    TempDir tmp;
    {
        std::ofstream f(tmp.file("cfg.json"));
        f << R"({"n": 3, "dx": "0.25", "alt": true, "out": ")" << tmp.file("fromcfg.json")
          << R"("})";
    }
    RunResult r = run("--config " + tmp.file("cfg.json") + " synth");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("synthesized N=3") != std::string::npos);
    CHECK(fs::exists(tmp.file("fromcfg.json")));

    // flag overrides the config's n
    RunResult r2 = run("--config " + tmp.file("cfg.json") + " synth --n 4 --out " +
                       tmp.file("n4.json"));
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("synthesized N=4") != std::string::npos);
}

TEST_CASE("verify reports per-property lines and exits zero") {
    RunResult r = run("verify --n 4 --dx 0.1 --trials 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[pass] interpolation exactness") != std::string::npos);
    CHECK(r.out.find("[pass] parseval agreement") != std::string::npos);
    CHECK(r.out.find("[pass] orthogonality") != std::string::npos);
    CHECK(r.out.find("[pass] norm minimality") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("invalid configurations exit nonzero with a message") {
    TempDir tmp;
    RunResult r1 = run("synth --n 3 --dx 0.1");  // no amplitude source
    CHECK(r1.exit_code == 2);
    CHECK(r1.out.find("error:") != std::string::npos);

    RunResult r2 = run("slit --from-wavefunction " + tmp.file("missing.json") + " --window 0,1");
    CHECK(r2.exit_code == 2);

    RunResult r3 = run("sweep-dx --n 2 --grid 0.2,0.1");  // too few points
    CHECK(r3.exit_code == 2);

    RunResult r4 = run("definitely-not-a-command");
    CHECK(r4.exit_code != 0);
}

TEST_CASE("environment variable sets the default precision") {
    TempDir tmp;
    const std::string cmd = "SUPEROSC_PRECISION_BITS=224 " + cli_path() +
                            " synth --n 2 --dx 0.5 --alt --out " + tmp.file("env.json") +
                            " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    nlohmann::json doc = nlohmann::json::parse(slurp(tmp.file("env.json")));
    CHECK(doc.at("precision_bits").get<long>() == 224);
}

}  // TEST_SUITE cli
