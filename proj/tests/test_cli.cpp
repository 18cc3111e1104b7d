// Exercises the installed binary end to end through a shell.  The build
// exports DOPPLERKEY_CLI (binary path) and DOPPLERKEY_TMP (scratch dir).

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* p = std::getenv("DOPPLERKEY_CLI");
    REQUIRE(p != nullptr);
    return p;
}

fs::path tmp_root() {
    const char* p = std::getenv("DOPPLERKEY_TMP");
    REQUIRE(p != nullptr);
    fs::create_directories(p);
    return p;
}

int run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        env_prefix + " \"" + cli_path() + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    REQUIRE(run("") == 2);
    REQUIRE(run("definitely-not-a-subcommand") == 2);
    REQUIRE(run("kdr --bogus-flag") == 2);
    REQUIRE(run("--help") == 0);
    REQUIRE(run("timing --help") == 0);
}

TEST_CASE("timing subcommand writes its files") {
    const fs::path out = tmp_root() / "timing_out";
    fs::remove_all(out);
    REQUIRE(run("timing --out " + out.string()) == 0);
    REQUIRE(fs::exists(out / "timing.csv"));
    REQUIRE(fs::exists(out / "timing.json"));
    const std::string csv = slurp(out / "timing.csv");
    REQUIRE(csv.rfind("distance_m,", 0) == 0);
    REQUIRE(csv.find("3944.6376052631") != std::string::npos);
}

TEST_CASE("same seed reproduces bytes, different seed does not") {
    const fs::path out1 = tmp_root() / "est_a";
    const fs::path out2 = tmp_root() / "est_b";
    const fs::path out3 = tmp_root() / "est_c";
    for (const auto& d : {out1, out2, out3}) fs::remove_all(d);
    REQUIRE(run("estimator --trials 2000 --seed 7 --threads 1 --out " + out1.string()) == 0);
    REQUIRE(run("estimator --trials 2000 --seed 7 --threads 4 --out " + out2.string()) == 0);
    REQUIRE(run("estimator --trials 2000 --seed 8 --out " + out3.string()) == 0);
    REQUIRE(slurp(out1 / "estimator_hist.csv") == slurp(out2 / "estimator_hist.csv"));
    REQUIRE(slurp(out1 / "estimator_hist.csv") != slurp(out3 / "estimator_hist.csv"));
}

TEST_CASE("kdr subcommand emits the full grid") {
    const fs::path out = tmp_root() / "kdr_out";
    fs::remove_all(out);
    REQUIRE(run("kdr --trials 2000 --out " + out.string()) == 0);
    const std::string csv = slurp(out / "kdr.csv");
    int lines = 0;
    for (char c : csv) lines += (c == '\n');
    REQUIRE(lines == 1 + 15);  // header + 5 gammas x 3 pilot counts
}

TEST_CASE("config problems exit with code 3") {
    const fs::path dir = tmp_root();
    const fs::path bad_key = dir / "bad_key.ini";
    std::ofstream(bad_key) << "[scenario]\nunknown_thing = 1\n";
    REQUIRE(run("timing --config " + bad_key.string()) == 3);

    const fs::path bad_val = dir / "bad_val.ini";
    std::ofstream(bad_val) << "[scenario]\npower = -5\n";
    REQUIRE(run("timing --config " + bad_val.string()) == 3);

    REQUIRE(run("timing --config " + (dir / "missing.ini").string()) == 3);
}

TEST_CASE("unwritable output exits with code 5") {
    const fs::path blocker = tmp_root() / "blocker";
    std::ofstream(blocker) << "a plain file\n";
    REQUIRE(run("timing --out " + (blocker / "sub").string()) == 5);
}

TEST_CASE("environment variable sets the default output directory") {
    const fs::path out = tmp_root() / "env_out";
    fs::remove_all(out);
    REQUIRE(run("timing", "DOPPLERKEY_OUTDIR=" + out.string()) == 0);
    REQUIRE(fs::exists(out / "timing.csv"));
}

TEST_CASE("a config file drives the outputs") {
    const fs::path dir = tmp_root();
    const fs::path cfg = dir / "alt.ini";
    std::ofstream(cfg) << "[scenario]\nmaster_seed = 31\ntrials = 3000\nn_durations = 3000\n";
    const fs::path out1 = tmp_root() / "cfg_a";
    const fs::path out2 = tmp_root() / "cfg_b";
    for (const auto& d : {out1, out2}) fs::remove_all(d);
    REQUIRE(run("npsds-pdf --config " + cfg.string() + " --out " + out1.string()) == 0);
    REQUIRE(run("npsds-pdf --seed 31 --trials 3000 --out " + out2.string()) == 0);
    REQUIRE(slurp(out1 / "npsds_pdf.csv") == slurp(out2 / "npsds_pdf.csv"));
}
