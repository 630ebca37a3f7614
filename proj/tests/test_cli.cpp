// End-to-end checks of the command line tool.  Each case launches the real
// binary (path injected by the build) and inspects exit code, stdout, stderr
// and output files.
#include <sys/wait.h>

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ctmrng/table.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "ctmrng_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path scratch_path(const std::string& stem) {
    static int counter = 0;
    return work_dir() / (stem + "_" + std::to_string(counter++));
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const fs::path out = scratch_path("stdout");
    const fs::path err = scratch_path("stderr");
    const std::string cmd = std::string("\"") + CTMRNG_CLI_PATH + "\" " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    if (raw != -1 && WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    REQUIRE(end == s.c_str() + s.size());
    return v;
}

ctmrng::ResultTable parse_table(const std::string& text) {
    std::istringstream in(text);
    return ctmrng::read_csv(in);
}

std::vector<double> decode_f64_le(const std::string& bytes) {
    REQUIRE(bytes.size() % 8 == 0);
    std::vector<double> values(bytes.size() / 8);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::uint64_t u = 0;
        for (int b = 7; b >= 0; --b)
            u = (u << 8) | static_cast<unsigned char>(bytes[8 * i + static_cast<std::size_t>(b)]);
        std::memcpy(&values[i], &u, sizeof(double));
    }
    return values;
}

}  // namespace

TEST_CASE("gen streams csv values inside the state range") {
    const RunResult r = run_cli("gen --iters 1000");
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 1000);
    for (const std::string& line : lines) {
        const double v = parse_double(line);
        CHECK(v >= -1.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("gen with zero iterates writes nothing and succeeds") {
    const RunResult r = run_cli("gen --iters 0");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("csv and raw-f64 carry bitwise identical streams") {
    const fs::path raw_path = scratch_path("stream_f64");
    const RunResult csv = run_cli("gen --iters 100");
    const RunResult raw = run_cli("gen --iters 100 --format raw-f64 --output " + raw_path.string());
    REQUIRE(csv.code == 0);
    REQUIRE(raw.code == 0);

    const std::string bytes = slurp(raw_path);
    CHECK(bytes.size() == 800);
    const std::vector<double> binary = decode_f64_le(bytes);
    const std::vector<std::string> lines = lines_of(csv.out);
    REQUIRE(lines.size() == binary.size());
    for (std::size_t i = 0; i < binary.size(); ++i) {
        const double reparsed = parse_double(lines[i]);
        CHECK(std::memcmp(&reparsed, &binary[i], sizeof(double)) == 0);
    }
}

TEST_CASE("fixed32 saturates at the interval endpoints") {
    SUBCASE("state pinned at -1 encodes as zero") {
        const fs::path path = scratch_path("fixed32_low");
        const RunResult r = run_cli(
            "gen --eps1 0 --x0=-1,-1,-1,-1 --transient 0 --iters 3 --format fixed32 --output " +
            path.string());
        REQUIRE(r.code == 0);
        const std::string bytes = slurp(path);
        REQUIRE(bytes.size() == 12);
        for (char b : bytes) CHECK(static_cast<unsigned char>(b) == 0x00);
    }
    SUBCASE("state at +1 encodes as the top code") {
        // From x0 = 0 the decoupled map hits exactly 1 after one step.
        const fs::path path = scratch_path("fixed32_high");
        const RunResult r = run_cli(
            "gen --eps1 0 --x0=0,0,0,0 --transient 0 --iters 1 --format fixed32 --output " +
            path.string());
        REQUIRE(r.code == 0);
        const std::string bytes = slurp(path);
        REQUIRE(bytes.size() == 4);
        for (char b : bytes) CHECK(static_cast<unsigned char>(b) == 0xff);
    }
}

TEST_CASE("sampled gen emits the requested number of values") {
    const RunResult r = run_cli("gen --sample threshold --threshold 0.6 --iters 50");
    CHECK(r.code == 0);
    CHECK(lines_of(r.out).size() == 50);
}

TEST_CASE("sampled gen stops at --max-steps") {
    const RunResult r =
        run_cli("gen --sample threshold --threshold 0.6 --iters 1000000 --max-steps 500");
    CHECK(r.code == 0);
    const std::size_t n = lines_of(r.out).size();
    CHECK(n >= 1);
    CHECK(n <= 500);
}

TEST_CASE("mixed sampling emits from the configured bands") {
    const RunResult r = run_cli("gen --sample mixed --thresholds 0.2,0.5,0.8 --iters 30");
    CHECK(r.code == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 30);
    for (const std::string& line : lines) {
        const double v = parse_double(line);
        CHECK(v >= -1.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("exit code 2 on parse and validation failures") {
    CHECK(run_cli("gen --bogus-flag").code == 2);
    CHECK(run_cli("nonsense").code == 2);
    CHECK(run_cli("").code == 2);                       // a subcommand is required
    CHECK(run_cli("gen --p 3 --iters 1").code == 2);    // p != 4 needs --x0
    CHECK(run_cli("gen --x0 0.5 --iters 1").code == 2); // wrong x0 arity
    CHECK(run_cli("gen --sample threshold --control 9 --iters 1").code == 2);
    CHECK(run_cli("corr --pair 2,1 --iters 10").code == 2);
}

TEST_CASE("help succeeds") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("gen --help").code == 0);
}

TEST_CASE("exit code 3 when the box budget is exceeded") {
    CHECK(run_cli("density --disc 60000000 --iters 10").code == 3);
}

TEST_CASE("exit code 4 when the output path cannot be opened") {
    CHECK(run_cli("gen --iters 1 --output /nonexistent_ctmrng_dir/x").code == 4);
}

TEST_CASE("invalid flags are rejected before the output file is created") {
    const fs::path path = scratch_path("should_not_exist");
    const RunResult r = run_cli("gen --sample threshold --control 9 --iters 1 --output " +
                                path.string());
    CHECK(r.code == 2);
    CHECK(!fs::exists(path));
}

TEST_CASE("density subcommand writes a checkpointed table") {
    const fs::path path = scratch_path("density");
    const RunResult r = run_cli(
        "density --iters-list 1000,2000 --disc-list 4,8 --transient 100 --output " +
        path.string());
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("# density") != std::string::npos);
    CHECK(r.err.find("# wall_seconds") != std::string::npos);

    const ctmrng::ResultTable t = parse_table(slurp(path));
    CHECK(t.columns == std::vector<std::string>{"n_iter", "n_disc", "e1", "e2_sq"});
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0][0] == 1000.0);
    CHECK(t.rows[0][1] == 4.0);
    CHECK(t.rows[3][0] == 2000.0);
    CHECK(t.rows[3][1] == 8.0);
    for (const auto& row : t.rows) {
        CHECK(row[2] >= 0.0);
        CHECK(row[2] <= 2.0);
    }
}

TEST_CASE("corr subcommand: one pair or all pairs") {
    const RunResult one = run_cli("corr --pair 0,1 --disc 4 --iters 2000");
    REQUIRE(one.code == 0);
    const ctmrng::ResultTable t1 = parse_table(one.out);
    REQUIRE(t1.rows.size() == 1);
    CHECK(t1.rows[0][2] == 0.0);
    CHECK(t1.rows[0][3] == 1.0);

    const RunResult all = run_cli("corr --disc 3 --iters 500");
    REQUIRE(all.code == 0);
    CHECK(parse_table(all.out).rows.size() == 6);
}

TEST_CASE("autocorr subcommand: threshold and mixed rules") {
    const RunResult thr = run_cli("autocorr --threshold 0.6 --iters 20000 --disc 4");
    REQUIRE(thr.code == 0);
    const ctmrng::ResultTable t = parse_table(thr.out);
    CHECK(t.columns == std::vector<std::string>{"n_iter", "nsampl_iter", "n_disc", "eac1"});
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][1] > 0.15 * 20000);  // selection rate (1-T)/2 = 0.2
    CHECK(t.rows[0][1] < 0.25 * 20000);

    const RunResult mix = run_cli("autocorr --mixed --thresholds 0.2,0.5,0.8 --iters 10000 --disc 4");
    REQUIRE(mix.code == 0);
    const ctmrng::ResultTable m = parse_table(mix.out);
    REQUIRE(m.rows.size() == 1);
    CHECK(m.rows[0][1] > 0.3 * 10000);  // selection rate (1-T1)/2 = 0.4
    CHECK(m.rows[0][1] < 0.5 * 10000);
}

TEST_CASE("seedscan subcommand reports per-seed rows and a summary") {
    const RunResult r = run_cli("seedscan --seed-count 5 --iters 2000 --disc 10 --threads 2");
    REQUIRE(r.code == 0);
    const ctmrng::ResultTable t = parse_table(r.out);
    CHECK(t.columns == std::vector<std::string>{"k", "e1", "e2_sq"});
    REQUIRE(t.rows.size() == 5);
    for (std::size_t k = 0; k < t.rows.size(); ++k)
        CHECK(t.rows[k][0] == static_cast<double>(k + 1));
    CHECK(r.err.find("# e1 min") != std::string::npos);
    CHECK(r.err.find("# e1 hist") != std::string::npos);
}

TEST_CASE("cycle subcommand resolves an exact uncoupled orbit") {
    const RunResult r = run_cli("cycle --p 1 --eps1 0 --x0 0");
    REQUIRE(r.code == 0);
    const ctmrng::ResultTable t = parse_table(r.out);
    CHECK(t.columns == std::vector<std::string>{"found", "tail", "cycle", "steps"});
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][0] == 1.0);
    CHECK(t.rows[0][1] == 2.0);
    CHECK(t.rows[0][2] == 1.0);
}

TEST_CASE("bench subcommand reports throughput") {
    const RunResult r = run_cli("bench --steps 10000 --warmup 100");
    REQUIRE(r.code == 0);
    const ctmrng::ResultTable t = parse_table(r.out);
    CHECK(t.columns ==
          std::vector<std::string>{"steps", "seconds", "steps_per_sec", "numbers_per_sec"});
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][0] == 10000.0);
    CHECK(t.rows[0][2] > 0.0);
}
