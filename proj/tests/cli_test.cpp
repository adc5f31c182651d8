#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mnesor/set_format.hpp"
#include "mnesor/shapes.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static const fs::path d = [] {
        auto p = fs::temp_directory_path() / ("mnesor-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path outp = work_dir() / ("stdout" + std::to_string(counter) + ".txt");
    const fs::path errp = work_dir() / ("stderr" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string("\"") + MNESOR_CLI_PATH + "\" " + args + " >" + outp.string() +
                            " 2>" + errp.string();
    const int rc = std::system(cmd.c_str());
    CliResult r;
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(outp);
    r.err = slurp(errp);
    return r;
}

fs::path palette_file() {
    static const fs::path p = [] {
        const fs::path path = work_dir() / "palette.json";
        spit(path, R"({
          "universe": ["red", "green", "blue"],
          "sets": {
            "WARM": {"type": "discrete", "grades": {"red": 0.9, "green": 0.3}},
            "COOL": {"type": "discrete", "grades": {"blue": 0.8, "green": 0.4}}
          }
        })");
        return path;
    }();
    return p;
}

fs::path education_file() {
    static const fs::path p = [] {
        const fs::path path = work_dir() / "education.json";
        spit(path,
             R"({"sets": {"HIGH": {"type": "shape", "kind": "ramp-up", "params": [10, 16],
                 "lo": 0, "hi": 30, "n": 61}}})");
        return path;
    }();
    return p;
}

struct CsvRow {
    double x;
    std::string name;
    double mu;
};

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::vector<CsvRow> rows;
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "x,name,mu");
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.rfind(',');
        REQUIRE(c1 != std::string::npos);
        REQUIRE(c2 != c1);
        rows.push_back({std::stod(line.substr(0, c1)), line.substr(c1 + 1, c2 - c1 - 1),
                        std::stod(line.substr(c2 + 1))});
    }
    return rows;
}

}  // namespace

TEST_CASE("usage errors exit with 64") {
    CHECK(run_cli("").status == 64);
    CHECK(run_cli("frobnicate").status == 64);
    CHECK(run_cli("check nosuch").status == 64);
    CHECK(run_cli("check discrete --cases 0").status == 64);
    CHECK(run_cli("eval -e A").status == 64);  // --env is required
    CHECK(run_cli("plot @oneminus --domain 0:1 --samples 1").status == 64);
    CHECK(run_cli("plot @oneminus --samples 10").status == 64);  // --domain is required
    CHECK(run_cli("plot @oneminus --domain 1:0 --samples 10").status == 64);
    CHECK(run_cli("simplify A B").status == 64);  // exactly one expression
}

TEST_CASE("eval emits reloadable set files") {
    const auto r = run_cli("eval --env " + palette_file().string() + " -e \"WARM | COOL\" -e \"~FULL\"");
    REQUIRE(r.status == 0);

    const mnesor::SetFile out = mnesor::parse_set_file(r.out);
    REQUIRE(out.universe.has_value());
    const auto& u = std::get<mnesor::DiscreteFuzzySet>(*out.find("WARM | COOL"));
    CHECK(mnesor::grade_of(u, "red").value() == 0.9);
    CHECK(mnesor::grade_of(u, "green").value() == 0.4);
    CHECK(mnesor::grade_of(u, "blue").value() == 0.8);
    const auto& none = std::get<mnesor::DiscreteFuzzySet>(*out.find("~FULL"));
    for (mnesor::Grade g : none.grades()) CHECK(g.is_zero());

    // byte-deterministic
    const auto again = run_cli("eval --env " + palette_file().string() + " -e \"WARM | COOL\" -e \"~FULL\"");
    CHECK(again.out == r.out);
}

TEST_CASE("eval failure paths exit with 2") {
    const auto unbound = run_cli("eval --env " + palette_file().string() + " -e X");
    CHECK(unbound.status == 2);
    CHECK(unbound.err.find("unbound variable X") != std::string::npos);

    CHECK(run_cli("eval --env " + palette_file().string() + " -e \"WARM *\"").status == 2);
    CHECK(run_cli("eval --env /nonexistent/sets.json -e A").status == 2);

    const fs::path bad = work_dir() / "bad.json";
    spit(bad, R"({"universe": ["a"], "sets": {"A": {"type": "discrete", "grades": {"a": 2}}}})");
    const auto r = run_cli("eval --env " + bad.string() + " -e A");
    CHECK(r.status == 2);
    CHECK(r.err.find("out of range") != std::string::npos);
}

TEST_CASE("check reports pass for the built-in instances") {
    const auto r = run_cli("check discrete --cases 120 --seed 42 --k 0.4 --tol 1e-9");
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["cases"] == 120);
    CHECK(doc["seed"] == 42);
    CHECK(doc["laws"].size() == 19);

    const auto g = run_cli("check grade --cases 120");
    REQUIRE(g.status == 0);
    const auto gdoc = nlohmann::json::parse(g.out);
    for (const auto& law : gdoc["laws"])
        if (law["id"] == "L19") CHECK(law["status"] == "checked");

    // the flag spelling works too
    CHECK(run_cli("check --instance sampled --cases 60").status == 0);
    CHECK(run_cli("check discrete --instance grade --cases 10").status == 64);  // conflicting names

    // byte-deterministic
    const auto r2 = run_cli("check discrete --cases 120 --seed 42 --k 0.4 --tol 1e-9");
    CHECK(r2.out == r.out);
}

TEST_CASE("check exits with 1 when a law fails") {
    // exact equality cannot survive the transcendental round trips
    const auto r = run_cli("check grade --cases 200 --tol 0");
    CHECK(r.status == 1);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["verdict"] == "fail");
    bool counterexample_seen = false;
    for (const auto& law : doc["laws"])
        if (law["failures"].get<int>() > 0) {
            CHECK_FALSE(law["counterexample"].is_null());
            counterexample_seen = true;
        }
    CHECK(counterexample_seen);
}

TEST_CASE("simplify prints the canonical form") {
    CHECK(run_cli("simplify \"~~(A | A)\"").out == "A\n");
    CHECK(run_cli("simplify \"(A*2)*0.5\"").out == "A\n");
    CHECK(run_cli("simplify \"A & (A | B)\"").out == "A\n");
    CHECK(run_cli("simplify -e \"~(A*2)\"").out == "(~A) * 0.5\n");

    const auto err = run_cli("simplify \"A *\"");
    CHECK(err.status == 2);
    CHECK(err.err.find("1:4") != std::string::npos);
}

TEST_CASE("plot reproduces the selectivity picture") {
    const auto r = run_cli("plot --env " + education_file().string() +
                           " --domain 0:30 --samples 61 HIGH \"HIGH * 0.5\"");
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2 * 61);

    const auto expect = mnesor::Shape::ramp_up(10, 16).sample(0, 30, 61);
    double prev_x = -1.0;
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        CHECK(rows[i].name == "HIGH");
        CHECK(rows[i + 1].name == "HIGH * 0.5");
        CHECK(rows[i].x == rows[i + 1].x);
        CHECK(rows[i].x >= prev_x);
        prev_x = rows[i].x;
        CHECK(rows[i + 1].mu <= rows[i].mu + 1e-12);  // scaled curve sits below
        CHECK(rows[i].mu == doctest::Approx(expect[i / 2].value()).epsilon(1e-8));
    }

    const auto again = run_cli("plot --env " + education_file().string() +
                               " --domain 0:30 --samples 61 HIGH \"HIGH * 0.5\"");
    CHECK(again.out == r.out);
}

TEST_CASE("plot pseudo-expressions cover the complement-vs-linear gap") {
    const auto r = run_cli("plot @ck:0.4 @oneminus --domain 0:1 --samples 101");
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2 * 101);
    double sup = 0.0;
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        CHECK(rows[i].name == "@ck:0.4");
        CHECK(rows[i + 1].name == "@oneminus");
        sup = std::max(sup, std::abs(rows[i].mu - rows[i + 1].mu));
    }
    CHECK(sup == doctest::Approx(0.0778).epsilon(0.02));

    CHECK(run_cli("plot @ck:0.4 --domain 0:2 --samples 11").status == 2);  // domain leaves [0,1]
    CHECK(run_cli("plot @bogus --domain 0:1 --samples 11").status == 2);
    CHECK(run_cli("plot --env " + palette_file().string() + " --domain 0:1 --samples 11 WARM").status == 2);

    // env grid must match the plot grid exactly
    CHECK(run_cli("plot --env " + education_file().string() + " --domain 0:30 --samples 62 HIGH").status == 2);
}
