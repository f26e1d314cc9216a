#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

// Fixture directory with the demo spec files; every binary invocation
// redirects its streams into files here.
struct CliFixture {
    std::filesystem::path dir;
    int runs = 0;

    CliFixture() {
        dir = std::filesystem::temp_directory_path() /
              ("fracdim_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        file("s.cfg", "schedule = recurrence k0=5\na1 = 1/2\na2 = 1/4\n");
        file("t.cfg", "schedule = recurrence k0=5\na1 = 1/4\na2 = 1/3\n");
        file("prod.cfg", "factor = s.cfg\nfactor = t.cfg\n");
        file("bad.cfg", "schedule = recurrence k0=5\na1 = 0\na2 = 1/4\n");
        file("tight.cfg", "schedule = recurrence k0=4\na1 = 1/2\na2 = 1/4\n");
        file("fixed.cfg", "schedule = explicit 5,10,30\na1 = 1/2\na2 = 1/4\n");
    }
    ~CliFixture() { std::filesystem::remove_all(dir); }

    std::string file(const std::string& name, const std::string& content) {
        const std::string full = (dir / name).string();
        std::ofstream out(full, std::ios::binary);
        out << content;
        return full;
    }

    std::string path(const std::string& name) const { return (dir / name).string(); }

    RunResult run(const std::string& args) {
        ++runs;
        const auto out_path = dir / ("stdout." + std::to_string(runs));
        const auto err_path = dir / ("stderr." + std::to_string(runs));
        const std::string cmd = std::string(FRACDIM_BIN) + " " + args + " >" +
                                out_path.string() + " 2>" + err_path.string();
        const int status = std::system(cmd.c_str());
        RunResult result;
        result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        result.out = slurp(out_path);
        result.err = slurp(err_path);
        return result;
    }
};

}  // namespace

TEST_CASE("cli density sweep") {
    CliFixture fix;
    const RunResult csv =
        fix.run("density --spec " + fix.path("s.cfg") + " --k-max 600");
    CHECK(csv.code == 0);
    CHECK(count_lines(csv.out) == 601);
    CHECK(csv.out.rfind("k,count,density_num,density_den,density_float\n", 0) == 0);
    CHECK(csv.out.find("\n600,173,173,600,0.288333333333\n") != std::string::npos);

    const RunResult to_file = fix.run("density --spec " + fix.path("s.cfg") +
                                      " --k-min 30 --k-max 30 --out " + fix.path("d.csv"));
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(fix.dir / "d.csv") ==
          "k,count,density_num,density_den,density_float\n30,8,4,15,0.266666666667\n");
}

TEST_CASE("cli density on a product writes covering exponents") {
    CliFixture fix;
    const RunResult csv =
        fix.run("density --product " + fix.path("prod.cfg") + " --k-max 120");
    CHECK(csv.code == 0);
    CHECK(count_lines(csv.out) == 121);
    CHECK(csv.out.rfind("k,exponent,quotient_num,quotient_den,quotient_float\n", 0) == 0);
    CHECK(csv.out.find("\n30,17,17,30,0.566666666667\n") != std::string::npos);
}

TEST_CASE("cli argument and input failures exit with 2") {
    CliFixture fix;
    CHECK(fix.run("density --spec " + fix.path("s.cfg")).code == 2);
    CHECK(fix.run("bogus").code == 2);
    CHECK(fix.run("").code == 2);
    CHECK(fix.run("--help").code == 0);
    CHECK(fix.run("density --spec " + fix.path("bad.cfg") + " --k-max 100").code == 2);
    CHECK(fix.run("density --spec " + fix.path("tight.cfg") + " --k-max 100").code == 2);
    CHECK(fix.run("density --spec " + fix.path("missing.cfg") + " --k-max 100").code == 2);
    CHECK(fix.run("density --spec " + fix.path("s.cfg") + " --product " +
                  fix.path("prod.cfg") + " --k-max 100")
              .code == 2);
    CHECK(fix.run("checkpoints --product " + fix.path("prod.cfg") + " --n 4").code == 2);
}

TEST_CASE("cli explicit schedules stop at their horizon") {
    CliFixture fix;
    CHECK(fix.run("density --spec " + fix.path("fixed.cfg") + " --k-max 30").code == 0);
    CHECK(fix.run("density --spec " + fix.path("fixed.cfg") + " --k-max 200").code == 2);
}

TEST_CASE("cli checkpoints") {
    CliFixture fix;
    const RunResult csv = fix.run("checkpoints --spec " + fix.path("s.cfg") + " --n 6");
    CHECK(csv.code == 0);
    CHECK(count_lines(csv.out) == 7);
    CHECK(csv.out.find("\n600,173,173,600,0.288333333333\n") != std::string::npos);
    CHECK(csv.out.find("\n25200,7073,7073,25200,0.280674603175\n") != std::string::npos);
}

TEST_CASE("cli dims report") {
    CliFixture fix;
    const RunResult single = fix.run("dims --spec " + fix.path("s.cfg") + " --n 12");
    CHECK(single.code == 0);
    CHECK(single.out.find("factors: 1") != std::string::npos);
    CHECK(single.out.find("window: checkpoints 6..12") != std::string::npos);
    CHECK(single.out.find("target 1/4 (~0.25)") != std::string::npos);
    CHECK(single.out.find("target 1/2 (~0.5)") != std::string::npos);
    CHECK(single.out.find("billingsley at k_12") != std::string::npos);

    const RunResult pair = fix.run("dims --product " + fix.path("prod.cfg") + " --n 12");
    CHECK(pair.code == 0);
    CHECK(pair.out.find("factors: 2") != std::string::npos);
    CHECK(pair.out.find("target 7/12") != std::string::npos);
    CHECK(pair.out.find("target 3/4") != std::string::npos);
    CHECK(pair.out.find("metric correction") != std::string::npos);
}

TEST_CASE("cli sample full enumeration") {
    CliFixture fix;
    const RunResult points = fix.run("sample --spec " + fix.path("s.cfg") + " --level 10");
    CHECK(points.code == 0);
    CHECK(count_lines(points.out) == 9);
    CHECK(points.out.rfind("x1\n0/2^10\n", 0) == 0);
    CHECK(points.out.find("\n11/2^10\n") != std::string::npos);

    const RunResult capped =
        fix.run("sample --spec " + fix.path("s.cfg") + " --level 30 --cap 64");
    CHECK(capped.code == 2);
    CHECK(capped.err.find("sample_points") != std::string::npos);
}

TEST_CASE("cli sampled points are byte-deterministic in the seed") {
    CliFixture fix;
    const std::string args = "sample --product " + fix.path("prod.cfg") +
                             " --level 25 --count 5 --seed 9 --out ";
    CHECK(fix.run(args + fix.path("p1.csv")).code == 0);
    CHECK(fix.run(args + fix.path("p2.csv")).code == 0);
    const std::string first = slurp(fix.dir / "p1.csv");
    CHECK(first == slurp(fix.dir / "p2.csv"));
    CHECK(count_lines(first) == 6);
    CHECK(first.rfind("x1,x2\n", 0) == 0);
}

TEST_CASE("cli crosscheck") {
    CliFixture fix;
    const RunResult full =
        fix.run("crosscheck --product " + fix.path("prod.cfg") + " --level 12");
    CHECK(full.code == 0);
    CHECK(count_lines(full.out) == 13);
    CHECK(full.out.find(",no") == std::string::npos);

    const RunResult sampled = fix.run("crosscheck --product " + fix.path("prod.cfg") +
                                      " --level 25 --count 40 --seed 3");
    CHECK(sampled.code == 0);
    CHECK(count_lines(sampled.out) == 26);
}

TEST_CASE("cli theorem construction") {
    CliFixture fix;
    const RunResult symbolic = fix.run(
        "theorem --which 1 --alpha 3/10 --beta 1/5 --gamma 1/2 --lambda 3/5 --n 0");
    CHECK(symbolic.code == 0);
    CHECK(symbolic.out.find("theorem 1, d = 1") != std::string::npos);
    CHECK(symbolic.out.find("symbolic round-trip: PASS") != std::string::npos);

    const RunResult numeric = fix.run(
        "theorem --which 1 --alpha 3/10 --beta 1/5 --gamma 1/2 --lambda 3/5 --n 20");
    CHECK(numeric.code == 0);
    CHECK(numeric.out.find("numeric targets:") != std::string::npos);
    CHECK(numeric.out.find("dim_H (E x F)") != std::string::npos);
    CHECK(numeric.out.find("[FAIL]") == std::string::npos);

    const RunResult degenerate = fix.run(
        "theorem --which 2 --alpha 1/5 --beta 3/10 --gamma 3/5 --lambda 1/2");
    CHECK(degenerate.code == 2);
    CHECK(degenerate.err.find("lambda") != std::string::npos);

    CHECK(fix.run("theorem --which 4 --alpha 1/5 --beta 3/10 --gamma 3/5 --lambda 7/10")
              .code == 2);
    CHECK(fix.run("theorem --which 1 --alpha 1/5 --beta 3/10 --gamma 3/5 --lambda nine")
              .code == 2);
}

TEST_CASE("cli remark1 report") {
    CliFixture fix;
    const RunResult report = fix.run("remark1 --n 20 --out " + fix.path("r.txt"));
    CHECK(report.code == 0);
    const std::string text = slurp(fix.dir / "r.txt");
    CHECK(text.find("dim_H (E_S x E_T)") != std::string::npos);
    CHECK(text.find("7/12") != std::string::npos);
    CHECK(text.find("dim_H (E x E) >= 7/12 > 1/2 = 2 dim_H E") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);
}
