#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

std::string binary() {
    return std::filesystem::exists("./qres") ? "./qres" : "./build/qres";
}

std::string data_dir() {
    return std::filesystem::exists("data") ? "data" : "../data";
}

RunResult run(const std::string& args) {
    std::string cmd = binary() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("charpoly of the cusp") {
    RunResult r = run("charpoly --gen one-branch:2,3");
    CHECK(r.code == 0);
    CHECK(r.out.find("Phi_6") != std::string::npos);
    CHECK(r.out.find("t^2 - t + 1") != std::string::npos);
}

TEST_CASE("mhs report for the Zariski-pair parameters") {
    RunResult r = run("mhs --gen two-branch:21,44,14,11 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"h01\": 725") != std::string::npos);  // g1 + g2 = 550 + 175
    CHECK(r.out.find("\"dim\": 1450") != std::string::npos);
    RunResult r2 = run("mhs --gen two-branch:33,28,22,7 --format json");
    CHECK(r2.code == 0);
    CHECK(r2.out == r.out);  // identical invariants for the other member
}

TEST_CASE("outputs are byte-identical across runs") {
    RunResult a = run("mhs --gen two-branch:3,4,5,3 --format json");
    RunResult b = run("mhs --gen two-branch:3,4,5,3 --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("dualgraph --gen two-branch:3,4,5,3");
    RunResult d = run("dualgraph --gen two-branch:3,4,5,3");
    CHECK(c.out == d.out);
    CHECK(c.out.find("graph dual_complex") != std::string::npos);
}

TEST_CASE("every shipped example passes validate") {
    for (const char* name : {"one_branch.json", "two_branch.json", "yls_cusp.json",
                             "yls_two_branch.json"}) {
        RunResult r = run("validate " + data_dir() + "/" + name);
        CHECK(r.code == 0);
        CHECK(r.out == "ok\n");
    }
}

TEST_CASE("semistable report on the yls example includes the fifth-column solve") {
    RunResult r = run("semistable " + data_dir() + "/yls_cusp.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("gr_4 dimension (fifth column): 0") != std::string::npos);
}

TEST_CASE("surface mhs needs aux data for file input") {
    RunResult r = run("mhs " + data_dir() + "/yls_cusp.json");
    CHECK(r.code == 2);
    CHECK(r.out.find("--aux") != std::string::npos);

    std::string aux_path = std::filesystem::temp_directory_path() / "qres_aux.json";
    std::ofstream(aux_path) << R"({"h1": {"0": {"symbol": "H1D0", "power": 1}, "1": {}}})";
    RunResult r2 = run("mhs " + data_dir() + "/yls_cusp.json --aux " + aux_path);
    CHECK(r2.code == 0);
    CHECK(r2.out.find("H1D0") != std::string::npos);
    RunResult r3 = run("mhs --gen yls-cusp:2,3,1,4 --format text");
    CHECK(r3.code == 0);
    CHECK(r3.out == r2.out);  // the generator default aux matches
}

TEST_CASE("validation failures exit with code 1") {
    std::string path = std::filesystem::temp_directory_path() / "qres_bad_sd.json";
    std::ofstream(path) << R"({"n":1,"components":[{"id":0,"name":"E","role":"exceptional",
        "compact":true,"multiplicity":2}],"strata":[{"components":[0],"mult":{"0":2},
        "euler":5,"dim":1}]})";
    RunResult r = run("validate " + path);
    CHECK(r.code == 1);
    CHECK(r.out.find("sum to") != std::string::npos);
}

TEST_CASE("blow-up commands") {
    RunResult r = run("blowup2 \"(3;1,2)\" --w 1,1");
    CHECK(r.code == 0);
    CHECK(r.out.find("(3; 1,1)") != std::string::npos);
    RunResult r3 = run("blowup3 --w 2,3,5");
    CHECK(r3.code == 0);
    CHECK(r3.out.find("(2; -1,3,5)") != std::string::npos);
    RunResult bad = run("blowup2 \"(4;2,1)\" --w 1,1");
    CHECK(bad.code == 1);
}

TEST_CASE("jordan spectrum from a matrix file") {
    std::string path = std::filesystem::temp_directory_path() / "qres_mat.json";
    std::ofstream(path) << R"({"rows": [[0,-1],[1,1]]})";
    RunResult r = run("jordan --matrix " + path);
    CHECK(r.code == 0);
    CHECK(r.out.find("order 6 size 1 x1") != std::string::npos);

    std::string path2 = std::filesystem::temp_directory_path() / "qres_mat2.json";
    std::ofstream(path2) << R"({"rows": [[1,1],[0,1]]})";
    RunResult r2 = run("jordan --matrix " + path2);
    CHECK(r2.code == 0);
    CHECK(r2.out.find("order 1 size 2 x1") != std::string::npos);
}

TEST_CASE("jordan block polynomials from graded data") {
    std::string path = std::filesystem::temp_directory_path() / "qres_graded.json";
    // weight-graded characteristic polynomials of the (3,4,5,3) curve report
    std::ofstream(path) << R"({"n": 1, "weights": {
        "0": {"3": 1, "1": -1},
        "1": {"21": 1, "24": 1, "7": -1, "8": -1, "3": -1, "1": 1},
        "2": {"3": 1}}})";
    RunResult r = run("jordan --graded " + path);
    CHECK(r.code == 0);
    CHECK(r.out.find("size 2") != std::string::npos);
}

TEST_CASE("level-B complex input") {
    std::string path = std::filesystem::temp_directory_path() / "qres_chain.json";
    std::ofstream(path) << R"({"n": 1,
        "vertices": [{"id": 0, "copies": 1, "genus": 0}, {"id": 1, "copies": 1, "genus": 0}],
        "edges": [{"ends": [0, 1], "copies": 4}]})";
    RunResult r = run("semistable --complex " + path);
    CHECK(r.code == 0);
    CHECK(r.out.find("H^1: dim 3") != std::string::npos);
    RunResult dot = run("dualgraph --complex " + path);
    CHECK(dot.code == 0);
    CHECK(dot.out.find("--") != std::string::npos);
}
