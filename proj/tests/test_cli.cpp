#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lsa/catalog.hpp"
#include "lsa/io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "lsa_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args) {
    std::string cmd = std::string(LSA_CLI_PATH) + " " + args + " > " +
                      (work_dir() / "stdout.txt").string() + " 2> " +
                      (work_dir() / "stderr.txt").string();
    int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_CASE("catalog list") {
    fs::path j = work_dir() / "catalog.json";
    REQUIRE(run("catalog list --quiet --json " + j.string()) == 0);
    json doc = json::parse(slurp(j));
    CHECK(doc.size() == lsa::catalog().size());
}

TEST_CASE("check on labels and files") {
    CHECK(run("check L4_04 --quiet") == 0);
    CHECK(run("check L4_12 --params lambda=2 --quiet") == 0);
    CHECK(run("check L4_12 --params lambda=0 --quiet") == 2);  // out of domain
    CHECK(run("check no_such_label --quiet") == 2);

    fs::path pres = work_dir() / "alg.txt";
    write(pres, "dim 2\ne1*e1 = e2\n");
    fs::path j = work_dir() / "check.json";
    REQUIRE(run("check " + pres.string() + " --quiet --json " + j.string()) == 0);
    json doc = json::parse(slurp(j));
    CHECK(doc["left_symmetric"] == true);
    CHECK(doc["nilpotent"] == true);
    CHECK(doc["novikov"] == true);

    // a non-left-symmetric presentation fails with exit 1
    write(pres, "dim 2\ne1*e2 = e1\n");
    CHECK(run("check " + pres.string() + " --quiet") == 1);
}

TEST_CASE("cohomology table row") {
    fs::path j = work_dir() / "coh.json";
    REQUIRE(run("cohomology L3s_01 --quiet --json " + j.string()) == 0);
    json doc = json::parse(slurp(j));
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["dim_z2"] == 7);
    CHECK(doc[0]["dim_b2"] == 1);
    CHECK(doc[0]["dim_h2n"] == 5);
    CHECK(doc[0]["dim_h2l"] == 6);
}

TEST_CASE("extend builds the catalog algebra") {
    fs::path j = work_dir() / "ext.json";
    REQUIRE(run("extend L3s_01 --cocycle D23 --quiet --json " + j.string()) == 0);
    json doc = json::parse(slurp(j));
    CHECK(doc["presentation"] ==
          lsa::io::emit_presentation(lsa::instantiate("L4_04")));
    CHECK(doc["split_warning"] == false);
}

TEST_CASE("invariants distinguishes a pair") {
    fs::path j = work_dir() / "inv.json";
    REQUIRE(run("invariants L4_03 L4_04 --quiet --json " + j.string()) == 0);
    json doc = json::parse(slurp(j));
    REQUIRE(doc["pairs"].size() == 1);
    CHECK(doc["pairs"][0]["outcome"] == "non-isomorphic");
}

TEST_CASE("degenerate verb verifies witness files") {
    fs::path wfile = work_dir() / "w.txt";
    write(wfile, "t 0 0 0\n0 t^2 0 0\n0 0 1 0\n0 0 0 t^2\n");
    CHECK(run("degenerate L4_03 " + wfile.string() + " L4_04 --quiet") == 0);
    CHECK(run("degenerate L4_04 " + wfile.string() + " L4_03 --quiet") == 1);

    // family source with a parametrized index; --params binds the target
    fs::path wfam = work_dir() / "wfam.txt";
    write(wfam, "param lambda = t\n1 0 0\n0 1 0\n0 0 1\n");
    fs::path target = work_dir() / "target.txt";
    write(target, lsa::io::emit_presentation(
                      lsa::instantiate<lsa::GaussRational>("L3s_04", {{"lambda", lsa::GaussRational(0)}})));
    CHECK(run("degenerate L3s_04 " + wfam.string() + " " + target.string() + " --quiet") == 0);
    CHECK(run("degenerate L3s_04 " + wfam.string() + " L3s_04 --params lambda=0 --quiet") == 0);
}

TEST_CASE("suite runs and exit status reflects the outcome") {
    CHECK(run("suite theorem-b --quiet") == 0);
    CHECK(run("suite no-such-suite --quiet") != 0);
}

TEST_CASE("JSON reports are byte-identical across runs") {
    fs::path j1 = work_dir() / "r1.json", j2 = work_dir() / "r2.json";
    REQUIRE(run("suite h2-table --quiet --json " + j1.string()) == 0);
    REQUIRE(run("suite h2-table --quiet --json " + j2.string()) == 0);
    CHECK(slurp(j1) == slurp(j2));
    CHECK(!slurp(j1).empty());
}

TEST_CASE("report directory env var") {
    fs::path dir = work_dir() / "reports";
    fs::remove_all(dir);
    std::string cmd = "LSA_REPORT_DIR=" + dir.string() + " " + std::string(LSA_CLI_PATH) +
                      " check L4_04 --quiet --json rel.json > /dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(dir / "rel.json"));
}
