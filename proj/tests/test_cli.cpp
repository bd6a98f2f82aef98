#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "afkit/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(AFKIT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_file(const std::string& name) { return std::string("/tmp/afkit_test_") + name; }

} // namespace

TEST_CASE("exit code contract") {
    CHECK(run("chain --spec '6 6@2 6' --task af").exit_code == 0);
    CHECK(run("chain --spec 'oops' --task af").exit_code == 1);
    CHECK(run("chain --task af").exit_code == 1); // missing required option
    CHECK(run("verify --spec '6 6@2 6' --self-test-fault af").exit_code == 2);
    CHECK(run("verify --spec '6 6@2 6' --pm-cap 2").exit_code == 3);
    CHECK(run("exact --input /nonexistent --task af").exit_code == 1);
}

TEST_CASE("caps come from the environment unless flagged") {
    std::string cmd = "AFKIT_PM_CAP=2 " + std::string(AFKIT_BIN) + " verify --spec '6 6@2 6' 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (fread(buffer, 1, sizeof buffer, pipe) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(pipe)) == 3);
    // explicit flag wins over the environment
    std::string cmd2 = "AFKIT_PM_CAP=2 " + std::string(AFKIT_BIN) +
                       " verify --spec '6 6@2 6' --pm-cap 1000 >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
}

TEST_CASE("chain tasks") {
    CHECK(run("chain --spec '4 4@1 4@1 4@1 4' --task af").out.find("af: 3") != std::string::npos);
    CHECK(run("chain --spec '6 6@1 6' --task spectrum").out.find("spectrum: 1 2 3") !=
          std::string::npos);
    CHECK(run("chain --spec '6 6@1 6@1 6' --task k-count").out.find("k_count: 3") !=
          std::string::npos);
}

TEST_CASE("remaining exact and chain tasks") {
    std::string path = tmp_file("bridged.txt");
    {
        std::ofstream out(path);
        out << "graph 12\n";
        for (int i = 0; i < 6; ++i) out << "e " << i << " " << (i + 1) % 6 << "\n";
        for (int i = 0; i < 6; ++i) out << "e " << 6 + i << " " << 6 + (i + 1) % 6 << "\n";
        out << "e 0 6\n";
    }
    auto components = run("exact --input " + path + " --task components --format json");
    REQUIRE(components.exit_code == 0);
    json report = json::parse(components.out);
    CHECK(report["values"]["fixed_single"].size() == 1);
    CHECK(report["values"]["components"].size() == 2);

    std::string anthracene = tmp_file("anthracene_tasks.txt");
    REQUIRE(run("chain --spec '6 6@2 6' --task realize --output " + anthracene).exit_code == 0);
    auto anti = run("exact --input " + anthracene + " --task edges-anti-forcing --format json");
    CHECK(!json::parse(anti.out)["values"]["edges"].empty());
    auto forcing = run("exact --input " + anthracene + " --task edges-forcing --format json");
    CHECK(!json::parse(forcing.out)["values"]["edges"].empty());

    auto blocks = run("chain --spec '6 6@1 6@2 6@1 6' --task blocks --format json");
    json blocks_report = json::parse(blocks.out);
    CHECK(blocks_report["values"]["max_af"] == 4);
    CHECK(blocks_report["values"]["blocks"].size() == 2);
    CHECK(blocks_report["values"]["skipped"] == json({3}));

    auto segments = run("chain --spec '4 4@1 4@1 4@1 4' --task segments --format json");
    CHECK(json::parse(segments.out)["values"]["segments"].size() == 3);

    auto kinks = run("chain --spec '6 6@1 6@2 6' --task kinks --format json");
    CHECK(json::parse(kinks.out)["values"]["kinks"] == json({true, false}));
}

TEST_CASE("realize then solve round trip") {
    std::string path = tmp_file("phen.txt");
    CHECK(run("chain --spec '6 6@1 6' --task realize --output " + path).exit_code == 0);
    afkit::GraphFile file = afkit::read_graph_file(path);
    CHECK(file.graph.vertex_count() == 14);
    CHECK(file.faces.size() == 4);
    CHECK(file.exterior_index.has_value());

    auto result = run("exact --input " + path + " --task af");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("af: 1") != std::string::npos);
}

TEST_CASE("gen piping and determinism") {
    auto a = run("gen --family random --n 6 --seed 7");
    auto b = run("gen --family random --n 6 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(run("gen --family random --n 6").exit_code == 1);
    CHECK(run("gen --family straight-polyomino --n 5").out == "4 4@1 4@1 4@1 4\n");

    // allkink-catahex n=8 has chain af 3
    auto spec = run("gen --family allkink-catahex --n 8").out;
    spec.pop_back();
    CHECK(run("chain --spec '" + spec + "' --task af").out.find("af: 3") != std::string::npos);
}

TEST_CASE("json and text report identical values") {
    std::string path = tmp_file("anthracene.txt");
    REQUIRE(run("chain --spec '6 6@2 6' --task realize --output " + path).exit_code == 0);

    auto text = run("exact --input " + path + " --task spectrum");
    auto as_json = run("exact --input " + path + " --task spectrum --format json");
    json report = json::parse(as_json.out);
    CHECK(report["values"]["spectrum"] == json({1, 2}));
    CHECK(text.out.find("spectrum: 1 2") != std::string::npos);

    // schema structure: required fields with the documented types
    CHECK(report["input"].is_string());
    CHECK(report["task"].is_string());
    CHECK(report["values"].is_object());
    CHECK(report["caps"]["pm_cap"].is_number_integer());
    CHECK(report["caps"]["cycle_cap"].is_number_integer());
    CHECK(report["timing_ms"].is_number());

    auto chain_text = run("chain --spec '6 6@2 6' --task max-af");
    auto chain_json = json::parse(run("chain --spec '6 6@2 6' --task max-af --format json").out);
    CHECK(chain_json["values"]["max_af"] == 2);
    CHECK(chain_text.out.find("max_af: 2") != std::string::npos);
}

TEST_CASE("verify reports a machine-readable diff") {
    auto result = run("verify --spec '6 6@2 6' --self-test-fault max-af --format json");
    CHECK(result.exit_code == 2);
    json report = json::parse(result.out);
    CHECK(report["values"]["agree"] == false);
    REQUIRE(!report["values"]["mismatches"].empty());
    CHECK(report["values"]["mismatches"][0]["field"] == "max_af");
    CHECK(report["values"]["mismatches"][0]["chain"] == "3");
    CHECK(report["values"]["mismatches"][0]["oracle"] == "2");
}

TEST_CASE("verify accepts generator arguments") {
    CHECK(run("verify --family allkink-catahex --n 5").exit_code == 0);
    CHECK(run("verify --family random --n 4 --seed 11").exit_code == 0);
    CHECK(run("verify --family random --n 4").exit_code == 1);
}

TEST_CASE("ztg") {
    std::string path = tmp_file("c6.txt");
    REQUIRE(run("chain --spec '6' --task realize --output " + path).exit_code == 0);
    auto result = run("ztg --input " + path + " --format json");
    CHECK(result.exit_code == 0);
    json report = json::parse(result.out);
    CHECK(report["values"]["nodes"] == 2);
    CHECK(report["values"]["links"] == 1);
    CHECK(report["values"]["connected"] == true);

    std::string exported = tmp_file("c6_z.txt");
    CHECK(run("ztg --input " + path + " --export " + exported).exit_code == 0);
    afkit::GraphFile zfile = afkit::read_graph_file(exported);
    CHECK(zfile.graph.vertex_count() == 2);
    CHECK(zfile.graph.edge_count() == 1);
    std::ifstream sidecar(exported + ".nodes");
    REQUIRE(sidecar.good());
    int lines = 0;
    std::string line;
    while (std::getline(sidecar, line)) ++lines;
    CHECK(lines == 2);

    // faceless file is an input error
    std::string bare = tmp_file("bare.txt");
    std::ofstream out(bare);
    out << "graph 2\ne 0 1\n";
    out.close();
    CHECK(run("ztg --input " + bare).exit_code == 1);
}
