#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nzc/cli.hpp"

using nzc::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return Run{code, out.str(), err.str()};
}

} // namespace

TEST_CASE("stats reports and exit codes") {
    const Run r51 = cli({"stats", "--q", "5", "--n", "1"});
    CHECK(r51.code == 0);
    const auto j51 = nlohmann::json::parse(r51.out);
    CHECK(j51["isComplete"] == true);
    CHECK(j51["diameter"] == 1);
    CHECK(j51["dominationNumber"] == 1);
    CHECK(j51["theoremChecks"]["diameter"] == "not-applicable");

    const Run r22 = cli({"stats", "--q", "2", "--n", "2"});
    CHECK(r22.code == 0);
    const auto j22 = nlohmann::json::parse(r22.out);
    CHECK(j22["diameter"] == 2);
    CHECK(j22["independenceNumber"] == 2);
    CHECK(j22["edgeCount"] == 2);

    // byte-identical across runs
    CHECK(cli({"stats", "--q", "3", "--n", "2"}).out == cli({"stats", "--q", "3", "--n", "2"}).out);

    const Run bad = cli({"stats", "--q", "6", "--n", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("prime power") != std::string::npos);

    CHECK(cli({"stats", "--q", "2", "--n", "0"}).code == 2);
    CHECK(cli({"stats", "--q", "300", "--n", "1"}).code == 3); // field order cap

    // class route far above the explicit cap still answers
    const Run big = cli({"stats", "--q", "2", "--n", "13"});
    CHECK(big.code == 0);
    const auto jbig = nlohmann::json::parse(big.out);
    CHECK(jbig["vertexCount"] == 8191);
    CHECK(jbig["independenceNumber"] == 13);
    CHECK(jbig["theoremChecks"]["independence"] == "skipped");
}

TEST_CASE("export emits stable DOT and JSON") {
    const Run dot = cli({"export", "--q", "2", "--n", "2", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out ==
          "graph nzc {\n"
          "  0 [label=\"0,1\"];\n"
          "  1 [label=\"1,0\"];\n"
          "  2 [label=\"1,1\"];\n"
          "  0 -- 2;\n"
          "  1 -- 2;\n"
          "}\n");
    // dot is the default format
    CHECK(cli({"export", "--q", "2", "--n", "2"}).out == dot.out);

    const Run js = cli({"export", "--q", "5", "--n", "1", "--format", "json"});
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["vertexCount"] == 4);
    CHECK(j["edgeCount"] == 6);
    CHECK(j["edges"].size() == 6);
    CHECK(j["edges"][0] == nlohmann::json::array({0, 1}));
    CHECK(j["vertices"][3]["label"] == "4");

    CHECK(cli({"export", "--q", "2", "--n", "13", "--format", "dot"}).code == 3);
    CHECK(cli({"export", "--q", "3", "--n", "2", "--cap-explicit", "4"}).code == 3);
    CHECK(cli({"export", "--q", "2", "--n", "2", "--format", "pdf"}).code == 2);
}

TEST_CASE("verify covers every selector") {
    for (const char* sel : {"degrees", "diameter", "complete", "domination", "minimal-dominating",
                            "independence", "lin-ind", "basis-iso", "iso-dim", "aut-form",
                            "vertex-transitivity"}) {
        CAPTURE(sel);
        const Run r = cli({"verify", sel, "--q", "3", "--n", "2"});
        CHECK(r.code == 0);
        CHECK(r.out.find("pass") != std::string::npos);
    }
    const Run k4 = cli({"verify", "aut-form", "--q", "5", "--n", "1"});
    CHECK(k4.code == 0);
    CHECK(k4.out.find("24 automorphisms checked") != std::string::npos);

    const Run md = cli({"verify", "minimal-dominating", "--q", "2", "--n", "4"});
    CHECK(md.code == 0);
    CHECK(md.out.find("size 4") != std::string::npos);

    const Run diam1 = cli({"verify", "diameter", "--q", "5", "--n", "1"});
    CHECK(diam1.code == 0);
    CHECK(diam1.out.find("not applicable") != std::string::npos);

    CHECK(cli({"verify", "vertex-transitivity", "--q", "5", "--n", "1"}).code == 0);
    CHECK(cli({"verify", "independence", "--q", "2", "--n", "9"}).code == 3); // over search cap
    CHECK(cli({"verify", "minimal-dominating", "--q", "5", "--n", "2"}).code == 3);
    CHECK(cli({"verify", "no-such-claim", "--q", "2", "--n", "2"}).code == 2);

    // the class route answers when the explicit cap is pulled down
    const Run classed = cli({"verify", "degrees", "--q", "3", "--n", "2", "--cap-explicit", "4"});
    CHECK(classed.code == 0);
    CHECK(classed.out.find("support classes") != std::string::npos);
    CHECK(cli({"verify", "diameter", "--q", "3", "--n", "2", "--cap-explicit", "4"}).code == 0);
}

TEST_CASE("verify basis-iso accepts files and seeds") {
    const char* path = "cli_basis_tmp.txt";
    {
        std::ofstream f(path);
        f << "1,1\n2,1\n";
    }
    const Run file = cli({"verify", "basis-iso", "--q", "3", "--n", "2", "--basis", path});
    CHECK(file.code == 0);

    const Run seeded = cli({"verify", "basis-iso", "--q", "3", "--n", "2", "--seed", "7"});
    CHECK(seeded.code == 0);
    CHECK(seeded.out.find("20 seeded random bases") != std::string::npos);
    CHECK(cli({"verify", "basis-iso", "--q", "3", "--n", "2", "--seed", "7"}).out == seeded.out);

    {
        std::ofstream f(path);
        f << "1,1\n2,2\n";
    }
    CHECK(cli({"verify", "basis-iso", "--q", "3", "--n", "2", "--basis", path}).code == 2);
    std::remove(path);
    CHECK(cli({"stats", "--q", "3", "--n", "2", "--basis", "missing.txt"}).code == 2);

    {
        std::ofstream f(path);
        f << "1,1\n2,1\n";
    }
    const Run stats = cli({"stats", "--q", "3", "--n", "2", "--basis", path});
    CHECK(stats.code == 0);
    CHECK(nlohmann::json::parse(stats.out)["edgeCount"] == 24);
    std::remove(path);
}

TEST_CASE("iso command compares two instances") {
    const Run neq = cli({"iso", "--q", "2", "--n", "2", "--q2", "2", "--n2", "3"});
    CHECK(neq.code == 0);
    const auto jn = nlohmann::json::parse(neq.out);
    CHECK(jn["isomorphic"] == false);
    CHECK(jn["searched"] == true);
    CHECK(jn["searchFound"] == false);
    CHECK(jn["witness"].is_null());

    const Run eq = cli({"iso", "--q", "3", "--n", "2", "--q2", "3", "--n2", "2"});
    CHECK(eq.code == 0);
    const auto je = nlohmann::json::parse(eq.out);
    CHECK(je["isomorphic"] == true);
    CHECK(je["searchFound"] == true);
    CHECK(je["witness"].size() == 8);

    CHECK(cli({"iso", "--q", "2", "--n", "2", "--q2", "3", "--n2", "2"}).code == 2);

    const char* path = "cli_basis2_tmp.txt";
    {
        std::ofstream f(path);
        f << "2\n";
    }
    const Run based = cli({"iso", "--q", "3", "--n", "1", "--q2", "3", "--n2", "1", "--basis2", path});
    CHECK(based.code == 0);
    CHECK(nlohmann::json::parse(based.out)["isomorphic"] == true);
    std::remove(path);
}

TEST_CASE("aut command lists automorphisms as JSON") {
    const Run r = cli({"aut", "--q", "2", "--n", "2"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["mapping"] == nlohmann::json::array({0, 1, 2}));
    CHECK(j[1]["mapping"] == nlohmann::json::array({1, 0, 2}));
    CHECK(j[0]["isLinear"] == true);
    CHECK(cli({"aut", "--q", "5", "--n", "2"}).code == 3); // 24 vertices over the cap
}

TEST_CASE("argument plumbing") {
    CHECK(cli({}).code == 2);                    // a subcommand is required
    CHECK(cli({"frobnicate"}).code == 2);        // unknown subcommand
    CHECK(cli({"stats"}).code == 2);             // --q is required
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"--help"}).out.find("stats") != std::string::npos);
}
