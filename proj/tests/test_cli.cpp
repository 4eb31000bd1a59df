#include <sstream>

#include "cforce/cli.hpp"
#include "doctest.h"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cforce::run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen emits edge lists") {
    auto r = cli({"gen", "path", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n0 1\n1 2\n2 3\n");

    auto star = cli({"gen", "star", "4"});
    CHECK(star.out == "4\n0 1\n0 2\n0 3\n");

    auto snark = cli({"gen", "flower_snark", "4"});
    CHECK(snark.code == 1);
    CHECK(snark.err.find("odd k") != std::string::npos);
}

TEST_CASE("fc verb") {
    auto star = cli({"gen", "star", "4"});
    auto r = cli({"fc", "-", "--witness"}, star.out);
    CHECK(r.code == 0);
    CHECK(r.out == "Fc = 3\nwitness = {0 1 2}\n");

    auto path = cli({"fc", "-"}, cli({"gen", "path", "10"}).out);
    CHECK(path.out == "Fc = 1\n");

    auto brute = cli({"fc", "-", "--method", "brute"}, star.out);
    CHECK(brute.out == "Fc = 3\n");

    auto all = cli({"fc", "-", "--all"}, star.out);
    CHECK(all.out == "Fc = 3\nwitness = {0 1 2}\nwitness = {0 1 3}\nwitness = {0 2 3}\n");

    // structural and brute agree when the structural method applies
    auto structural = cli({"fc", "-", "--method", "structural"}, star.out);
    CHECK(structural.out == "Fc = 3\n");

    auto not_structural = cli({"fc", "-", "--method", "structural"}, cli({"gen", "cycle", "5"}).out);
    CHECK(not_structural.code == 1);

    auto disconnected = cli({"fc", "-"}, "4\n0 1\n2 3\n");
    CHECK(disconnected.code == 1);
    CHECK(disconnected.err.find("connected") != std::string::npos);
}

TEST_CASE("fc trace output") {
    auto r = cli({"fc", "-", "--witness", "--trace"}, cli({"gen", "path", "3"}).out);
    CHECK(r.out == "Fc = 1\nwitness = {0}\n0 0 1\n1 1 2\n");
}

TEST_CASE("f verb") {
    auto r = cli({"f", "-", "--witness"}, cli({"gen", "path", "4"}).out);
    CHECK(r.code == 0);
    CHECK(r.out == "F = 1\nwitness = {0}\n");
}

TEST_CASE("sets verb") {
    auto star = cli({"gen", "star", "4"});
    auto r = cli({"sets", "-", "--connected", "--min"}, star.out);
    CHECK(r.code == 0);
    CHECK(r.out == "{0 1 2}\n{0 1 3}\n{0 2 3}\n");

    auto plain = cli({"sets", "-", "--plain", "--min"}, cli({"gen", "path", "4"}).out);
    CHECK(plain.out == "{0}\n{3}\n");

    CHECK(cli({"sets", "-", "--connected"}, star.out).code == 2);              // missing --min
    CHECK(cli({"sets", "-", "--min"}, star.out).code == 2);                    // no mode
    CHECK(cli({"sets", "-", "--connected", "--plain", "--min"}, star.out).code == 2);
}

TEST_CASE("spread verb") {
    auto c5 = cli({"gen", "cycle", "5"});
    auto r = cli({"spread", "-", "0", "--connected"}, c5.out);
    CHECK(r.out == "spread = 1\n");

    auto plain = cli({"spread", "-", "0"}, cli({"gen", "complete", "4"}).out);
    CHECK(plain.out == "spread = 1\n");

    auto cut = cli({"spread", "-", "1", "--connected"}, cli({"gen", "path", "3"}).out);
    CHECK(cut.code == 1);
}

TEST_CASE("info verb") {
    auto r = cli({"info", "-"}, cli({"gen", "pendant_path", "2"}).out);
    CHECK(r.code == 0);
    CHECK(r.out.find("n = 6\n") != std::string::npos);
    CHECK(r.out.find("leaves = {2 3 4 5}\n") != std::string::npos);
    CHECK(r.out.find("R1 = {0 1}\n") != std::string::npos);
    CHECK(r.out.find("R2 = {}\n") != std::string::npos);
    CHECK(r.out.find("curly_L = 2\n") != std::string::npos);
    CHECK(r.out.find("block = {0 1}\n") != std::string::npos);
    CHECK(r.out.find("reduced_vertices = {0 1 2 3 4 5}\n") != std::string::npos);
}

TEST_CASE("explore verbs run at small sizes") {
    auto r = cli({"explore", "r1r2-converse", "--max-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no vertex outside R1/R2") != std::string::npos);

    auto extremes = cli({"explore", "fc-extremes", "--max-n", "4"});
    CHECK(extremes.code == 0);
    CHECK(extremes.out.find("n = 4: 6 connected graphs up to isomorphism") != std::string::npos);

    CHECK(cli({"explore", "fc-extremes", "--max-n", "9"}).code == 2);
    CHECK(cli({"explore", "unknown-question"}).code == 2);
}

TEST_CASE("moderate sizes flow through the structural path") {
    auto big = cli({"gen", "path", "2000"});
    CHECK(big.code == 0);
    CHECK(cli({"fc", "-"}, big.out).out == "Fc = 1\n");

    CHECK(cli({"gen", "path", "5000"}).code == 1);  // over the generator cap
    CHECK(cli({"fc", "-"}, "30000\n0 1\n").code == 1);  // over the input cap
}

TEST_CASE("usage and io errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"fc"}).code == 2);                       // missing input
    CHECK(cli({"fc", "-", "--bogus"}).code == 2);       // unknown flag
    CHECK(cli({"verify", "nonsense"}).code == 2);       // unknown suite
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"fc", "/nonexistent/file"}).code == 1);
    CHECK(cli({"fc", "-"}, "garbage\n").code == 1);     // parse error
}
