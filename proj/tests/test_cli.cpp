#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "braidcob/cert_json.hpp"

using namespace braidcob;

namespace {
struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(BRAIDCOB_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }
}  // namespace

TEST_CASE("generated certificates verify and the JSON report re-parses") {
    for (const std::string kind : {"fourstrand", "coxeter", "trefoils --n 1 --nprime 4"}) {
        const Run gen = run("cert gen " + kind);
        REQUIRE(gen.code == 0);
        write("cli_gen.json", gen.out);
        const Run human = run("cert verify cli_gen.json");
        CHECK(human.code == 0);
        CHECK(human.out.find("PASS") != std::string::npos);
        const Run machine = run("--json cert verify cli_gen.json");
        CHECK(machine.code == 0);
        const Json j = Json::parse(machine.out);
        CHECK(report_to_json(report_from_json(j)) == j);
    }
    const Run four = run("cert verify cli_gen.json --json");
    CHECK(Json::parse(four.out)["total_cost"] == 6);
}

TEST_CASE("fourstrand verify prints cost 10") {
    write("cli_four.json", run("cert gen fourstrand").out);
    const Run r = run("cert verify cli_four.json");
    CHECK(r.out.find("cost 10") != std::string::npos);
}

TEST_CASE("invariants on the command line") {
    CHECK(run("link sigma --sigma6 --strands 2 --word 1,1,1").out == "2\n");
    write("cli_word.json", R"({"n":2,"w":[1,1,1]})");
    CHECK(run("link sigma --sigma6 --file cli_word.json").out == "2\n");
    CHECK(run("link sigma --theta 1/2 --strands 2 --word 1,1,1").out == "signature -2 nullity 0\n");
    CHECK(run("link alexander --strands 3 --word 1,-2,1,-2").out == "t^2 - 3t + 1\n");
    CHECK(run("braid eq --strands 3 --lhs 1,2,1 --rhs 2,1,2").out == "equal\n");
    CHECK(run("braid eq --strands 3 --lhs 1,2 --rhs 2,1").out == "not equal\n");
    CHECK(run("paper clover --m 6 --n 6").out == "-430 (vacuous)\n");
    const Json nf = Json::parse(run("--json braid nf --strands 3 --word 1,2,1").out);
    CHECK(nf["infimum"] == 1);
}

TEST_CASE("exit codes") {
    CHECK(run("braid nf --strands 3 --word 1,7").code == 1);
    CHECK(run("link sigma --theta 3/2 --strands 2 --word 1").code == 1);
    write("cli_bad.json", "{\"start\":{\"closures\":[]},\"steps\":[{\"op\":\"warp\",\"closure\":0}],\"end\":{\"closures\":[]}}");
    CHECK(run("cert verify cli_bad.json").code == 2);
    write("cli_trunc.json", "{\"start\":");
    CHECK(run("cert verify cli_trunc.json").code == 2);
    CHECK(run("cert verify cli_missing_file.json").code == 2);
    write("cli_wrong.json", run("cert gen coxeter").out);
    Json j = Json::parse(std::ifstream("cli_wrong.json"));
    j["end"]["tpos"] = 11;
    write("cli_wrong.json", j.dump());
    CHECK(run("cert verify cli_wrong.json").code == 1);
    CHECK(run("paper theorem-table --grid 6 --offsets -1").code == 1);
}

TEST_CASE("theorem table CSV") {
    const Run r = run("paper theorem-table --grid 6 --offsets 0,5");
    CHECK(r.code == 0);
    CHECK(r.out == "m,n,N,upper,lower,slack,window,pass\n6,6,11,47,9,38,440,true\n6,6,16,57,19,38,440,true\n");
}

TEST_CASE("precision override") {
    CHECK(run("link sigma --sigma6 --strands 2 --word 1,1,1").out == "2\n");
    CHECK(std::system((std::string("BRAIDCOB_PRECISION_BITS=256 ") + BRAIDCOB_CLI +
                       " link sigma --sigma6 --strands 2 --word 1,1,1 >/dev/null").c_str()) == 0);
    CHECK(std::system((std::string("BRAIDCOB_PRECISION_BITS=abc ") + BRAIDCOB_CLI +
                       " link sigma --sigma6 --strands 2 --word 1,1,1 2>/dev/null").c_str()) != 0);
}
