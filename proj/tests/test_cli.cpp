#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "guni/io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(GUNI_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

} // namespace

TEST_CASE("decide exit codes and verdicts") {
    auto ok = run("decide --family clebsch --group S5");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("unirational: true") != std::string::npos);

    auto fail = run("decide --family fermat --group full");
    CHECK(fail.exit_code == 10);
    CHECK(fail.output.find("unirational: false") != std::string::npos);
    CHECK(fail.output.find("obstruction D") != std::string::npos);
    CHECK(fail.output.find("obstruction B") != std::string::npos);

    auto b = run("decide --family p2 --group obstructionB");
    CHECK(b.exit_code == 10);
    CHECK(b.output.find("obstruction B") != std::string::npos);

    auto bad = run("decide --family bogus");
    CHECK(bad.exit_code == 2);

    // with no group selector the whole generator catalogue acts
    auto all = run("decide --family p2");
    CHECK(all.exit_code == 10);
    CHECK(all.output.find("obstruction B") != std::string::npos);
    CHECK(all.output.find("[0.V9]") != std::string::npos);
}

TEST_CASE("decide json output is deterministic and thread independent") {
    auto a = run("--format json decide --family fermat --group full");
    auto b = run("--format json --threads 4 decide --family fermat --group full");
    CHECK(a.exit_code == 10);
    CHECK(b.exit_code == 10);
    CHECK(a.output == b.output);
    auto j = guni::io::json::parse(a.output);
    CHECK(j["unirational"] == false);
    CHECK(j["group_order"] == 648);
}

TEST_CASE("tables command") {
    auto t2 = run("tables dp4-c22");
    CHECK(t2.exit_code == 0);
    CHECK(t2.output.find("I:10") != std::string::npos);
    CHECK(t2.output.find("II:15") != std::string::npos);
    CHECK(t2.output.find("III:10") != std::string::npos);

    auto t3 = run("tables dp3-c32");
    CHECK(t3.exit_code == 0);
    CHECK(t3.output.find("I:6") != std::string::npos);
    CHECK(t3.output.find("II:4") != std::string::npos);
    CHECK(t3.output.find("III:3") != std::string::npos);

    CHECK(run("tables bogus").exit_code == 2);
}

TEST_CASE("fixed command") {
    auto f = run("fixed --family fermat --group typeI");
    CHECK(f.exit_code == 0);
    CHECK(f.output.find("count 3") != std::string::npos);

    auto q = run("fixed --family diagonal_quartic --gens iota_4,iota_5");
    CHECK(q.exit_code == 0);
    CHECK(q.output.find("count 4") != std::string::npos);

    auto none = run("fixed --family cyclic_cubic --group typeII");
    CHECK(none.exit_code == 0);
    CHECK(none.output.find("has fixed point on surface: no") != std::string::npos);

    CHECK(run("fixed --family cyclic_cubic --group H33").exit_code == 2); // not abelian
}

TEST_CASE("classify command") {
    auto c = run("classify --family fermat --group typeII");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("C3^2 type II") != std::string::npos);

    auto q = run("classify --family diagonal_quartic --group typeIII");
    CHECK(q.exit_code == 0);
    CHECK(q.output.find("C2^2 type III") != std::string::npos);
}

TEST_CASE("family emission round-trips through decide") {
    auto doc = run("family diagonal_quartic --a 0,1,2,3,4");
    CHECK(doc.exit_code == 0);
    auto j = guni::io::json::parse(doc.output);
    CHECK(j["model"] == "QuadricPairP4");
    CHECK(j["equations"].size() == 2);

    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/guni_quartic_input.json";
    std::ofstream out(path);
    out << doc.output;
    out.close();

    auto decided = run("decide --input " + path + " --group obstructionC");
    CHECK(decided.exit_code == 10);
    CHECK(decided.output.find("obstruction C") != std::string::npos);

    auto ok = run("decide --input " + path + " --group typeI");
    CHECK(ok.exit_code == 0);

    CHECK(run("family diagonal_quartic --a 0,0,2,3,4").exit_code == 2);
    CHECK(run("family bogus").exit_code == 2);
}

TEST_CASE("lines command") {
    auto l = run("lines");
    CHECK(l.exit_code == 0);
    CHECK(l.output.find("27 lines") != std::string::npos);
    CHECK(l.output.find("rank of the trivial group: 7") != std::string::npos);

    auto g = run("lines --group S4");
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("invariant Picard rank") != std::string::npos);
}

TEST_CASE("preset round-trip: every family preset decides identically from its document") {
    using guni::io::json;
    for (const std::string name : {"clebsch", "fermat", "cyclic_cubic", "diagonal_quartic", "p2",
                                   "p1xp1_quadric", "a4_cubic"}) {
        auto doc = run("family " + name);
        REQUIRE(doc.exit_code == 0);
        auto j = json::parse(doc.output);
        std::string path = std::string("/tmp/guni_") + name + "_input.json";
        std::ofstream out(path);
        out << doc.output;
        out.close();
        for (const auto& [preset, glist] : j["presets"].items()) {
            auto from_family = run("--format json decide --family " + name + " --group " + preset);
            auto from_file = run("--format json decide --input " + path + " --group " + preset);
            CHECK(from_family.exit_code == from_file.exit_code);
            CHECK(from_family.output == from_file.output);
        }
    }
}
