#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary named by NCP_CLI with the given arguments.
RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    const char* cli = std::getenv("NCP_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "NCP_CLI must point at the command line binary");
    std::string cmd;
    if (!stdin_data.empty()) cmd += "printf '%b' \"" + stdin_data + "\" | ";
    cmd += std::string("\"") + cli + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("enumeration output and counts") {
    auto r = run_cli("enumerate --legs 3 --count");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5\n");

    auto listed = run_cli("enumerate --legs 2");
    CHECK(listed.out == "1,2\n1|2\n");

    auto filtered = run_cli("enumerate --legs 4 --blocks 3 --count");
    CHECK(filtered.out == "6\n");
}

TEST_CASE("invariant evaluation in all three formats") {
    auto text = run_cli("eval invariant phi --partition \"1|2|3\"");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "3/2*X - 5/2*X^2 + X^3\n");

    auto hilbert = run_cli("eval invariant phi --partition \"1|2|3\" --basis hilbert");
    CHECK(hilbert.out == "H2 + 6*H3\n");

    auto js = run_cli("eval invariant phi --partition \"1|2|3\" --format json");
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["command"] == "invariant");
    CHECK(doc["name"] == "phi");
    CHECK(doc["partition"] == "1|2|3");
    CHECK(doc["basis"] == "monomial");
    CHECK(doc["coefficients"] ==
          nlohmann::json::array({"0", "3/2", "-5/2", "1"}));
    CHECK(doc["text"] == "3/2*X - 5/2*X^2 + X^3");

    auto csv = run_cli("eval invariant phi --partition \"1|2\" --format csv");
    CHECK(csv.out == "partition,coeff_index,value\n1|2,0,0\n1|2,1,-1\n1|2,2,1\n");
    auto quoted = run_cli("eval invariant phi --partition \"1,3|2\" --format csv");
    CHECK(quoted.out ==
          "partition,coeff_index,value\n\"1,3|2\",0,0\n\"1,3|2\",1,-1/2\n\"1,3|2\",2,1/2\n");
}

TEST_CASE("invariant algorithms agree and reject misuse") {
    auto a = run_cli("eval invariant phi --partition \"1,3|2|4\" --algorithm coproduct");
    auto b = run_cli("eval invariant phi --partition \"1,3|2|4\" --algorithm interpolation");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto bad = run_cli("eval invariant lambda --partition \"1|2\" --algorithm coproduct");
    CHECK(bad.exit_code == 2);

    auto lam = run_cli("eval invariant lambda --partition \"1,3|2\"");
    CHECK(lam.out == "1/2*X + 1/2*X^2\n");
    auto strict = run_cli("eval invariant lambda-strict --partition \"1,3|2\"");
    CHECK(strict.out == "-1/2*X + 1/2*X^2\n");
}

TEST_CASE("character evaluation with parameters") {
    auto mu = run_cli("eval character mu-ncp --partition \"1|2|3\"");
    CHECK(mu.out == "-5\n");
    auto gam = run_cli("eval character gamma --partition \"1,2,3\" --q 2/3");
    CHECK(gam.out == "2/3\n");
    auto js = run_cli("eval character lambda0 --partition \"1,4|2|3\" --format json");
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["command"] == "character");
    CHECK(doc["value"] == "1/3");
}

TEST_CASE("coproducts and antipode render exactly") {
    auto sep = run_cli("eval coproduct separation --partition \"1,3|2\"");
    CHECK(sep.out == "1*1 (x) (1,3|2) + 1*(1,2) (x) (1) + 1*(1,3|2) (x) 1\n");
    auto fus = run_cli("eval coproduct fusion --partition \"1|2\"");
    CHECK(fus.out == "1*(1,2) (x) (1|2) + 1*(1|2) (x) (1).(1)\n");
    auto anti = run_cli("eval antipode --partition \"1|2\"");
    CHECK(anti.out == "-1*(1|2) + 2*(1).(1)\n");

    auto js = run_cli("eval antipode --partition \"1|2\" --format json");
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["command"] == "antipode");
    CHECK(doc["terms"].size() == 2);
}

TEST_CASE("batch input reads partitions from stdin") {
    auto r = run_cli("eval invariant phi --partition - --format json", "1|2\\n1,2\\n");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["partition"] == "1|2");
    CHECK(doc[1]["text"] == "X");

    auto text = run_cli("eval character mu-ncp --partition -", "1\\n\\n1|2\\n");
    CHECK(text.out == "-1\n2\n");
}

TEST_CASE("series inversion through both methods") {
    auto a = run_cli("series invert --coeffs 1 --order 6 --method oracle");
    auto b = run_cli("series invert --coeffs 1 --order 6 --method ncp");
    CHECK(a.exit_code == 0);
    CHECK(a.out == "-1,2,-5,14,-42,132\n");
    CHECK(a.out == b.out);

    auto js = run_cli("series invert --coeffs 1/2,0,-3 --order 4 --format json");
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["command"] == "series-invert");
    CHECK(doc["order"] == 4);
    CHECK(doc["coefficients"].size() == 4);
}

TEST_CASE("tables render as csv grids") {
    auto r = run_cli("table a-in --max-n 3 --format csv");
    CHECK(r.out == "i,n,value\n1,1,1\n1,2,0\n1,3,0\n2,1,0\n2,2,2\n2,3,1\n3,1,0\n3,2,0\n3,3,6\n");
    auto lam = run_cli("table lambda-jn --max-n 3 --format csv");
    CHECK(lam.out == "n,coeff_index,p,q\n1,1,1,1\n2,1,-1,1\n3,1,3,2\n");
}

TEST_CASE("verification command reports and exits cleanly") {
    auto r = run_cli("verify --suite antipode --max-legs 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] antipode-ladder-expansions") != std::string::npos);
    CHECK(r.out.find("suite antipode: 5/5 checks passed") != std::string::npos);

    auto js = run_cli("verify --suite series --format json");
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["command"] == "verify");
    CHECK(doc["all_pass"] == true);
    CHECK(doc["checks"].size() == 5);
}

TEST_CASE("failures map to documented exit codes") {
    CHECK(run_cli("eval invariant phi --partition \"1,3|2,4\"").exit_code == 2);
    CHECK(run_cli("eval invariant phi --partition \"bogus\"").exit_code == 2);
    CHECK(run_cli("eval invariant nope --partition \"1\"").exit_code == 2);
    CHECK(run_cli("series invert --coeffs 1 --order 99").exit_code == 3);
    CHECK(run_cli("enumerate --legs 99").exit_code == 3);
    CHECK(run_cli("verify --suite nope").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("block guards are environment configurable") {
    const char* cli = std::getenv("NCP_CLI");
    REQUIRE(cli != nullptr);
    std::string base = std::string("NCP_GUARD_BLOCKS=3 \"") + cli + "\" ";
    {
        FILE* pipe = popen((base + "eval invariant phi --partition \"1|2|3|4\" "
                                   "--algorithm coproduct 2>/dev/null; echo rc=$?")
                               .c_str(),
                           "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buf[256];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        pclose(pipe);
        CHECK(out.find("rc=3") != std::string::npos);
    }
    {
        FILE* pipe = popen((std::string("NCP_GUARD_BLOCKS=bad \"") + cli +
                            "\" enumerate --legs 2 2>/dev/null; echo rc=$?")
                               .c_str(),
                           "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buf[256];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        pclose(pipe);
        CHECK(out.find("rc=2") != std::string::npos);
    }
}

TEST_CASE("repeated invocations are bit identical") {
    const std::string cmd = "verify --suite invariants --max-legs 3 --format json";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run_cli("table p-n --max-n 6 --format csv");
    auto d = run_cli("table p-n --max-n 6 --format csv");
    CHECK(c.out == d.out);
}
