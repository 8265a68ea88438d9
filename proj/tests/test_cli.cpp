#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the workbench binary through the shell; `capture_stderr` folds stream
// 2 into the captured text, otherwise stderr is dropped.
CliResult run_cli(const std::string& args, bool capture_stderr = false) {
    std::string command = std::string("'") + QIDENT_CLI_PATH + "' " + args;
    command += capture_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) out.append(buffer, got);
    int status = pclose(pipe);
    CliResult result;
    result.out = std::move(out);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("expand renders polynomials byte for byte") {
    auto r = run_cli("expand --qbinom 4 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + q + 2*q^2 + q^3 + q^4\n");

    auto zero = run_cli("expand --qbinom 3 -1");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "0\n");

    auto dilated = run_cli("expand --qbinom 2 1 --dilation 2");
    CHECK(dilated.exit_code == 0);
    CHECK(dilated.out == "1 + q^2\n");
}

TEST_CASE("expand renders series") {
    auto r = run_cli("expand --series inv-poch-z --m 1 --order 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "z^0: 1\nz^1: 1 + q\nz^2: 1 + q + q^2\n");

    auto bad = run_cli("expand --series nosuch --m 1 --order 2");
    CHECK(bad.exit_code == 2);

    auto neither = run_cli("expand");
    CHECK(neither.exit_code == 2);
}

TEST_CASE("census reports counts and weight sums") {
    auto r = run_cli("census --set A --m 1 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "count=3\nweight=q^2 + q^3 + q^4\n");

    auto members = run_cli("census --set V --m 1 --n 2 --members");
    CHECK(members.exit_code == 0);
    CHECK(members.out == "([],[2,1])\ncount=1\nweight=q^3\n");

    auto signed_u = run_cli("census --set U --m 1 --n 2 --signed");
    CHECK(signed_u.exit_code == 0);
    CHECK(signed_u.out == "count=5\nweight=2*q^2 + q^3 + 2*q^4\nsigned-weight=q^3\n");

    auto bad = run_cli("census --set X --m 1 --n 2");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("trace applies the maps") {
    auto phi = run_cli("trace --map phi --input '[7,5,5,4,4,4,4,2,2,2,1]'");
    CHECK(phi.exit_code == 0);
    CHECK(phi.out == "([5,4,4,2],[7,2,1])\n");

    auto inv = run_cli("trace --map phi-inverse --input '([5,4,4,2],[7,2,1])'");
    CHECK(inv.exit_code == 0);
    CHECK(inv.out == "[7,5,5,4,4,4,4,2,2,2,1]\n");

    auto theta = run_cli(
        "trace --map theta --input '([5,5,4,4,4,3,3,3,1,1],[5,3,2,2,1])'");
    CHECK(theta.exit_code == 0);
    CHECK(theta.out ==
          "([5,5,4,4,3,3,3,1,1],[5,4,4,3,2,2,1]) branch=REMOVE_FROM_LAMBDA pivot=4\n");

    auto arrow = run_cli("trace --map phi --input '[2,2,2]' --arrow");
    CHECK(arrow.exit_code == 0);
    CHECK(arrow.out == "[2,2,2] --phi--> ([2],[2])\n");

    auto arrow_theta = run_cli("trace --map theta --input '([2],[3,3])' --arrow");
    CHECK(arrow_theta.exit_code == 0);
    CHECK(arrow_theta.out == "([2],[3,3]) --theta[MOVE_TO_LAMBDA,3]--> ([3,2],[])\n");
}

TEST_CASE("trace error handling") {
    auto fixed = run_cli("trace --map theta --input '([2,2],[3,1])'", true);
    CHECK(fixed.exit_code == 2);
    CHECK(fixed.out.find("fixed set") != std::string::npos);

    auto malformed = run_cli("trace --map phi --input '[4,5]'", true);
    CHECK(malformed.exit_code == 2);

    auto bad_map = run_cli("trace --map nosuch --input '[1]'");
    CHECK(bad_map.exit_code == 2);
}

TEST_CASE("verify exit discipline") {
    auto ok = run_cli("verify --identity new3 --m-max 1 --n-max 2");
    CHECK(ok.exit_code == 0);

    auto broken = run_cli("verify --identity new3 --m-max 1 --n-max 2 --mutate new3-shift", true);
    CHECK(broken.exit_code == 1);
    CHECK(broken.out.find("first failing point") != std::string::npos);

    auto unknown = run_cli("verify --identity nosuch", true);
    CHECK(unknown.exit_code == 2);

    auto constrained = run_cli("verify --identity s2 --n-max 0", true);
    CHECK(constrained.exit_code == 2);

    auto no_subcommand = run_cli("");
    CHECK(no_subcommand.exit_code == 2);
}

TEST_CASE("verify plain output is stable") {
    auto r = run_cli("verify --identity new3 --m-max 0 --n-max 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "new3 m=0 n=0 a=0 PASS lhs=1 rhs=1\n"
          "new3 m=0 n=1 a=0 PASS lhs=1 rhs=1\n"
          "2/2 points pass\n");
}

TEST_CASE("verify json output") {
    auto r = run_cli("verify --identity new3 --m-max 2 --n-max 4 --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 15);
    for (const auto& entry : doc) {
        CHECK(entry.at("identity") == "new3");
        CHECK(entry.at("m").is_number_integer());
        CHECK(entry.at("n").is_number_integer());
        CHECK(entry.at("a").is_number_integer());
        CHECK(entry.at("lhs").is_string());
        CHECK(entry.at("rhs").is_string());
        CHECK(entry.at("pass") == true);
    }
    CHECK(doc.front().at("lhs") == "1");

    // identical invocations byte-match
    auto again = run_cli("verify --identity new3 --m-max 2 --n-max 4 --format json");
    CHECK(again.out == r.out);
}

TEST_CASE("verify csv output") {
    auto r = run_cli("verify --identity s1 --n-max 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("identity,m,n,a,lhs,rhs,pass\n", 0) == 0);
    CHECK(r.out.find("\ns1,0,2,0,\"2\",\"2\",true") != std::string::npos);
}

TEST_CASE("selftest quick run") {
    auto ok = run_cli("selftest --quick");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("new3-identity") != std::string::npos);
    CHECK(ok.out.find("cli-contract") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    auto broken = run_cli("selftest --quick --mutate theta-tie");
    CHECK(broken.exit_code == 1);
    CHECK(broken.out.find("FAIL") != std::string::npos);
    CHECK(broken.out.find("theta-involutive-route") != std::string::npos);
}
