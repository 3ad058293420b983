#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ouroboros/cli.hpp"
#include "ouroboros/generators.hpp"
#include "ouroboros/io.hpp"
#include "ouroboros/matrix.hpp"

using namespace ouroboros;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("trace-degree") {
    auto r = run({"trace-degree", "--n", "100", "--formula-only"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "5150\n");
    CHECK(run({"trace-degree", "--n", "8"}).out == "44\n");
    auto big = run({"trace-degree", "--n", "13"});
    CHECK(big.code == kExitDomainError);
    CHECK(big.err.find("--formula-only") != std::string::npos);
}

TEST_CASE("gen in every format") {
    CHECK(run({"gen", "--n", "2", "--k", "1", "--j", "1", "--format", "latex"}).out == "c_1^2+c_1c_2-c_1\n");
    CHECK(run({"--format", "latex", "gen", "--n", "2", "--k", "1", "--j", "1"}).out == "c_1^2+c_1c_2-c_1\n");
    CHECK(run({"gen", "--n", "2", "--k", "1", "--j", "1"}).out == "c1^2+c1c2-c1\n");
    auto json = run({"gen", "--n", "2", "--k", "1", "--j", "2", "--format", "json"});
    CHECK(parse_json(json.out) == gen_p(2, 1, 2));
}

TEST_CASE("matrix, trace, det, charpoly, roots") {
    CHECK(run({"matrix", "--n", "1", "--m", "2"}).out == "[c1^2-c1, c1^3-c1]\n");
    CHECK(run({"trace", "--n", "1"}).out == "c1^2-c1\n");
    CHECK(run({"trace", "--n", "2", "--standard"}).out == render_plain(trace_sum(build_matrix(2, 2))) + "\n");
    CHECK(run({"trace", "--n", "2"}).out == render_plain(trace_product(build_matrix(2, 2))) + "\n");
    auto leib = run({"det", "--n", "3"});
    auto cof = run({"det", "--n", "3", "--method", "cofactor"});
    CHECK(leib.code == kExitOk);
    CHECK(leib.out == cof.out);
    CHECK(run({"charpoly", "--n", "1", "--format", "latex"}).out == "c_1^2-c_1-\\lambda\n");
    CHECK(run({"roots", "--n", "2", "--k", "1"}).out == "c1 = 0\nc1 = -c2+1\n");
    CHECK(run({"roots", "--n", "1", "--k", "1", "--format", "latex"}).out == "c_1 = 0\nc_1 = 1\n");
    CHECK(run({"roots", "--n", "2", "--k", "2", "--format", "json"}).out ==
          R"({"variable":"c2","roots":[{"vars":["c1","c2"],"terms":[]},)"
          R"({"vars":["c1","c2"],"terms":[{"coeff":"-1","exps":[1,0]},{"coeff":"1","exps":[0,0]}]}]})"
          "\n");
}

TEST_CASE("verify") {
    auto r = run({"verify", "--n-max", "4", "--j-max", "4", "--samples", "10", "--seed", "0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "cases_total: 80\ncases_passed: 80\nfailures: 0\n");
    auto j = run({"verify", "--n-max", "2", "--j-max", "2", "--samples", "3", "--format", "json"});
    CHECK(j.out == R"({"cases_total":12,"cases_passed":12,"failures":[]})"
                   "\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"gen", "--n", "2", "--k", "1"}).code == kExitUsage);
    CHECK(run({"gen", "--n", "2", "--k", "1", "--j", "1", "--bogus"}).code == kExitUsage);
    CHECK(run({"gen", "--n", "2", "--k", "1", "--j", "1", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"det", "--n", "2", "--method", "lu"}).code == kExitUsage);

    auto domain = run({"gen", "--n", "2", "--k", "3", "--j", "1"});
    CHECK(domain.code == kExitDomainError);
    CHECK(domain.err.find("out of range") != std::string::npos);
    CHECK(run({"gen", "--n", "0", "--k", "1", "--j", "1"}).code == kExitDomainError);
    CHECK(run({"verify", "--n-max", "1", "--j-max", "1", "--samples", "-1"}).code == kExitDomainError);

    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> commands = {
        {"verify", "--n-max", "3", "--j-max", "3", "--samples", "5", "--seed", "42", "--format", "json"},
        {"det", "--n", "3", "--format", "json"},
        {"charpoly", "--n", "2", "--format", "latex"},
        {"matrix", "--n", "3", "--m", "2", "--format", "json"},
    };
    for (const auto& c : commands) CHECK(run(c).out == run(c).out);
}
