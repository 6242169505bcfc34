// End-to-end checks of the command-line tool. The binary path arrives in the
// QGR_CLI environment variable (set by CTest); commands run through the
// shell with stdout/stderr captured in a scratch directory.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

const std::string& cli_path() {
    static const std::string path = [] {
        const char* env = std::getenv("QGR_CLI");
        REQUIRE_MESSAGE(env != nullptr, "QGR_CLI must point at the CLI binary");
        return std::string(env);
    }();
    return path;
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "qgr_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd =
        cli_path() + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

} // namespace

TEST_CASE("build emits the representation document") {
    const auto r = run("build --poly 'y^2*z - x^3 - x*z^2 - z^3' --field p:5");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["dimension_vector"] == nlohmann::json({1, 10, 6}));
    CHECK(doc["field"]["p"] == 5);
    CHECK(doc["f"][7] == "1");

    const auto conic = run("build --poly 'x*z - y^2' --field p:3");
    CHECK(conic.exit_code == 0);
    CHECK(nlohmann::json::parse(conic.out)["dimension_vector"] == nlohmann::json({1, 6, 3}));
}

TEST_CASE("build rejects bad input with exit 2") {
    CHECK(run("build --poly 'x + y^2' --field p:5").exit_code == 2);
    CHECK(run("build --poly 'x -' --field p:5").exit_code == 2);
    CHECK(run("build --poly 'x*z - y^2' --field p:4").exit_code == 2);
    CHECK(run("build --poly 'x*z - y^2'").exit_code == 2); // missing --field
}

TEST_CASE("build warns about reducible and singular curves") {
    const auto r = run("build --poly 'x*z' --field p:2");
    CHECK(r.exit_code == 0); // diagnostics never fail the build
    CHECK(r.err.find("reducible") != std::string::npos);

    const auto cusp = run("build --poly 'y^2*z - x^3' --field p:5");
    CHECK(cusp.exit_code == 0);
    CHECK(cusp.err.find("singular") != std::string::npos);
    CHECK(cusp.err.find("[0:0:1]") != std::string::npos);
}

TEST_CASE("member verdicts") {
    const fs::path rep = scratch_dir() / "wei5.json";
    REQUIRE(run("build --poly 'y^2*z - x^3 - x*z^2 - z^3' --field p:5 -o " + rep.string())
                .exit_code == 0);

    const auto yes = run("member --rep " + rep.string() + " --point '[0:0:0:0:0:0:1:0:0:0]'");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("member") == 0);
    CHECK(yes.out.find("line3:") != std::string::npos);

    const auto no = run("member --rep " + rep.string() + " --point '[1:0:0:0:0:0:0:0:0:0]'");
    CHECK(no.exit_code == 0);
    CHECK(no.out.find("non-member") == 0);
    CHECK(no.out.find("f-condition") != std::string::npos);

    const auto wrong_dim = run("member --rep " + rep.string() + " --point '[1:0:0]'");
    CHECK(wrong_dim.exit_code == 2);
}

TEST_CASE("member reports the violated minor") {
    const fs::path rep = scratch_dir() / "conic3.json";
    REQUIRE(run("build --poly 'x*z - y^2' --field p:3 -o " + rep.string()).exit_code == 0);
    const auto r = run("member --rep " + rep.string() + " --point '[0:1:0:0:0:1]'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("non-member") == 0);
    CHECK(r.out.find("minor") != std::string::npos);
}

TEST_CASE("enumerate and curve-points report matching counts") {
    const fs::path rep = scratch_dir() / "conic3b.json";
    REQUIRE(run("build --poly 'x*z - y^2' --field p:3 -o " + rep.string()).exit_code == 0);

    const auto grass = run("enumerate --rep " + rep.string());
    CHECK(grass.exit_code == 0);
    CHECK(grass.out.find("count: 4") != std::string::npos);

    const auto curve = run("curve-points --poly 'x*z - y^2' --field p:3");
    CHECK(curve.exit_code == 0);
    CHECK(curve.out.find("count: 4") != std::string::npos);

    // determinism: identical runs produce identical bytes
    CHECK(run("enumerate --rep " + rep.string()).out == grass.out);

    // same cross-check on a cubic over F_2 (both sides report 3 points)
    const fs::path cubic = scratch_dir() / "cubic2.json";
    REQUIRE(run("build --poly 'y^2*z - x^3 - x*z^2 - z^3' --field p:2 -o " + cubic.string())
                .exit_code == 0);
    const auto g2 = run("enumerate --rep " + cubic.string());
    const auto c2 = run("curve-points --poly 'y^2*z - x^3 - x*z^2 - z^3' --field p:2");
    CHECK(g2.out.find("count: 3") != std::string::npos);
    CHECK(c2.out.find("count: 3") != std::string::npos);
}

TEST_CASE("json output formats") {
    const fs::path rep = scratch_dir() / "conic3json.json";
    REQUIRE(run("build --poly 'x*z - y^2' --field p:3 -o " + rep.string()).exit_code == 0);

    const auto grass = run("enumerate --rep " + rep.string() + " --format json");
    CHECK(grass.exit_code == 0);
    const auto doc = nlohmann::json::parse(grass.out);
    CHECK(doc["count"] == 4);
    CHECK(doc["points"].size() == 4);
    CHECK(doc["points"][0].contains("line2"));
    CHECK(doc["points"][0].contains("line3"));

    const auto verdict = run("member --rep " + rep.string() +
                             " --point '[0:0:0:0:0:1]' --format json");
    CHECK(verdict.exit_code == 0);
    CHECK(nlohmann::json::parse(verdict.out)["verdict"] == "member");

    const auto order = run("ec order --a 1 --b 1 --field p:5 --format json");
    CHECK(nlohmann::json::parse(order.out)["order"] == 9);
}

TEST_CASE("guard trips with exit 3 and the required value") {
    const fs::path rep = scratch_dir() / "conic3c.json";
    REQUIRE(run("build --poly 'x*z - y^2' --field p:3 -o " + rep.string()).exit_code == 0);
    const auto r = run("enumerate --rep " + rep.string() + " --guard 10");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("required guard: 364") != std::string::npos);
}

TEST_CASE("ec subcommands") {
    CHECK(run("ec identity --a 1 --b 1 --field p:5").out ==
          "[0:0:0:0:0:0:1:0:0:0]\n");

    const auto order = run("ec order --a 1 --b 1 --field p:5");
    CHECK(order.exit_code == 0);
    CHECK(order.out == "9\n");

    CHECK(run("ec add --a 0 --b 0 --field p:5").exit_code == 2); // singular curve

    // negation of a point and adding identity
    const auto neg =
        run("ec neg --a 1 --b 1 --field p:5 --points '[0:0:0:0:0:0:1:0:0:0]'");
    CHECK(neg.exit_code == 0);
    CHECK(neg.out == "[0:0:0:0:0:0:1:0:0:0]\n"); // -O = O

    // (0, 1) + O = (0, 1); the embedding of (0, 1) is nu_3([0:1:1])
    const auto sum = run("ec add --a 1 --b 1 --field p:5 --points '[0:0:0:0:0:0:1:1:1:1]' "
                         "--points '[0:0:0:0:0:0:1:0:0:0]' --show-curve");
    CHECK(sum.exit_code == 0);
    CHECK(sum.out == "[0:0:0:0:0:0:1:1:1:1]  curve=(0, 1)\n");

    const auto table = run("ec table --a 1 --b 1 --field p:5 --format json");
    CHECK(table.exit_code == 0);
    const auto doc = nlohmann::json::parse(table.out);
    CHECK(doc["order"] == 9);
    CHECK(doc["points"].size() == 9);
    CHECK(doc["table"].size() == 9);
    // row of the identity reproduces the legend
    std::size_t id_index = 0;
    for (std::size_t i = 0; i < 9; ++i)
        if (doc["points"][i] == "[0:0:0:0:0:0:1:0:0:0]")
            id_index = i;
    CHECK(doc["table"][id_index] == doc["points"]);

    const auto shown = run("ec identity --a 1 --b 1 --field p:5 --show-curve");
    CHECK(shown.out.find("curve=O") != std::string::npos);
}

TEST_CASE("member rejects corrupted representation files") {
    const fs::path rep = scratch_dir() / "broken.json";
    {
        std::ofstream out(rep);
        out << "{\"degree\": 3}";
    }
    const auto r = run("member --rep " + rep.string() + " --point '[1:0:0]'");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("missing field") != std::string::npos);
}
