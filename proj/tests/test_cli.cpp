#include "doctest.h"
#include "support.hpp"

#include "mixc1_cli/cli.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mixc1;
using namespace mixc1::testing;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("mixc1_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("analyze")
{
    SUBCASE("generic parabolic example, d = 6")
    {
        const Run r = run({"example", "ex1-generic", "analyze", "--degree", "6"});
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["dimensions"]["total"] == 61);
        CHECK(j["space"]["branch"] == "C-lemma5");
        CHECK(j["interface"]["case"] == "C");
        CHECK(j["lemma4_constant"] == "133/300");
        CHECK(j["gluing"]["beta1"] == json::array({"0.1", "0.4"}));
    }
    SUBCASE("non-uniform straight edge, d = 5")
    {
        const Run r = run({"example", "ex2-generic", "analyze", "-d", "5"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["dimensions"]["interface_dofs"] == 9);
    }
    SUBCASE("float companions")
    {
        const Run r = run({"example", "ex3", "analyze", "--float"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["gluing"]["beta"].contains("float"));
    }
    SUBCASE("mesh file")
    {
        const std::string path = temp_file("mesh.json", mesh_to_json(bundled_example("ex2-case2")));
        const Run r = run({"analyze", path, "-d", "4"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["space"]["branch"] == "B2");
    }
}

TEST_CASE("verify")
{
    SUBCASE("condition number of the generic parabolic example")
    {
        const Run r = run({"example", "ex1-generic", "verify", "--degree", "6", "--cond"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["condition_number"].get<double>() == doctest::Approx(40.35).epsilon(0.01));
    }
    SUBCASE("default check is the identity")
    {
        const Run r = run({"example", "ex3-case2", "verify", "-d", "4"});
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["identity"]["pass"] == true);
        CHECK(j["identity"]["checked"] == j["formula_total"]);
        CHECK_FALSE(j.contains("oracle"));
    }
    SUBCASE("all checks")
    {
        const Run r = run({"example", "ex1-gamma-beta", "verify", "-d", "3", "--oracle", "--identity",
                           "--gradient-samples", "21", "--cond", "--functional-scaling", "unit",
                           "--no-mu-orthogonalize"});
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["oracle"]["pass"] == true);
        CHECK(j["gradient_jump"]["pass"] == true);
        CHECK(j["pass"] == true);
    }
}

TEST_CASE("basis and sample")
{
    SUBCASE("basis json")
    {
        const Run r = run({"example", "ex2-generic", "basis", "-d", "3"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out).is_object());
    }
    SUBCASE("csv samples")
    {
        const Run r = run({"example", "ex1-generic", "sample", "-d", "3", "--n", "2", "--function", "1"});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("elem,u,v,x,y,value\n", 0) == 0);
        // triangle 6 points + quad 9 points
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 6 + 9);
        const Run b = run({"example", "ex1-generic", "basis", "-d", "3", "--format", "csv-sample", "--n", "2",
                           "--function", "1"});
        CHECK(b.out == r.out);
    }
    SUBCASE("function index out of range")
    {
        const Run r = run({"example", "ex1-generic", "sample", "-d", "3", "--function", "999"});
        CHECK(r.code == 3);
    }
}

TEST_CASE("example list")
{
    const Run r = run({"example", "list"});
    REQUIRE(r.code == 0);
    for (const auto& name : corpus())
        CHECK(r.out.find(name + "\t") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"example", "ex1-generic"}).code == 2);
    CHECK(run({"example", "no-such-example", "analyze"}).code == 2);
    CHECK(run({"example", "ex1-generic", "analyze", "-d", "1"}).code == 2);
    CHECK(run({"example", "ex1-generic", "basis", "--format", "xml"}).code == 2);
    CHECK(run({"analyze", "/nonexistent/mesh.json"}).code == 2);
    CHECK(run({"analyze", temp_file("broken.json", "{")}).code == 2);

    // shared control point moved: validation error
    json doc = json::parse(mesh_to_json(bundled_example("ex1-generic")));
    doc["elements"][1]["control_points"][1] = json::array({"1/4", "0.501"});
    const Run r = run({"analyze", temp_file("mismatch.json", doc.dump())});
    CHECK(r.code == 3);
    CHECK(r.err.find("EdgeMismatch") != std::string::npos);

    CHECK(run({"example", "ex1-generic", "analyze", "--help"}).code == 0);
}

TEST_CASE("identical input gives byte-identical output")
{
    for (const char* cmd : {"analyze", "basis", "verify"}) {
        const std::vector<std::string> args{"example", "ex1-special-c1", cmd, "-d", "4"};
        CHECK(run(args).out == run(args).out);
    }
    const std::string path = temp_file("det.json", mesh_to_json(bundled_example("ex3")));
    CHECK(run({"basis", path, "-d", "3"}).out == run({"basis", path, "-d", "3"}).out);
}
