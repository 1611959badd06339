#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    const std::string in_path = "/tmp/forms_cli_in.json";
    if (!stdin_text.empty()) {
        std::ofstream out(in_path);
        out << stdin_text;
    }
    std::string cmd = std::string(FORMS_CLI_PATH) + " " + args;
    if (!stdin_text.empty()) cmd += " < " + in_path;
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

const char* kPyramid =
    R"({"representation":"residue_pole","s":3,"residues":[[0,1],[0,1],[0,-2]],)"
    R"("poles":[[1,0],[-1,0],[0,0]]})";

} // namespace

TEST_CASE("convert round trips through the schema") {
    const RunResult coef = run("convert --to coefficient -", kPyramid);
    CHECK(coef.exit_code == 0);
    const json parsed = json::parse(coef.output);
    CHECK(parsed["representation"] == "coefficient");
    CHECK(parsed["s"] == 3);

    const RunResult back = run("convert --to residue_pole -", coef.output);
    CHECK(back.exit_code == 0);
    const json rp = json::parse(back.output);
    CHECK(rp["residues"].size() == 3);

    // Converting to the own representation reproduces the document.
    const RunResult same = run("convert --to residue_pole -", kPyramid);
    CHECK(json::parse(same.output)["poles"] == json::parse(kPyramid)["poles"]);
}

TEST_CASE("convert rejects invalid input with exit 1") {
    const RunResult bad = run(
        "convert --to coefficient -",
        R"({"representation":"residue_pole","s":2,"residues":[[1,0],[-1,0]],"poles":[[1,0],[1,0]]})");
    CHECK(bad.exit_code == 1);
    CHECK(json::parse(bad.output)["error"] == "RepeatedPole");
}

TEST_CASE("isotropy command") {
    const RunResult realize = run("realize --group Z4");
    CHECK(realize.exit_code == 0);
    const RunResult iso = run("isotropy -", realize.output);
    CHECK(iso.exit_code == 0);
    const json parsed = json::parse(iso.output);
    CHECK(parsed["order"] == 4);
    CHECK(parsed["type"] == "Z_4");
    CHECK(parsed["elements"].size() == 4);

    const RunResult tetra = run("realize --group A4");
    const RunResult tiso = run("isotropy -", tetra.output);
    const json tj = json::parse(tiso.output);
    CHECK(tj["order"] == 12);
    CHECK(tj["type"] == "A4");

    const RunResult two = run(
        "isotropy -",
        R"({"representation":"residue_pole","s":2,"residues":[[1,0],[-1,0]],"poles":[[0,0],"inf"]})");
    CHECK(two.exit_code == 3);
    CHECK(json::parse(two.output)["error"] == "InfiniteIsotropy");
}

TEST_CASE("equivalence and isometry commands") {
    std::ofstream("/tmp/forms_a.json") << kPyramid;
    // The same configuration rotated by z -> -z.
    std::ofstream("/tmp/forms_b.json")
        << R"({"representation":"residue_pole","s":3,"residues":[[0,1],[0,1],[0,-2]],)"
        << R"("poles":[[-1,0],[1,0],[0,0]]})";
    // Residues scaled by -1 (unit modulus, not the same form).
    std::ofstream("/tmp/forms_c.json")
        << R"({"representation":"residue_pole","s":3,"residues":[[0,-1],[0,-1],[0,2]],)"
        << R"("poles":[[1,0],[-1,0],[0,0]]})";

    const RunResult eq = run("equivalent /tmp/forms_a.json /tmp/forms_b.json");
    CHECK(eq.exit_code == 0);
    CHECK(json::parse(eq.output)["equivalent"] == true);

    const RunResult noteq = run("equivalent /tmp/forms_a.json /tmp/forms_c.json");
    CHECK(json::parse(noteq.output)["equivalent"] == false);

    const RunResult isom = run("isometric /tmp/forms_a.json /tmp/forms_c.json");
    const json ij = json::parse(isom.output);
    CHECK(ij["equivalent"] == true);
    CHECK(ij["lambda"][0].get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("table commands") {
    const RunResult rows = run("table --from 3 --to 5");
    CHECK(rows.exit_code == 0);
    const json parsed = json::parse(rows.output);
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[0]["groups"] == json::array({"Z_2"}));
    CHECK(parsed[2]["groups"] == json::array({"Z_2", "Z_3", "Z_4", "D_3"}));

    const RunResult text = run("table --output table --from 4 --to 4");
    CHECK(text.output == "4 | Z_2, Z_3, Z_2xZ_2\n");

    const RunResult types = run("orbit-types --from 3 --to 5");
    const json tj = json::parse(types.output);
    CHECK(tj[0]["orbit_types"] == 2);
    CHECK(tj[1]["orbit_types"] == 4);
    CHECK(tj[2]["orbit_types"] == 5);
}

TEST_CASE("canonical and component commands") {
    const char* doc =
        R"({"representation":"residue_pole","s":4,"residues":[[0,1],[0,-2],[0,-3],[0,4]],)"
        R"("poles":[[0,0],"inf",[1,0],[5,0]]})";
    const RunResult canonical = run("canonical -", doc);
    CHECK(canonical.exit_code == 0);
    const json cj = json::parse(canonical.output);
    CHECK(cj["s"] == 4);
    CHECK(cj["residues"].size() == 3);
    CHECK(cj["poles"].size() == 1);

    const RunResult component = run("component4 -", doc);
    const json pj = json::parse(component.output);
    CHECK(pj["label"] == "X1+");
    CHECK(pj["class"] == 3);

    // Quotient-point input works as well.
    const RunResult direct = run("component4 -", cj.dump());
    CHECK(json::parse(direct.output)["label"] == "X1+");
}

TEST_CASE("invariants command") {
    const RunResult inv = run(
        "invariants -",
        R"({"representation":"residue_pole","s":2,"residues":[[1,0],[-1,0]],"poles":[[0,0],"inf"]})");
    CHECK(inv.exit_code == 0);
    const json parsed = json::parse(inv.output);
    REQUIRE(parsed["circumferences"].size() == 2);
    CHECK(parsed["circumferences"][0].get<double>() == doctest::Approx(6.283185307179586));
}

TEST_CASE("deterministic output") {
    const RunResult a = run("--seed 7 convert --to zero_pole -", kPyramid);
    const RunResult b = run("--seed 7 convert --to zero_pole -", kPyramid);
    CHECK(a.output == b.output);
}
