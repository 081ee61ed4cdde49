#include <catch2/catch_amalgamated.hpp>

#include <cabletorus/json_io.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the installed binary through the shell; stderr is dropped unless the
// caller folds it into stdout with "2>&1".
RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" CABLETORUS_BIN "' " + args;
    if (cmd.find("2>&1") == std::string::npos) cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path =
        (std::filesystem::temp_directory_path() / ("cabletorus_test_" + name)).string();
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("documented example invocations print the documented bytes") {
    RunResult r = run("count-torus --meridian inf --slope -2/5 --json");
    CHECK(r.status == 0);
    CHECK(r.out == "{\"count\":4,\"universally_tight\":2}\n");

    r = run("farey-path inf -2/5 --dot");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "digraph farey_path {\n"
          "    rankdir=LR;\n"
          "    node [shape=ellipse];\n"
          "    v0 [label=\"inf\"];\n"
          "    v1 [label=\"-1\"];\n"
          "    v2 [label=\"-1/2\"];\n"
          "    v3 [label=\"-2/5\"];\n"
          "    v0 -> v1 [block=1];\n"
          "    v1 -> v2 [block=1];\n"
          "    v2 -> v3 [block=2];\n"
          "}\n");

    r = run("yasui -m -5");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "family m = -5  (tb_max = -1)\n"
          "  n = 2: cable (2,-1)  tb = -1  slope = -1/2\n"
          "width >= -1/2\n"
          "not uniformly thick: witness cable (2,-1), "
          "virtually overtwisted non-thickenable torus\n");
}

TEST_CASE("repeated invocations are byte identical") {
    for (const char* args :
         {"farey-path inf -2/5", "count-t2xi --from -3 --to -1 --json",
          "yasui -m -13 --json", "thicken -8/3"}) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.status == 0);
        CHECK(a.status == b.status);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("text reports match their frozen form") {
    RunResult r = run("farey-path inf -2/5");
    CHECK(r.out == "inf -> -1 -> -1/2 -> -2/5\njumps: 3  blocks: [1-2] [3]\n");

    r = run("thicken -8/3");
    CHECK(r.out == "-8/3 thickens to -2\npath: -8/3 -> -5/2 -> -2\n");

    r = run("count-t2xi --from -3 --to -1 --json");
    CHECK(r.out == "{\"count\":3,\"universally_tight\":2}\n");

    r = run("classify --vertices inf,-3,-2 --signs +-");
    CHECK(r.status == 0);
    CHECK(r.out == "verdict: Overtwisted\nwitness: none\n");

    r = run("cable -p 2 -q -1 --tb -1 --json");
    CHECK(r.out ==
          "{\"p\":2,\"q\":-1,\"tb\":-1,\"tw\":1,\"slope\":\"-1/2\","
          "\"trivial\":false,\"large\":true}\n");

    r = run("cable -p 2 -q -1 --tw 1 --shear -1");
    CHECK(r.out ==
          "cable (2,-1): tb = -1, tw = 1, slope = -1/2\n"
          "large: yes\n"
          "shear image (k = -1): (2,-1)\n");
}

TEST_CASE("classify accepts files and audits both semantics") {
    std::string path = write_temp(
        "path.json", R"({"vertices":["-3","-2","-1"],"signs":["+","-"],"truncated":false})");
    RunResult r = run("classify " + path + " --audit --json");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"verdict\":\"VirtuallyOvertwisted\","
          "\"witness\":{\"vertices\":[\"-3\",\"-2\",\"-1\"],\"signs\":[\"+\",\"-\"],"
          "\"truncated\":false},"
          "\"strict_universal\":true,\"modes_disagree\":false}\n");

    r = run("classify - --json < " + path);
    CHECK(r.status == 0);
    CHECK(r.out.find("VirtuallyOvertwisted") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("profiles flow through ut-test via stdin") {
    std::string profile = R"({"tb_max":-1,"cables":[{"p":2,"q":-1,"tb":-1}]})";
    RunResult r = run("ut-test - --json < " +
                      write_temp("profile.json", profile));
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"refuted\":true,\"witness\":{\"p\":2,\"q\":-1,\"tb\":-1},"
          "\"only_trivial_cables\":false}\n");
    std::filesystem::remove(
        (std::filesystem::temp_directory_path() / "cabletorus_test_profile.json").string());
}

TEST_CASE("ribbon-simplify emits traces, trees, and summaries") {
    std::string pres = write_temp(
        "pres.json",
        R"({"n":2,"chords":[[0,3],[1,2]],"alpha":{"1":"f2","2":"f1"},"framings":{"2":3}})");

    RunResult r = run("ribbon-simplify " + pres + " --dot");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "graph ribbon_dual {\n"
          "    node [shape=box];\n"
          "    p0;\n"
          "    p1;\n"
          "    p1 -- p0 [label=\"c1\"];\n"
          "}\n");

    r = run("ribbon-simplify " + pres + " --json");
    CHECK(r.status == 0);
    cabletorus::json j = cabletorus::json::parse(r.out);
    CHECK(j["cuts"] == 1);
    CHECK(j["pieces"] == 2);
    CHECK(j["peel_order"] == cabletorus::json::array({"p1", "p0"}));
    CHECK(j["handlebody"]["handle_pairs"] == 1);
    REQUIRE(j["handlebody"]["parity_adjustments"].size() == 1);
    CHECK(j["handlebody"]["parity_adjustments"][0]["from"] == 3);
    // the documented trace schema parses what the tool printed
    cabletorus::SimplificationTrace t = cabletorus::trace_from_json(j);
    CHECK(t.cuts == 1);
    CHECK(t.moves.size() == 3);

    r = run("ribbon-simplify " + pres);
    CHECK(r.status == 0);
    CHECK(r.out.find("cuts: 1  pieces: 2") != std::string::npos);
    CHECK(r.out.find("parity adjustments: c1: 3 -> 2") != std::string::npos);
    std::filesystem::remove(pres);
}

TEST_CASE("render falls back to DOT text without graphviz") {
    RunResult direct = run("farey-path inf -2 --dot");
    RunResult rendered = run("render path inf -2");
    CHECK(rendered.status == 0);
    if (rendered.out.rfind("digraph", 0) == 0) {
        CHECK(rendered.out == direct.out);
    } else {
        CHECK(rendered.out.find("<svg") != std::string::npos);
    }

    std::string out_file =
        (std::filesystem::temp_directory_path() / "cabletorus_test_render.out").string();
    RunResult to_file = run("render path inf -2 -o " + out_file);
    CHECK(to_file.status == 0);
    CHECK(std::filesystem::file_size(out_file) > 0);
    std::filesystem::remove(out_file);
}

TEST_CASE("exit codes separate domain errors from usage errors") {
    RunResult r = run("thicken 1/2 2>&1");
    CHECK(r.status == 1);
    CHECK(r.out.rfind("error:", 0) == 0);
    CHECK(r.out.find("apply a shear") != std::string::npos);
    CHECK(r.out.find("terminate") == std::string::npos);

    r = run("farey-path abc -2 2>&1");
    CHECK(r.status == 1);
    CHECK(r.out.rfind("error:", 0) == 0);

    std::string garbage = write_temp("garbage.json", "{not json");
    r = run("classify " + garbage + " 2>&1");
    CHECK(r.status == 1);
    CHECK(r.out.find("invalid JSON") != std::string::npos);
    std::filesystem::remove(garbage);

    CHECK(run("no-such-command 2>&1").status == 2);
    CHECK(run("farey-path inf 2>&1").status == 2);
    CHECK(run("farey-path inf -2 --json --dot 2>&1").status == 2);
    CHECK(run("cable -p 2 -q -1 2>&1").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("color control spans always, never, and validation") {
    RunResult colored = run("classify --vertices -2,-1 --signs + ", "CABLETORUS_COLOR=always");
    CHECK(colored.status == 0);
    CHECK(colored.out.find("\033[32m") != std::string::npos);

    RunResult plain = run("classify --vertices -2,-1 --signs + ", "CABLETORUS_COLOR=never");
    CHECK(plain.out.find("\033[") == std::string::npos);
    CHECK(plain.out.find("UniversallyTight") != std::string::npos);

    // stdout is a pipe here, so auto must not color either
    RunResult piped = run("classify --vertices -2,-1 --signs + ", "CABLETORUS_COLOR=auto");
    CHECK(piped.out == plain.out);

    RunResult bad = run("yasui -m -5 2>&1", "CABLETORUS_COLOR=loud");
    CHECK(bad.status == 2);
}
