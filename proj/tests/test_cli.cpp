// drives the installed binary end to end through a shell; REPWORDS_CLI_PATH
// is injected by the build so the test finds the freshly built executable

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  const std::string& env_prefix = "") {
    {
        std::ofstream in("cli_stdin.txt", std::ios::binary);
        in << stdin_text;
    }
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + REPWORDS_CLI_PATH " " +
                      args + " < cli_stdin.txt > cli_stdout.txt 2> cli_stderr.txt";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp("cli_stdout.txt");
    r.err = slurp("cli_stderr.txt");
    return r;
}

// census output minus the wall-clock column, the only nondeterministic cell
std::string strip_timing(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        std::size_t comma = line.rfind(',');
        out += line.substr(0, comma) + "\n";
    }
    return out;
}

const char* kFiveVertex = "--edges 1-3,1-4,2-3,2-4,3-4 --n 5";
const char* kSixVertex = "--edges 1-2,1-4,1-6,2-6,3-4,3-5,3-6,5-6";
const char* kTwinHouse = "--edges 1-2,2-3,3-4,4-6,3-6,3-5,5-6,1-6";
const char* kCoInterval6 = "--edges 1-3,1-4,1-5,1-6,2-4,2-6,3-4";

}  // namespace

TEST_CASE("check emits a verified word with a stable encoding") {
    RunResult r = run_cli(std::string("check ") + kFiveVertex + " --pattern 123");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "represented");
    CHECK(j["word"] == json::array({4, 3, 2, 1, 5, 2}));
    CHECK(j["avoided_patterns"] == json::array({"123"}));
    CHECK(j["method"] == "pattern");

    RunResult again = run_cli(std::string("check ") + kFiveVertex + " --pattern 123");
    CHECK(again.out == r.out);
}

TEST_CASE("check reports the obstruction when the pattern family refuses") {
    RunResult r = run_cli(std::string("check ") + kTwinHouse + " --pattern 132");
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["status"] == "refuted");
    CHECK(j["witness"]["pattern"].get<std::string>().rfind("FP132", 0) == 0);
    CHECK(j["witness"]["vertices"].size() >= 3);
}

TEST_CASE("graphs arrive on stdin in either format") {
    RunResult edge_list = run_cli("check - --pattern 211 --format text", "4\n");
    CHECK(edge_list.code == 0);
    CHECK(edge_list.out == "represented word=1234 avoids=211 method=pattern\n");

    RunResult g6 = run_cli("check - --pattern none", "Bw\n");
    CHECK(g6.code == 0);
    json j = json::parse(g6.out);
    CHECK(j["word"] == json::array({3, 2, 1}));
}

TEST_CASE("represent stays constructive until the oracle is allowed") {
    RunResult gated = run_cli(std::string("represent ") + kSixVertex);
    CHECK(gated.code == 2);
    json j = json::parse(gated.out);
    CHECK(j["status"] == "unknown");
    CHECK(j["reason"].get<std::string>().find("--oracle") != std::string::npos);

    RunResult open = run_cli(std::string("represent ") + kSixVertex + " --oracle");
    CHECK(open.code == 0);
    CHECK(json::parse(open.out)["status"] == "represented");

    // refutations never need the oracle
    RunResult refuted = run_cli("represent --edges 1-3 --n 3 --pattern 121");
    CHECK(refuted.code == 1);
    CHECK(json::parse(refuted.out)["witness"]["pattern"] == "FP_COCOMP");
}

TEST_CASE("check may fall back to exhaustive search") {
    RunResult r = run_cli("check --edges 1-3 --n 3 --pattern 321 --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "represented word=2312 avoids=321 method=oracle\n");
}

TEST_CASE("census rows and byte stability") {
    RunResult r = run_cli("census --n 3 --pattern 12");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,pattern,labeled_total,unlabeled_total,", 0) == 0);
    CHECK(r.out.find("3,12,8,4,1,1,1,true,") != std::string::npos);

    RunResult a = run_cli("census --n 3");
    RunResult b = run_cli("census --n 3");
    CHECK(a.code == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
    // one row per selector plus the header
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 17);

    RunResult j = run_cli("census --n 3 --pattern 321 --format json");
    json arr = json::parse(j.out);
    CHECK(arr[0]["labeled_count_pattern"].is_null());
    CHECK(arr[0]["labeled_count_oracle"] == 6);
}

TEST_CASE("crossvalidate agrees on every default selector") {
    RunResult r = run_cli("crossvalidate --n 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("n=3 graphs=8\n") != std::string::npos);
    CHECK(r.out.find("pattern,graphs,represented_pattern,represented_oracle,disagreements\n") !=
          std::string::npos);
    CHECK(r.out.find("121,8,6,6,0") != std::string::npos);
    CHECK(r.out.find("231,8,5,5,0") != std::string::npos);
    CHECK(r.out.find("123,8,7,7,0") != std::string::npos);
    CHECK(r.out.find("132,8,6,6,0") != std::string::npos);
    CHECK(r.out.find("211,8,7,7,0") != std::string::npos);

    // oracle-only selectors have nothing to cross-validate against
    RunResult bad = run_cli("crossvalidate --n 3 --patterns 321");
    CHECK(bad.code == 64);
    CHECK(bad.err.find("no standalone pattern characterization") != std::string::npos);
    CHECK(run_cli("crossvalidate --n 3 --patterns 12").code == 64);
}

TEST_CASE("model subcommand emits diagrams in three formats") {
    RunResult svg = run_cli(std::string("model ") + kFiveVertex + " --kind mpt");
    CHECK(svg.code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);

    RunResult hook = run_cli(std::string("model ") + kFiveVertex + " --kind hook --format json");
    CHECK(hook.code == 0);
    json hj = json::parse(hook.out);
    CHECK(hj["kind"] == "hook");
    CHECK(hj["unit"] == true);
    CHECK(hj["hooks"][1]["c"] == "4/3");

    RunResult tikz = run_cli(std::string("model ") + kFiveVertex + " --kind mpt --format tikz");
    CHECK(tikz.out.find("\\begin{tikzpicture}") != std::string::npos);

    RunResult blocked = run_cli(std::string("model ") + kCoInterval6 + " --kind interval");
    CHECK(blocked.code == 1);
    CHECK(blocked.out.find("FP132.b") != std::string::npos);
    CHECK(blocked.out.find("at vertices 2 3 5 6") != std::string::npos);

    RunResult comp = run_cli("model --edges 1-2,2-3 --kind mpt");
    CHECK(comp.code == 1);
    CHECK(comp.out.find("FP_COMP") != std::string::npos);
}

TEST_CASE("selftest passes") {
    RunResult r = run_cli("selftest");
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage problems exit 64 with a message") {
    CHECK(run_cli("check --edges 1-2 --pattern 999").code == 64);
    CHECK(run_cli("check --edges 1+2").code == 64);
    CHECK(run_cli("check").code == 64);          // no graph at all
    CHECK(run_cli("check --edges 1-3 --n 2").code == 64);
    CHECK(run_cli("check --edges 1-2 nonexistent.txt").code == 64);
    CHECK(run_cli("census").code == 64);         // --n is required
    CHECK(run_cli("census --n 0").code == 64);
    CHECK(run_cli("census --n 9").code == 64);
    CHECK(run_cli("nonsense").code != 0);

    RunResult r = run_cli("check --edges 1-2 --pattern 999");
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("the jobs override comes from the environment") {
    RunResult bad = run_cli(std::string("check ") + kFiveVertex, "", "REPWORDS_JOBS=abc");
    CHECK(bad.code == 64);
    CHECK(bad.err.find("REPWORDS_JOBS") != std::string::npos);

    RunResult ok = run_cli(std::string("check ") + kFiveVertex, "", "REPWORDS_JOBS=2");
    CHECK(ok.code == 0);
}

TEST_CASE("output lands in the requested file") {
    RunResult r = run_cli(std::string("check ") + kFiveVertex + " --pattern 123 -o cli_word.json");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    json j = json::parse(slurp("cli_word.json"));
    CHECK(j["word"] == json::array({4, 3, 2, 1, 5, 2}));
    std::remove("cli_word.json");
}
