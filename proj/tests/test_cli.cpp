#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "doctest.h"

namespace {

struct RunResult {
    int code = -1;
    std::string out;  // stdout and stderr interleaved
};

const std::string& cli() {
    static const std::string path = ACFG_CLI_PATH;
    return path;
}

const std::string& scratch() {
    static const std::string dir = [] {
        char tmpl[] = "/tmp/acfg-cli-XXXXXX";
        char* made = mkdtemp(tmpl);
        REQUIRE(made != nullptr);
        return std::string(made);
    }();
    return dir;
}

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = cli() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli version and help") {
    RunResult v = run("--version");
    CHECK(v.code == 0);
    CHECK(v.out == "acfg 0.1.0\n");

    RunResult h = run("--help");
    CHECK(h.code == 0);
    CHECK(contains(h.out, "eval"));
    CHECK(contains(h.out, "exists"));
    CHECK(contains(h.out, "props"));
}

TEST_CASE("cli gen builtin plus eval") {
    std::string g = scratch() + "/fig2.graph";
    RunResult gen = run("gen fig2_altruism -o " + g);
    CHECK(gen.code == 0);
    CHECK(contains(gen.out, "wrote " + g + " (10 players, 6 friendships)"));
    CHECK(contains(gen.out, "wrote " + g + ".json (distinguished structures)"));

    std::string part = scratch() + "/fig2-gamma.part";
    write_text(part, "1 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10\n");

    RunResult text = run("eval " + g + " " + part + " --model sumSF --per-player");
    CHECK(text.code == 0);
    CHECK(contains(text.out, "graph: 10 players, 6 friendships"));
    CHECK(contains(text.out, "model: sumSF"));
    CHECK(contains(text.out, "structure: 1 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10"));
    CHECK(contains(text.out, "player"));
    CHECK(contains(text.out, "utility"));
    CHECK(contains(text.out, "10010"));  // player 1's utility

    RunResult brief = run("eval " + g + " " + part + " --model sumSF");
    CHECK(contains(brief.out, "players: 10 (use --per-player for rows)"));
    CHECK_FALSE(contains(brief.out, "10010"));

    RunResult js = run("eval " + g + " " + part + " --model sumSF --json");
    CHECK(js.code == 0);
    nlohmann::json doc = nlohmann::json::parse(js.out);
    CHECK(doc.at("schema") == "acfg-report-v1");
    CHECK(doc.at("version") == "0.1.0");
    CHECK(doc.at("command") == "eval");
    const auto& p1 = doc.at("result").at("players").at(0);
    CHECK(p1.at("player") == 1);
    CHECK(p1.at("v") == 10);
    CHECK(p1.at("sum_f") == 10);
    CHECK(p1.at("sum_f_incl") == 20);
    CHECK(p1.at("min_f") == 0);
    CHECK(p1.at("min_f_incl") == 0);
    CHECK(p1.at("utility") == "10010");
}

TEST_CASE("cli gen writes fixture sidecars") {
    std::string g = scratch() + "/fig1.graph";
    RunResult gen = run("gen fig1_path4 -o " + g);
    CHECK(gen.code == 0);
    CHECK(contains(gen.out, "wrote " + g + " (4 players, 3 friendships)"));
    CHECK(contains(gen.out, "wrote " + g + ".json (distinguished structures)"));

    nlohmann::json side = nlohmann::json::parse(read_text(g + ".json"));
    CHECK(side.at("schema") == "acfg-fixture-v1");
    CHECK(side.at("name") == "fig1_path4");
    CHECK(side.at("structures").at("gamma") == "1 2 3 | 4");
    CHECK(side.at("structures").at("delta_prime") == "1 | 2 4 | 3");

    // unique prefixes resolve; underscore-aligned prefixes win over raw ones
    CHECK(run("gen fig9 -o " + scratch() + "/fig9.graph").code == 0);
    CHECK(run("gen fig1 -o " + scratch() + "/fig1b.graph").code == 0);
    RunResult ambiguous = run("gen fig5 -o " + scratch() + "/fig5.graph");
    CHECK(ambiguous.code == 2);
    CHECK(contains(ambiguous.out,
                   "error: ambiguous fixture name fig5 "
                   "(matches fig5_g1 fig5_g1p fig5_g2 fig5_g2p)"));
}

TEST_CASE("cli compare") {
    std::string g = scratch() + "/cmp.graph";
    REQUIRE(run("gen fig1_path4 -o " + g).code == 0);
    std::string a = scratch() + "/cmp-a.part";
    std::string b = scratch() + "/cmp-b.part";
    write_text(a, "1 | 2 3 | 4\n");
    write_text(b, "1 | 2 4 | 3\n");

    for (const char* m : {"sumSF", "sumEQ", "sumAL", "minSF", "minEQ", "minAL"}) {
        RunResult one = run("compare " + g + " " + a + " " + b + " --model " + m +
                            " --player 1");
        CHECK(one.code == 0);
        CHECK(contains(one.out, "player 1: prefers the first"));
    }

    RunResult all = run("compare " + g + " " + a + " " + b + " --model sumSF");
    CHECK(all.code == 0);
    CHECK(contains(all.out, "counts: 4 prefer the first, 0 the second, 0 indifferent"));

    RunResult js = run("compare " + g + " " + a + " " + b + " --model minAL --json");
    nlohmann::json doc = nlohmann::json::parse(js.out);
    CHECK(doc.at("result").at("prefer_first") == 4);
    CHECK(doc.at("result").at("prefer_second") == 0);
    CHECK(doc.at("result").at("indifferent") == 0);
}

TEST_CASE("cli verify") {
    std::string g = scratch() + "/fig8.graph";
    REQUIRE(run("gen fig8_blocking -o " + g).code == 0);
    std::string grand = scratch() + "/fig8-grand.part";
    write_text(grand, "1 2 3 4 5 6 7 8 9 10\n");

    RunResult bad = run("verify " + g + " " + grand + " --model sumEQ --notion core --witness");
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "verdict: unstable"));
    CHECK(contains(bad.out, "witness: blocking coalition {8, 9, 10}"));

    RunResult quiet = run("verify " + g + " " + grand + " --model sumEQ --notion core");
    CHECK(quiet.code == 1);
    CHECK_FALSE(contains(quiet.out, "witness:"));

    RunResult good = run("verify " + g + " " + grand + " --model minSF --notion strictcore");
    CHECK(good.code == 0);
    CHECK(contains(good.out, "verdict: stable"));

    RunResult js = run("verify " + g + " " + grand + " --model minSF --notion core --json");
    CHECK(js.code == 0);
    nlohmann::json doc = nlohmann::json::parse(js.out);
    CHECK(doc.at("result").at("stable") == true);
    CHECK(doc.at("result").at("witness").is_null());
}

TEST_CASE("cli exists") {
    std::string g = scratch() + "/fig1e.graph";
    REQUIRE(run("gen fig1_path4 -o " + g).code == 0);

    RunResult no = run("exists " + g + " --model sumSF --notion perfect");
    CHECK(no.code == 1);
    CHECK(contains(no.out, "found: no"));
    CHECK(contains(no.out, "partitions examined: 15"));
    CHECK_FALSE(contains(no.out, "structure:"));

    RunResult yes = run("exists " + g + " --model minAL --notion nash");
    CHECK(yes.code == 0);
    CHECK(contains(yes.out, "found: yes"));
    CHECK(contains(yes.out, "structure: 1 2 3 4"));
    CHECK(contains(yes.out, "partitions examined: 0"));

    RunResult capped = run("exists " + g + " --model sumEQ --notion core --limit 3");
    CHECK(capped.code == 2);
    CHECK(contains(capped.out, "error: core existence search capped at n = 3 (got n = 4)"));
}

TEST_CASE("cli json reports are deterministic apart from timing") {
    std::string g = scratch() + "/det.graph";
    REQUIRE(run("gen fig1_path4 -o " + g).code == 0);
    RunResult first = run("exists " + g + " --model sumEQ --notion perfect --json");
    RunResult second = run("exists " + g + " --model sumEQ --notion perfect --json");
    CHECK(first.code == second.code);
    nlohmann::json a = nlohmann::json::parse(first.out);
    nlohmann::json b = nlohmann::json::parse(second.out);
    CHECK(a.at("elapsed_ms").is_number());
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a == b);
}

TEST_CASE("cli error reporting") {
    std::string g = scratch() + "/err.graph";
    REQUIRE(run("gen fig1_path4 -o " + g).code == 0);
    std::string part = scratch() + "/err.part";
    write_text(part, "1 2 3 4\n");

    RunResult model = run("eval " + g + " " + part + " --model equal");
    CHECK(model.code == 2);
    CHECK(contains(model.out,
                   "error: unknown model: equal "
                   "(expected sumSF, sumEQ, sumAL, minSF, minEQ or minAL)"));

    RunResult notion = run("verify " + g + " " + part + " --model sumSF --notion fair");
    CHECK(notion.code == 2);
    CHECK(contains(notion.out,
                   "error: unknown notion: fair (expected nash, ir, is, cis, tis, core, "
                   "strictcore, popular, strictpopular or perfect)"));

    RunResult missing = run("eval " + scratch() + "/absent.graph " + part + " --model sumSF");
    CHECK(missing.code == 2);
    CHECK(contains(missing.out, "error:"));

    std::string twice = scratch() + "/twice.part";
    write_text(twice, "1 2 3 4\n1 | 2 3 4\n");
    RunResult multi = run("eval " + g + " " + twice + " --model sumSF");
    CHECK(multi.code == 2);
    CHECK(contains(multi.out,
                   "error: " + twice + ": expected exactly one coalition structure, found 2"));

    RunResult kind = run("gen nonsense -o " + scratch() + "/x.graph");
    CHECK(kind.code == 2);
    CHECK(contains(kind.out, "error: unknown kind nonsense (expected one of: gadget, random, "
                             "rx3c, fig1_path4"));
}

TEST_CASE("cli gen gadget") {
    std::string g = scratch() + "/gadget.graph";
    RunResult gen = run("gen gadget -o " + g + " --variant min-sf-core --k 2");
    CHECK(gen.code == 0);
    CHECK(contains(gen.out, "wrote " + g + " (60 players, 147 friendships)"));
    CHECK(contains(gen.out, "wrote " + g + ".json (labels, gamma, warnings)"));
    CHECK(contains(gen.out,
                   "warning: k = 2 is below the size the hardness argument assumes (k > 4)"));
    nlohmann::json side = nlohmann::json::parse(read_text(g + ".json"));
    CHECK(side.at("schema") == "acfg-gadget-v1");
    CHECK(side.at("n") == 60);

    std::string inst = scratch() + "/inst.rx3c";
    RunResult rx = run("gen rx3c -o " + inst + " --k 2");
    CHECK(rx.code == 0);
    CHECK(contains(rx.out, "wrote " + inst + " (k=2, 6 triples)"));
    CHECK(read_text(inst) == "2\n1 2 3\n1 2 3\n1 2 3\n4 5 6\n4 5 6\n4 5 6\n");

    std::string g2 = scratch() + "/gadget2.graph";
    RunResult from_file = run("gen gadget -o " + g2 + " --variant sum-sf-strictpop --rx3c " +
                              inst);
    CHECK(from_file.code == 0);
    CHECK(contains(from_file.out, "(28 players,"));

    RunResult mismatch = run("gen gadget -o " + g2 + " --variant sum-sf-strictpop --rx3c " +
                             inst + " --k 3");
    CHECK(mismatch.code == 2);
    CHECK(contains(mismatch.out, "error: --k disagrees with the instance file"));

    RunResult unk = run("gen gadget -o " + g2 + " --variant min-core --k 2");
    CHECK(unk.code == 2);
    CHECK(contains(unk.out, "error: --variant must be one of min-sf-core, sum-sf-core, "
                            "min-sf-strictpop, sum-sf-strictpop"));

    RunResult nok = run("gen gadget -o " + g2 + " --variant min-sf-core");
    CHECK(nok.code == 2);
    CHECK(contains(nok.out, "error: gadget generation needs --k or --rx3c"));
}

TEST_CASE("cli gen random") {
    std::string a = scratch() + "/rand-a.graph";
    std::string b = scratch() + "/rand-b.graph";
    CHECK(run("gen random -o " + a + " --n 8 --p 0.5 --seed 9").code == 0);
    CHECK(run("gen random -o " + b + " --n 8 --p 0.5 --seed 9").code == 0);
    CHECK(read_text(a) == read_text(b));

    RunResult missing = run("gen random -o " + a + " --n 8");
    CHECK(missing.code == 2);
    CHECK(contains(missing.out, "error: random generation needs --n and --p"));
}

TEST_CASE("cli props") {
    std::string fig2 = scratch() + "/props2.graph";
    REQUIRE(run("gen fig2_altruism -o " + fig2).code == 0);
    RunResult clean = run("props " + fig2 + " --model sumEQ --check mono1 --samples 200");
    CHECK(clean.code == 0);
    CHECK(contains(clean.out, "check: mono1"));
    CHECK(contains(clean.out, "samples: 200"));
    CHECK(contains(clean.out, "violations: 0"));
    CHECK_FALSE(contains(clean.out, "first violation:"));

    std::string g2 = scratch() + "/props-g2.graph";
    REQUIRE(run("gen fig5_g2 -o " + g2).code == 0);
    RunResult dirty = run("props " + g2 + " --model minEQ --check mono1 --samples 4000");
    CHECK(dirty.code == 1);
    CHECK(contains(dirty.out, "first violation: i="));

    std::string fig1 = scratch() + "/props1.graph";
    REQUIRE(run("gen fig1_path4 -o " + fig1).code == 0);
    RunResult sov = run("props " + fig1 + " --model minSF --check sovereignty");
    CHECK(sov.code == 0);
    CHECK(contains(sov.out, "pairs checked: 900"));
    CHECK(contains(sov.out, "violations: 0"));

    RunResult unk = run("props " + fig1 + " --model minSF --check fairness");
    CHECK(unk.code == 2);
    CHECK(contains(unk.out,
                   "error: unknown check fairness (expected mono1, mono2, unanimity or "
                   "sovereignty)"));
}
