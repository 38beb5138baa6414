// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "boir/fusion.hpp"
#include "boir/hyperspace.hpp"
#include "boir/objective.hpp"
#include "boir/trec_io.hpp"
#include "support/helpers.hpp"

using namespace boir;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

/// Runs the installed binary from inside `dir` (so default output paths land
/// there) with stdout/stderr captured into `dir`.
CliResult run_cli(const test::TempDir& dir, const std::string& args) {
    static int call = 0;
    const auto out = dir / ("stdout." + std::to_string(call));
    const auto err = dir / ("stderr." + std::to_string(call));
    ++call;
    const std::string cmd = "cd \"" + dir.dir.string() + "\" && " +
                            std::string(BOIR_CLI_PATH) + " " + args + " >\"" +
                            out.string() + "\" 2>\"" + err.string() + "\"";
    const int raw = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = test::slurp(out);
    r.err = test::slurp(err);
    return r;
}

std::string fixture(const std::string& name) {
    return test::fixture_path(name).string();
}

/// Builds the four-variant index for the 30-document fixture corpus.
std::string build_index(const test::TempDir& dir) {
    const auto out = dir / "idx";
    auto r = run_cli(dir, "index --corpus " + fixture("corpus.trec") + " --out " +
                              out.string());
    REQUIRE(r.code == 0);
    return out.string();
}

std::string render(const RunFile& run) {
    std::ostringstream out;
    write_run(out, run);
    return out.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("--version and --help exit cleanly") {
    test::TempDir dir;
    auto version = run_cli(dir, "--version");
    CHECK(version.code == 0);
    CHECK(version.out == "boir 0.1.0\n");
    CHECK(run_cli(dir, "--help").code == 0);
    CHECK(run_cli(dir, "search --help").code == 0);
}

TEST_CASE("usage errors exit with status 2") {
    test::TempDir dir;
    CHECK(run_cli(dir, "").code == 2);
    CHECK(run_cli(dir, "frobnicate").code == 2);
    CHECK(run_cli(dir, "search --topics x").code == 2);  // missing --index

    auto bad_measure = run_cli(dir, "eval --run " + fixture("run_eval.txt") +
                                        " --qrels " + fixture("qrels.txt") +
                                        " --measure bogus");
    CHECK(bad_measure.code == 2);
    CHECK(contains(bad_measure.err, "unknown measure: bogus"));

    auto missing = run_cli(dir, "eval --run " + (dir / "no_such_run").string() +
                                    " --qrels " + fixture("qrels.txt"));
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "error: cannot open"));
}

TEST_CASE("space prints the dimension reference table") {
    test::TempDir dir;
    auto r = run_cli(dir, "space");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("name\tkind\trange\tactive_when\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 19);

    auto file = dir / "space.tsv";
    auto to_file = run_cli(dir, "space --out " + file.string());
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(test::slurp(file) == r.out);
}

TEST_CASE("index builds four variant directories plus the stoplist") {
    test::TempDir dir;
    auto idx = dir / "idx";
    auto r = run_cli(dir, "index --corpus " + fixture("corpus.trec") + " --out " +
                              idx.string());
    CHECK(r.code == 0);
    CHECK(contains(r.err, "indexed 30 documents into 4 variants"));
    for (const char* name :
         {"stop0_stem0", "stop0_stem1", "stop1_stem0", "stop1_stem1"})
        CHECK(std::filesystem::is_directory(idx / name));
    CHECK(Stoplist::load(idx / "stoplist.txt").size() == 418);

    auto custom = dir / "stop.txt";
    test::spit(custom, "river\n");
    auto idx2 = dir / "idx2";
    CHECK(run_cli(dir, "index --corpus " + fixture("corpus.trec") +
                           " --stoplist " + custom.string() + " --out " +
                           idx2.string())
              .code == 0);
    CHECK(Stoplist::load(idx2 / "stoplist.txt").size() == 1);
}

TEST_CASE("search emits a deterministic parseable run") {
    test::TempDir dir;
    auto idx = build_index(dir);
    const std::string base = "search --index " + idx + " --topics " +
                             fixture("topics.tsv") + " --config " +
                             fixture("lmdir_prf.cfg") + " --tag trial --depth 7";

    auto out1 = dir / "run1.txt";
    auto out2 = dir / "run2.txt";
    REQUIRE(run_cli(dir, base + " --out " + out1.string()).code == 0);
    REQUIRE(run_cli(dir, base + " --out " + out2.string()).code == 0);
    CHECK(test::slurp(out1) == test::slurp(out2));

    auto run = read_run(out1);
    CHECK(run.tag == "trial");
    CHECK(run.rankings.size() == 5);
    for (const auto& [topic, ranking] : run.rankings) {
        CAPTURE(topic);
        CHECK(!ranking.entries.empty());
        CHECK(ranking.entries.size() <= 7);
    }

    auto to_stdout = run_cli(dir, base);
    CHECK(to_stdout.code == 0);
    CHECK(to_stdout.out == test::slurp(out1));
}

TEST_CASE("search rejects an out-of-range configuration") {
    test::TempDir dir;
    auto idx = build_index(dir);
    auto cfg = dir / "bad.cfg";
    test::spit(cfg, "rm=LM_DIR\nmu_dir=4000\n");
    auto r = run_cli(dir, "search --index " + idx + " --topics " +
                              fixture("topics.tsv") + " --config " + cfg.string());
    CHECK(r.code == 2);
    CHECK(contains(r.err, "invalid configuration:"));
    CHECK(contains(r.err, "mu_dir out of [0,3000]: 4000"));
}

TEST_CASE("eval reproduces the golden evaluation bytes") {
    test::TempDir dir;
    const std::string base = "eval --run " + fixture("run_eval.txt") +
                             " --qrels " + fixture("qrels.txt");

    auto full = run_cli(dir, base + " --per-topic");
    CHECK(full.code == 0);
    CHECK(full.out == test::slurp(test::fixture_path("golden_eval.tsv")));

    auto file = dir / "eval.tsv";
    REQUIRE(run_cli(dir, base + " --per-topic --out " + file.string()).code == 0);
    CHECK(test::slurp(file) == full.out);

    auto map_only = run_cli(dir, base + " --measure map");
    CHECK(map_only.code == 0);
    CHECK(map_only.out == "map\tall\t0.5862\n");
}

TEST_CASE("fuse matches the library fusion byte for byte") {
    test::TempDir dir;
    auto r = run_cli(dir, "fuse --run-a " + fixture("run_a.txt") + " --run-b " +
                              fixture("run_b.txt") + " --tag zf");
    CHECK(r.code == 0);
    auto expected = zsum_fuse(read_run(test::fixture_path("run_a.txt")),
                              read_run(test::fixture_path("run_b.txt")), "zf");
    CHECK(r.out == render(expected));
}

TEST_CASE("report tabulates per-topic deltas against the baseline") {
    test::TempDir dir;
    auto r = run_cli(dir, "report --run " + fixture("run_eval.txt") +
                              " --baseline " + fixture("run_eval.txt") +
                              " --qrels " + fixture("qrels.txt"));
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "topic\tfixture");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        CAPTURE(line);
        CHECK(line.substr(line.find('\t')) == "\t0.0000");
        ++rows;
    }
    CHECK(rows == 5);
}

TEST_CASE("optimize writes a valid history and best configuration") {
    test::TempDir dir;
    auto idx = build_index(dir);
    auto history = dir / "history.tsv";
    auto best_file = dir / "best.cfg";
    auto r = run_cli(dir, "optimize --index " + idx + " --topics " +
                              fixture("topics.tsv") + " --qrels " +
                              fixture("qrels.txt") +
                              " --budget 6 --init 2 --candidates 30 --seed 7"
                              " --depth 50 --history " +
                              history.string() + " --best " + best_file.string());
    REQUIRE(r.code == 0);
    CHECK(contains(r.err, "eval 6/6"));
    CHECK(contains(r.err, "best map "));
    CHECK(r.out == test::slurp(best_file));

    std::ifstream in(history);
    auto records = load_history(in);  // validates sequencing and incumbents
    REQUIRE(records.size() == 6);
    double best_y = records[0].y;
    ConfigPoint best_point = records[0].point;
    for (const auto& rec : records) {
        CHECK(rec.y >= 0.0);
        CHECK(rec.y <= 1.0);
        if (rec.y > best_y) {
            best_y = rec.y;
            best_point = rec.point;
        }
    }
    CHECK(records.back().best == best_y);
    CHECK(ConfigPoint::parse(r.out) == best_point);

    // The emitted configuration feeds straight back into search.
    auto again = run_cli(dir, "search --index " + idx + " --topics " +
                                  fixture("topics.tsv") + " --config " +
                                  best_file.string() + " --depth 5");
    CHECK(again.code == 0);
}

TEST_CASE("optimize runs with one seed are byte-identical") {
    test::TempDir dir;
    auto idx = build_index(dir);
    const std::string base = "optimize --index " + idx + " --topics " +
                             fixture("topics.tsv") + " --qrels " +
                             fixture("qrels.txt") +
                             " --budget 5 --init 2 --candidates 25 --seed 42"
                             " --depth 50 --history ";
    auto h1 = dir / "h1.tsv";
    auto h2 = dir / "h2.tsv";
    auto r1 = run_cli(dir, base + h1.string());
    auto r2 = run_cli(dir, base + h2.string());
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);
    CHECK(test::slurp(h1) == test::slurp(h2));
    CHECK(r1.out == r2.out);
}

TEST_CASE("optimize resumes exactly where it stopped") {
    test::TempDir dir;
    auto idx = build_index(dir);
    const std::string base = "optimize --index " + idx + " --topics " +
                             fixture("topics.tsv") + " --qrels " +
                             fixture("qrels.txt") +
                             " --init 2 --candidates 20 --seed 11 --depth 50";

    auto full = dir / "full.tsv";
    REQUIRE(run_cli(dir, base + " --budget 6 --history " + full.string()).code == 0);

    auto part = dir / "part.tsv";
    REQUIRE(run_cli(dir, base + " --budget 3 --history " + part.string()).code == 0);
    auto resumed = run_cli(dir, base + " --budget 6 --resume --history " +
                                    part.string());
    CHECK(resumed.code == 0);
    CHECK(test::slurp(part) == test::slurp(full));

    // Resuming a finished run leaves the history untouched.
    auto done = run_cli(dir, base + " --budget 6 --resume --history " +
                                 part.string());
    CHECK(done.code == 0);
    CHECK(contains(done.err, "nothing to do"));
    CHECK(test::slurp(part) == test::slurp(full));
}

TEST_CASE("optimize rejects impossible settings") {
    test::TempDir dir;
    auto idx = build_index(dir);
    auto r = run_cli(dir, "optimize --index " + idx + " --topics " +
                              fixture("topics.tsv") + " --qrels " +
                              fixture("qrels.txt") + " --budget 2 --init 5");
    CHECK(r.code == 2);
    CHECK(contains(r.err, "budget must be >= init >= 1"));

    auto hopeless = dir / "hopeless.qrels";
    test::spit(hopeless, "701 0 B01 0\n");
    auto no_rel = run_cli(dir, "optimize --index " + idx + " --topics " +
                                   fixture("topics.tsv") + " --qrels " +
                                   hopeless.string() + " --budget 3 --init 1");
    CHECK(no_rel.code == 2);
    CHECK(contains(no_rel.err, "no topic with relevant documents"));
}

}  // TEST_SUITE
