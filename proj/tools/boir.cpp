// SPDX-License-Identifier: Apache-2.0
//
// boir: build inverted indexes, rank topics, evaluate and fuse TREC runs,
// and tune the retrieval configuration with a GP-surrogate optimizer.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boir/bayesopt.hpp"
#include "boir/corpus.hpp"
#include "boir/errors.hpp"
#include "boir/fusion.hpp"
#include "boir/hyperspace.hpp"
#include "boir/measures.hpp"
#include "boir/objective.hpp"
#include "boir/topics.hpp"
#include "boir/trec_io.hpp"
#include "boir/util.hpp"

namespace {

using namespace boir;

/// Routes data output to --out when given, stdout otherwise.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw IoError("cannot write output: " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

ConfigPoint load_config_point(const std::string& path) {
    ConfigPoint point;
    if (!path.empty()) point = ConfigPoint::parse(slurp(path));
    auto violations = validate(SpaceDef::standard(), point);
    if (!violations.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw UserError(msg);
    }
    return point;
}

std::vector<Measure> selected_measures(const std::string& name) {
    if (name == "all") return {Measure::AP, Measure::NDCG, Measure::P10};
    auto m = measure_from_name(name);
    if (!m) throw UserError("unknown measure: " + name + " (use map, ndcg, p10 or all)");
    return {*m};
}

void cmd_index(const std::string& corpus_path, const std::string& out_dir,
               const std::string& stoplist_path) {
    std::vector<Document> corpus;
    read_corpus(corpus_path, [&](Document d) { corpus.push_back(std::move(d)); });
    if (corpus.empty()) throw UserError("corpus contains no documents: " + corpus_path);
    Stoplist stoplist =
        stoplist_path.empty() ? Stoplist::bundled() : Stoplist::load(stoplist_path);
    IndexSet set = IndexSet::build(corpus, std::move(stoplist));
    set.save(out_dir);
    std::cerr << "indexed " << corpus.size() << " documents into 4 variants under "
              << out_dir << "\n";
}

void cmd_search(const std::string& index_dir, const std::string& topics_path,
                const std::string& config_path, const std::string& tag,
                std::size_t depth, bool use_desc, const std::string& out_path) {
    ConfigPoint point = load_config_point(config_path);
    const auto variant_dir =
        std::filesystem::path(index_dir) / point.variant().dir_name();
    if (!std::filesystem::is_directory(variant_dir))
        throw IoError("missing index variant directory: " + variant_dir.string());
    InvertedIndex index = InvertedIndex::load(variant_dir);
    const auto stopfile = std::filesystem::path(index_dir) / "stoplist.txt";
    Stoplist stoplist = std::filesystem::exists(stopfile) ? Stoplist::load(stopfile)
                                                          : Stoplist::bundled();
    auto topics = read_topics(topics_path);
    RunFile run = make_run(index, stoplist, topics, point.retrieval_config(), depth,
                           tag, use_desc);
    OutputTarget out(out_path);
    write_run(out.stream(), run);
}

void cmd_eval(const std::string& run_path, const std::string& qrels_path,
              const std::string& measure, bool per_topic, const std::string& out_path) {
    RunFile run = read_run(run_path);
    Qrels qrels = read_qrels(qrels_path);
    MeasureReport report = evaluate_run(run, qrels);
    OutputTarget out(out_path);
    for (Measure m : selected_measures(measure)) {
        if (per_topic)
            for (const auto& [topic, values] : report.per_topic)
                out.stream() << measure_name(m) << '\t' << topic << '\t'
                             << fmt_fixed(values.get(m), 4) << '\n';
        out.stream() << measure_name(m) << "\tall\t" << fmt_fixed(report.mean(m), 4)
                     << '\n';
    }
}

void cmd_fuse(const std::string& run_a, const std::string& run_b,
              const std::string& tag, const std::string& out_path) {
    RunFile fused = zsum_fuse(read_run(run_a), read_run(run_b), tag);
    OutputTarget out(out_path);
    write_run(out.stream(), fused);
}

void cmd_report(const std::vector<std::string>& run_paths,
                const std::string& baseline_path, const std::string& qrels_path,
                const std::string& measure, const std::string& out_path) {
    auto measures = selected_measures(measure);
    if (measures.size() != 1) throw UserError("report needs one measure, not 'all'");
    RunFile baseline = read_run(baseline_path);
    std::vector<RunFile> runs;
    runs.reserve(run_paths.size());
    for (const auto& p : run_paths) runs.push_back(read_run(p));
    std::vector<const RunFile*> run_ptrs;
    for (const auto& r : runs) run_ptrs.push_back(&r);
    Qrels qrels = read_qrels(qrels_path);
    auto table = per_topic_delta(run_ptrs, baseline, qrels, measures[0]);
    OutputTarget out(out_path);
    out.stream() << "topic";
    for (const auto& r : runs) out.stream() << '\t' << r.tag;
    out.stream() << '\n';
    for (const auto& [topic, deltas] : table) {
        out.stream() << topic;
        for (double d : deltas) out.stream() << '\t' << fmt_fixed(d, 4);
        out.stream() << '\n';
    }
}

void cmd_optimize(const std::string& index_dir, const std::string& topics_path,
                  const std::string& qrels_path, std::size_t budget, std::size_t init,
                  std::size_t candidates, std::uint64_t seed, std::size_t depth,
                  std::size_t refit_every, const std::string& history_path,
                  const std::string& best_path, bool resume,
                  const std::string& space_path, bool use_desc) {
    IndexSet indexes = IndexSet::load(index_dir);
    auto topics = read_topics(topics_path);
    Qrels qrels = read_qrels(qrels_path);
    bool evaluable = false;
    for (const auto& [topic, docs] : qrels.topics())
        if (qrels.relevant_count(topic) > 0) evaluable = true;
    if (!evaluable) throw UserError("qrels has no topic with relevant documents");

    SpaceDef space = SpaceDef::standard();
    if (!space_path.empty()) space.apply_overrides(slurp(space_path));

    std::vector<Obs<ConfigPoint>> preload;
    if (resume) {
        std::ifstream in(history_path, std::ios::binary);
        if (!in) throw IoError("cannot open history for resume: " + history_path);
        for (auto& rec : load_history(in))
            preload.push_back({encode(space, rec.point), rec.point, rec.y});
        if (preload.size() >= budget)
            std::cerr << "history already holds " << preload.size()
                      << " evaluations; nothing to do\n";
    }

    std::ofstream history(history_path,
                          std::ios::binary | (resume ? std::ios::app : std::ios::trunc));
    if (!history) throw IoError("cannot write history: " + history_path);

    BoOptions opt;
    opt.budget = budget;
    opt.init = init;
    opt.candidates = candidates;
    opt.seed = seed;
    opt.refit_every = refit_every;

    auto state = run_bo_loop<ConfigPoint>(
        [&](Rng& rng) { return sample_random(space, rng); },
        [&](const ConfigPoint& p) { return encode(space, p); },
        [&](const ConfigPoint& p) {
            return objective_map(indexes, topics, qrels, p, depth, use_desc);
        },
        opt,
        [&](std::size_t i, const Obs<ConfigPoint>& obs, double best_y) {
            append_history(history, {i + 1, obs.point, obs.y, best_y});
            std::cerr << "eval " << (i + 1) << "/" << budget << " map="
                      << fmt_g(obs.y) << " best=" << fmt_g(best_y) << "\n";
        },
        std::move(preload));

    const auto& best = state.best();
    std::cerr << "best map " << fmt_g(best.y) << " at evaluation "
              << (state.best_index + 1) << "\n";
    std::cout << best.point.serialize() << "\n";
    if (!best_path.empty()) {
        std::ofstream out(best_path, std::ios::binary);
        if (!out) throw IoError("cannot write best configuration: " + best_path);
        out << best.point.serialize() << "\n";
    }
}

void cmd_space(const std::string& out_path) {
    OutputTarget out(out_path);
    out.stream() << SpaceDef::standard().reference_text();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexical search workbench with GP-surrogate configuration tuning"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "boir 0.1.0");

    auto* index = app.add_subcommand("index", "Build all four preprocessing-variant indexes");
    std::string index_corpus, index_out, index_stoplist;
    index->add_option("--corpus", index_corpus, "Corpus file (TREC SGML or JSONL)")->required();
    index->add_option("--out", index_out, "Output index directory")->required();
    index->add_option("--stoplist", index_stoplist, "Custom stoplist (one word per line)");

    auto* search = app.add_subcommand("search", "Rank topics and emit a TREC run");
    std::string search_index, search_topics, search_config, search_tag = "boir", search_out;
    std::size_t search_depth = 1000;
    bool search_desc = false;
    search->add_option("--index", search_index, "Index directory")->required();
    search->add_option("--topics", search_topics, "Topics file (TREC or TSV)")->required();
    search->add_option("--config", search_config, "Configuration file (key=value)");
    search->add_option("--tag", search_tag, "Run tag")->capture_default_str();
    search->add_option("--depth", search_depth, "Documents returned per topic")
        ->capture_default_str()->check(CLI::PositiveNumber);
    search->add_flag("--desc", search_desc, "Query from the description field");
    search->add_option("--out", search_out, "Output path (default stdout)");

    auto* eval = app.add_subcommand("eval", "Score a run against qrels");
    std::string eval_run, eval_qrels, eval_measure = "all", eval_out;
    bool eval_per_topic = false;
    eval->add_option("--run", eval_run, "Run file")->required();
    eval->add_option("--qrels", eval_qrels, "Qrels file")->required();
    eval->add_option("--measure", eval_measure, "map, ndcg, p10 or all")->capture_default_str();
    eval->add_flag("--per-topic", eval_per_topic, "Also emit per-topic rows");
    eval->add_option("--out", eval_out, "Output path (default stdout)");

    auto* fuse = app.add_subcommand("fuse", "Combine two runs by z-score summation");
    std::string fuse_a, fuse_b, fuse_tag = "fused", fuse_out;
    fuse->add_option("--run-a", fuse_a, "First run file")->required();
    fuse->add_option("--run-b", fuse_b, "Second run file")->required();
    fuse->add_option("--tag", fuse_tag, "Fused run tag")->capture_default_str();
    fuse->add_option("--out", fuse_out, "Output path (default stdout)");

    auto* optimize = app.add_subcommand("optimize", "Tune the configuration for MAP");
    std::string opt_index, opt_topics, opt_qrels, opt_history = "history.tsv";
    std::string opt_best, opt_space;
    std::size_t opt_budget = 50, opt_init = 10, opt_candidates = 2000, opt_depth = 1000;
    std::size_t opt_refit = 5;
    std::uint64_t opt_seed = 42;
    bool opt_resume = false, opt_desc = false;
    optimize->add_option("--index", opt_index, "Index directory")->required();
    optimize->add_option("--topics", opt_topics, "Topics file")->required();
    optimize->add_option("--qrels", opt_qrels, "Qrels file")->required();
    optimize->add_option("--budget", opt_budget, "Total objective evaluations")
        ->capture_default_str()->check(CLI::PositiveNumber);
    optimize->add_option("--init", opt_init, "Random evaluations before the surrogate")
        ->capture_default_str()->check(CLI::PositiveNumber);
    optimize->add_option("--candidates", opt_candidates, "Acquisition candidates per step")
        ->capture_default_str()->check(CLI::PositiveNumber);
    optimize->add_option("--seed", opt_seed, "Random seed")->capture_default_str();
    optimize->add_option("--depth", opt_depth, "Ranking depth per topic")
        ->capture_default_str()->check(CLI::PositiveNumber);
    optimize->add_option("--refit-every", opt_refit,
                         "Kernel refit period in evaluations (0 disables)")
        ->capture_default_str();
    optimize->add_option("--history", opt_history, "Evaluation log, one line per evaluation")
        ->capture_default_str();
    optimize->add_option("--best", opt_best, "Also write the best configuration here");
    optimize->add_flag("--resume", opt_resume, "Continue from the existing history file");
    optimize->add_option("--space", opt_space, "Range overrides (name=lo:hi per line)");
    optimize->add_flag("--desc", opt_desc, "Query from the description field");

    auto* report = app.add_subcommand("report", "Per-topic measure deltas against a baseline");
    std::vector<std::string> report_runs;
    std::string report_baseline, report_qrels, report_measure = "map", report_out;
    report->add_option("--run", report_runs, "Run file (repeatable)")->required();
    report->add_option("--baseline", report_baseline, "Baseline run file")->required();
    report->add_option("--qrels", report_qrels, "Qrels file")->required();
    report->add_option("--measure", report_measure, "map, ndcg or p10")->capture_default_str();
    report->add_option("--out", report_out, "Output path (default stdout)");

    auto* space = app.add_subcommand("space", "Print the search-space reference table");
    std::string space_out;
    space->add_option("--out", space_out, "Output path (default stdout)");

    index->callback([&] { cmd_index(index_corpus, index_out, index_stoplist); });
    search->callback([&] {
        cmd_search(search_index, search_topics, search_config, search_tag, search_depth,
                   search_desc, search_out);
    });
    eval->callback([&] { cmd_eval(eval_run, eval_qrels, eval_measure, eval_per_topic, eval_out); });
    fuse->callback([&] { cmd_fuse(fuse_a, fuse_b, fuse_tag, fuse_out); });
    optimize->callback([&] {
        cmd_optimize(opt_index, opt_topics, opt_qrels, opt_budget, opt_init,
                     opt_candidates, opt_seed, opt_depth, opt_refit, opt_history,
                     opt_best, opt_resume, opt_space, opt_desc);
    });
    report->callback([&] {
        cmd_report(report_runs, report_baseline, report_qrels, report_measure, report_out);
    });
    space->callback([&] { cmd_space(space_out); });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
