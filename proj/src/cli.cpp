#include "abfold/cli.hpp"

#include "abfold/benchmark.hpp"
#include "abfold/errors.hpp"
#include "abfold/io.hpp"
#include "abfold/optimizer.hpp"
#include "abfold/stats.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>

namespace abfold {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string seq;
    std::string seq_file;
    std::string label;
    std::string conf;
    std::string config;
    std::string trace;
    std::string out;
    std::string xyz;
    std::string summary;
    std::string format = "csv";
    double target = 0.0;
    std::uint64_t nse_limit = 0;
    double time_limit = 0.0;
    std::uint64_t seed = 1;
    std::size_t runs = 10;
    std::size_t jobs = 1;
    std::size_t np = 100;
    double p_b = 20.0;
    double l_b = 20.0;
    std::size_t c = 10;
    double h_c = 35.0;
    double lambda = 1000.0;
    bool no_timing = false;

    CLI::Option* opt_seq = nullptr;
    CLI::Option* opt_seq_file = nullptr;
    CLI::Option* opt_label = nullptr;
    CLI::Option* opt_target = nullptr;
    CLI::Option* opt_nse_limit = nullptr;
    CLI::Option* opt_time_limit = nullptr;
    CLI::Option* opt_seed = nullptr;
    CLI::Option* opt_np = nullptr;
    CLI::Option* opt_pb = nullptr;
    CLI::Option* opt_lb = nullptr;
    CLI::Option* opt_c = nullptr;
    CLI::Option* opt_hc = nullptr;
    CLI::Option* opt_lambda = nullptr;
};

void add_sequence_options(CLI::App& app, Options& o)
{
    app.add_option("--seq", o.seq, "A/B sequence, e.g. ABBABBABABBAB");
    app.add_option("--seq-file", o.seq_file, "File holding an A/B sequence");
    app.add_option("--label", o.label, "Built-in benchmark label, e.g. F13");
}

void add_optimizer_options(CLI::App& app, Options& o)
{
    app.add_option("--target", o.target, "Target score E_t (stop when reached)");
    app.add_option("--nse-limit", o.nse_limit, "Energy evaluation budget");
    app.add_option("--time-limit", o.time_limit, "Wall-time budget in seconds");
    app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
    app.add_option("--np", o.np, "Population size")->capture_default_str();
    app.add_option("--pb", o.p_b, "Phase-2 stagnation factor P_b")->capture_default_str();
    app.add_option("--lb", o.l_b, "Random-restart factor L_b")->capture_default_str();
    app.add_option("--c", o.c, "Components redrawn per component reinit")->capture_default_str();
    app.add_option("--hc", o.h_c, "Phase-1 stagnation factor H_c")->capture_default_str();
    app.add_option("--lambda", o.lambda, "Auxiliary phase offset")->capture_default_str();
    app.add_option("--config", o.config, "JSON file with optimizer settings (flags override)");
    app.add_flag("--no-timing", o.no_timing, "Write zero for all timings (reproducible output)");
}

// Several subcommands register the same flag names; point the handles at the
// ones that belong to the subcommand actually parsed.
void bind_options(CLI::App& app, Options& o)
{
    o.opt_seq = app.get_option_no_throw("--seq");
    o.opt_seq_file = app.get_option_no_throw("--seq-file");
    o.opt_label = app.get_option_no_throw("--label");
    o.opt_target = app.get_option_no_throw("--target");
    o.opt_nse_limit = app.get_option_no_throw("--nse-limit");
    o.opt_time_limit = app.get_option_no_throw("--time-limit");
    o.opt_seed = app.get_option_no_throw("--seed");
    o.opt_np = app.get_option_no_throw("--np");
    o.opt_pb = app.get_option_no_throw("--pb");
    o.opt_lb = app.get_option_no_throw("--lb");
    o.opt_c = app.get_option_no_throw("--c");
    o.opt_hc = app.get_option_no_throw("--hc");
    o.opt_lambda = app.get_option_no_throw("--lambda");
}

bool given(const CLI::Option* opt)
{
    return opt != nullptr && opt->count() > 0;
}

struct ResolvedSequence {
    AbSequence sequence;
    const BenchmarkEntry* entry = nullptr;
};

ResolvedSequence resolve_sequence(const Options& o)
{
    const int count = static_cast<int>(given(o.opt_seq)) + static_cast<int>(given(o.opt_seq_file))
        + static_cast<int>(given(o.opt_label));
    if (count == 0) {
        throw UsageError("one of --seq, --seq-file or --label is required");
    }
    if (count > 1) {
        throw UsageError("--seq, --seq-file and --label are mutually exclusive");
    }
    if (given(o.opt_label)) {
        const BenchmarkEntry* entry = find_builtin(o.label);
        if (entry == nullptr) {
            throw UsageError(fmt::format("unknown label \"{}\"", o.label));
        }
        return {entry->sequence, entry};
    }
    if (given(o.opt_seq)) {
        return {parse_ab_sequence(o.seq, "custom"), nullptr};
    }
    return {parse_ab_sequence(read_text_file(o.seq_file), "custom"), nullptr};
}

Conformation load_conformation(const Options& o, const ResolvedSequence& rs)
{
    if (!o.conf.empty()) {
        return parse_conformation(read_text_file(o.conf), rs.sequence);
    }
    if (rs.entry != nullptr && rs.entry->reference_conformation) {
        return *rs.entry->reference_conformation;
    }
    throw UsageError("--conf is required");
}

OptimizerConfig build_config(const Options& o)
{
    OptimizerConfig cfg;
    if (!o.config.empty()) {
        apply_config_json(read_text_file(o.config), cfg);
    }
    if (given(o.opt_np)) {
        cfg.np = o.np;
    }
    if (given(o.opt_pb)) {
        cfg.p_b = o.p_b;
    }
    if (given(o.opt_lb)) {
        cfg.l_b = o.l_b;
    }
    if (given(o.opt_c)) {
        cfg.c = o.c;
    }
    if (given(o.opt_hc)) {
        cfg.h_c = o.h_c;
    }
    if (given(o.opt_lambda)) {
        cfg.lambda = o.lambda;
    }
    if (given(o.opt_seed)) {
        cfg.seed = o.seed;
    }
    if (given(o.opt_target)) {
        cfg.stopping.target_score = o.target;
    }
    if (given(o.opt_nse_limit)) {
        cfg.stopping.nse_limit = o.nse_limit;
    }
    if (given(o.opt_time_limit)) {
        cfg.stopping.time_limit = o.time_limit;
    }
    if (!cfg.stopping.bounded()) {
        throw UsageError("a stopping condition is required: --target, --nse-limit or --time-limit");
    }
    return cfg;
}

std::string label_of(const ResolvedSequence& rs)
{
    return rs.entry != nullptr ? rs.entry->label : rs.sequence.label();
}

int cmd_evaluate(const Options& o, std::ostream& out)
{
    const ResolvedSequence rs = resolve_sequence(o);
    const Conformation conf = load_conformation(o, rs);
    const PositionChain chain = compute_positions(conf);
    const EnergyBreakdown e = energy_auxiliary(rs.sequence, conf, chain, o.lambda);
    fmt::print(out, "score   {:.6f}\n", -e.e_o);
    fmt::print(out, "e_o     {:.10f}\n", e.e_o);
    fmt::print(out, "e_bb    {:.10f}\n", e.e_bb);
    fmt::print(out, "e_lj    {:.10f}\n", e.e_lj);
    fmt::print(out, "e_hc    {:.10f}\n", e.aux->e_hc);
    fmt::print(out, "lambda  {:.10f}\n", e.aux->lambda);
    fmt::print(out, "e_x     {:.10f}\n", e.aux->e_x);
    fmt::print(out, "n_a     {}\n", e.n_hydrophobic);
    if (!o.xyz.empty()) {
        write_text_file(o.xyz, export_xyz(rs.sequence, chain, -e.e_o));
    }
    return kExitOk;
}

int cmd_optimize(const Options& o, std::ostream& out)
{
    const ResolvedSequence rs = resolve_sequence(o);
    const OptimizerConfig cfg = build_config(o);
    const RunResult r = optimize(rs.sequence, cfg);
    const auto shown_time = [&](double t) { return o.no_timing ? 0.0 : t; };

    fmt::print(out, "label       {}\n", label_of(rs));
    fmt::print(out, "sequence    {}\n", rs.sequence.to_string());
    fmt::print(out, "seed        {}\n", cfg.seed);
    fmt::print(out, "score       {:.6f}\n", r.best_score);
    if (cfg.stopping.target_score) {
        fmt::print(out, "target      {:.4f}\n", *cfg.stopping.target_score);
        fmt::print(out, "success     {}\n", r.success ? "yes" : "no");
        if (r.nse_at_success) {
            fmt::print(out, "nse_success {}\n", *r.nse_at_success);
        }
    }
    fmt::print(out, "nse         {}\n", r.nse_total);
    fmt::print(out, "nse_phase1  {}\n", r.nse_phase1);
    fmt::print(out, "nse_phase2  {}\n", r.nse_phase2);
    fmt::print(out, "time_s      {:.3f}\n", shown_time(r.wall_time));
    fmt::print(out, "restarts    {} component, {} random\n", r.component_reinits,
               r.random_reinits);
    fmt::print(out, "best        {}", serialize_conformation(r.best_conformation));

    if (!o.out.empty()) {
        write_text_file(o.out, fmt::format("# {} score {:.10f}\n{}", label_of(rs), r.best_score,
                                           serialize_conformation(r.best_conformation)));
    }
    if (!o.trace.empty()) {
        std::ostringstream ss;
        write_trace(r.trace, ss);
        write_text_file(o.trace, ss.str());
    }
    if (!o.xyz.empty()) {
        write_text_file(o.xyz, export_xyz(rs.sequence, compute_positions(r.best_conformation),
                                          r.best_score));
    }
    if (cfg.stopping.target_score && !r.success) {
        return kExitTargetMissed;
    }
    return kExitOk;
}

int cmd_benchmark(const Options& o, std::ostream& out)
{
    const ResolvedSequence rs = resolve_sequence(o);
    const OptimizerConfig cfg = build_config(o);
    if (o.runs == 0) {
        throw UsageError("--runs must be at least 1");
    }
    if (o.format != "csv" && o.format != "json") {
        throw UsageError("--format must be csv or json");
    }
    const std::vector<RunRecord> records =
        run_batch(rs.sequence, label_of(rs), cfg, o.runs, cfg.seed, std::max<std::size_t>(o.jobs, 1));
    AggregateStats stats = aggregate(records, cfg.stopping.target_score);
    if (o.no_timing) {
        stats.t_mean = 0.0;
        stats.t_coef1.reset();
    }

    std::ostringstream results;
    if (o.format == "csv") {
        write_results_csv(records, results, !o.no_timing);
    } else {
        results << results_to_json(records, stats, !o.no_timing) << '\n';
    }
    if (o.out.empty()) {
        out << results.str();
    } else {
        write_text_file(o.out, results.str());
        out << aggregate_to_json(stats) << '\n';
    }
    if (!o.summary.empty()) {
        write_text_file(o.summary, aggregate_to_json(stats) + "\n");
    }
    if (cfg.stopping.target_score && stats.n_success < stats.n_runs) {
        return kExitTargetMissed;
    }
    return kExitOk;
}

int cmd_convert(const Options& o, std::ostream& out)
{
    const bool has_seq = given(o.opt_seq);
    const bool has_file = given(o.opt_seq_file);
    if (has_seq == has_file) {
        throw UsageError("convert takes exactly one of --seq or --seq-file");
    }
    const std::string text = has_seq ? o.seq : read_text_file(o.seq_file);
    out << kd_transform(text).to_string() << '\n';
    return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out)
{
    const ResolvedSequence rs = resolve_sequence(o);
    const Conformation conf = load_conformation(o, rs);
    const PositionChain chain = compute_positions(conf);
    const double score = -energy_original(rs.sequence, conf, chain).e_o;
    const std::string text = export_xyz(rs.sequence, chain, score);
    const std::string& path = !o.xyz.empty() ? o.xyz : o.out;
    if (path.empty()) {
        out << text;
    } else {
        write_text_file(path, text);
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"AB off-lattice protein folding with two-phase differential evolution", "abfold"};
    app.require_subcommand(1);
    Options o;

    CLI::App* evaluate = app.add_subcommand("evaluate", "Score a conformation file");
    add_sequence_options(*evaluate, o);
    evaluate->add_option("--conf", o.conf, "Conformation file (degrees)");
    evaluate->add_option("--lambda", o.lambda, "Auxiliary phase offset")->capture_default_str();
    evaluate->add_option("--xyz", o.xyz, "Also write the chain as XYZ");

    CLI::App* optimize_cmd = app.add_subcommand("optimize", "Run one seeded optimization");
    add_sequence_options(*optimize_cmd, o);
    add_optimizer_options(*optimize_cmd, o);
    optimize_cmd->add_option("--trace", o.trace, "Write the convergence trace (CSV)");
    optimize_cmd->add_option("--out", o.out, "Write the best conformation (degrees)");
    optimize_cmd->add_option("--xyz", o.xyz, "Write the best chain as XYZ");

    CLI::App* bench = app.add_subcommand("benchmark", "Run a batch of independent optimizations");
    add_sequence_options(*bench, o);
    add_optimizer_options(*bench, o);
    bench->add_option("--runs", o.runs, "Number of runs")->capture_default_str();
    bench->add_option("--jobs", o.jobs, "Runs executed in parallel")->capture_default_str();
    bench->add_option("--out", o.out, "Results file (stdout when omitted)");
    bench->add_option("--format", o.format, "Results format: csv or json")->capture_default_str();
    bench->add_option("--summary", o.summary, "Write aggregate statistics (JSON)");

    CLI::App* convert = app.add_subcommand("convert", "Map amino acid codes to A/B");
    convert->add_option("--seq", o.seq, "One-letter amino acid sequence");
    convert->add_option("--seq-file", o.seq_file, "File with a one-letter amino acid sequence");

    CLI::App* exp = app.add_subcommand("export", "Write a conformation as XYZ");
    add_sequence_options(*exp, o);
    exp->add_option("--conf", o.conf, "Conformation file (degrees)");
    exp->add_option("--xyz", o.xyz, "Output path (stdout when omitted)");
    exp->add_option("--out", o.out, "Alias of --xyz");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    bind_options(*chosen, o);
    try {
        if (chosen == evaluate) {
            return cmd_evaluate(o, out);
        }
        if (chosen == optimize_cmd) {
            return cmd_optimize(o, out);
        }
        if (chosen == bench) {
            return cmd_benchmark(o, out);
        }
        if (chosen == convert) {
            return cmd_convert(o, out);
        }
        return cmd_export(o, out);
    } catch (const UsageError& e) {
        fmt::print(err, "error: {}\n\n{}", e.what(), chosen->help());
        return kExitUsage;
    } catch (const Error& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitUsage;
    }
}

int cli_main(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run_cli(args, std::cout, std::cerr);
}

} // namespace abfold
