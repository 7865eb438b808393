#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "preisach/bank.hpp"
#include "preisach/bench.hpp"
#include "preisach/config.hpp"
#include "preisach/error.hpp"
#include "preisach/oracle.hpp"
#include "preisach/signals.hpp"
#include "preisach/trajectory_io.hpp"

namespace preisach::cli {

namespace {

struct CommonArgs {
    std::string config_path;
    std::string preset_name;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> decimate;
    std::size_t workers = 1;
    bool dump_config = false;
};

struct VerifyArgs {
    std::size_t samples = 1000;
    std::size_t oracle_ceiling = 5000;
};

struct BenchArgs {
    std::size_t repeats = 3;
    std::size_t warmup = 3;
    std::optional<std::size_t> samples;
    bool scaling = false;
};

struct RunArgs {
    std::string loops_path;
};

void add_common(CLI::App& cmd, CommonArgs& args) {
    auto* config = cmd.add_option("--config", args.config_path, "Experiment config (JSON)");
    auto* preset = cmd.add_option("--preset", args.preset_name, "Built-in experiment: fig5, fig6a, fig6b");
    config->excludes(preset);
    cmd.add_option("--out", args.out_path, "Output path ('-' for stdout)");
    cmd.add_option("--seed", args.seed, "Seed for noise signals and random verification input");
    cmd.add_option("--decimate", args.decimate, "Keep every k-th trajectory row")->check(CLI::PositiveNumber);
    cmd.add_option("--workers", args.workers, "Worker threads for the bank update")->check(CLI::PositiveNumber);
    cmd.add_flag("--dump-config", args.dump_config, "Print the resolved config as JSON and exit");
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ExperimentConfig resolve(const CommonArgs& args, bool apply_out) {
    ExperimentConfig config;
    if (!args.config_path.empty())
        config = load_experiment(args.config_path);
    else if (!args.preset_name.empty())
        config = preset(args.preset_name);
    else
        throw config_error("", "one of --config or --preset is required");

    if (args.seed)
        config.signal.seed = *args.seed;
    if (args.decimate)
        config.output.decimation = *args.decimate;
    if (apply_out && !args.out_path.empty()) {
        config.output.path = args.out_path;
        if (ends_with(args.out_path, ".json"))
            config.output.format = OutputFormat::json;
        else if (ends_with(args.out_path, ".csv"))
            config.output.format = OutputFormat::csv;
    }
    return config;
}

BankOptions bank_options(std::size_t workers) {
    return {workers, workers > 1 ? Reduction::blocked_tree : Reduction::serial, 256};
}

std::optional<std::size_t> samples_per_period(const signals::SignalSpec& spec) {
    using signals::SignalKind;
    if (spec.kind != SignalKind::sinusoid && spec.kind != SignalKind::decaying_sinusoid)
        return std::nullopt;
    if (spec.frequency_hz <= 0.0)
        return std::nullopt;
    const double period = spec.sample_rate_hz / spec.frequency_hz;
    const auto rounded = static_cast<std::size_t>(std::llround(period));
    if (rounded == 0 || std::abs(period - static_cast<double>(rounded)) > 1e-9 * period)
        return std::nullopt;
    return rounded;
}

int cmd_run(const CommonArgs& common, const RunArgs& run_args, std::ostream& out, std::ostream& err) {
    const ExperimentConfig config = resolve(common, true);
    if (common.dump_config) {
        out << to_json(config).dump(2) << '\n';
        return exit_ok;
    }

    HysteronBank bank = config.model.build(bank_options(common.workers));
    const auto xs = signals::generate(config.signal);

    const auto start = std::chrono::steady_clock::now();
    const Trajectory trajectory = bank.run(xs);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const Trajectory written = decimate(trajectory, config.output.decimation);
    const bool to_stdout = config.output.path == "-";
    if (to_stdout)
        write_trajectory(out, written, config.output.format);
    else
        save_trajectory(config.output.path, written, config.output.format);

    std::ostream& log = to_stdout ? err : out;
    double f_min = 0.0, f_max = 0.0;
    if (!trajectory.empty()) {
        const auto [lo, hi] = std::minmax_element(trajectory.begin(), trajectory.end(),
                                                  [](const auto& a, const auto& b) { return a.f < b.f; });
        f_min = lo->f;
        f_max = hi->f;
    }
    log << "hysterons: " << bank.size() << '\n'
        << "samples: " << trajectory.size() << '\n'
        << "rows_written: " << written.size() << '\n'
        << "f_min: " << format_real(f_min) << '\n'
        << "f_max: " << format_real(f_max) << '\n'
        << "wall_seconds: " << format_real(wall) << '\n';
    if (!to_stdout)
        log << "output: " << config.output.path << '\n';

    if (!run_args.loops_path.empty()) {
        const auto period = samples_per_period(config.signal);
        if (!period)
            throw config_error("signal", "--loops needs a sinusoidal signal with an integral period in samples");
        std::ofstream loops(run_args.loops_path, std::ios::binary);
        if (!loops)
            throw io_error("cannot open '" + run_args.loops_path + "' for writing");
        write_loop_boxes(loops, loop_boxes(trajectory, *period));
        if (!loops.flush())
            throw io_error("failed writing '" + run_args.loops_path + "'");
    }
    return exit_ok;
}

int cmd_verify(const CommonArgs& common, const VerifyArgs& verify, std::ostream& out) {
    const ExperimentConfig config = resolve(common, false);
    if (common.dump_config) {
        out << to_json(config).dump(2) << '\n';
        return exit_ok;
    }

    const std::size_t nodes = config.model.mesh.node_count();
    if (nodes > verify.oracle_ceiling)
        throw config_error("model.levels", std::to_string(nodes) + " hysterons exceed the oracle ceiling of " +
                                               std::to_string(verify.oracle_ceiling));

    HysteronBank bank = config.model.build({1, Reduction::serial, 256});
    std::vector<oracle::OracleRelay> relays;
    relays.reserve(bank.size());
    for (std::size_t i = 0; i < bank.size(); ++i)
        relays.emplace_back(bank.alphas()[i], bank.betas()[i], bank.states()[i] > 0.0 ? 1 : -1);

    // Uniform draws over the mesh range widened by 10 % on each side, with
    // one draw in four snapped onto a mesh level to exercise the thresholds.
    const auto levels = mesh_levels(config.model.mesh);
    const double lo = config.model.mesh.x_min;
    const double span = config.model.mesh.x_max - lo;
    std::mt19937_64 rng(common.seed.value_or(config.signal.seed));
    std::vector<double> xs(verify.samples);
    for (auto& x : xs) {
        const std::uint64_t bits = rng();
        if ((bits & 3) == 0) {
            x = levels[(bits >> 2) % levels.size()];
        } else {
            const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            x = lo - 0.1 * span + 1.2 * span * unit;
        }
    }

    const Trajectory got = bank.run(xs);
    const Trajectory want = oracle::model_run(relays, bank.weights(), xs);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (got[k].f != want[k].f) {
            out << "verify: MISMATCH at sample " << k << ": x=" << format_real(xs[k])
                << " bank=" << format_real(got[k].f) << " oracle=" << format_real(want[k].f) << '\n';
            return exit_mismatch;
        }
    }
    for (std::size_t i = 0; i < relays.size(); ++i) {
        if (bank.states()[i] != static_cast<double>(relays[i].state())) {
            out << "verify: MISMATCH in final state of hysteron " << i << '\n';
            return exit_mismatch;
        }
    }
    out << "verify: OK hysterons=" << bank.size() << " samples=" << xs.size() << '\n';
    return exit_ok;
}

void print_bench(const bench::BenchReport& r, std::ostream& log) {
    log << "hysterons: " << r.n_hysterons << "  samples: " << r.samples << "  workers: " << r.workers << '\n'
        << "  wall s (min/median/max): " << r.wall_seconds_min << " / " << r.wall_seconds << " / "
        << r.wall_seconds_max << '\n'
        << "  hysteron updates/s: " << r.updates_per_second << '\n'
        << "  samples/s: " << r.samples_per_second << "  (x" << r.realtime_margin << " of 2 kHz)\n"
        << "  max hysterons at 2 kHz: " << r.max_hysterons_at_reference_rate << '\n'
        << "  checksum: " << (r.valid ? "valid" : "INVALID") << '\n';
}

int cmd_bench(const CommonArgs& common, const BenchArgs& args, std::ostream& out, std::ostream& err) {
    const ExperimentConfig config = resolve(common, false);
    if (common.dump_config) {
        out << to_json(config).dump(2) << '\n';
        return exit_ok;
    }
    if (args.repeats == 0)
        throw config_error("--repeats", "must be at least 1");

    const bench::BenchOptions options{args.repeats, args.warmup, 256};
    std::vector<std::size_t> sizes{config.model.mesh.node_count()};
    if (args.scaling)
        sizes = {210, 3240, 10000};
    const std::size_t samples = args.samples.value_or(
        config.signal.kind == signals::SignalKind::file_replay ||
                config.signal.kind == signals::SignalKind::piecewise_linear
            ? 2000
            : config.signal.sample_count());

    nlohmann::json reports = nlohmann::json::array();
    bool valid = true;
    for (std::size_t n : sizes) {
        const auto report = bench::bench_bank(n, samples, common.workers, options);
        print_bench(report, err);
        reports.push_back(bench::to_json(report));
        valid = valid && report.valid;
    }
    const nlohmann::json doc = args.scaling ? reports : reports.front();

    if (common.out_path.empty() || common.out_path == "-") {
        out << doc.dump(2) << '\n';
    } else {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!file)
            throw io_error("cannot open '" + common.out_path + "' for writing");
        file << doc.dump(2) << '\n';
        if (!file.flush())
            throw io_error("failed writing '" + common.out_path + "'");
    }
    return valid ? exit_ok : exit_mismatch;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scalar Preisach hysteresis engine", "sph"};
    app.require_subcommand(1);

    CommonArgs common;
    RunArgs run_args;
    VerifyArgs verify_args;
    BenchArgs bench_args;

    auto* run_cmd = app.add_subcommand("run", "Run an experiment and write its trajectory");
    add_common(*run_cmd, common);
    run_cmd->add_option("--loops", run_args.loops_path, "Also write per-period loop boxes (CSV)");

    auto* verify_cmd = app.add_subcommand("verify", "Compare the bank against the reference relay model");
    add_common(*verify_cmd, common);
    verify_cmd->add_option("--samples", verify_args.samples, "Random input samples")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--oracle-ceiling", verify_args.oracle_ceiling, "Largest bank the reference model accepts");

    auto* bench_cmd = app.add_subcommand("bench", "Measure bank throughput");
    add_common(*bench_cmd, common);
    bench_cmd->add_option("--repeats", bench_args.repeats, "Timed repetitions")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--warmup", bench_args.warmup, "Untimed warm-up runs");
    bench_cmd->add_option("--samples", bench_args.samples, "Input samples per run")->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--scaling", bench_args.scaling, "Measure 210, 3240 and 10000 hysterons");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (*run_cmd)
            return cmd_run(common, run_args, out, err);
        if (*verify_cmd)
            return cmd_verify(common, verify_args, out);
        return cmd_bench(common, bench_args, out, err);
    } catch (const config_error& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const contract_error& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const io_error& e) {
        err << "I/O error: " << e.what() << '\n';
        return exit_io;
    }
}

} // namespace preisach::cli
