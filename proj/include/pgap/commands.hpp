#pragma once

// The four command-line operations, callable in-process. Each returns the
// process exit status; errors surface as exceptions and are mapped to exit
// codes by run_guarded().

#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>

#include "pgap/dataset.hpp"
#include "pgap/errors.hpp"
#include "pgap/geometry.hpp"
#include "pgap/iris.hpp"
#include "pgap/persist.hpp"
#include "pgap/training.hpp"

namespace pgap {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 2;
inline constexpr int io = 3;
inline constexpr int epoch_limit = 4;
inline constexpr int divergence = 5;
inline constexpr int internal = 70;
} // namespace exit_code

struct GenerateOptions {
    GenerationParams params;
    std::filesystem::path out;
};

struct TrainOptions {
    std::filesystem::path data;
    char target = 'A';
    TrainingConfig training;
    double tol = default_ratio_tolerance;
    std::optional<std::filesystem::path> trace_out;
    std::optional<std::filesystem::path> report_out;
    std::optional<std::filesystem::path> memory_out;
    bool record_timing = false;
};

struct GeometryOptions {
    std::filesystem::path data;
    char target = 'A';
    std::filesystem::path memory;
    double tol = default_ratio_tolerance;
    std::optional<std::filesystem::path> report_out;
};

struct IrisOptions {
    IrisSynthesisParams params;
    std::size_t bins = default_histogram_bins;
    std::optional<std::filesystem::path> out;
};

inline int cmd_generate(const GenerateOptions& opt, std::ostream& log)
{
    const auto examples = generate(opt.params);
    atomic_write(opt.out, [&](std::ostream& out) { save_csv(out, examples); });
    log << "wrote " << examples.size() << " examples (" << opt.params.charset.size() << " classes x "
        << opt.params.instances_per_class << ") to " << opt.out.string() << '\n';
    return exit_code::ok;
}

namespace detail {

inline std::vector<RasterExample> load_dataset(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return load_csv(in);
}

inline Json dataset_json(const std::filesystem::path& path, const std::vector<RasterExample>& examples,
                         const LabeledDataset& task, char target)
{
    return {{"path", path.string()},
            {"digest_fnv1a64", dataset_digest(examples)},
            {"target", std::string(1, target)},
            {"positives", task.positives().size()},
            {"negatives", task.negatives().size()},
            {"dimension", task.dimension()}};
}

inline void print_geometry(std::ostream& log, const GeometryReport& g)
{
    log << std::setprecision(9) << "  trained            " << (g.trained ? "yes" : "no") << '\n'
        << "  D (activation gap) " << g.activation_gap << '\n'
        << "  d* (perceived)     " << g.d_star << '\n'
        << "  d  (actual)        " << g.d_actual << '\n'
        << "  d*/d               " << g.ratio << "  -> " << to_string(g.verdict) << '\n'
        << "  diameter C+        perceived " << g.perceived_diam_pos << ", actual " << g.actual_diam_pos
        << '\n'
        << "  diameter C-        perceived " << g.perceived_diam_neg << ", actual " << g.actual_diam_neg
        << '\n';
}

} // namespace detail

inline int cmd_train(const TrainOptions& opt, std::ostream& log)
{
    opt.training.validate();
    const auto started = std::chrono::steady_clock::now();
    const auto examples = detail::load_dataset(opt.data);
    const auto task = make_binary_task(examples, opt.target);
    const auto result = train(task, opt.training);
    const auto geometry = geometry_report(task, result.memory, opt.tol);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

    if (opt.trace_out)
        atomic_write(*opt.trace_out,
                     [&](std::ostream& out) { write_trace_csv(out, result.trace, task.dimension()); });
    if (opt.memory_out)
        atomic_write(*opt.memory_out, [&](std::ostream& out) { write_memory(out, result.memory); });
    if (opt.report_out) {
        Json report;
        report["command"] = "train";
        report["config"] = {{"training", to_json(opt.training)}, {"tol", opt.tol}};
        report["dataset"] = detail::dataset_json(opt.data, examples, task, opt.target);
        report["training"] = to_json(result.trace);
        report["geometry"] = to_json(geometry);
        report["comparison"] = reference_comparison(geometry);
        if (opt.record_timing)
            report["timing"] = {{"recorded", true}, {"wall_ms", elapsed.count()}};
        else
            report["timing"] = {{"recorded", false}};
        atomic_write(*opt.report_out, [&](std::ostream& out) { out << dump(report); });
    }

    log << "task '" << opt.target << "' vs rest: " << task.positives().size() << " positives, "
        << task.negatives().size() << " negatives, dimension " << task.dimension() << '\n';
    if (result.trace.converged())
        log << "converged at epoch " << result.trace.converged_epoch << " ("
            << result.trace.snapshots.size() << " epochs examined)\n";
    else
        log << "epoch limit reached after " << result.trace.snapshots.size() << " epochs\n";
    detail::print_geometry(log, geometry);
    log << "  elapsed            " << elapsed.count() << " ms\n";
    return result.trace.converged() ? exit_code::ok : exit_code::epoch_limit;
}

inline int cmd_geometry(const GeometryOptions& opt, std::ostream& log)
{
    const auto examples = detail::load_dataset(opt.data);
    const auto task = make_binary_task(examples, opt.target);
    SynapticMemory memory;
    {
        auto in = open_input(opt.memory);
        memory = read_memory(in);
    }
    check_dimensions(task.dimension(), memory.dimension());
    const auto geometry = geometry_report(task, memory, opt.tol);

    if (opt.report_out) {
        Json report;
        report["command"] = "geometry";
        report["config"] = {{"memory", opt.memory.string()}, {"tol", opt.tol}};
        report["dataset"] = detail::dataset_json(opt.data, examples, task, opt.target);
        report["geometry"] = to_json(geometry);
        report["comparison"] = reference_comparison(geometry);
        atomic_write(*opt.report_out, [&](std::ostream& out) { out << dump(report); });
    }
    detail::print_geometry(log, geometry);
    return exit_code::ok;
}

inline int cmd_iris(const IrisOptions& opt, std::ostream& log)
{
    const auto scores = synthesize_scores(opt.params);
    const auto band = safety_band(scores);
    const auto crisp = crispness_report(scores, opt.bins);
    if (opt.out) atomic_write(*opt.out, [&](std::ostream& out) { write_scores_csv(out, scores); });

    log << std::setprecision(9) << "code length " << opt.params.code_length << ", "
        << scores.genuine_scores.size() << " genuine / " << scores.imposter_scores.size()
        << " imposter pairs, flip rate " << opt.params.genuine_flip_rate << '\n'
        << "safety band        " << band << (band > 0.0 ? "  (separated)" : "  (overlapping)") << '\n'
        << "fraction interior  " << crisp.fraction_interior << '\n'
        << "histogram          ";
    for (std::size_t i = 0; i < crisp.histogram.size(); ++i) log << (i ? " " : "") << crisp.histogram[i];
    log << '\n';
    return exit_code::ok;
}

// Runs a command, translating exceptions into exit statuses and messages.
template <class Fn>
int run_guarded(Fn&& fn, std::ostream& err)
{
    try {
        return fn();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::validation;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return exit_code::io;
    } catch (const DivergenceError& e) {
        err << "diverged: " << e.what() << '\n';
        return exit_code::divergence;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal;
    }
}

} // namespace pgap
