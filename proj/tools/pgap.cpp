// pgap: train a perceptron on character rasters and compare the geometry it
// perceives with the true geometry of the data; plus an iris-code
// similarity demo.
//
// Every flag can also be set through an environment variable named
// PGAP_<FLAG> (upper case, dashes as underscores), e.g. PGAP_SEED=7.
// Command-line flags take precedence.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pgap/commands.hpp"

namespace {

void add_char_option(CLI::App& app, const std::string& name, char& target, const std::string& env,
                     const std::string& help)
{
    app.add_option_function<std::string>(
           name,
           [&target](const std::string& v) {
               if (v.size() != 1) throw CLI::ValidationError("--target", "expects a single character");
               target = v[0];
           },
           help)
        ->envname(env)
        ->default_str(std::string(1, target));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Perceptron perception-gap toolkit"};
    app.require_subcommand(1);

    pgap::GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Write a synthetic 16x16 character dataset (CSV)");
    generate->add_option("--out", gen.out, "Output CSV path")->required()->envname("PGAP_OUT");
    generate->add_option("--seed", gen.params.seed, "Random seed")->envname("PGAP_SEED")->capture_default_str();
    generate->add_option("--instances", gen.params.instances_per_class, "Instances per character")
        ->envname("PGAP_INSTANCES")
        ->capture_default_str();
    generate->add_option("--charset", gen.params.charset, "Characters to render")
        ->envname("PGAP_CHARSET")
        ->capture_default_str();
    generate->add_option("--noise", gen.params.noise_amplitude, "Uniform pixel noise amplitude")
        ->envname("PGAP_NOISE")
        ->capture_default_str();
    generate->add_option("--max-shift", gen.params.max_shift, "Maximum translation in pixels (0..3)")
        ->envname("PGAP_MAX_SHIFT")
        ->capture_default_str();
    generate->add_option("--ink", gen.params.ink_level, "Ink gray level")->envname("PGAP_INK")->capture_default_str();
    generate->add_option("--background", gen.params.background_level, "Background gray level")
        ->envname("PGAP_BACKGROUND")
        ->capture_default_str();

    pgap::TrainOptions tr;
    auto* train = app.add_subcommand("train", "Train A-vs-rest and report perceived vs actual geometry");
    train->add_option("--data", tr.data, "Dataset CSV")->required()->envname("PGAP_DATA");
    add_char_option(*train, "--target", tr.target, "PGAP_TARGET", "Positive-class character");
    train->add_option("--seed", tr.training.seed, "Weight initialization seed")
        ->envname("PGAP_SEED")
        ->capture_default_str();
    train->add_option("--max-epochs", tr.training.max_epochs, "Epoch cap")
        ->envname("PGAP_MAX_EPOCHS")
        ->capture_default_str();
    train->add_option("--start-index", tr.training.start_index, "First epoch index fed to the rate schedule")
        ->envname("PGAP_START_INDEX")
        ->capture_default_str();
    train->add_option("--init-low", tr.training.init_low, "Lower bound of initial weights")
        ->envname("PGAP_INIT_LOW")
        ->capture_default_str();
    train->add_option("--init-high", tr.training.init_high, "Upper bound of initial weights")
        ->envname("PGAP_INIT_HIGH")
        ->capture_default_str();
    train->add_option("--initial-threshold", tr.training.initial_threshold, "Initial threshold")
        ->envname("PGAP_INITIAL_THRESHOLD")
        ->capture_default_str();
    train->add_option("--tol", tr.tol, "Tolerance for d*/d = 1")->envname("PGAP_TOL")->capture_default_str();
    train->add_option("--trace", tr.trace_out, "Per-epoch trace CSV")->envname("PGAP_TRACE");
    train->add_option("--out", tr.report_out, "Experiment report (JSON)")->envname("PGAP_OUT");
    train->add_option("--memory", tr.memory_out, "Write the final memory here")->envname("PGAP_MEMORY");
    train->add_flag("--record-timing", tr.record_timing, "Include wall-clock time in the report")
        ->envname("PGAP_RECORD_TIMING");

    pgap::GeometryOptions geo;
    auto* geometry = app.add_subcommand("geometry", "Geometry report for a saved memory");
    geometry->add_option("--data", geo.data, "Dataset CSV")->required()->envname("PGAP_DATA");
    add_char_option(*geometry, "--target", geo.target, "PGAP_TARGET", "Positive-class character");
    geometry->add_option("--memory", geo.memory, "Memory file")->required()->envname("PGAP_MEMORY");
    geometry->add_option("--tol", geo.tol, "Tolerance for d*/d = 1")->envname("PGAP_TOL")->capture_default_str();
    geometry->add_option("--out", geo.report_out, "Report (JSON)")->envname("PGAP_OUT");

    pgap::IrisOptions iris;
    auto* iris_cmd = app.add_subcommand("iris", "Synthetic iris-code scores, safety band, crispness");
    iris_cmd->add_option("--length", iris.params.code_length, "Code length in bits")
        ->envname("PGAP_LENGTH")
        ->capture_default_str();
    iris_cmd->add_option("--genuine", iris.params.genuine_pairs, "Genuine pair count")
        ->envname("PGAP_GENUINE")
        ->capture_default_str();
    iris_cmd->add_option("--imposter", iris.params.imposter_pairs, "Imposter pair count")
        ->envname("PGAP_IMPOSTER")
        ->capture_default_str();
    iris_cmd->add_option("--flip-rate", iris.params.genuine_flip_rate, "Per-bit flip rate for genuine probes")
        ->envname("PGAP_FLIP_RATE")
        ->capture_default_str();
    iris_cmd->add_option("--seed", iris.params.seed, "Random seed")->envname("PGAP_SEED")->capture_default_str();
    iris_cmd->add_option("--bins", iris.bins, "Histogram bins")->envname("PGAP_BINS")->capture_default_str();
    iris_cmd->add_option("--out", iris.out, "Scores CSV")->envname("PGAP_OUT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pgap::exit_code::validation;
    }

    return pgap::run_guarded(
        [&] {
            if (*generate) return pgap::cmd_generate(gen, std::cout);
            if (*train) return pgap::cmd_train(tr, std::cout);
            if (*geometry) return pgap::cmd_geometry(geo, std::cout);
            return pgap::cmd_iris(iris, std::cout);
        },
        std::cerr);
}
