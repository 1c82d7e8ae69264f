#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gamedyn/integrator.hpp"
#include "gamedyn/metrics.hpp"

namespace gamedyn {

// Bad invocation (unknown name, malformed config, unwritable outdir).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentName {
    Example1,            // sinusoid-vs-constant environment, model averages
    Example2,            // lagged replicator on [sin, -sin], lambda sweep
    ExrdCounterexample,  // exponential replicator under constant e1
    ZerosumCycle,        // standard RPS: cycling vs higher-order convergence
    Contractive,         // good RPS: global convergence from random starts
    PassivityScan,       // all models over the signal battery, evidence stats
};

const char* to_string(ExperimentName e);
std::optional<ExperimentName> experiment_from_string(std::string_view tag);

struct ExperimentSpec {
    ExperimentName name = ExperimentName::Example1;
    std::vector<ModelKind> models;  // prefilled with the experiment default
    ModelParams params;
    IntegratorConfig integ;
    std::uint64_t seed = 0;
    std::string outdir = "out";
    std::optional<MatrixGame> game;  // replaces the experiment's built-in game
};

// Spec prefilled with the experiment's default models, horizon and step.
ExperimentSpec default_spec(ExperimentName name);

// Runs the experiment, writing per-model trajectory CSVs, metrics JSON and
// SVG charts under spec.outdir. Returns 0 on success, 2 if any model's
// integration diverged (remaining models still run). Throws UsageError for
// unusable specs.
int run_experiment(const ExperimentSpec& spec);

enum class Verdict { Bounded, Diverging, NA };

const char* to_string(Verdict v);

struct ClassificationRow {
    ModelKind model;
    Verdict finite_regret;
    Verdict delta;
    Verdict ei;
};

// Derives the classification table from the stats JSON a passivity-scan run
// left in `indir`, writes classification.csv / classification.json there and
// returns the rows. Throws UsageError if the scan is incomplete.
std::vector<ClassificationRow> classify(const std::string& indir);

}  // namespace gamedyn
