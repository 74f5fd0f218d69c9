// sweep.hpp — parameter sweeps, figure presets, CSV / plot-script emission

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimerqb/dimer.hpp"
#include "dimerqb/metrics.hpp"

namespace dimerqb::sweep {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Axis { Delta, Nu0, V12, Temperature };
enum class Metric { Ergotropy, AntiErgotropy, Capacity, Power, AvgPower, Coherence };

std::string_view to_string(Axis a);
std::string_view to_string(Metric m);
std::optional<Axis> parse_axis(std::string_view name);
std::optional<Metric> parse_metric(std::string_view name);

// Canonical column order of the metrics.
const std::vector<Metric>& all_metrics();

struct TauGrid {
    double start{0.0};
    double stop{0.0};
    int count{2};

    // start + i (stop - start) / (count - 1)
    std::vector<double> points() const;
    double step() const { return (stop - start) / (count - 1); }

    bool operator==(const TauGrid&) const = default;
};

TauGrid default_tau_grid(); // [0, 2 pi], 401 points

struct VaryAxis {
    Axis name{Axis::Delta};
    std::vector<double> values;

    bool operator==(const VaryAxis&) const = default;
};

struct SweepSpec {
    model::DimerParams params;
    TauGrid tau_grid = default_tau_grid();
    std::optional<VaryAxis> vary;
    std::vector<Metric> metrics = all_metrics();
    double power_step{metrics::kDefaultPowerStep};
    // Not part of the config schema; set from the command line.
    metrics::CoherenceBasis coherence_basis{metrics::CoherenceBasis::Energy};

    // One message per violated invariant; empty when the spec is runnable.
    std::vector<std::string> validate() const;
    bool selects(Metric m) const;
};

bool operator==(const SweepSpec& a, const SweepSpec& b);

// The value of `axis` inside `p`, and a copy of `p` with it replaced.
double axis_value(const model::DimerParams& p, Axis axis);
model::DimerParams with_axis(model::DimerParams p, Axis axis, double value);

struct SweepRow {
    std::optional<double> axis_value; // empty when the spec has no secondary axis
    metrics::MetricsSample sample;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows; // ordered by (axis_value, tau)
    std::string tool_version{kToolVersion};
    std::string csv_path;       // path of the CSV relative to the plot script
};

// Throws ValidationError listing every violated invariant.
SweepResult run_sweep(const SweepSpec& spec, std::string csv_path = "sweep.csv");

// fig1..fig4. Throws UnknownPreset.
SweepSpec figure_preset(std::string_view name);
const std::vector<std::string>& preset_names();

// CSV with `#` provenance header lines, then
// axis,axis_value,tau,ergotropy,anti_ergotropy,capacity,power,avg_power,coherence
// Values use 17 significant digits; unselected metrics are left empty.
// Throws IoFailure if the stream fails.
void emit_csv(const SweepResult& result, std::ostream& out);

// gnuplot script drawing one panel per selected metric and one curve per
// secondary-axis value from result.csv_path. Throws IoFailure.
void emit_plot_script(const SweepResult& result, std::ostream& out);

// Flat JSON config. Required: nu0, delta, v12, temperature. Optional:
// tau_start, tau_stop, tau_count, vary_name, vary_values, metrics, power_step.
// Numeric fields also accept numeric strings such as "NaN" so non-finite
// values reach validation. Throws ParseError (with line/column) for
// malformed JSON and ValidationError for schema or invariant violations.
SweepSpec parse_config(std::string_view text);

// Inverse of parse_config: every schema key, doubles in round-trip precision.
std::string to_config_json(const SweepSpec& spec);

// Recovers the spec echoed into the provenance header of an emitted CSV.
SweepSpec parse_provenance(std::string_view csv_text);

} // namespace dimerqb::sweep
