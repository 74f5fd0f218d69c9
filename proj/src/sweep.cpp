// sweep.cpp — sweep engine, figure presets and emitters

#include "dimerqb/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "dimerqb/errors.hpp"

namespace dimerqb::sweep {

std::string_view to_string(Axis a) {
    switch (a) {
    case Axis::Delta: return "delta";
    case Axis::Nu0: return "nu0";
    case Axis::V12: return "v12";
    case Axis::Temperature: return "temperature";
    }
    return "?";
}

std::string_view to_string(Metric m) {
    switch (m) {
    case Metric::Ergotropy: return "ergotropy";
    case Metric::AntiErgotropy: return "anti_ergotropy";
    case Metric::Capacity: return "capacity";
    case Metric::Power: return "power";
    case Metric::AvgPower: return "avg_power";
    case Metric::Coherence: return "coherence";
    }
    return "?";
}

std::optional<Axis> parse_axis(std::string_view name) {
    for (Axis a : {Axis::Delta, Axis::Nu0, Axis::V12, Axis::Temperature})
        if (to_string(a) == name) return a;
    return std::nullopt;
}

std::optional<Metric> parse_metric(std::string_view name) {
    for (Metric m : all_metrics())
        if (to_string(m) == name) return m;
    return std::nullopt;
}

const std::vector<Metric>& all_metrics() {
    static const std::vector<Metric> metrics{Metric::Ergotropy, Metric::AntiErgotropy, Metric::Capacity,
                                             Metric::Power,     Metric::AvgPower,      Metric::Coherence};
    return metrics;
}

std::vector<double> TauGrid::points() const {
    std::vector<double> pts(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) pts[i] = start + i * (stop - start) / (count - 1);
    if (count >= 2) pts.back() = stop;
    return pts;
}

TauGrid default_tau_grid() { return TauGrid{0.0, 2.0 * std::numbers::pi, 401}; }

double axis_value(const model::DimerParams& p, Axis axis) {
    switch (axis) {
    case Axis::Delta: return p.delta;
    case Axis::Nu0: return p.nu0;
    case Axis::V12: return p.v12;
    case Axis::Temperature: return p.temperature;
    }
    return 0.0;
}

model::DimerParams with_axis(model::DimerParams p, Axis axis, double value) {
    switch (axis) {
    case Axis::Delta: p.delta = value; break;
    case Axis::Nu0: p.nu0 = value; break;
    case Axis::V12: p.v12 = value; break;
    case Axis::Temperature: p.temperature = value; break;
    }
    return p;
}

namespace {

void check_params(const model::DimerParams& p, const std::string& where, std::vector<std::string>& issues) {
    if (!std::isfinite(p.delta)) issues.push_back(where + "delta: must be finite");
    if (!std::isfinite(p.v12)) issues.push_back(where + "v12: must be finite");
    if (!(std::isfinite(p.nu0) && p.nu0 > 0.0)) issues.push_back(where + "nu0: must be finite and > 0");
    if (!(std::isfinite(p.temperature) && p.temperature > 0.0))
        issues.push_back(where + "temperature: must be finite and > 0");
}

} // namespace

std::vector<std::string> SweepSpec::validate() const {
    std::vector<std::string> issues;
    check_params(params, "", issues);

    if (!(std::isfinite(tau_grid.start) && tau_grid.start >= 0.0))
        issues.push_back("tau_start: must be finite and >= 0");
    if (!(std::isfinite(tau_grid.stop) && tau_grid.stop > tau_grid.start))
        issues.push_back("tau_stop: must be finite and > tau_start");
    if (tau_grid.count < 2) issues.push_back("tau_count: must be >= 2");

    if (vary) {
        if (vary->values.empty()) issues.push_back("vary_values: must not be empty");
        std::set<double> seen;
        for (std::size_t i = 0; i < vary->values.size(); ++i) {
            const double v = vary->values[i];
            const std::string where = "vary_values[" + std::to_string(i) + "]: ";
            if (!std::isfinite(v)) {
                issues.push_back(where + "must be finite");
                continue;
            }
            if (!seen.insert(v).second) issues.push_back(where + "duplicate value");
            std::vector<std::string> axis_issues;
            check_params(with_axis(params, vary->name, v), "", axis_issues);
            for (auto& s : axis_issues) issues.push_back(where + s);
        }
    }
    if (metrics.empty()) issues.push_back("metrics: must select at least one metric");
    if (!(std::isfinite(power_step) && power_step > 0.0)) issues.push_back("power_step: must be finite and > 0");
    return issues;
}

bool SweepSpec::selects(Metric m) const {
    return std::find(metrics.begin(), metrics.end(), m) != metrics.end();
}

bool operator==(const SweepSpec& a, const SweepSpec& b) {
    return a.params.nu0 == b.params.nu0 && a.params.delta == b.params.delta && a.params.v12 == b.params.v12 &&
           a.params.temperature == b.params.temperature && a.tau_grid == b.tau_grid && a.vary == b.vary &&
           a.metrics == b.metrics && a.power_step == b.power_step && a.coherence_basis == b.coherence_basis;
}

SweepResult run_sweep(const SweepSpec& spec, std::string csv_path) {
    auto issues = spec.validate();
    if (!issues.empty()) throw ValidationError(std::move(issues));

    std::vector<std::optional<double>> axis_values;
    if (spec.vary) {
        std::vector<double> sorted = spec.vary->values;
        std::stable_sort(sorted.begin(), sorted.end());
        axis_values.assign(sorted.begin(), sorted.end());
    } else {
        axis_values.push_back(std::nullopt);
    }
    const std::vector<double> taus = spec.tau_grid.points();

    SweepResult result;
    result.spec = spec;
    result.csv_path = std::move(csv_path);
    result.rows.resize(axis_values.size() * taus.size());

    // Each job owns one output slot, so the row order does not depend on scheduling.
    auto compute = [&](std::size_t job) {
        const std::size_t a = job / taus.size();
        const std::size_t t = job % taus.size();
        const model::DimerParams p =
            axis_values[a] ? with_axis(spec.params, spec.vary->name, *axis_values[a]) : spec.params;
        result.rows[job] = SweepRow{axis_values[a], metrics::sample(p, taus[t], spec.power_step, spec.coherence_basis)};
    };

    const std::size_t jobs = result.rows.size();
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(jobs / 64, 1));
    if (workers <= 1) {
        for (std::size_t j = 0; j < jobs; ++j) compute(j);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t j = w; j < jobs; j += workers) compute(j);
            });
        for (auto& th : pool) th.join();
    }
    return result;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig1", "fig2", "fig3", "fig4"};
    return names;
}

SweepSpec figure_preset(std::string_view name) {
    SweepSpec spec;
    spec.metrics = {Metric::Ergotropy, Metric::Power, Metric::Coherence, Metric::Capacity};
    if (name == "fig1") {
        spec.params = {6.0, 0.0, 0.05, 0.5};
        spec.vary = VaryAxis{Axis::Delta, {0.0, 4.0, -8.0, 10.0}};
    } else if (name == "fig2") {
        spec.params = {2.0, 0.0, 0.5, 0.5};
        spec.vary = VaryAxis{Axis::Nu0, {2.0, 4.0, 6.0, 8.0}};
    } else if (name == "fig3") {
        spec.params = {3.5, 5.0, 0.0, 0.5};
        spec.vary = VaryAxis{Axis::V12, {0.0, 1.5, 10.0}};
    } else if (name == "fig4") {
        spec.params = {4.0, 6.0, 0.01, 0.5};
        spec.vary = VaryAxis{Axis::Temperature, {0.5, 1.0, 2.0}};
    } else {
        throw UnknownPreset("unknown figure preset '" + std::string(name) + "' (expected fig1..fig4)");
    }
    return spec;
}

namespace {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double metric_value(const metrics::MetricsSample& s, Metric m) {
    switch (m) {
    case Metric::Ergotropy: return s.ergotropy;
    case Metric::AntiErgotropy: return s.anti_ergotropy;
    case Metric::Capacity: return s.capacity;
    case Metric::Power: return s.power;
    case Metric::AvgPower: return s.avg_power;
    case Metric::Coherence: return s.coherence_l1;
    }
    return 0.0;
}

std::string_view basis_name(metrics::CoherenceBasis b) {
    return b == metrics::CoherenceBasis::Computational ? "computational" : "energy";
}

void check_stream(const std::ostream& out, const char* what) {
    if (!out) throw IoFailure(std::string(what) + ": write failed");
}

} // namespace

void emit_csv(const SweepResult& result, std::ostream& out) {
    const SweepSpec& spec = result.spec;
    out << "# dimerqb " << result.tool_version << '\n';
    out << "# config: " << to_config_json(spec) << '\n';
    out << "# coherence_basis: " << basis_name(spec.coherence_basis) << '\n';
    out << "# csv: " << result.csv_path << '\n';
    out << "axis,axis_value,tau,ergotropy,anti_ergotropy,capacity,power,avg_power,coherence\n";

    const std::string axis = spec.vary ? std::string(to_string(spec.vary->name)) : "none";
    for (const SweepRow& row : result.rows) {
        out << axis << ',' << (row.axis_value ? format_double(*row.axis_value) : "") << ','
            << format_double(row.sample.tau);
        for (Metric m : all_metrics()) {
            out << ',';
            if (spec.selects(m)) out << format_double(metric_value(row.sample, m));
        }
        out << '\n';
    }
    out.flush();
    check_stream(out, "emit_csv");
}

namespace {

struct Panel {
    Metric metric;
    const char* label;
    int column;
};

// Figure panel order: E, P, C_l1, C, then the extra metrics.
const std::vector<Panel>& panel_layout() {
    static const std::vector<Panel> panels{
        {Metric::Ergotropy, "E", 4},      {Metric::Power, "P", 7},         {Metric::Coherence, "C_{l1}", 9},
        {Metric::Capacity, "C", 6},       {Metric::AntiErgotropy, "W", 5}, {Metric::AvgPower, "<p>", 8},
    };
    return panels;
}

std::string stem_of(const std::string& path) {
    const std::size_t slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

} // namespace

void emit_plot_script(const SweepResult& result, std::ostream& out) {
    const SweepSpec& spec = result.spec;
    if (result.rows.empty()) throw ValidationError({"emit_plot_script: result has no rows"});

    std::vector<Panel> panels;
    for (const Panel& p : panel_layout())
        if (spec.selects(p.metric)) panels.push_back(p);
    const std::size_t cols = panels.size() == 1 ? 1 : 2;
    const std::size_t rows = (panels.size() + cols - 1) / cols;

    out << "# gnuplot script generated by dimerqb " << result.tool_version << '\n';
    out << "# panels: " << panels.size() << '\n';
    out << "set encoding utf8\n";
    out << "set datafile separator ','\n";
    out << "set terminal pngcairo size " << 640 * cols << ',' << 480 * rows << '\n';
    out << "set output '" << stem_of(result.csv_path) << ".png'\n";
    out << "csv = '" << result.csv_path << "'\n";

    std::string values;
    if (spec.vary) {
        std::vector<double> sorted = spec.vary->values;
        std::stable_sort(sorted.begin(), sorted.end());
        for (double v : sorted) values += (values.empty() ? "" : " ") + format_double(v);
        out << "values = \"" << values << "\"\n";
    }
    out << "set multiplot layout " << rows << ',' << cols << '\n';
    out << "set xlabel 'Ωt'\n";
    for (const Panel& p : panels) {
        out << "set ylabel '" << p.label << "'\n";
        if (spec.vary) {
            out << "plot for [v in values] csv using 3:(strcol(2) eq v ? column(" << p.column
                << ") : NaN) with lines title sprintf('" << to_string(spec.vary->name) << " = %s', v)\n";
        } else {
            out << "plot csv using 3:" << p.column << " with lines title '" << to_string(p.metric) << "'\n";
        }
    }
    out << "unset multiplot\n";
    out.flush();
    check_stream(out, "emit_plot_script");
}

} // namespace dimerqb::sweep
