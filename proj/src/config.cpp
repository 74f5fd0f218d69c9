// config.cpp — flat JSON sweep configuration

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dimerqb/errors.hpp"
#include "dimerqb/sweep.hpp"

namespace dimerqb::sweep {

namespace {

using json = nlohmann::json;

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{
        "nu0", "delta", "v12", "temperature", "tau_start", "tau_stop",
        "tau_count", "vary_name", "vary_values", "metrics", "power_step"};
    return keys;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            line_start = i + 1;
        }
    }
    return {line, end - line_start + 1};
}

// JSON number, or a string strtod accepts in full ("NaN", "inf", "1e-3").
std::optional<double> as_number(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty()) return std::nullopt;
        char* end = nullptr;
        const double d = std::strtod(s.c_str(), &end);
        if (end == s.c_str() + s.size()) return d;
    }
    return std::nullopt;
}

class Reader {
public:
    explicit Reader(const json& doc) : doc_(doc) {}

    std::optional<double> number(const char* key, bool required) {
        if (!doc_.contains(key)) {
            if (required) issues_.push_back(std::string(key) + ": required");
            return std::nullopt;
        }
        auto v = as_number(doc_.at(key));
        if (!v) issues_.push_back(std::string(key) + ": expected a number");
        return v;
    }

    std::vector<std::string>& issues() { return issues_; }

private:
    const json& doc_;
    std::vector<std::string> issues_;
};

} // namespace

SweepSpec parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        std::ostringstream os;
        os << "config parse error at line " << line << ", column " << col << ": " << e.what();
        throw ParseError(os.str(), line, col);
    }
    if (!doc.is_object()) throw ValidationError({"config: top level must be a JSON object"});

    SweepSpec spec;
    Reader r(doc);
    auto& issues = r.issues();

    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!known_keys().count(key)) issues.push_back(key + ": unknown key");
    }

    if (auto v = r.number("nu0", true)) spec.params.nu0 = *v;
    if (auto v = r.number("delta", true)) spec.params.delta = *v;
    if (auto v = r.number("v12", true)) spec.params.v12 = *v;
    if (auto v = r.number("temperature", true)) spec.params.temperature = *v;
    if (auto v = r.number("tau_start", false)) spec.tau_grid.start = *v;
    if (auto v = r.number("tau_stop", false)) spec.tau_grid.stop = *v;
    if (auto v = r.number("tau_count", false)) {
        if (std::isfinite(*v) && std::floor(*v) == *v && std::abs(*v) < 1e9)
            spec.tau_grid.count = static_cast<int>(*v);
        else
            issues.push_back("tau_count: expected an integer");
    }
    if (auto v = r.number("power_step", false)) spec.power_step = *v;

    const bool has_name = doc.contains("vary_name");
    const bool has_values = doc.contains("vary_values");
    if (has_name != has_values) {
        issues.push_back("vary_name and vary_values must be given together");
    } else if (has_name) {
        VaryAxis vary;
        const json& name = doc.at("vary_name");
        std::optional<Axis> axis = name.is_string() ? parse_axis(name.get<std::string>()) : std::nullopt;
        if (!axis)
            issues.push_back("vary_name: expected one of delta, nu0, v12, temperature");
        else
            vary.name = *axis;
        const json& values = doc.at("vary_values");
        if (!values.is_array()) {
            issues.push_back("vary_values: expected an array of numbers");
        } else {
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (auto v = as_number(values[i]))
                    vary.values.push_back(*v);
                else
                    issues.push_back("vary_values[" + std::to_string(i) + "]: expected a number");
            }
        }
        spec.vary = std::move(vary);
    }

    if (doc.contains("metrics")) {
        const json& m = doc.at("metrics");
        spec.metrics.clear();
        if (!m.is_array()) {
            issues.push_back("metrics: expected an array of metric names");
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) {
                auto metric = m[i].is_string() ? parse_metric(m[i].get<std::string>()) : std::nullopt;
                if (!metric) {
                    issues.push_back("metrics[" + std::to_string(i) + "]: unknown metric");
                } else if (std::find(spec.metrics.begin(), spec.metrics.end(), *metric) != spec.metrics.end()) {
                    issues.push_back("metrics[" + std::to_string(i) + "]: duplicate metric");
                } else {
                    spec.metrics.push_back(*metric);
                }
            }
        }
    }

    if (issues.empty()) {
        auto invariant_issues = spec.validate();
        issues.insert(issues.end(), invariant_issues.begin(), invariant_issues.end());
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return spec;
}

std::string to_config_json(const SweepSpec& spec) {
    nlohmann::ordered_json doc;
    doc["nu0"] = spec.params.nu0;
    doc["delta"] = spec.params.delta;
    doc["v12"] = spec.params.v12;
    doc["temperature"] = spec.params.temperature;
    doc["tau_start"] = spec.tau_grid.start;
    doc["tau_stop"] = spec.tau_grid.stop;
    doc["tau_count"] = spec.tau_grid.count;
    if (spec.vary) {
        doc["vary_name"] = std::string(to_string(spec.vary->name));
        doc["vary_values"] = spec.vary->values;
    }
    auto metrics = nlohmann::ordered_json::array();
    for (Metric m : spec.metrics) metrics.push_back(std::string(to_string(m)));
    doc["metrics"] = metrics;
    doc["power_step"] = spec.power_step;
    return doc.dump();
}

SweepSpec parse_provenance(std::string_view csv_text) {
    constexpr std::string_view kConfigTag = "# config: ";
    constexpr std::string_view kBasisTag = "# coherence_basis: ";
    std::optional<SweepSpec> spec;
    std::optional<metrics::CoherenceBasis> basis;

    std::size_t pos = 0;
    while (pos < csv_text.size() && csv_text[pos] == '#') {
        const std::size_t eol = csv_text.find('\n', pos);
        const std::string_view line = csv_text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        if (line.substr(0, kConfigTag.size()) == kConfigTag)
            spec = parse_config(line.substr(kConfigTag.size()));
        else if (line.substr(0, kBasisTag.size()) == kBasisTag)
            basis = line.substr(kBasisTag.size()) == "computational" ? metrics::CoherenceBasis::Computational
                                                                      : metrics::CoherenceBasis::Energy;
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (!spec) throw ValidationError({"provenance: no '# config:' line found"});
    if (basis) spec->coherence_basis = *basis;
    return *spec;
}

} // namespace dimerqb::sweep
