#include "preisach/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "preisach/error.hpp"

namespace preisach {

using nlohmann::json;

namespace {

// Typed access to one JSON object with dotted-path diagnostics.
class ObjectReader {
public:
    ObjectReader(const json& doc, std::string where) : doc_(doc), where_(std::move(where)) {
        if (!doc_.is_object())
            throw config_error(where_, "expected an object");
    }

    bool has(const std::string& key) const { return doc_.contains(key); }

    std::string field(const std::string& key) const { return where_.empty() ? key : where_ + "." + key; }

    const json& at(const std::string& key) {
        seen_.insert(key);
        if (!doc_.contains(key))
            throw config_error(field(key), "missing");
        return doc_.at(key);
    }

    double real(const std::string& key, double fallback) {
        return has(key) ? real(key) : (seen_.insert(key), fallback);
    }

    double real(const std::string& key) {
        const json& v = at(key);
        if (!v.is_number())
            throw config_error(field(key), "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d))
            throw config_error(field(key), "expected a finite number");
        return d;
    }

    std::uint64_t unsigned_int(const std::string& key, std::uint64_t fallback) {
        if (!has(key)) {
            seen_.insert(key);
            return fallback;
        }
        const json& v = at(key);
        if (!v.is_number_unsigned())
            throw config_error(field(key), "expected a nonnegative integer");
        return v.get<std::uint64_t>();
    }

    std::string text(const std::string& key, const std::string& fallback) {
        return has(key) ? text(key) : (seen_.insert(key), fallback);
    }

    std::string text(const std::string& key) {
        const json& v = at(key);
        if (!v.is_string())
            throw config_error(field(key), "expected a string");
        return v.get<std::string>();
    }

    // Any key not consumed is an error; catches misspelled fields.
    void finish() const {
        for (const auto& [key, value] : doc_.items()) {
            if (!seen_.count(key))
                throw config_error(field(key), "unknown field");
        }
    }

private:
    const json& doc_;
    std::string where_;
    std::set<std::string> seen_;
};

template <class Fn>
auto rethrow_as_config(const std::string& field, Fn&& fn) {
    try {
        return fn();
    } catch (const contract_error& e) {
        throw config_error(field, e.what());
    }
}

// Values left open by the experiment descriptions. The decay rate keeps the
// per-period amplitude drop above one mesh spacing (2/80) until the output
// extrema are below 0.01, so every one of the ten loops is strictly nested.
constexpr double fig5_decay_per_s = 0.3;
constexpr double fig5_duration_s = 10.0;
// Raw noise amplitude; after the 10 Hz filter the signal has a standard
// deviation of about 0.43 and spends roughly 2 % of the time saturated.
constexpr double fig6b_noise_amplitude = 6.0;

std::string_view to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

std::string_view to_string(DensityKind kind) { return kind == DensityKind::uniform ? "uniform" : "table"; }

} // namespace

HysteronBank BankConfig::build(BankOptions options) const {
    return make_bank(mesh, density, init, x0, options);
}

json to_json(const BankConfig& config) {
    json density = {{"kind", to_string(config.density.kind)}};
    if (config.density.table)
        density["table"] = *config.density.table;
    return {
        {"x_min", config.mesh.x_min},
        {"x_max", config.mesh.x_max},
        {"levels", config.mesh.levels},
        {"density", density},
        {"init", to_string(config.init)},
        {"x0", config.x0},
    };
}

json to_json(const signals::SignalSpec& spec) {
    json doc = {
        {"kind", signals::to_string(spec.kind)},
        {"amplitude", spec.amplitude},
        {"frequency_hz", spec.frequency_hz},
        {"decay", spec.decay},
        {"sample_rate_hz", spec.sample_rate_hz},
        {"duration_s", spec.duration_s},
        {"cutoff_hz", spec.cutoff_hz},
        {"seed", spec.seed},
    };
    if (!spec.path.empty())
        doc["path"] = spec.path;
    return doc;
}

json to_json(const ExperimentConfig& config) {
    return {
        {"model", to_json(config.model)},
        {"signal", to_json(config.signal)},
        {"output",
         {{"path", config.output.path},
          {"format", to_string(config.output.format)},
          {"decimation", config.output.decimation}}},
    };
}

BankConfig bank_config_from_json(const json& doc, const std::string& where) {
    ObjectReader r(doc, where);
    BankConfig config;
    config.mesh.x_min = r.real("x_min");
    config.mesh.x_max = r.real("x_max");
    if (!(config.mesh.x_min < config.mesh.x_max))
        throw config_error(r.field("x_max"), "must exceed x_min");
    const std::uint64_t levels = r.unsigned_int("levels", 0);
    if (levels == 0)
        throw config_error(r.field("levels"), "expected a positive integer");
    if (levels > 1'000'000)
        throw config_error(r.field("levels"), "too many levels");
    config.mesh.levels = static_cast<std::size_t>(levels);

    if (r.has("density")) {
        ObjectReader d(r.at("density"), r.field("density"));
        const std::string kind = d.text("kind");
        if (kind == "uniform") {
            config.density = DensitySpec::uniform();
        } else if (kind == "table") {
            const json& table = d.at("table");
            if (!table.is_array())
                throw config_error(d.field("table"), "expected an array of weights");
            std::vector<double> weights;
            for (std::size_t i = 0; i < table.size(); ++i) {
                const std::string item = d.field("table") + "[" + std::to_string(i) + "]";
                if (!table[i].is_number())
                    throw config_error(item, "expected a number");
                const double w = table[i].get<double>();
                if (!std::isfinite(w) || w < 0.0)
                    throw config_error(item, "weight must be finite and nonnegative");
                weights.push_back(w);
            }
            if (weights.size() != config.mesh.node_count())
                throw config_error(d.field("table"), "has " + std::to_string(weights.size()) +
                                                         " weights but the mesh has " +
                                                         std::to_string(config.mesh.node_count()) + " nodes");
            config.density = DensitySpec::from_table(std::move(weights));
        } else {
            throw config_error(d.field("kind"), "expected 'uniform' or 'table'");
        }
        d.finish();
    }

    config.init = rethrow_as_config(r.field("init"), [&] { return parse_init_preset(r.text("init")); });
    config.x0 = r.real("x0", 0.0);
    r.finish();
    return config;
}

signals::SignalSpec signal_spec_from_json(const json& doc, const std::string& where) {
    ObjectReader r(doc, where);
    signals::SignalSpec spec;
    spec.kind = rethrow_as_config(r.field("kind"), [&] { return signals::parse_signal_kind(r.text("kind")); });
    spec.amplitude = r.real("amplitude", spec.amplitude);
    spec.frequency_hz = r.real("frequency_hz", spec.frequency_hz);
    spec.decay = r.real("decay", spec.decay);
    spec.sample_rate_hz = r.real("sample_rate_hz", spec.sample_rate_hz);
    spec.duration_s = r.real("duration_s", spec.duration_s);
    spec.cutoff_hz = r.real("cutoff_hz", spec.cutoff_hz);
    spec.seed = r.unsigned_int("seed", spec.seed);
    spec.path = r.text("path", "");
    r.finish();
    rethrow_as_config(where, [&] {
        spec.validate();
        return 0;
    });
    return spec;
}

ExperimentConfig experiment_from_json(const json& doc) {
    ObjectReader r(doc, "");
    ExperimentConfig config;
    config.model = bank_config_from_json(r.at("model"), "model");
    config.signal = signal_spec_from_json(r.at("signal"), "signal");
    if (r.has("output")) {
        ObjectReader o(r.at("output"), "output");
        config.output.path = o.text("path", config.output.path);
        const std::string format = o.text("format", "csv");
        if (format == "csv")
            config.output.format = OutputFormat::csv;
        else if (format == "json")
            config.output.format = OutputFormat::json;
        else
            throw config_error(o.field("format"), "expected 'csv' or 'json'");
        const std::uint64_t decimation = o.unsigned_int("decimation", 1);
        if (decimation == 0)
            throw config_error(o.field("decimation"), "must be at least 1");
        config.output.decimation = static_cast<std::size_t>(decimation);
        o.finish();
    }
    r.finish();
    return config;
}

ExperimentConfig parse_experiment(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Locate the byte offset as line:column.
        const std::size_t byte = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw config_error("", "JSON syntax error at line " + std::to_string(line) + ", column " +
                                   std::to_string(column));
    }
    return experiment_from_json(doc);
}

ExperimentConfig load_experiment(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot read config '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_experiment(buffer.str());
}

std::vector<std::string> preset_names() { return {"fig5", "fig6a", "fig6b"}; }

ExperimentConfig preset(std::string_view name) {
    ExperimentConfig config;
    config.model.mesh = {-1.0, 1.0, 20};
    config.model.density = DensitySpec::uniform();
    config.model.init = InitPreset::negative_saturation;
    config.model.x0 = 0.0;

    auto& signal = config.signal;
    if (name == "fig5") {
        // 3240 hysterons under a sinusoid whose envelope decays toward zero:
        // nested minor loops shrinking onto the origin.
        config.model.mesh.levels = 80;
        signal.kind = signals::SignalKind::decaying_sinusoid;
        signal.amplitude = 1.0;
        signal.frequency_hz = 1.0;
        signal.decay = fig5_decay_per_s;
        signal.sample_rate_hz = 1000.0;
        signal.duration_s = fig5_duration_s;
        config.output.path = "fig5.csv";
    } else if (name == "fig6a") {
        // 210 hysterons, 1 Hz full-range sinusoid sampled at 2 kHz for 120 s.
        signal.kind = signals::SignalKind::sinusoid;
        signal.amplitude = 1.0;
        signal.frequency_hz = 1.0;
        signal.sample_rate_hz = 2000.0;
        signal.duration_s = 120.0;
        config.output.path = "fig6a.csv";
    } else if (name == "fig6b") {
        // 210 hysterons, low-pass (10 Hz) filtered uniform noise at 2 kHz for
        // 120 s. The raw noise amplitude is chosen so that the filtered
        // signal regularly reaches saturation.
        signal.kind = signals::SignalKind::filtered_noise;
        signal.amplitude = fig6b_noise_amplitude;
        signal.cutoff_hz = 10.0;
        signal.sample_rate_hz = 2000.0;
        signal.duration_s = 120.0;
        signal.seed = 1;
        config.output.path = "fig6b.csv";
    } else {
        throw config_error("preset", "unknown preset '" + std::string(name) + "'");
    }
    return config;
}

} // namespace preisach
