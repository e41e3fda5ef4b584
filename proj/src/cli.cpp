#include "clucmp/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "clucmp/decomposition.hpp"
#include "clucmp/degradation.hpp"
#include "clucmp/evaluate.hpp"
#include "clucmp/io.hpp"

namespace clucmp {

namespace {

using nlohmann::json;

std::string fmt_value(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string fmt_flags(const std::vector<std::string>& flags) {
    if (flags.empty()) {
        return "-";
    }
    std::string joined;
    for (const auto& flag : flags) {
        if (!joined.empty()) {
            joined += ',';
        }
        joined += flag;
    }
    return joined;
}

std::string error_category(const Error& error) {
    if (dynamic_cast<const UndefinedMeasureError*>(&error)) return "undefined-measure";
    if (dynamic_cast<const UnsupportedDecompositionError*>(&error)) return "unsupported";
    if (dynamic_cast<const DimensionError*>(&error)) return "dimension";
    if (dynamic_cast<const PreconditionError*>(&error)) return "precondition";
    if (dynamic_cast<const FileFormatError*>(&error)) return "format";
    if (dynamic_cast<const ConfigError*>(&error)) return "config";
    return "invalid-input";
}

const std::vector<std::string> kComputeMeasures = {"rand", "vandongen", "accuracy", "nmi",
                                                   "v",    "k",         "sh",       "smse"};

bool is_compute_measure(const std::string& id) {
    return std::find(kComputeMeasures.begin(), kComputeMeasures.end(), id) !=
           kComputeMeasures.end();
}

}  // namespace

void validate_config(const RunConfig& config) {
    if (config.measures.empty()) {
        throw ConfigError("no measures requested");
    }
    for (const std::string& id : config.measures) {
        if (config.command == RunConfig::Command::kDecompose) {
            if (!is_known_measure_id(id)) {
                throw ConfigError("unknown measure id '" + id + "'");
            }
            if (!is_decomposable_measure(id)) {
                throw UnsupportedDecompositionError("measure '" + id +
                                                    "' has no component decomposition");
            }
        } else if (!is_compute_measure(id)) {
            throw ConfigError("unknown measure id '" + id + "'");
        }
        if (measure_requires_k(id) && !config.k.has_value()) {
            throw ConfigError("measure 'k' needs --k");
        }
        if (measure_requires_features(id) && config.features_path.empty()) {
            throw ConfigError("measure 'smse' needs --features");
        }
    }
    if (config.truth_path.empty()) {
        throw ConfigError("--truth is required");
    }
    if (config.command != RunConfig::Command::kDegrade && config.predicted_paths.empty()) {
        throw ConfigError("at least one --pred is required");
    }
}

namespace {

struct LoadedInputs {
    Clustering truth;
    std::vector<std::pair<std::string, Clustering>> predictions;
    std::optional<FeatureMatrix> features;
};

LoadedInputs load_inputs(const RunConfig& config, bool with_predictions) {
    LoadedInputs inputs{parse_clustering_file(config.truth_path), {}, std::nullopt};
    if (with_predictions) {
        for (const std::string& path : config.predicted_paths) {
            inputs.predictions.emplace_back(path, parse_clustering_file(path));
        }
    }
    if (!config.features_path.empty()) {
        FeatureMatrix features = parse_features_file(config.features_path);
        if (features.rows() != inputs.truth.n()) {
            throw DimensionError(config.features_path + ": " +
                                 std::to_string(features.rows()) + " feature rows for " +
                                 std::to_string(inputs.truth.n()) + " points");
        }
        inputs.features = std::move(features);
    }
    return inputs;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& tsv, const json& doc) {
    if (config.format == RunConfig::Format::kTsv) {
        out << tsv;
    } else {
        out << doc.dump(2) << '\n';
    }
}

}  // namespace

void run_compute(const RunConfig& config, std::ostream& out) {
    validate_config(config);
    const LoadedInputs inputs = load_inputs(config, true);
    const FeatureMatrix* features = inputs.features ? &*inputs.features : nullptr;

    std::string tsv = "predicted\tmeasure\tvalue\tflags\n";
    json doc = json::array();
    for (const auto& [path, predicted] : inputs.predictions) {
        for (const std::string& id : config.measures) {
            json row{{"predicted", path}, {"measure", id}};
            std::string value_text;
            std::string flags_text;
            try {
                const MeasureScore score =
                    evaluate_measure(id, inputs.truth, predicted, config.k, features);
                value_text = fmt_value(score.value);
                flags_text = fmt_flags(score.flags);
                row["value"] = score.value;
                row["normalized"] = score.normalized;
                row["flags"] = score.flags;
            } catch (const Error& error) {
                value_text = "-";
                flags_text = "error:" + error_category(error);
                row["value"] = nullptr;
                row["error"] = error_category(error);
                row["message"] = error.what();
            }
            tsv += path + '\t' + id + '\t' + value_text + '\t' + flags_text + '\n';
            doc.push_back(std::move(row));
        }
    }
    emit(config, out, tsv, doc);
}

void run_decompose(const RunConfig& config, std::ostream& out) {
    validate_config(config);
    const LoadedInputs inputs = load_inputs(config, true);

    std::string tsv = "predicted\tmeasure\trow\tsize\tweight\tscore\n";
    json doc = json::array();
    for (const auto& [path, predicted] : inputs.predictions) {
        for (const std::string& id : config.measures) {
            const DecompositionReport report = decompose(id, inputs.truth, predicted, config.k);
            json entry{{"predicted", path}, {"measure", id}};
            json comps = json::array();
            for (std::size_t c = 0; c < report.components.size(); ++c) {
                const ComponentScore& comp = report.components[c];
                tsv += path + '\t' + id + "\tcomponent:" + std::to_string(c + 1) + '\t' +
                       std::to_string(comp.join_cluster.size()) + '\t' +
                       fmt_value(comp.weight) + '\t' + fmt_value(comp.score) + '\n';
                comps.push_back({{"size", comp.join_cluster.size()},
                                 {"weight", comp.weight},
                                 {"score", comp.score}});
            }
            for (const auto& [label, value] :
                 {std::pair<const char*, double>{"offset", report.offset},
                  {"recomposed", report.recomposed},
                  {"direct", report.direct},
                  {"residual", report.residual()}}) {
                tsv += path + '\t' + id + '\t' + label + "\t-\t-\t" + fmt_value(value) + '\n';
            }
            entry["components"] = std::move(comps);
            entry["offset"] = report.offset;
            entry["recomposed"] = report.recomposed;
            entry["direct"] = report.direct;
            entry["residual"] = report.residual();
            doc.push_back(std::move(entry));
        }
    }
    emit(config, out, tsv, doc);
}

void run_degrade(const RunConfig& config, std::ostream& out) {
    validate_config(config);
    const LoadedInputs inputs = load_inputs(config, false);
    const FeatureMatrix* features = inputs.features ? &*inputs.features : nullptr;
    const DegradationSeries series = generate_series(inputs.truth, config.seed);

    std::string tsv = "step\top\tmeasure\tvalue\n";
    json doc = json::array();
    const auto emit_row = [&](int step, const std::string& op, const Clustering& current) {
        for (const std::string& id : config.measures) {
            json row{{"step", step}, {"op", op}, {"measure", id}};
            std::string value_text;
            try {
                const MeasureScore score =
                    evaluate_measure(id, inputs.truth, current, config.k, features);
                value_text = fmt_value(score.value);
                row["value"] = score.value;
            } catch (const Error& error) {
                value_text = "-";
                row["value"] = nullptr;
                row["error"] = error_category(error);
            }
            tsv += std::to_string(step) + '\t' + op + '\t' + id + '\t' + value_text + '\n';
            doc.push_back(std::move(row));
        }
    };
    emit_row(0, "init", inputs.truth);
    for (std::size_t s = 0; s < series.steps.size(); ++s) {
        emit_row(static_cast<int>(s + 1), series.steps[s].op, series.steps[s].clustering);
    }
    emit(config, out, tsv, doc);
}

namespace {

void split_measure_list(const std::vector<std::string>& raw, std::vector<std::string>& out) {
    for (const std::string& chunk : raw) {
        std::size_t start = 0;
        while (start <= chunk.size()) {
            const std::size_t comma = chunk.find(',', start);
            const std::string id = chunk.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!id.empty()) {
                out.push_back(id);
            }
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"clucmp - compare clusterings against a reference clustering"};
    app.require_subcommand(1);

    RunConfig config;
    std::vector<std::string> raw_measures;
    std::string format_name = "tsv";

    const auto add_common = [&](CLI::App* cmd, bool with_pred, bool with_features,
                                bool with_seed) {
        cmd->add_option("--truth", config.truth_path, "true clustering file")->required();
        if (with_pred) {
            cmd->add_option("--pred", config.predicted_paths, "predicted clustering file(s)")
                ->required();
        }
        if (with_features) {
            cmd->add_option("--features", config.features_path,
                            "CSV feature matrix (row i = point i)");
        }
        cmd->add_option("--measures", raw_measures, "comma-separated measure ids")->required();
        cmd->add_option("--k", config.k, "cluster bound for measure 'k'");
        if (with_seed) {
            cmd->add_option("--seed", config.seed, "seed for the merge phase");
        }
        cmd->add_option("--format", format_name, "tsv|json")
            ->check(CLI::IsMember({"tsv", "json"}));
        cmd->add_option("--out", config.out_path, "output path (default stdout)");
    };

    CLI::App* compute = app.add_subcommand("compute", "score predicted clusterings");
    add_common(compute, true, true, false);
    CLI::App* decompose = app.add_subcommand("decompose", "per-component decomposition report");
    add_common(decompose, true, false, false);
    CLI::App* degrade = app.add_subcommand("degrade", "split/merge degradation series");
    add_common(degrade, false, true, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    split_measure_list(raw_measures, config.measures);
    if (compute->parsed()) {
        config.command = RunConfig::Command::kCompute;
    } else if (decompose->parsed()) {
        config.command = RunConfig::Command::kDecompose;
    } else {
        config.command = RunConfig::Command::kDegrade;
    }
    config.format =
        format_name == "json" ? RunConfig::Format::kJson : RunConfig::Format::kTsv;

    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!config.out_path.empty()) {
            file.open(config.out_path);
            if (!file) {
                throw ConfigError("cannot open output path " + config.out_path);
            }
            sink = &file;
        }
        switch (config.command) {
            case RunConfig::Command::kCompute:
                run_compute(config, *sink);
                break;
            case RunConfig::Command::kDecompose:
                run_decompose(config, *sink);
                break;
            case RunConfig::Command::kDegrade:
                run_degrade(config, *sink);
                break;
        }
    } catch (const ConfigError& error) {
        err << "config error: " << error.what() << '\n';
        return 2;
    } catch (const UnsupportedDecompositionError& error) {
        err << "unsupported: " << error.what() << '\n';
        return 4;
    } catch (const FileFormatError& error) {
        err << "input error: " << error.what() << '\n';
        return 3;
    } catch (const DimensionError& error) {
        err << "input error: " << error.what() << '\n';
        return 3;
    } catch (const Error& error) {
        err << "error: " << error.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace clucmp
