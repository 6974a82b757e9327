#include "cli.hpp"

#include "lexont/acquisition.hpp"
#include "lexont/core.hpp"
#include "lexont/errors.hpp"
#include "lexont/hierarchy.hpp"
#include "lexont/metonymy.hpp"
#include "lexont/similarity.hpp"
#include "lexont/store.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace lexont::cli {

namespace {

// Argument-level failures (bad sense tokens, bad relation syntax) exit 2,
// unlike domain errors, which exit 1.
struct UsageFailure {
    std::string message;
};

std::string format6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// A store path that does not exist yet reads as an empty store; only
// induce/sim/resolve then fail, with EmptySnapshot or UnknownSense.
Snapshot load_store(const std::string& path) {
    if (!std::filesystem::exists(path)) return Snapshot{};
    return load_jsonl(path);
}

ConceptSense parse_sense_arg(const std::string& token) {
    try {
        return ConceptSense::parse(token);
    } catch (const Error& e) {
        throw UsageFailure{e.what()};
    }
}

std::vector<Dimension> parse_dims_arg(const std::vector<std::string>& names) {
    std::vector<Dimension> dims;
    for (const auto& name : names) {
        auto d = try_parse_dimension(name);
        if (!d) throw UsageFailure{"unknown dimension: " + name};
        dims.push_back(*d);
    }
    return dims;
}

std::string graph_json(const TypeGraph& graph, double theta) {
    nlohmann::ordered_json doc;
    doc["theta"] = theta;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < graph.nodes().size(); ++n) {
        const TypeNode& node = graph.nodes()[n];
        nlohmann::ordered_json entry;
        entry["id"] = "n" + std::to_string(n);
        entry["label"] = node.label;
        entry["extent"] = nlohmann::ordered_json::array();
        for (const auto& c : node.extent) entry["extent"].push_back(c.str());
        entry["intent"] = nlohmann::ordered_json::array();
        for (const auto& f : node.intent) entry["intent"].push_back(f.str());
        entry["parents"] = nlohmann::ordered_json::array();
        for (std::size_t p : node.parents) entry["parents"].push_back("n" + std::to_string(p));
        doc["nodes"].push_back(std::move(entry));
    }
    return doc.dump();
}

void write_graph(const TypeGraph& graph, const std::string& format, double theta,
                 std::ostream& out) {
    if (format == "dot") {
        out << graph.to_dot();
    } else {
        out << graph_json(graph, theta) << "\n";
    }
}

int cmd_ingest(const std::string& store_path, const std::vector<std::string>& files,
               std::ostream& out) {
    AssertionStore store;
    if (std::filesystem::exists(store_path)) {
        parse_jsonl_into(store, read_file(store_path), store_path);
    }
    for (const auto& file : files) {
        parse_jsonl_into(store, read_file(file), file);
    }
    const Snapshot snapshot = store.snapshot();
    save_jsonl(snapshot, store_path);
    out << "assertions: " << snapshot.assertions().size() << "\n";
    out << "signatures: " << snapshot.signatures().size() << "\n";
    return 0;
}

int cmd_induce(const std::string& store_path, double theta, const std::string& format,
               std::ostream& out) {
    const TypeGraph graph = induce(load_store(store_path), theta);
    write_graph(graph, format, theta, out);
    return 0;
}

int cmd_sim(const std::string& store_path, const std::string& c1_token,
            const std::string& c2_token, const std::vector<std::string>& dim_names,
            bool per_dim, std::ostream& out) {
    const ConceptSense c1 = parse_sense_arg(c1_token);
    const ConceptSense c2 = parse_sense_arg(c2_token);
    std::vector<Dimension> dims;
    if (dim_names.empty()) {
        dims.assign(kAllDimensions.begin(), kAllDimensions.end());
    } else {
        dims = parse_dims_arg(dim_names);
    }
    const Snapshot snapshot = load_store(store_path);
    if (per_dim) {
        for (Dimension d : dims) {
            out << to_string(d) << " " << format6(d_similarity(c1, c2, d, snapshot)) << "\n";
        }
    }
    out << "csim " << format6(c_similarity(c1, c2, dims, snapshot)) << "\n";
    return 0;
}

int cmd_resolve(const std::string& store_path, double theta, const std::string& app_text,
                std::ostream& out) {
    Application app = [&] {
        try {
            return Application::parse(app_text);
        } catch (const Error& e) {
            throw UsageFailure{e.what()};
        }
    }();
    const Snapshot snapshot = load_store(store_path);
    const TypeGraph graph = induce(snapshot, theta);
    const ResolveResult result = resolve_metonymy(app, snapshot, graph);
    if (const auto* ok = std::get_if<Application>(&result)) {
        out << "well-typed: " << ok->str() << "\n";
    } else {
        const auto& reading = std::get<CoercedReading>(result);
        for (const auto& step : reading.steps) {
            out << "coercion: " << step.bridge.str() << "\n";
        }
        out << "rewritten: " << reading.rewritten.str() << "\n";
    }
    return 0;
}

int cmd_acquire(const std::string& templates_path, const std::string& concepts_path,
                const std::string& fixtures_dir, std::ostream& out, std::ostream& err) {
    const std::vector<MaskTemplate> templates = load_templates(templates_path);
    const std::vector<ConceptSense> concepts = load_concepts(concepts_path);
    std::unique_ptr<CompletionProvider> provider;
    if (!fixtures_dir.empty()) {
        provider = std::make_unique<FixtureProvider>(fixtures_dir);
    } else {
        provider = make_provider_from_env();
    }
    const HarvestReport report = harvest(*provider, concepts, templates);
    out << to_jsonl(Snapshot(report.assertions, {}, 0));
    for (const auto& issue : report.issues) {
        err << "error: " << issue.detail << "\n";
    }
    return report.issues.empty() ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symbolic lexical semantics over applicability assertions"};
    app.name("lexont");
    app.require_subcommand(1);

    std::string store_path = "store.jsonl";
    double theta = 0.0;
    std::string format = "dot";
    std::vector<std::string> files;
    std::vector<std::string> dim_names;
    bool per_dim = false;
    std::string c1_token;
    std::string c2_token;
    std::string app_text;
    std::string templates_path;
    std::string concepts_path;
    std::string fixtures_dir;

    int rc = 0;

    CLI::App* ingest = app.add_subcommand("ingest", "merge JSONL files into the store");
    ingest->add_option("--store", store_path, "store path")->capture_default_str();
    ingest->add_option("files", files, "JSONL input files")->required()->expected(-1);
    ingest->callback([&] { rc = cmd_ingest(store_path, files, out); });

    CLI::App* induce_cmd = app.add_subcommand("induce", "induce the subsumption graph");
    induce_cmd->add_option("--store", store_path, "store path")->capture_default_str();
    induce_cmd->add_option("--theta", theta, "containment tolerance")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    induce_cmd->add_option("--out", format, "output format")
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();
    induce_cmd->callback([&] { rc = cmd_induce(store_path, theta, format, out); });

    CLI::App* export_cmd = app.add_subcommand("export", "print the induced graph");
    export_cmd->add_option("--store", store_path, "store path")->capture_default_str();
    export_cmd->add_option("--theta", theta, "containment tolerance")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    export_cmd->add_option("--format", format, "output format")
        ->required()
        ->check(CLI::IsMember({"dot", "json"}));
    export_cmd->callback([&] { rc = cmd_induce(store_path, theta, format, out); });

    CLI::App* sim = app.add_subcommand("sim", "concept similarity");
    sim->add_option("--store", store_path, "store path")->capture_default_str();
    sim->add_option("c1", c1_token, "first sense, e.g. book#1")->required();
    sim->add_option("c2", c2_token, "second sense")->required();
    sim->add_option("--dims", dim_names, "dimensions to compare")->delimiter(',');
    sim->add_flag("--per-dim", per_dim, "print each dimension's similarity");
    sim->callback([&] { rc = cmd_sim(store_path, c1_token, c2_token, dim_names, per_dim, out); });

    CLI::App* resolve = app.add_subcommand("resolve", "type-check and coerce an application");
    resolve->add_option("--store", store_path, "store path")->capture_default_str();
    resolve->add_option("--theta", theta, "containment tolerance")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    resolve->add_option("application", app_text, "e.g. \"WANT(omelet#1,beer#1)\"")->required();
    resolve->callback([&] { rc = cmd_resolve(store_path, theta, app_text, out); });

    CLI::App* acquire = app.add_subcommand("acquire", "harvest assertions from completions");
    acquire->add_option("--templates", templates_path, "mask template JSONL")->required();
    acquire->add_option("--concepts", concepts_path, "concept list file")->required();
    acquire->add_option("--fixtures", fixtures_dir, "fixture directory (offline mode)");
    acquire->callback([&] { rc = cmd_acquire(templates_path, concepts_path, fixtures_dir, out, err); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const UsageFailure& e) {
        err << "error: usage: " << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.code_name() << ": " << e.what() << "\n";
        return 1;
    }
    return rc;
}

} // namespace lexont::cli
