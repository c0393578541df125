// Command-line front end: static/dynamic signal analysis over files,
// corpora, and browser extensions.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mirage/mirage.hpp"

namespace fs = std::filesystem;

namespace {

struct CliOptions {
    std::vector<std::string> inputs;
    std::string mode = "both";
    bool bundle = false;
    uint64_t timeout_ms = 10000;
    uint64_t max_heap_mib = 256;
    std::string origin;
    std::string source_type;
    std::string hooks_file;
    std::string format;
    std::string out_path;
    int jobs = 1;
};

void add_analysis_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--mode", opt.mode, "Analyzers to run: static, dynamic, or both")
        ->check(CLI::IsMember({"static", "dynamic", "both"}));
    cmd->add_flag("--bundle", opt.bundle,
                  "Inline the static import graph before static analysis");
    cmd->add_option("--timeout-ms", opt.timeout_ms, "Dynamic execution wall-clock limit");
    cmd->add_option("--max-heap-mib", opt.max_heap_mib, "Guest heap limit in MiB");
    cmd->add_option("--origin", opt.origin, "Base origin URL for specifiers");
    cmd->add_option("--source-type", opt.source_type,
                    "Parse goal: script or module (default: script, .mjs files module)")
        ->check(CLI::IsMember({"script", "module"}));
    cmd->add_option("--hooks", opt.hooks_file,
                    "JSON hook file: {\"path\": {\"value\": ...} | {\"ref\": \"target\"}}");
    cmd->add_option("--format", opt.format, "Output format: json or jsonl")
        ->check(CLI::IsMember({"json", "jsonl"}));
    cmd->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
    cmd->add_option("--jobs", opt.jobs, "Parallel workers for corpus analysis")
        ->check(CLI::PositiveNumber);
}

mirage::AnalysisOptions build_options(const CliOptions& cli) {
    mirage::AnalysisOptions opt;
    opt.mode = *mirage::analysis_mode_from_name(cli.mode);
    opt.bundle = cli.bundle;
    opt.jobs = cli.jobs;
    opt.config.timeout_ms = cli.timeout_ms;
    opt.config.max_heap_mib = cli.max_heap_mib;
    if (!cli.origin.empty()) opt.config.origin = cli.origin;
    if (cli.source_type == "module") {
        opt.config.source_type = mirage::SourceType::module_;
    } else if (cli.source_type == "script") {
        opt.config.source_type = mirage::SourceType::script;
    }
    if (!cli.hooks_file.empty()) {
        std::ifstream in(cli.hooks_file);
        if (!in) throw mirage::HostError("cannot read hooks file '" + cli.hooks_file + "'");
        nlohmann::ordered_json j =
            nlohmann::ordered_json::parse(in, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) {
            throw mirage::HostError("hooks file '" + cli.hooks_file + "' is not valid JSON");
        }
        opt.hooks.load_json(j);
    }
    opt.config.validate();
    return opt;
}

/// Expands an input argument: a directory walks to its .js/.mjs/.cjs files
/// (sorted), a .txt file is a list of paths (one per line), anything else
/// is a single source file.
std::vector<fs::path> expand_input(const std::string& input) {
    fs::path p(input);
    if (fs::is_directory(p)) {
        std::vector<fs::path> found;
        for (const auto& entry : fs::recursive_directory_iterator(p)) {
            if (!entry.is_regular_file()) continue;
            std::string ext = entry.path().extension().string();
            if (ext == ".js" || ext == ".mjs" || ext == ".cjs") found.push_back(entry.path());
        }
        std::sort(found.begin(), found.end());
        return found;
    }
    if (p.extension() == ".txt") {
        std::ifstream in(p);
        if (!in) throw mirage::HostError("cannot read list file '" + input + "'");
        std::vector<fs::path> found;
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) found.emplace_back(line);
        }
        return found;
    }
    return {p};
}

class OutputWriter {
public:
    explicit OutputWriter(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw mirage::HostError("cannot write output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_analyze(const CliOptions& cli) {
    mirage::AnalysisOptions options = build_options(cli);

    std::vector<fs::path> paths;
    for (const std::string& input : cli.inputs) {
        for (fs::path& p : expand_input(input)) paths.push_back(std::move(p));
    }
    if (paths.empty()) throw mirage::HostError("no input sources found");

    bool single_json = paths.size() == 1 && cli.format != "jsonl";
    OutputWriter out(cli.out_path);

    if (single_json) {
        mirage::AnalysisOptions per_file = options;
        if (cli.source_type.empty() && paths[0].extension() == ".mjs") {
            per_file.config.source_type = mirage::SourceType::module_;
        }
        mirage::ComparisonResult r = mirage::analyze_file(paths[0], per_file);
        out.stream() << r.to_json().dump(2) << "\n";
        return 0;
    }

    std::vector<mirage::ComparisonResult> results;
    if (cli.source_type.empty()) {
        // Extension-based type detection needs a per-file pass.
        std::vector<fs::path> modules;
        std::vector<size_t> order(paths.size());
        std::vector<mirage::ComparisonResult> collected(paths.size());
        std::vector<fs::path> scripts;
        std::vector<size_t> script_idx;
        std::vector<size_t> module_idx;
        for (size_t i = 0; i < paths.size(); i++) {
            if (paths[i].extension() == ".mjs") {
                modules.push_back(paths[i]);
                module_idx.push_back(i);
            } else {
                scripts.push_back(paths[i]);
                script_idx.push_back(i);
            }
        }
        mirage::AnalysisOptions script_opt = options;
        script_opt.config.source_type = mirage::SourceType::script;
        std::vector<mirage::ComparisonResult> script_res =
            mirage::analyze_corpus(scripts, script_opt);
        mirage::AnalysisOptions module_opt = options;
        module_opt.config.source_type = mirage::SourceType::module_;
        std::vector<mirage::ComparisonResult> module_res =
            mirage::analyze_corpus(modules, module_opt);
        for (size_t k = 0; k < script_idx.size(); k++) {
            collected[script_idx[k]] = std::move(script_res[k]);
        }
        for (size_t k = 0; k < module_idx.size(); k++) {
            collected[module_idx[k]] = std::move(module_res[k]);
        }
        results = std::move(collected);
    } else {
        results = mirage::analyze_corpus(paths, options);
    }

    for (const mirage::ComparisonResult& r : results) {
        out.stream() << r.to_json().dump() << "\n";
    }
    nlohmann::ordered_json summary;
    summary["summary"] = mirage::summarize(results).to_json();
    out.stream() << summary.dump() << "\n";
    return 0;
}

int run_extension(const CliOptions& cli) {
    CliOptions adjusted = cli;
    if (adjusted.origin.empty()) adjusted.origin = "chrome-extension://extension/";
    mirage::AnalysisOptions options = build_options(adjusted);
    if (cli.inputs.size() != 1) throw mirage::HostError("extension takes exactly one directory");

    mirage::DiscoveryResult discovery;
    std::vector<mirage::ComparisonResult> results =
        mirage::analyze_extension(cli.inputs[0], options, &discovery);

    OutputWriter out(cli.out_path);
    nlohmann::ordered_json header;
    header["entrypoints"] = nlohmann::ordered_json::array();
    for (const mirage::Entrypoint& ep : discovery.entrypoints) {
        nlohmann::ordered_json e;
        e["path"] = ep.path;
        e["source_type"] = ep.source_type == mirage::SourceType::module_ ? "module" : "script";
        e["inline"] = ep.inline_source.has_value();
        header["entrypoints"].push_back(std::move(e));
    }
    header["diagnostics"] = discovery.diagnostics;
    out.stream() << header.dump() << "\n";
    for (const mirage::ComparisonResult& r : results) {
        out.stream() << r.to_json().dump() << "\n";
    }
    nlohmann::ordered_json summary;
    summary["summary"] = mirage::summarize(results).to_json();
    out.stream() << summary.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Static-vs-dynamic JavaScript API signal analyzer"};
    app.require_subcommand(1);

    CliOptions analyze_opt;
    CLI::App* analyze = app.add_subcommand("analyze",
                                           "Analyze source files, directories, or list files");
    analyze->add_option("path", analyze_opt.inputs, "Files, directories, or .txt path lists")
        ->required();
    add_analysis_flags(analyze, analyze_opt);

    CliOptions ext_opt;
    CLI::App* extension =
        app.add_subcommand("extension", "Discover and analyze browser-extension entrypoints");
    extension->add_option("dir", ext_opt.inputs, "Unpacked extension directory")->required();
    add_analysis_flags(extension, ext_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return run_analyze(analyze_opt);
        if (*extension) return run_extension(ext_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
