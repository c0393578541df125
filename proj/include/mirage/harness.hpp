#ifndef MIRAGE_HARNESS_HPP
#define MIRAGE_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mirage/categorize.hpp"
#include "mirage/extension.hpp"
#include "mirage/sandbox.hpp"
#include "mirage/static_analysis.hpp"

namespace mirage {

enum class AnalysisMode { static_only, dynamic_only, both };

inline const char* analysis_mode_name(AnalysisMode m) {
    switch (m) {
        case AnalysisMode::static_only: return "static";
        case AnalysisMode::dynamic_only: return "dynamic";
        case AnalysisMode::both: return "both";
    }
    return "both";
}

inline std::optional<AnalysisMode> analysis_mode_from_name(const std::string& name) {
    if (name == "static") return AnalysisMode::static_only;
    if (name == "dynamic") return AnalysisMode::dynamic_only;
    if (name == "both") return AnalysisMode::both;
    return std::nullopt;
}

struct AnalysisOptions {
    AnalysisMode mode = AnalysisMode::both;
    bool bundle = false;  // inline static import graphs before static analysis
    SandboxConfig config;
    HookSet hooks;
    int jobs = 1;
};

/// Static-vs-dynamic signal comparison for one source.
struct ComparisonResult {
    std::string source;     // input path or entrypoint label, as given
    std::string specifier;  // absolute specifier used for both analyzers

    std::set<std::string> static_calls;
    std::set<std::string> dynamic_calls;
    std::set<std::string> hidden_calls;  // dynamic minus static
    std::set<std::string> shared_calls;  // dynamic intersect static
    std::multiset<std::string> static_strings;
    std::multiset<std::string> dynamic_strings;
    std::multiset<std::string> hidden_strings;  // count-aware dynamic minus static

    bool static_ran = false;
    bool static_parse_ok = true;
    std::vector<std::string> static_diagnostics;
    double static_wall_ms = 0.0;

    bool dynamic_ran = false;
    ExecutionStatus dynamic_status = ExecutionStatus::completed;
    std::optional<RunError> dynamic_error;
    double dynamic_wall_ms = 0.0;
    uint64_t dynamic_peak_heap_bytes = 0;

    double total_wall_ms() const { return static_wall_ms + dynamic_wall_ms; }

    /// Timing-free content equality, for determinism checks.
    nlohmann::ordered_json to_json(bool include_timing = true) const {
        nlohmann::ordered_json j;
        j["source"] = source;
        j["specifier"] = specifier;
        auto set_array = [](const auto& c) {
            nlohmann::ordered_json a = nlohmann::ordered_json::array();
            for (const std::string& s : c) a.push_back(s);
            return a;
        };
        j["static"] = {{"ran", static_ran},
                       {"parse_ok", static_parse_ok},
                       {"calls", set_array(static_calls)},
                       {"strings", set_array(static_strings)},
                       {"diagnostics", set_array(static_diagnostics)}};
        j["dynamic"] = {{"ran", dynamic_ran},
                        {"status", status_name(dynamic_status)},
                        {"calls", set_array(dynamic_calls)},
                        {"strings", set_array(dynamic_strings)}};
        if (dynamic_error) {
            j["dynamic"]["error"] = {{"message", dynamic_error->message},
                                     {"line", dynamic_error->location.line},
                                     {"column", dynamic_error->location.column}};
        }
        j["hidden_calls"] = set_array(hidden_calls);
        j["shared_calls"] = set_array(shared_calls);
        j["hidden_strings"] = set_array(hidden_strings);
        nlohmann::ordered_json cats = nlohmann::ordered_json::object();
        for (const auto& [s, cat] : categorize_strings(hidden_strings)) {
            cats[s] = category_name(cat);
        }
        j["hidden_string_categories"] = std::move(cats);
        if (include_timing) {
            j["static"]["wall_ms"] = static_wall_ms;
            j["dynamic"]["wall_ms"] = dynamic_wall_ms;
            j["dynamic"]["peak_heap_bytes"] = dynamic_peak_heap_bytes;
        }
        return j;
    }
};

/// Pointwise set arithmetic used for the hidden/shared computations.
inline std::set<std::string> set_difference(const std::set<std::string>& a,
                                            const std::set<std::string>& b) {
    std::set<std::string> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
    return out;
}

inline std::set<std::string> set_intersection(const std::set<std::string>& a,
                                              const std::set<std::string>& b) {
    std::set<std::string> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

/// Count-aware difference: each string keeps max(0, count(a) - count(b))
/// occurrences.
inline std::multiset<std::string> multiset_difference(const std::multiset<std::string>& a,
                                                      const std::multiset<std::string>& b) {
    std::multiset<std::string> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
    return out;
}

// ---------------------------------------------------------------------------
// Module resolvers backed by the filesystem
// ---------------------------------------------------------------------------

/// Serves file:// URLs straight from disk (URL path = filesystem path).
inline ModuleResolver file_resolver() {
    return [](const Url& u) -> std::optional<std::vector<uint8_t>> {
        if (u.scheme() != "file") return std::nullopt;
        std::ifstream in(u.path(), std::ios::binary);
        if (!in) return std::nullopt;
        std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
        return bytes;
    };
}

/// Serves URLs under `origin` from files below `root` (URL path relative to
/// the origin maps onto the directory tree). Other URLs fall back to
/// file:// resolution.
inline ModuleResolver dir_resolver(const Url& origin, std::filesystem::path root) {
    ModuleResolver fallback = file_resolver();
    std::string scheme = origin.scheme();
    std::string authority = origin.authority();
    return [scheme, authority, root = std::move(root),
            fallback](const Url& u) -> std::optional<std::vector<uint8_t>> {
        if (u.scheme() != scheme || u.authority() != authority) return fallback(u);
        std::string rel = u.path();
        while (!rel.empty() && rel.front() == '/') rel.erase(rel.begin());
        std::ifstream in(root / rel, std::ios::binary);
        if (!in) return std::nullopt;
        std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
        return bytes;
    };
}

// ---------------------------------------------------------------------------
// Single-source analysis
// ---------------------------------------------------------------------------

/// Runs the requested analyzers over one in-memory source and computes the
/// hidden/shared diffs. `resolver` feeds both module execution and static
/// bundling.
inline ComparisonResult analyze_source(const SourceText& text, const AnalysisOptions& options,
                                       const ModuleResolver& resolver,
                                       std::string source_label) {
    ComparisonResult r;
    r.source = std::move(source_label);
    r.specifier = text.specifier;

    if (options.mode != AnalysisMode::dynamic_only) {
        r.static_ran = true;
        auto start = std::chrono::steady_clock::now();
        SourceText static_input = text;
        if (options.bundle && text.source_type == SourceType::module_) {
            try {
                static_input = bundle(Url::parse(text.specifier), resolver);
            } catch (const BundleError& e) {
                // Unbundleable graphs degrade to per-file analysis.
                r.static_diagnostics.push_back(std::string("bundle: ") + e.what());
            } catch (const ParseError& e) {
                r.static_diagnostics.push_back(std::string("bundle parse: ") + e.what());
            }
        }
        StaticSignals sig = analyze_static(static_input);
        r.static_parse_ok = sig.parse_ok;
        for (std::string& d : sig.bundle_diagnostics) {
            r.static_diagnostics.push_back(std::move(d));
        }
        r.static_calls = std::move(sig.api_calls);
        r.static_strings = std::move(sig.strings);
        r.static_wall_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    }

    if (options.mode != AnalysisMode::static_only) {
        r.dynamic_ran = true;
        SandboxConfig config = options.config;
        config.source_type = text.source_type;
        Sandbox sandbox(config, options.hooks, resolver);
        Report report = sandbox.run(text);
        r.dynamic_status = report.status;
        r.dynamic_error = report.error;
        r.dynamic_wall_ms = report.wall_time_ms;
        r.dynamic_peak_heap_bytes = report.peak_heap_bytes;
        r.dynamic_calls = report.extract_api_calls();
        r.dynamic_strings = report.extract_strings();
    }

    r.hidden_calls = set_difference(r.dynamic_calls, r.static_calls);
    r.shared_calls = set_intersection(r.dynamic_calls, r.static_calls);
    r.hidden_strings = multiset_difference(r.dynamic_strings, r.static_strings);
    return r;
}

/// Reads and analyzes one file. The specifier is the file's absolute path
/// under the configured origin scheme (file:// by default).
inline ComparisonResult analyze_file(const std::filesystem::path& path,
                                     const AnalysisOptions& options) {
    std::optional<std::string> body = detail::read_text_file(path);
    if (!body) throw HostError("cannot read '" + path.string() + "'");
    std::filesystem::path abs = std::filesystem::absolute(path).lexically_normal();

    SourceType type = options.config.source_type;
    std::string specifier = Url::parse("file://" + abs.generic_string()).to_string();
    SourceText text(specifier, std::move(*body), type);
    return analyze_source(text, options, file_resolver(), path.generic_string());
}

// ---------------------------------------------------------------------------
// Corpus analysis
// ---------------------------------------------------------------------------

struct Summary {
    uint64_t count = 0;
    uint64_t static_parse_failures = 0;
    std::map<std::string, uint64_t> dynamic_status_counts;
    double mean_wall_ms = 0.0;
    double stddev_wall_ms = 0.0;  // population standard deviation
    double p99_wall_ms = 0.0;     // ceil(0.99 n)-th smallest total wall time

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["count"] = count;
        j["static_parse_failures"] = static_parse_failures;
        j["dynamic_status_counts"] = dynamic_status_counts;
        j["mean_wall_ms"] = mean_wall_ms;
        j["stddev_wall_ms"] = stddev_wall_ms;
        j["p99_wall_ms"] = p99_wall_ms;
        return j;
    }
};

inline Summary summarize(const std::vector<ComparisonResult>& results) {
    Summary s;
    s.count = results.size();
    std::vector<double> walls;
    walls.reserve(results.size());
    for (const ComparisonResult& r : results) {
        if (r.static_ran && !r.static_parse_ok) s.static_parse_failures++;
        if (r.dynamic_ran) s.dynamic_status_counts[status_name(r.dynamic_status)]++;
        walls.push_back(r.total_wall_ms());
    }
    if (walls.empty()) return s;
    double sum = 0.0;
    for (double w : walls) sum += w;
    s.mean_wall_ms = sum / static_cast<double>(walls.size());
    double var = 0.0;
    for (double w : walls) var += (w - s.mean_wall_ms) * (w - s.mean_wall_ms);
    var /= static_cast<double>(walls.size());
    s.stddev_wall_ms = std::sqrt(var);
    std::sort(walls.begin(), walls.end());
    size_t rank = static_cast<size_t>(
        std::ceil(0.99 * static_cast<double>(walls.size())));
    if (rank == 0) rank = 1;
    s.p99_wall_ms = walls[rank - 1];
    return s;
}

/// Analyzes every path with `options.jobs` workers (each worker owns its
/// sandboxes exclusively). Results keep input order regardless of the
/// worker count; per-source failures are recorded in the affected record
/// and never abort the batch.
inline std::vector<ComparisonResult> analyze_corpus(
    const std::vector<std::filesystem::path>& paths, const AnalysisOptions& options) {
    std::vector<ComparisonResult> results(paths.size());
    int jobs = std::max(1, options.jobs);
    jobs = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(jobs), std::max<size_t>(1, paths.size())));

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= paths.size()) return;
            try {
                results[i] = analyze_file(paths[i], options);
            } catch (const std::exception& e) {
                ComparisonResult r;
                r.source = paths[i].generic_string();
                r.static_parse_ok = false;
                r.static_diagnostics.push_back(std::string("host error: ") + e.what());
                results[i] = std::move(r);
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; t++) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return results;
}

// ---------------------------------------------------------------------------
// Extension analysis
// ---------------------------------------------------------------------------

/// Discovers and analyzes every entrypoint of the extension under `dir`.
/// Sources load from the extension origin (config.origin) mapped onto the
/// directory, so relative imports between extension files resolve.
inline std::vector<ComparisonResult> analyze_extension(const std::filesystem::path& dir,
                                                       const AnalysisOptions& options,
                                                       DiscoveryResult* discovery_out = nullptr) {
    DiscoveryResult discovery = discover_entrypoints(dir);
    Url origin = options.config.origin_url();
    ModuleResolver resolver = dir_resolver(origin, dir);

    std::vector<ComparisonResult> results;
    for (const Entrypoint& ep : discovery.entrypoints) {
        std::string code;
        std::string specifier;
        if (ep.inline_source) {
            code = *ep.inline_source;
            specifier = origin.join(ep.path).to_string();
        } else {
            std::optional<std::string> body = detail::read_text_file(dir / ep.path);
            if (!body) {
                ComparisonResult r;
                r.source = ep.path;
                r.static_parse_ok = false;
                r.static_diagnostics.push_back("entrypoint file is unreadable");
                results.push_back(std::move(r));
                continue;
            }
            code = std::move(*body);
            specifier = origin.join(ep.path).to_string();
        }
        AnalysisOptions per_source = options;
        per_source.config.source_type = ep.source_type;
        SourceText text(specifier, std::move(code), ep.source_type);
        results.push_back(analyze_source(text, per_source, resolver, ep.path));
    }
    if (discovery_out != nullptr) *discovery_out = std::move(discovery);
    return results;
}

}  // namespace mirage

#endif
