#ifndef MIRAGE_EXTENSION_HPP
#define MIRAGE_EXTENSION_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mirage/source.hpp"

namespace mirage {

struct MissingManifest : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A script a browser extension executes directly. `path` is relative to
/// the extension root; inline scripts carry their code in `inline_source`
/// and name the owning HTML document plus an `#inline-N` suffix.
struct Entrypoint {
    std::string path;
    SourceType source_type = SourceType::script;
    std::optional<std::string> inline_source;
};

struct DiscoveryResult {
    std::vector<Entrypoint> entrypoints;
    std::vector<std::string> diagnostics;
};

namespace detail {

inline std::optional<std::string> read_text_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

inline std::string to_lower_ascii(std::string s) {
    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return s;
}

/// Resolves a script reference found in `html_rel` (or "" for manifest
/// references) against the extension root: leading "/" means root-relative,
/// anything else is relative to the referencing document. Returns a
/// normalized root-relative path, or nullopt for remote/unusable refs.
inline std::optional<std::string> resolve_extension_path(const std::string& ref,
                                                         const std::string& html_rel) {
    if (ref.empty()) return std::nullopt;
    if (ref.find("://") != std::string::npos) return std::nullopt;  // remote
    std::filesystem::path p;
    if (ref[0] == '/') {
        p = ref.substr(1);
    } else if (!html_rel.empty()) {
        p = std::filesystem::path(html_rel).parent_path() / ref;
    } else {
        p = ref;
    }
    p = p.lexically_normal();
    std::string out = p.generic_string();
    if (out.empty() || out == "." || out.rfind("..", 0) == 0) return std::nullopt;
    return out;
}

struct ScriptTag {
    std::string src;      // empty for inline scripts
    std::string type;     // lowercase "type" attribute value
    std::string content;  // inline body
};

/// Minimal scanner for `<script>` elements: enough for entrypoint
/// discovery, not a general HTML parser. Handles quoted/unquoted
/// attributes and skips comments.
inline std::vector<ScriptTag> scan_script_tags(const std::string& html) {
    std::vector<ScriptTag> out;
    std::string lower = to_lower_ascii(html);
    size_t pos = 0;
    while (pos < html.size()) {
        size_t comment = lower.find("<!--", pos);
        size_t open = lower.find("<script", pos);
        if (open == std::string::npos) break;
        if (comment != std::string::npos && comment < open) {
            size_t close = lower.find("-->", comment + 4);
            if (close == std::string::npos) break;
            pos = close + 3;
            continue;
        }
        // Must be a whole tag name: "<script>" or "<script ...>".
        size_t after = open + 7;
        if (after < html.size() && !(std::isspace(static_cast<unsigned char>(html[after])) ||
                                     html[after] == '>' || html[after] == '/')) {
            pos = after;
            continue;
        }
        size_t tag_end = html.find('>', after);
        if (tag_end == std::string::npos) break;

        ScriptTag tag;
        // Attribute scan between `after` and `tag_end`.
        size_t i = after;
        while (i < tag_end) {
            while (i < tag_end && (std::isspace(static_cast<unsigned char>(html[i])) ||
                                   html[i] == '/')) {
                i++;
            }
            size_t name_start = i;
            while (i < tag_end && html[i] != '=' && html[i] != '/' &&
                   !std::isspace(static_cast<unsigned char>(html[i]))) {
                i++;
            }
            if (i == name_start) break;
            std::string name = to_lower_ascii(html.substr(name_start, i - name_start));
            std::string value;
            while (i < tag_end && std::isspace(static_cast<unsigned char>(html[i]))) i++;
            if (i < tag_end && html[i] == '=') {
                i++;
                while (i < tag_end && std::isspace(static_cast<unsigned char>(html[i]))) i++;
                if (i < tag_end && (html[i] == '"' || html[i] == '\'')) {
                    char q = html[i++];
                    size_t value_start = i;
                    while (i < tag_end && html[i] != q) i++;
                    value = html.substr(value_start, i - value_start);
                    if (i < tag_end) i++;
                } else {
                    size_t value_start = i;
                    while (i < tag_end && !std::isspace(static_cast<unsigned char>(html[i])) &&
                           html[i] != '/') {
                        i++;
                    }
                    value = html.substr(value_start, i - value_start);
                }
            }
            if (name == "src") tag.src = value;
            if (name == "type") tag.type = to_lower_ascii(value);
        }

        bool self_closing = tag_end > open && html[tag_end - 1] == '/';
        size_t next = tag_end + 1;
        if (!self_closing) {
            size_t close = lower.find("</script", tag_end + 1);
            if (close == std::string::npos) {
                tag.content = html.substr(tag_end + 1);
                next = html.size();
            } else {
                tag.content = html.substr(tag_end + 1, close - tag_end - 1);
                size_t close_end = html.find('>', close);
                next = close_end == std::string::npos ? html.size() : close_end + 1;
            }
        }
        out.push_back(std::move(tag));
        pos = next;
    }
    return out;
}

inline bool script_type_runs(const std::string& type) {
    // No type / empty and classic JS MIME types execute; "module" does too
    // (handled separately); anything else (e.g. text/template) does not.
    if (type.empty() || type == "module") return true;
    static const char* kJsTypes[] = {"text/javascript", "application/javascript",
                                     "application/ecmascript", "text/ecmascript"};
    for (const char* t : kJsTypes) {
        if (type == t) return true;
    }
    return false;
}

}  // namespace detail

/// Collects every script the extension under `dir` executes directly:
/// the background service worker or scripts, content scripts, and scripts
/// referenced by manifest-listed HTML documents (external and inline).
/// Throws MissingManifest when manifest.json is absent; a malformed
/// manifest yields an empty list plus a diagnostic.
inline DiscoveryResult discover_entrypoints(const std::filesystem::path& dir) {
    DiscoveryResult result;
    std::filesystem::path manifest_path = dir / "manifest.json";
    std::optional<std::string> manifest_text = detail::read_text_file(manifest_path);
    if (!manifest_text) {
        throw MissingManifest("no manifest.json in '" + dir.string() + "'");
    }
    nlohmann::json manifest = nlohmann::json::parse(*manifest_text, nullptr, false);
    if (manifest.is_discarded() || !manifest.is_object()) {
        result.diagnostics.push_back("manifest.json is not a valid JSON object");
        return result;
    }

    std::set<std::pair<std::string, SourceType>> seen;
    auto add_script = [&](const std::string& ref, const std::string& html_rel, SourceType type) {
        std::optional<std::string> path = detail::resolve_extension_path(ref, html_rel);
        if (!path) {
            result.diagnostics.push_back("skipping unresolvable script reference '" + ref + "'");
            return;
        }
        if (!seen.insert({*path, type}).second) return;
        result.entrypoints.push_back(Entrypoint{*path, type, std::nullopt});
    };

    std::vector<std::string> html_pages;
    std::set<std::string> html_seen;
    auto add_html = [&](const std::string& ref) {
        std::optional<std::string> path = detail::resolve_extension_path(ref, "");
        if (!path) return;
        if (html_seen.insert(*path).second) html_pages.push_back(*path);
    };

    // Background: MV3 service worker (module per manifest "type") or MV2
    // script list / page.
    if (manifest.contains("background") && manifest["background"].is_object()) {
        const nlohmann::json& bg = manifest["background"];
        if (bg.contains("service_worker") && bg["service_worker"].is_string()) {
            SourceType type = SourceType::script;
            if (bg.contains("type") && bg["type"].is_string() &&
                bg["type"].get<std::string>() == "module") {
                type = SourceType::module_;
            }
            add_script(bg["service_worker"].get<std::string>(), "", type);
        }
        if (bg.contains("scripts") && bg["scripts"].is_array()) {
            for (const nlohmann::json& s : bg["scripts"]) {
                if (s.is_string()) add_script(s.get<std::string>(), "", SourceType::script);
            }
        }
        if (bg.contains("page") && bg["page"].is_string()) {
            add_html(bg["page"].get<std::string>());
        }
    }

    // Content scripts always run as classic scripts.
    if (manifest.contains("content_scripts") && manifest["content_scripts"].is_array()) {
        for (const nlohmann::json& entry : manifest["content_scripts"]) {
            if (!entry.is_object() || !entry.contains("js") || !entry["js"].is_array()) continue;
            for (const nlohmann::json& s : entry["js"]) {
                if (s.is_string()) add_script(s.get<std::string>(), "", SourceType::script);
            }
        }
    }

    // HTML documents the manifest points at.
    auto add_html_field = [&](const nlohmann::json& node, const char* key) {
        if (node.is_object() && node.contains(key) && node[key].is_string()) {
            add_html(node[key].get<std::string>());
        }
    };
    add_html_field(manifest, "options_page");
    add_html_field(manifest, "devtools_page");
    if (manifest.contains("options_ui")) add_html_field(manifest["options_ui"], "page");
    if (manifest.contains("action")) add_html_field(manifest["action"], "default_popup");
    if (manifest.contains("browser_action")) {
        add_html_field(manifest["browser_action"], "default_popup");
    }
    if (manifest.contains("page_action")) add_html_field(manifest["page_action"], "default_popup");
    if (manifest.contains("side_panel")) add_html_field(manifest["side_panel"], "default_path");
    if (manifest.contains("sidebar_action")) {
        add_html_field(manifest["sidebar_action"], "default_panel");
    }
    if (manifest.contains("chrome_url_overrides") && manifest["chrome_url_overrides"].is_object()) {
        for (const auto& [key, value] : manifest["chrome_url_overrides"].items()) {
            if (value.is_string()) add_html(value.get<std::string>());
        }
    }

    for (const std::string& page : html_pages) {
        std::optional<std::string> html = detail::read_text_file(dir / page);
        if (!html) {
            result.diagnostics.push_back("listed HTML page '" + page + "' is unreadable");
            continue;
        }
        int inline_count = 0;
        for (const detail::ScriptTag& tag : detail::scan_script_tags(*html)) {
            if (!detail::script_type_runs(tag.type)) continue;
            SourceType type = tag.type == "module" ? SourceType::module_ : SourceType::script;
            if (!tag.src.empty()) {
                add_script(tag.src, page, type);
            } else if (tag.content.find_first_not_of(" \t\r\n") != std::string::npos) {
                inline_count++;
                result.entrypoints.push_back(
                    Entrypoint{page + "#inline-" + std::to_string(inline_count), type,
                               tag.content});
            }
        }
    }
    return result;
}

}  // namespace mirage

#endif
