#ifndef MIRAGE_URL_HPP
#define MIRAGE_URL_HPP

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "mirage/source.hpp"

namespace mirage {

/// Minimal absolute/relative URL model, enough for module resolution.
/// Components are kept verbatim; no percent-decoding is performed.
class Url {
public:
    Url() = default;

    /// Parses an absolute URL. Throws ResolveError if `text` has no scheme.
    static Url parse(const std::string& text) {
        Url u = parse_reference(text);
        if (!u.has_scheme_) throw ResolveError("not an absolute URL: " + text);
        return u;
    }

    static std::optional<Url> try_parse(const std::string& text) {
        Url u = parse_reference(text);
        if (!u.has_scheme_) return std::nullopt;
        return u;
    }

    /// RFC 3986 section 5.2 reference resolution against `*this` as base.
    Url join(const std::string& reference) const {
        Url ref = parse_reference(reference);
        Url out;
        if (ref.has_scheme_) {
            out = ref;
            out.path_ = remove_dot_segments(ref.path_);
            return out;
        }
        out.has_scheme_ = true;
        out.scheme_ = scheme_;
        if (ref.has_authority_) {
            out.has_authority_ = true;
            out.authority_ = ref.authority_;
            out.path_ = remove_dot_segments(ref.path_);
            out.query_ = ref.query_;
            out.has_query_ = ref.has_query_;
        } else {
            out.has_authority_ = has_authority_;
            out.authority_ = authority_;
            if (ref.path_.empty()) {
                out.path_ = path_;
                if (ref.has_query_) {
                    out.query_ = ref.query_;
                    out.has_query_ = true;
                } else {
                    out.query_ = query_;
                    out.has_query_ = has_query_;
                }
            } else {
                if (ref.path_[0] == '/') {
                    out.path_ = remove_dot_segments(ref.path_);
                } else {
                    out.path_ = remove_dot_segments(merge_path(ref.path_));
                }
                out.query_ = ref.query_;
                out.has_query_ = ref.has_query_;
            }
        }
        out.fragment_ = ref.fragment_;
        out.has_fragment_ = ref.has_fragment_;
        return out;
    }

    std::string to_string() const {
        std::string s;
        if (has_scheme_) {
            s += scheme_;
            s += ':';
        }
        if (has_authority_) {
            s += "//";
            s += authority_;
        }
        s += path_;
        if (has_query_) {
            s += '?';
            s += query_;
        }
        if (has_fragment_) {
            s += '#';
            s += fragment_;
        }
        return s;
    }

    const std::string& scheme() const { return scheme_; }
    const std::string& authority() const { return authority_; }
    const std::string& path() const { return path_; }
    const std::string& query() const { return query_; }
    bool has_query() const { return has_query_; }
    const std::string& fragment() const { return fragment_; }
    bool has_fragment() const { return has_fragment_; }

    bool operator==(const Url& o) const { return to_string() == o.to_string(); }

private:
    static bool is_scheme_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
    static bool is_scheme_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
    }

    // Parses an absolute URL or a relative reference; never throws.
    static Url parse_reference(const std::string& text) {
        Url u;
        size_t i = 0;
        size_t n = text.size();
        // scheme
        if (!text.empty() && is_scheme_start(text[0])) {
            size_t j = 1;
            while (j < n && is_scheme_char(text[j])) j++;
            if (j < n && text[j] == ':') {
                u.has_scheme_ = true;
                u.scheme_ = text.substr(0, j);
                for (auto& c : u.scheme_) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                i = j + 1;
            }
        }
        // authority
        if (i + 1 < n && text[i] == '/' && text[i + 1] == '/') {
            i += 2;
            size_t j = i;
            while (j < n && text[j] != '/' && text[j] != '?' && text[j] != '#') j++;
            u.has_authority_ = true;
            u.authority_ = text.substr(i, j - i);
            i = j;
        }
        // path
        {
            size_t j = i;
            while (j < n && text[j] != '?' && text[j] != '#') j++;
            u.path_ = text.substr(i, j - i);
            i = j;
        }
        // query
        if (i < n && text[i] == '?') {
            size_t j = ++i;
            while (j < n && text[j] != '#') j++;
            u.has_query_ = true;
            u.query_ = text.substr(i, j - i);
            i = j;
        }
        // fragment
        if (i < n && text[i] == '#') {
            u.has_fragment_ = true;
            u.fragment_ = text.substr(i + 1);
        }
        return u;
    }

    // RFC 3986 section 5.3.3
    std::string merge_path(const std::string& ref_path) const {
        if (has_authority_ && path_.empty()) return "/" + ref_path;
        size_t slash = path_.rfind('/');
        if (slash == std::string::npos) return ref_path;
        return path_.substr(0, slash + 1) + ref_path;
    }

    // RFC 3986 section 5.2.4, implemented over a segment stack.
    static std::string remove_dot_segments(const std::string& path) {
        std::vector<std::string> out;
        bool absolute = !path.empty() && path[0] == '/';
        bool trailing_slash = false;
        size_t i = 0;
        size_t n = path.size();
        while (i < n) {
            while (i < n && path[i] == '/') i++;
            if (i >= n) break;
            size_t j = i;
            while (j < n && path[j] != '/') j++;
            std::string seg = path.substr(i, j - i);
            i = j;
            if (seg == ".") {
                trailing_slash = true;
            } else if (seg == "..") {
                if (!out.empty()) out.pop_back();
                trailing_slash = true;
            } else {
                out.push_back(seg);
                trailing_slash = false;
            }
        }
        if (i > 0 && path[n - 1] == '/') trailing_slash = true;
        std::string result;
        for (const auto& seg : out) {
            if (absolute || &seg != &out.front()) result += '/';
            result += seg;
        }
        if (result.empty() && absolute) result = "/";
        if (trailing_slash && !result.empty() && result.back() != '/') result += '/';
        if (out.empty() && absolute) result = "/";
        return result;
    }

    bool has_scheme_ = false;
    bool has_authority_ = false;
    bool has_query_ = false;
    bool has_fragment_ = false;
    std::string scheme_;
    std::string authority_;
    std::string path_;
    std::string query_;
    std::string fragment_;
};

/// Resolves an import specifier against `base`. Absolute specifiers pass
/// through; "./", "../" and "/" forms use URL join semantics. Bare specifiers
/// ("lodash") have no URL meaning and are rejected; a require-style hook must
/// supply them instead.
inline Url resolve_specifier(const Url& base, const std::string& spec) {
    if (spec.empty()) throw ResolveError("empty module specifier");
    if (auto abs = Url::try_parse(spec)) return *abs;
    if (spec.rfind("./", 0) == 0 || spec.rfind("../", 0) == 0 || spec[0] == '/') {
        return base.join(spec);
    }
    throw ResolveError("cannot resolve bare specifier \"" + spec + "\" without a resolver hook");
}

}  // namespace mirage

#endif
