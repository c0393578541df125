#ifndef MIRAGE_CATEGORIZE_HPP
#define MIRAGE_CATEGORIZE_HPP

#include <cctype>
#include <map>
#include <string>

#include "json.hpp"

namespace mirage {

/// Buckets for extracted strings. Matching is deterministic first-match in
/// the order: ga_measurement_id, uuid, ipv4_or_cidr, url, json_document,
/// origin_only, other.
enum class StringCategory {
    url,
    origin_only,
    uuid,
    ipv4_or_cidr,
    json_document,
    ga_measurement_id,
    other,
};

inline const char* category_name(StringCategory c) {
    switch (c) {
        case StringCategory::url: return "url";
        case StringCategory::origin_only: return "origin_only";
        case StringCategory::uuid: return "uuid";
        case StringCategory::ipv4_or_cidr: return "ipv4_or_cidr";
        case StringCategory::json_document: return "json_document";
        case StringCategory::ga_measurement_id: return "ga_measurement_id";
        case StringCategory::other: return "other";
    }
    return "other";
}

namespace detail {

inline bool is_alnum_ascii(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_hex_digit(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

/// `G-` followed by 4 to 12 ASCII alphanumerics.
inline bool is_ga_measurement_id(const std::string& s) {
    if (s.size() < 6 || s.size() > 14) return false;
    if (s[0] != 'G' || s[1] != '-') return false;
    for (size_t i = 2; i < s.size(); i++) {
        if (!is_alnum_ascii(s[i])) return false;
    }
    return true;
}

/// Canonical 8-4-4-4-12 hex UUID, case-insensitive.
inline bool is_uuid(const std::string& s) {
    if (s.size() != 36) return false;
    for (size_t i = 0; i < 36; i++) {
        if (i == 8 || i == 13 || i == 18 || i == 23) {
            if (s[i] != '-') return false;
        } else if (!is_hex_digit(s[i])) {
            return false;
        }
    }
    return true;
}

/// Dotted-quad IPv4 address with an optional /0-32 prefix length.
inline bool is_ipv4_or_cidr(const std::string& s) {
    size_t pos = 0;
    auto read_number = [&](int max_value, int max_digits) -> int {
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') return -1;
        // Reject leading zeros ("01.2.3.4" is not a dotted quad).
        if (s[pos] == '0' && pos + 1 < s.size() && s[pos + 1] >= '0' && s[pos + 1] <= '9') {
            return -1;
        }
        int value = 0;
        int digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            value = value * 10 + (s[pos] - '0');
            pos++;
            if (++digits > max_digits || value > max_value) return -1;
        }
        return value;
    };
    for (int octet = 0; octet < 4; octet++) {
        if (octet > 0) {
            if (pos >= s.size() || s[pos] != '.') return false;
            pos++;
        }
        if (read_number(255, 3) < 0) return false;
    }
    if (pos == s.size()) return true;
    if (s[pos] != '/') return false;
    pos++;
    if (read_number(32, 2) < 0) return false;
    return pos == s.size();
}

/// Splits `scheme://rest`; true when the shape is URL-like. `has_locator`
/// reports whether anything beyond the bare origin follows the authority
/// (a path past "/", a query, or a fragment).
inline bool split_url_like(const std::string& s, bool& has_locator) {
    size_t scheme_end = s.find("://");
    if (scheme_end == std::string::npos || scheme_end == 0) return false;
    for (size_t i = 0; i < scheme_end; i++) {
        char c = s[i];
        bool ok = is_alnum_ascii(c) || c == '+' || c == '-' || c == '.';
        if (i == 0) ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
        if (!ok) return false;
    }
    size_t rest = scheme_end + 3;
    if (rest >= s.size()) return false;  // "scheme://" alone
    size_t authority_end = s.find_first_of("/?#", rest);
    for (size_t i = rest; i < (authority_end == std::string::npos ? s.size() : authority_end);
         i++) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) return false;
    }
    if (authority_end == rest) return false;  // empty authority
    if (authority_end == std::string::npos) {
        has_locator = false;
        return true;
    }
    // A trailing "/" with nothing after it is still just the origin.
    has_locator = !(s[authority_end] == '/' && authority_end + 1 == s.size());
    return true;
}

inline bool parses_as_json_document(const std::string& s) {
    // Only structured documents count; bare scalars ("42", "true") do not.
    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    if (i >= s.size() || (s[i] != '{' && s[i] != '[')) return false;
    return nlohmann::json::accept(s);
}

}  // namespace detail

inline StringCategory categorize(const std::string& s) {
    if (detail::is_ga_measurement_id(s)) return StringCategory::ga_measurement_id;
    if (detail::is_uuid(s)) return StringCategory::uuid;
    if (detail::is_ipv4_or_cidr(s)) return StringCategory::ipv4_or_cidr;
    bool has_locator = false;
    bool url_like = detail::split_url_like(s, has_locator);
    if (url_like && has_locator) return StringCategory::url;
    if (detail::parses_as_json_document(s)) return StringCategory::json_document;
    if (url_like) return StringCategory::origin_only;
    return StringCategory::other;
}

/// First-match category for every distinct input string.
template <typename Container>
std::map<std::string, StringCategory> categorize_strings(const Container& strings) {
    std::map<std::string, StringCategory> out;
    for (const std::string& s : strings) {
        if (out.find(s) == out.end()) out.emplace(s, categorize(s));
    }
    return out;
}

}  // namespace mirage

#endif
