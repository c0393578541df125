#ifndef MIRAGE_SOURCE_HPP
#define MIRAGE_SOURCE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace mirage {

enum class SourceType { script, module_ };

/// Byte range plus 1-based line/column of the first byte.
struct Span {
    uint32_t start = 0;
    uint32_t end = 0;
    uint32_t line = 1;
    uint32_t column = 1;
};

/// Where an event or error originated. `specifier` is either the URL of a
/// loaded source or a synthetic name such as "<eval-1>".
struct SourceLocation {
    std::string specifier;
    uint32_t line = 1;
    uint32_t column = 1;

    bool operator==(const SourceLocation& other) const {
        return specifier == other.specifier && line == other.line && column == other.column;
    }
    std::string to_string() const {
        return specifier + ":" + std::to_string(line) + ":" + std::to_string(column);
    }
};

/// A unit of guest source code. `specifier` must be an absolute URL (or a
/// synthetic "<eval-k>" name for dynamically evaluated code).
struct SourceText {
    std::string specifier;
    std::shared_ptr<const std::string> body;
    SourceType source_type = SourceType::script;

    SourceText() = default;
    SourceText(std::string spec, std::string text, SourceType type)
        : specifier(std::move(spec)),
          body(std::make_shared<const std::string>(std::move(text))),
          source_type(type) {}
};

struct ParseError : std::runtime_error {
    SourceLocation location;
    ParseError(SourceLocation loc, const std::string& message)
        : std::runtime_error(message), location(std::move(loc)) {}
};

struct ResolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BundleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Host-side misuse (bad configuration, disposed sandbox, unreadable input).
/// Guest failures never surface as HostError.
struct HostError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidHookPath : HostError {
    using HostError::HostError;
};

struct NonSerializable : HostError {
    using HostError::HostError;
};

inline bool is_valid_utf8(const std::string& bytes) {
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    size_t n = bytes.size();
    size_t i = 0;
    while (i < n) {
        unsigned char c = p[i];
        if (c < 0x80) {
            i += 1;
        } else if ((c >> 5) == 0x6) {
            if (i + 1 >= n || (p[i + 1] & 0xC0) != 0x80 || c < 0xC2) return false;
            i += 2;
        } else if ((c >> 4) == 0xE) {
            if (i + 2 >= n || (p[i + 1] & 0xC0) != 0x80 || (p[i + 2] & 0xC0) != 0x80) return false;
            if (c == 0xE0 && p[i + 1] < 0xA0) return false;
            if (c == 0xED && p[i + 1] > 0x9F) return false;  // surrogate range
            i += 3;
        } else if ((c >> 3) == 0x1E) {
            if (i + 3 >= n || (p[i + 1] & 0xC0) != 0x80 || (p[i + 2] & 0xC0) != 0x80 ||
                (p[i + 3] & 0xC0) != 0x80)
                return false;
            if (c == 0xF0 && p[i + 1] < 0x90) return false;
            if (c == 0xF4 && p[i + 1] > 0x8F) return false;
            if (c > 0xF4) return false;
            i += 4;
        } else {
            return false;
        }
    }
    return true;
}

}  // namespace mirage

#endif
