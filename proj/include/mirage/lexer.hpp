#ifndef MIRAGE_LEXER_HPP
#define MIRAGE_LEXER_HPP

#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_set>
#include <vector>

#include "mirage/token.hpp"

namespace mirage {

namespace detail {

inline const std::unordered_set<std::string>& keyword_set() {
    static const std::unordered_set<std::string> kw = {
        "await",  "break",   "case",     "catch", "class",  "const",    "continue", "debugger",
        "default", "delete", "do",       "else",  "enum",   "export",   "extends",  "false",
        "finally", "for",    "function", "if",    "import", "in",       "instanceof", "new",
        "null",    "return", "super",    "switch", "this",  "throw",    "true",     "try",
        "typeof",  "var",    "void",     "while", "with",   "yield",    "let",      "static",
        "get",     "set",    "of",       "async",
    };
    return kw;
}

inline void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        // Lone surrogates are encoded as-is (WTF-8); report serialization
        // replaces them when emitting JSON.
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

}  // namespace detail

/// Tokenizes a whole source into a vector. Regex-vs-division and template
/// continuations are resolved lexer-side: regexes from the previous
/// significant token, template `}` continuations from a brace stack.
class Lexer {
public:
    Lexer(const std::string& source, std::string specifier)
        : src_(source), specifier_(std::move(specifier)) {}

    std::vector<Token> tokenize() {
        std::vector<Token> tokens;
        bool newline = false;
        for (;;) {
            newline = skip_trivia() || newline;
            Token t = next_token(tokens);
            t.newline_before = newline;
            newline = false;
            bool done = t.type == TokenType::EndOfFile;
            tokens.push_back(std::move(t));
            if (done) break;
            if (tokens.size() > kMaxTokens) {
                fail("token limit exceeded");
            }
        }
        return tokens;
    }

private:
    static constexpr size_t kMaxTokens = 4u << 20;

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError({specifier_, line_, col()}, message);
    }

    char peek(size_t off = 0) const {
        return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
    }
    bool eof() const { return pos_ >= src_.size(); }
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            line_++;
            line_start_ = pos_;
        }
        return c;
    }
    uint32_t col() const { return static_cast<uint32_t>(pos_ - line_start_) + 1; }

    // Returns true if a line terminator was crossed.
    bool skip_trivia() {
        bool newline = false;
        while (!eof()) {
            char c = peek();
            if (c == '\n' || c == '\r') {
                newline = true;
                advance();
            } else if (c == ' ' || c == '\t' || c == '\v' || c == '\f') {
                advance();
            } else if (static_cast<unsigned char>(c) == 0xEF && static_cast<unsigned char>(peek(1)) == 0xBB &&
                       static_cast<unsigned char>(peek(2)) == 0xBF) {
                advance(); advance(); advance();  // BOM
            } else if (static_cast<unsigned char>(c) == 0xC2 && static_cast<unsigned char>(peek(1)) == 0xA0) {
                advance(); advance();  // NBSP
            } else if (static_cast<unsigned char>(c) == 0xE2 && static_cast<unsigned char>(peek(1)) == 0x80 &&
                       (static_cast<unsigned char>(peek(2)) == 0xA8 || static_cast<unsigned char>(peek(2)) == 0xA9)) {
                newline = true;  // LS / PS
                advance(); advance(); advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!eof() && peek() != '\n' && peek() != '\r') advance();
            } else if (c == '/' && peek(1) == '*') {
                advance();
                advance();
                bool closed = false;
                while (!eof()) {
                    if (peek() == '\n' || peek() == '\r') newline = true;
                    if (peek() == '*' && peek(1) == '/') {
                        advance();
                        advance();
                        closed = true;
                        break;
                    }
                    advance();
                }
                if (!closed) fail("unterminated comment");
            } else {
                break;
            }
        }
        return newline;
    }

    Token begin_token() {
        Token t;
        t.span.start = static_cast<uint32_t>(pos_);
        t.span.line = line_;
        t.span.column = col();
        return t;
    }
    void end_token(Token& t) {
        t.span.end = static_cast<uint32_t>(pos_);
        if (t.text.empty()) t.text = src_.substr(t.span.start, t.span.end - t.span.start);
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
               static_cast<unsigned char>(c) >= 0x80;
    }
    static bool ident_part(char c) {
        return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
    }

    bool regex_allowed(const std::vector<Token>& tokens) const {
        // Walks back over nothing: the last token decides.
        if (tokens.empty()) return true;
        const Token& t = tokens.back();
        switch (t.type) {
            case TokenType::Identifier:
            case TokenType::Number:
            case TokenType::String:
            case TokenType::Regex:
            case TokenType::TemplateFull:
            case TokenType::TemplateTail:
                return false;
            case TokenType::Keyword:
                return !(t.text == "this" || t.text == "true" || t.text == "false" ||
                         t.text == "null" || t.text == "super");
            case TokenType::Punct:
                // `}` allows a regex: closing blocks are far more common than
                // dividing an object literal.
                return !(t.text == ")" || t.text == "]" || t.text == "++" || t.text == "--");
            default:
                return true;
        }
    }

    Token next_token(const std::vector<Token>& tokens) {
        Token t = begin_token();
        if (eof()) {
            t.type = TokenType::EndOfFile;
            return t;
        }
        char c = peek();

        if (c == '}' && !template_stack_.empty() && template_stack_.back() == 0) {
            template_stack_.pop_back();
            advance();
            return scan_template(t, /*head=*/false);
        }
        if (c == '`') {
            advance();
            return scan_template(t, /*head=*/true);
        }
        if (ident_start(c) || (c == '\\' && peek(1) == 'u')) return scan_identifier(t);
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            return scan_number(t);
        }
        if (c == '"' || c == '\'') return scan_string(t);
        if (c == '/' && regex_allowed(tokens)) return scan_regex(t);
        if (c == '#') {
            advance();
            if (!ident_start(peek())) fail("unexpected '#'");
            Token inner = scan_identifier(t);
            inner.type = TokenType::PrivateName;
            return inner;
        }
        return scan_punct(t);
    }

    Token scan_identifier(Token& t) {
        std::string name;
        while (!eof() && (ident_part(peek()) || (peek() == '\\' && peek(1) == 'u'))) {
            if (peek() == '\\') {
                advance();  // backslash
                advance();  // u
                uint32_t cp = scan_unicode_escape();
                detail::append_utf8(name, cp);
            } else {
                name += advance();
            }
        }
        end_token(t);
        t.text = name;
        t.type = detail::keyword_set().count(name) ? TokenType::Keyword : TokenType::Identifier;
        return t;
    }

    uint32_t scan_unicode_escape() {
        if (peek() == '{') {
            advance();
            uint32_t cp = 0;
            int digits = 0;
            while (!eof() && peek() != '}') {
                cp = cp * 16 + hex_digit(advance());
                if (++digits > 6) fail("unicode escape out of range");
            }
            if (eof()) fail("unterminated unicode escape");
            advance();
            return cp;
        }
        uint32_t cp = 0;
        for (int i = 0; i < 4; i++) {
            if (eof()) fail("bad unicode escape");
            cp = cp * 16 + hex_digit(advance());
        }
        return cp;
    }

    uint32_t hex_digit(char c) {
        if (c >= '0' && c <= '9') return static_cast<uint32_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<uint32_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<uint32_t>(c - 'A' + 10);
        fail("bad hex digit");
    }

    Token scan_number(Token& t) {
        t.type = TokenType::Number;
        std::string digits;
        auto take_digits = [&](auto pred) {
            while (!eof() && (pred(peek()) || peek() == '_')) {
                char c = advance();
                if (c != '_') digits += c;
            }
        };
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            advance(); advance();
            take_digits([](char c) { return std::isxdigit(static_cast<unsigned char>(c)); });
            if (digits.empty()) fail("missing hex digits");
            t.number = parse_radix(digits, 16);
        } else if (peek() == '0' && (peek(1) == 'o' || peek(1) == 'O')) {
            advance(); advance();
            take_digits([](char c) { return c >= '0' && c <= '7'; });
            if (digits.empty()) fail("missing octal digits");
            t.number = parse_radix(digits, 8);
        } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
            advance(); advance();
            take_digits([](char c) { return c == '0' || c == '1'; });
            if (digits.empty()) fail("missing binary digits");
            t.number = parse_radix(digits, 2);
        } else if (peek() == '0' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            // Legacy octal, or decimal when it contains 8/9.
            take_digits([](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            bool octal = digits.find('8') == std::string::npos && digits.find('9') == std::string::npos;
            t.number = octal ? parse_radix(digits, 8) : std::strtod(digits.c_str(), nullptr);
        } else {
            take_digits([](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            if (peek() == '.') {
                digits += advance();
                take_digits([](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            }
            if (peek() == 'e' || peek() == 'E') {
                digits += advance();
                if (peek() == '+' || peek() == '-') digits += advance();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("missing exponent");
                take_digits([](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            }
            t.number = std::strtod(digits.c_str(), nullptr);
        }
        if (peek() == 'n') fail("BigInt literals are not supported");
        if (ident_start(peek())) fail("identifier starts immediately after number");
        end_token(t);
        return t;
    }

    static double parse_radix(const std::string& digits, int radix) {
        double v = 0;
        for (char c : digits) {
            int d = c <= '9' ? c - '0' : (c | 0x20) - 'a' + 10;
            v = v * radix + d;
        }
        return v;
    }

    Token scan_string(Token& t) {
        t.type = TokenType::String;
        char quote = advance();
        std::string out;
        for (;;) {
            if (eof()) fail("unterminated string literal");
            char c = peek();
            if (c == quote) {
                advance();
                break;
            }
            if (c == '\n' || c == '\r') fail("unterminated string literal");
            if (c == '\\') {
                advance();
                scan_escape(out);
            } else {
                out += advance();
            }
        }
        end_token(t);
        t.value = std::move(out);
        return t;
    }

    void scan_escape(std::string& out) {
        if (eof()) fail("bad escape");
        char c = advance();
        switch (c) {
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            case 'b': out += '\b'; break;
            case 'f': out += '\f'; break;
            case 'v': out += '\v'; break;
            case '0':
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    out += static_cast<char>(scan_octal(c));
                } else {
                    out += '\0';
                }
                break;
            case '1': case '2': case '3': case '4': case '5': case '6': case '7':
                out += static_cast<char>(scan_octal(c));
                break;
            case 'x': {
                uint32_t v = hex_digit(advance()) * 16;
                v += hex_digit(advance());
                detail::append_utf8(out, v);
                break;
            }
            case 'u': {
                uint32_t cp = scan_unicode_escape();
                // Combine surrogate pairs written as two escapes.
                if (cp >= 0xD800 && cp <= 0xDBFF && peek() == '\\' && peek(1) == 'u') {
                    size_t save_pos = pos_;
                    uint32_t save_line = line_;
                    size_t save_ls = line_start_;
                    advance(); advance();
                    uint32_t lo = scan_unicode_escape();
                    if (lo >= 0xDC00 && lo <= 0xDFFF) {
                        cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
                    } else {
                        pos_ = save_pos;
                        line_ = save_line;
                        line_start_ = save_ls;
                    }
                }
                detail::append_utf8(out, cp);
                break;
            }
            case '\r':
                if (peek() == '\n') advance();
                break;
            case '\n':
                break;  // line continuation
            default:
                out += c;
        }
    }

    uint32_t scan_octal(char first) {
        uint32_t v = static_cast<uint32_t>(first - '0');
        for (int i = 0; i < 2 && peek() >= '0' && peek() <= '7'; i++) {
            v = v * 8 + static_cast<uint32_t>(advance() - '0');
            if (v > 0377) break;
        }
        return v;
    }

    Token scan_regex(Token& t) {
        t.type = TokenType::Regex;
        advance();  // '/'
        std::string pattern;
        bool in_class = false;
        for (;;) {
            if (eof()) fail("unterminated regular expression");
            char c = advance();
            if (c == '\n' || c == '\r') fail("unterminated regular expression");
            if (c == '\\') {
                if (eof()) fail("unterminated regular expression");
                pattern += c;
                pattern += advance();
                continue;
            }
            if (c == '[') in_class = true;
            if (c == ']') in_class = false;
            if (c == '/' && !in_class) break;
            pattern += c;
        }
        std::string flags;
        while (!eof() && ident_part(peek())) flags += advance();
        end_token(t);
        t.value = std::move(pattern);
        t.extra = std::move(flags);
        return t;
    }

    Token scan_template(Token& t, bool head) {
        std::string cooked;
        for (;;) {
            if (eof()) fail("unterminated template literal");
            char c = peek();
            if (c == '`') {
                advance();
                end_token(t);
                t.type = head ? TokenType::TemplateFull : TokenType::TemplateTail;
                t.value = std::move(cooked);
                return t;
            }
            if (c == '$' && peek(1) == '{') {
                advance();
                advance();
                template_stack_.push_back(0);
                end_token(t);
                t.type = head ? TokenType::TemplateHead : TokenType::TemplateMiddle;
                t.value = std::move(cooked);
                return t;
            }
            if (c == '\\') {
                advance();
                scan_escape(cooked);
            } else {
                cooked += advance();
            }
        }
    }

    Token scan_punct(Token& t) {
        t.type = TokenType::Punct;
        static const char* three_plus[] = {">>>=", "...", "===", "!==", "**=", "<<=", ">>=",
                                           "&&=", "||=", "??=", ">>>"};
        static const char* two[] = {"=>", "==", "!=", "<=", ">=", "&&", "||", "??", "?.", "++",
                                    "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<",
                                    ">>", "**"};
        std::string rest = src_.substr(pos_, 4);
        for (const char* p : three_plus) {
            if (rest.rfind(p, 0) == 0) {
                for (size_t i = 0; i < std::string(p).size(); i++) advance();
                end_token(t);
                t.text = p;
                track_braces(t.text);
                return t;
            }
        }
        for (const char* p : two) {
            if (rest.rfind(p, 0) == 0) {
                // "?.3" is a conditional, not optional chaining
                if (std::string(p) == "?." && std::isdigit(static_cast<unsigned char>(peek(2)))) continue;
                advance();
                advance();
                end_token(t);
                t.text = p;
                track_braces(t.text);
                return t;
            }
        }
        char c = advance();
        static const std::string singles = "{}()[];,<>+-*/%&|^!~?:=.@";
        if (singles.find(c) == std::string::npos) fail(std::string("unexpected character '") + c + "'");
        end_token(t);
        t.text = std::string(1, c);
        track_braces(t.text);
        return t;
    }

    void track_braces(const std::string& p) {
        if (template_stack_.empty()) return;
        if (p == "{") template_stack_.back()++;
        if (p == "}") template_stack_.back()--;
    }

    const std::string& src_;
    std::string specifier_;
    size_t pos_ = 0;
    uint32_t line_ = 1;
    size_t line_start_ = 0;
    std::vector<uint32_t> template_stack_;
};

}  // namespace mirage

#endif
