#ifndef MIRAGE_TOKEN_HPP
#define MIRAGE_TOKEN_HPP

#include <cstdint>
#include <string>

#include "mirage/source.hpp"

namespace mirage {

enum class TokenType {
    EndOfFile,
    Identifier,
    PrivateName,
    Keyword,
    Number,
    String,
    Regex,
    TemplateFull,    // `abc`
    TemplateHead,    // `abc${
    TemplateMiddle,  // }abc${
    TemplateTail,    // }abc`
    Punct,
};

struct Token {
    TokenType type = TokenType::EndOfFile;
    std::string text;    // raw text for identifiers/keywords/puncts, source slice otherwise
    std::string value;   // cooked value for strings/templates; pattern for regex
    std::string extra;   // regex flags
    double number = 0;
    Span span;
    bool newline_before = false;

    bool is(TokenType t) const { return type == t; }
    bool is_punct(const char* p) const { return type == TokenType::Punct && text == p; }
    bool is_keyword(const char* k) const { return type == TokenType::Keyword && text == k; }
    bool is_identifier_like() const {
        return type == TokenType::Identifier || type == TokenType::Keyword;
    }
};

}  // namespace mirage

#endif
