#pragma once

#include <cerrno>
#include <cstdlib>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stabmc/source.hpp"
#include "stabmc/token.hpp"

namespace stabmc {

namespace detail {

inline const std::unordered_map<std::string_view, TokenKind>& keyword_table() {
    static const std::unordered_map<std::string_view, TokenKind> table = {
        {"program", TokenKind::KwProgram},
        {"process", TokenKind::KwProcess},
        {"var", TokenKind::KwVar},
        {"begin", TokenKind::KwBegin},
        {"end", TokenKind::KwEnd},
        {"endprogram", TokenKind::KwEndprogram},
        {"integer", TokenKind::KwInteger},
        {"bool", TokenKind::KwBool},
        {"real", TokenKind::KwReal},
        {"qubit", TokenKind::KwQubit},
        {"channel", TokenKind::KwChannel},
        {"of", TokenKind::KwOf},
        {"newqubit", TokenKind::KwNewqubit},
        {"meas", TokenKind::KwMeas},
        {"had", TokenKind::KwHad},
        {"ph", TokenKind::KwPh},
        {"X", TokenKind::KwX},
        {"cnot", TokenKind::KwCnot},
        {"if", TokenKind::KwIf},
        {"fi", TokenKind::KwFi},
        {"do", TokenKind::KwDo},
        {"od", TokenKind::KwOd},
        {"skip", TokenKind::KwSkip},
        {"true", TokenKind::KwTrue},
        {"false", TokenKind::KwFalse},
        {"not", TokenKind::KwNot},
        {"and", TokenKind::KwAnd},
        {"or", TokenKind::KwOr},
        {"imp", TokenKind::KwImp},
        {"finalstateproperty", TokenKind::KwFinalStateProperty},
        {"property", TokenKind::KwProperty},
        {"AG", TokenKind::KwAG},
        {"AF", TokenKind::KwAF},
        {"AX", TokenKind::KwAX},
        {"EG", TokenKind::KwEG},
        {"EF", TokenKind::KwEF},
        {"EX", TokenKind::KwEX},
        {"A", TokenKind::KwA},
        {"E", TokenKind::KwE},
        {"U", TokenKind::KwU},
        {"P", TokenKind::KwP},
        {"qb", TokenKind::KwQb},
        {"unentangled", TokenKind::KwUnentangled},
        {"re", TokenKind::KwRe},
        {"im", TokenKind::KwIm},
    };
    return table;
}

// Returns the byte offset of the first invalid UTF-8 sequence, or npos.
inline size_t find_invalid_utf8(std::string_view s) {
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        size_t len;
        if (c < 0x80) len = 1;
        else if ((c & 0xE0) == 0xC0 && c >= 0xC2) len = 2;
        else if ((c & 0xF0) == 0xE0) len = 3;
        else if ((c & 0xF8) == 0xF0 && c <= 0xF4) len = 4;
        else return i;
        if (i + len > s.size()) return i;
        for (size_t k = 1; k < len; ++k)
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return i;
        i += len;
    }
    return std::string_view::npos;
}

}  // namespace detail

/// Splits source text into tokens. Comments `{ ... }` are discarded.
/// Lexical problems are reported through `diags`; lexing continues past
/// illegal characters so later errors are still found.
inline std::vector<Token> tokenize(std::string_view source, DiagnosticList& diags) {
    std::vector<Token> tokens;

    if (size_t bad = detail::find_invalid_utf8(source); bad != std::string_view::npos) {
        uint32_t line = 1, col = 1;
        for (size_t i = 0; i < bad; ++i) {
            if (source[i] == '\n') { ++line; col = 1; } else ++col;
        }
        diags.error({line, col}, "input is not valid UTF-8");
        return tokens;
    }

    size_t i = 0;
    uint32_t line = 1, col = 1;
    auto advance = [&](size_t n = 1) {
        for (size_t k = 0; k < n; ++k) {
            if (i < source.size() && source[i] == '\n') { ++line; col = 1; }
            else ++col;
            ++i;
        }
    };
    auto peek = [&](size_t off = 0) -> char {
        return i + off < source.size() ? source[i + off] : '\0';
    };
    auto push = [&](TokenKind kind, SourceLoc loc, std::string lexeme) {
        tokens.push_back({kind, std::move(lexeme), loc, 0, 0.0});
    };

    while (i < source.size()) {
        char c = peek();
        SourceLoc loc{line, col};

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance();
            continue;
        }
        if (c == '{') {  // comment, discarded
            advance();
            while (i < source.size() && peek() != '}') advance();
            if (i == source.size()) {
                diags.error(loc, "unterminated comment");
                break;
            }
            advance();  // consume '}'
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
            std::string word(source.substr(start, i - start));
            auto it = detail::keyword_table().find(word);
            push(it != detail::keyword_table().end() ? it->second : TokenKind::Ident, loc,
                 std::move(word));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
            bool is_real = false;
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                is_real = true;
                advance();
                while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
            }
            std::string text(source.substr(start, i - start));
            Token tok{is_real ? TokenKind::RealLit : TokenKind::IntLit, text, loc, 0, 0.0};
            errno = 0;
            if (is_real) {
                tok.real_value = std::strtod(text.c_str(), nullptr);
            } else {
                tok.int_value = std::strtoll(text.c_str(), nullptr, 10);
                if (errno == ERANGE) {
                    diags.error(loc, "integer literal out of range: " + text);
                    tok.int_value = 0;
                }
            }
            tokens.push_back(std::move(tok));
            continue;
        }

        switch (c) {
            case ';': advance(); push(TokenKind::Semi, loc, ";"); continue;
            case ',': advance(); push(TokenKind::Comma, loc, ","); continue;
            case '.': advance(); push(TokenKind::Dot, loc, "."); continue;
            case '(': advance(); push(TokenKind::LParen, loc, "("); continue;
            case ')': advance(); push(TokenKind::RParen, loc, ")"); continue;
            case '[': advance(); push(TokenKind::LBracket, loc, "["); continue;
            case ']': advance(); push(TokenKind::RBracket, loc, "]"); continue;
            case '?': advance(); push(TokenKind::Question, loc, "?"); continue;
            case '+': advance(); push(TokenKind::Plus, loc, "+"); continue;
            case '*': advance(); push(TokenKind::Star, loc, "*"); continue;
            case ':':
                if (peek(1) == '=') { advance(2); push(TokenKind::Assign, loc, ":="); }
                else if (peek(1) == ':') { advance(2); push(TokenKind::ColonColon, loc, "::"); }
                else { advance(); push(TokenKind::Colon, loc, ":"); }
                continue;
            case '-':
                if (peek(1) == '>') { advance(2); push(TokenKind::Arrow, loc, "->"); }
                else { advance(); push(TokenKind::Minus, loc, "-"); }
                continue;
            case '=':
                if (peek(1) == '=') { advance(2); push(TokenKind::EqEq, loc, "=="); }
                else { advance(); push(TokenKind::Eq, loc, "="); }
                continue;
            case '!':
                if (peek(1) == '=') { advance(2); push(TokenKind::Neq, loc, "!="); }
                else { advance(); push(TokenKind::Bang, loc, "!"); }
                continue;
            case '<':
                if (peek(1) == '=') { advance(2); push(TokenKind::Le, loc, "<="); }
                else { advance(); push(TokenKind::Lt, loc, "<"); }
                continue;
            case '>':
                if (peek(1) == '=') { advance(2); push(TokenKind::Ge, loc, ">="); }
                else { advance(); push(TokenKind::Gt, loc, ">"); }
                continue;
            default:
                diags.error(loc, std::string("illegal character '") + c + "'");
                advance();
                continue;
        }
    }

    tokens.push_back({TokenKind::Eof, "", {line, col}, 0, 0.0});
    return tokens;
}

}  // namespace stabmc
