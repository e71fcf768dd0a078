#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "stabmc/source.hpp"

namespace stabmc {

enum class TokenKind : uint8_t {
    Ident,
    IntLit,
    RealLit,

    // declaration keywords
    KwProgram,
    KwProcess,
    KwVar,
    KwBegin,
    KwEnd,
    KwEndprogram,
    KwInteger,
    KwBool,
    KwReal,
    KwQubit,
    KwChannel,
    KwOf,

    // statement keywords
    KwNewqubit,
    KwMeas,
    KwHad,
    KwPh,
    KwX,
    KwCnot,
    KwIf,
    KwFi,
    KwDo,
    KwOd,
    KwSkip,

    // expression keywords
    KwTrue,
    KwFalse,
    KwNot,
    KwAnd,
    KwOr,
    KwImp,

    // property keywords
    KwFinalStateProperty,
    KwProperty,
    KwAG,
    KwAF,
    KwAX,
    KwEG,
    KwEF,
    KwEX,
    KwA,
    KwE,
    KwU,
    KwP,
    KwQb,
    KwUnentangled,
    KwRe,
    KwIm,

    // punctuation and operators
    Semi,        // ;
    Colon,       // :
    Comma,       // ,
    Dot,         // .
    LParen,      // (
    RParen,      // )
    LBracket,    // [
    RBracket,    // ]
    Assign,      // :=
    Bang,        // !
    Question,    // ?
    ColonColon,  // ::
    Arrow,       // ->
    Eq,          // =
    EqEq,        // ==
    Neq,         // !=
    Lt,          // <
    Le,          // <=
    Gt,          // >
    Ge,          // >=
    Plus,        // +
    Minus,       // -
    Star,        // *

    Eof,
};

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string lexeme;
    SourceLoc loc;
    long long int_value = 0;   // valid for IntLit
    double real_value = 0.0;   // valid for RealLit
};

inline std::string_view token_kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::IntLit: return "integer literal";
        case TokenKind::RealLit: return "real literal";
        case TokenKind::KwProgram: return "'program'";
        case TokenKind::KwProcess: return "'process'";
        case TokenKind::KwVar: return "'var'";
        case TokenKind::KwBegin: return "'begin'";
        case TokenKind::KwEnd: return "'end'";
        case TokenKind::KwEndprogram: return "'endprogram'";
        case TokenKind::KwInteger: return "'integer'";
        case TokenKind::KwBool: return "'bool'";
        case TokenKind::KwReal: return "'real'";
        case TokenKind::KwQubit: return "'qubit'";
        case TokenKind::KwChannel: return "'channel'";
        case TokenKind::KwOf: return "'of'";
        case TokenKind::KwNewqubit: return "'newqubit'";
        case TokenKind::KwMeas: return "'meas'";
        case TokenKind::KwHad: return "'had'";
        case TokenKind::KwPh: return "'ph'";
        case TokenKind::KwX: return "'X'";
        case TokenKind::KwCnot: return "'cnot'";
        case TokenKind::KwIf: return "'if'";
        case TokenKind::KwFi: return "'fi'";
        case TokenKind::KwDo: return "'do'";
        case TokenKind::KwOd: return "'od'";
        case TokenKind::KwSkip: return "'skip'";
        case TokenKind::KwTrue: return "'true'";
        case TokenKind::KwFalse: return "'false'";
        case TokenKind::KwNot: return "'not'";
        case TokenKind::KwAnd: return "'and'";
        case TokenKind::KwOr: return "'or'";
        case TokenKind::KwImp: return "'imp'";
        case TokenKind::KwFinalStateProperty: return "'finalstateproperty'";
        case TokenKind::KwProperty: return "'property'";
        case TokenKind::KwAG: return "'AG'";
        case TokenKind::KwAF: return "'AF'";
        case TokenKind::KwAX: return "'AX'";
        case TokenKind::KwEG: return "'EG'";
        case TokenKind::KwEF: return "'EF'";
        case TokenKind::KwEX: return "'EX'";
        case TokenKind::KwA: return "'A'";
        case TokenKind::KwE: return "'E'";
        case TokenKind::KwU: return "'U'";
        case TokenKind::KwP: return "'P'";
        case TokenKind::KwQb: return "'qb'";
        case TokenKind::KwUnentangled: return "'unentangled'";
        case TokenKind::KwRe: return "'re'";
        case TokenKind::KwIm: return "'im'";
        case TokenKind::Semi: return "';'";
        case TokenKind::Colon: return "':'";
        case TokenKind::Comma: return "','";
        case TokenKind::Dot: return "'.'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::LBracket: return "'['";
        case TokenKind::RBracket: return "']'";
        case TokenKind::Assign: return "':='";
        case TokenKind::Bang: return "'!'";
        case TokenKind::Question: return "'?'";
        case TokenKind::ColonColon: return "'::'";
        case TokenKind::Arrow: return "'->'";
        case TokenKind::Eq: return "'='";
        case TokenKind::EqEq: return "'=='";
        case TokenKind::Neq: return "'!='";
        case TokenKind::Lt: return "'<'";
        case TokenKind::Le: return "'<='";
        case TokenKind::Gt: return "'>'";
        case TokenKind::Ge: return "'>='";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Eof: return "end of input";
    }
    return "?";
}

}  // namespace stabmc
