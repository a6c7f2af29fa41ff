#pragma once

#include "lq/term.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lq {

struct Token {
    enum class Kind { Ident, Qubit, Nat, Symbol, End };
    Kind kind;
    std::string text;
    int value = 0; // Qubit index or Nat value
    int line = 1;
    int column = 1;
};

/// Tokenizer shared by the program and assertion grammars. '#' starts a
/// comment running to end of line.
std::vector<Token> tokenize(std::string_view source);

/// Cursor over a token stream with the error conventions of both parsers.
class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    const Token &peek(size_t ahead = 0) const;
    Token next();
    bool at_end() const { return peek().kind == Token::Kind::End; }
    bool is_symbol(std::string_view s, size_t ahead = 0) const;
    bool is_keyword(std::string_view s, size_t ahead = 0) const;
    void expect_symbol(std::string_view s);
    void expect_keyword(std::string_view s);
    std::string expect_ident();
    [[noreturn]] void fail(const std::string &msg) const;

    size_t position() const { return pos_; }
    void reset(size_t pos) { pos_ = pos; }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

bool is_reserved_word(std::string_view word);

TermPtr parse_term(TokenStream &ts);
TypePtr parse_type(TokenStream &ts);

TermPtr parse_term(std::string_view source);
TypePtr parse_type(std::string_view source);

/// A source file: a "qubits n;" header followed by one term.
struct Program {
    int qubits = 0;
    TermPtr term;
};

Program parse_program(std::string_view source);

} // namespace lq
