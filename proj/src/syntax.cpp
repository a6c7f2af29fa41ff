#include "lq/syntax.hpp"

#include "lq/error.hpp"

#include <array>
#include <cctype>
#include <limits>

namespace lq {

namespace {

constexpr std::array<std::string_view, 21> kReserved = {
    "true", "false", "pi1", "pi2", "if", "then", "else", "let", "in", "meas",
    "cnot", "H", "phase", "bit", "qbit", "pure", "forall", "exists", "qubits", "TRUE", "FALSE"};

// Longest symbols first.
constexpr std::array<std::string_view, 18> kSymbols = {
    "->", "/\\", "\\/", "\\", ":", ".", "(", ")", "<", ">",
    ",", "*", "=", "~", "!", "{", "}", ";"};

bool qubit_spelling(const std::string &w, int &index) {
    if (w.size() < 2 || w[0] != 'q')
        return false;
    for (size_t i = 1; i < w.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(w[i])))
            return false;
    long v = std::stol(w.substr(1));
    if (v > std::numeric_limits<int>::max())
        return false;
    index = static_cast<int>(v);
    return true;
}

} // namespace

bool is_reserved_word(std::string_view word) {
    for (auto r : kReserved)
        if (r == word)
            return true;
    return false;
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        Token tok{Token::Kind::Symbol, "", 0, line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                      src[j] == '_' || src[j] == '\''))
                ++j;
            tok.text = std::string(src.substr(i, j - i));
            int idx = 0;
            if (qubit_spelling(tok.text, idx)) {
                if (idx == 0)
                    throw SyntaxError("qubit index must be at least 1", line, col);
                tok.kind = Token::Kind::Qubit;
                tok.value = idx;
            } else {
                tok.kind = Token::Kind::Ident;
            }
            advance(j - i);
            out.push_back(std::move(tok));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            tok.kind = Token::Kind::Nat;
            tok.text = std::string(src.substr(i, j - i));
            if (tok.text.size() > 9)
                throw SyntaxError("number too large", line, col);
            tok.value = std::stoi(tok.text);
            advance(j - i);
            out.push_back(std::move(tok));
            continue;
        }
        bool matched = false;
        for (auto s : kSymbols) {
            if (src.substr(i, s.size()) == s) {
                tok.text = std::string(s);
                advance(s.size());
                out.push_back(std::move(tok));
                matched = true;
                break;
            }
        }
        if (!matched)
            throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(Token{Token::Kind::End, "<end of input>", 0, line, col});
    return out;
}

const Token &TokenStream::peek(size_t ahead) const {
    size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
}

Token TokenStream::next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1)
        ++pos_;
    return t;
}

bool TokenStream::is_symbol(std::string_view s, size_t ahead) const {
    const auto &t = peek(ahead);
    return t.kind == Token::Kind::Symbol && t.text == s;
}

bool TokenStream::is_keyword(std::string_view s, size_t ahead) const {
    const auto &t = peek(ahead);
    return t.kind == Token::Kind::Ident && t.text == s;
}

void TokenStream::fail(const std::string &msg) const {
    const auto &t = peek();
    throw SyntaxError(msg + " (found '" + t.text + "')", t.line, t.column);
}

void TokenStream::expect_symbol(std::string_view s) {
    if (!is_symbol(s))
        fail("expected '" + std::string(s) + "'");
    next();
}

void TokenStream::expect_keyword(std::string_view s) {
    if (!is_keyword(s))
        fail("expected '" + std::string(s) + "'");
    next();
}

std::string TokenStream::expect_ident() {
    const auto &t = peek();
    if (t.kind != Token::Kind::Ident || is_reserved_word(t.text))
        fail("expected identifier");
    return next().text;
}

namespace {

TypePtr parse_btype(TokenStream &ts) {
    TypePtr left;
    if (ts.is_keyword("bit")) {
        ts.next();
        left = Type::bit();
    } else if (ts.is_keyword("qbit")) {
        ts.next();
        left = Type::qbit();
    } else if (ts.is_symbol("(")) {
        ts.next();
        left = parse_type(ts);
        ts.expect_symbol(")");
    } else {
        ts.fail("expected a type");
    }
    return left;
}

TypePtr parse_product(TokenStream &ts) {
    TypePtr t = parse_btype(ts);
    while (ts.is_symbol("*")) {
        ts.next();
        t = Type::product(t, parse_btype(ts));
    }
    return t;
}

bool starts_atom(const TokenStream &ts) {
    const auto &t = ts.peek();
    switch (t.kind) {
    case Token::Kind::Qubit:
        return true;
    case Token::Kind::Ident:
        return t.text == "true" || t.text == "false" || t.text == "pi1" || t.text == "pi2" ||
               t.text == "if" || t.text == "let" || t.text == "meas" || t.text == "cnot" ||
               t.text == "H" || t.text == "phase" || !is_reserved_word(t.text);
    case Token::Kind::Symbol:
        return t.text == "(" || t.text == "<";
    default:
        return false;
    }
}

TermPtr parse_atom(TokenStream &ts) {
    const Token &t = ts.peek();
    if (t.kind == Token::Kind::Qubit) {
        int idx = ts.next().value;
        return Term::qubit(idx);
    }
    if (ts.is_symbol("(")) {
        ts.next();
        auto m = parse_term(ts);
        ts.expect_symbol(")");
        return m;
    }
    if (ts.is_symbol("<")) {
        ts.next();
        auto l = parse_term(ts);
        ts.expect_symbol(",");
        auto r = parse_term(ts);
        ts.expect_symbol(">");
        return Term::pair(l, r);
    }
    if (t.kind != Token::Kind::Ident)
        ts.fail("expected a term");
    const std::string w = t.text;
    if (w == "true" || w == "false") {
        ts.next();
        return Term::boolean(w == "true");
    }
    if (w == "pi1" || w == "pi2") {
        ts.next();
        return Term::proj(w == "pi1" ? 1 : 2, parse_atom(ts));
    }
    if (w == "if") {
        ts.next();
        auto g = parse_term(ts);
        ts.expect_keyword("then");
        auto th = parse_term(ts);
        ts.expect_keyword("else");
        auto el = parse_term(ts);
        return Term::ite(g, th, el);
    }
    if (w == "let") {
        ts.next();
        ts.expect_symbol("<");
        auto x = ts.expect_ident();
        ts.expect_symbol(",");
        auto y = ts.expect_ident();
        ts.expect_symbol(">");
        ts.expect_symbol("=");
        auto m = parse_term(ts);
        ts.expect_keyword("in");
        auto n = parse_term(ts);
        return Term::let_pair(x, y, m, n);
    }
    if (w == "meas" || w == "cnot" || w == "H" || w == "phase") {
        ts.next();
        Prim p = w == "meas" ? Prim::Meas
                 : w == "cnot" ? Prim::Cnot
                 : w == "H"    ? Prim::Hadamard
                               : Prim::Phase;
        return Term::primitive(p);
    }
    return Term::var(ts.expect_ident());
}

} // namespace

TypePtr parse_type(TokenStream &ts) {
    TypePtr left = parse_product(ts);
    if (ts.is_symbol("->")) {
        ts.next();
        return Type::arrow(left, parse_type(ts));
    }
    return left;
}

TermPtr parse_term(TokenStream &ts) {
    if (ts.is_symbol("\\")) {
        ts.next();
        auto x = ts.expect_ident();
        ts.expect_symbol(":");
        auto ty = parse_type(ts);
        ts.expect_symbol(".");
        return Term::lam(x, ty, parse_term(ts));
    }
    TermPtr m = parse_atom(ts);
    while (starts_atom(ts) || ts.is_symbol("\\")) {
        // a trailing abstraction is the last argument: f \x:bit. x
        if (ts.is_symbol("\\")) {
            m = Term::app(m, parse_term(ts));
            break;
        }
        m = Term::app(m, parse_atom(ts));
    }
    return m;
}

namespace {

template <class T, class F> T parse_whole(std::string_view src, F f) {
    TokenStream ts(tokenize(src));
    T out = f(ts);
    if (!ts.at_end())
        ts.fail("unexpected trailing input");
    return out;
}

} // namespace

TermPtr parse_term(std::string_view source) {
    return parse_whole<TermPtr>(source, [](TokenStream &ts) { return parse_term(ts); });
}

TypePtr parse_type(std::string_view source) {
    return parse_whole<TypePtr>(source, [](TokenStream &ts) { return parse_type(ts); });
}

Program parse_program(std::string_view source) {
    TokenStream ts(tokenize(source));
    Program prog;
    ts.expect_keyword("qubits");
    if (ts.peek().kind != Token::Kind::Nat)
        ts.fail("expected register size");
    const Token size_tok = ts.next();
    prog.qubits = size_tok.value;
    if (prog.qubits < 1)
        throw SyntaxError("register size must be positive", size_tok.line, size_tok.column);
    ts.expect_symbol(";");
    prog.term = parse_term(ts);
    if (!ts.at_end())
        ts.fail("unexpected trailing input");
    int hi = max_qubit_index(prog.term);
    if (hi > prog.qubits)
        throw SyntaxError("qubit constant q" + std::to_string(hi) + " exceeds register size " +
                              std::to_string(prog.qubits),
                          size_tok.line, size_tok.column);
    return prog;
}

} // namespace lq
