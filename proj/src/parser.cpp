#include "paramweyl/parser.hpp"

#include <cctype>
#include <vector>

#include "paramweyl/errors.hpp"

namespace paramweyl {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            out.push_back({Token::Number, text.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i])))
                ++i;
            out.push_back({Token::Ident, text.substr(start, i - start), start});
            continue;
        }
        Token::Kind kind;
        switch (c) {
        case '+': kind = Token::Plus; break;
        case '-': kind = Token::Minus; break;
        case '*': kind = Token::Star; break;
        case '^': kind = Token::Caret; break;
        case '/': kind = Token::Slash; break;
        case '(': kind = Token::LParen; break;
        case ')': kind = Token::RParen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, text.substr(start, 1), start});
        ++i;
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

constexpr unsigned long kExponentCap = 65536;

class Parser {
public:
    Parser(const std::string& text, std::size_t n, std::size_t p)
        : tokens_(tokenize(text)), n_(n), p_(p) {}

    WeylOperator parse() {
        WeylOperator out = expr();
        if (peek().kind != Token::End)
            throw ParseError("unexpected trailing input '" + peek().text + "'",
                             peek().pos);
        return out;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    Token next() { return tokens_[at_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }

    WeylOperator expr() {
        const bool neg = accept(Token::Minus);
        WeylOperator acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept(Token::Plus))
                acc = acc + term();
            else if (accept(Token::Minus))
                acc = acc - term();
            else
                return acc;
        }
    }

    WeylOperator term() {
        WeylOperator acc = factor();
        while (accept(Token::Star)) acc = weyl_mul(acc, factor());
        return acc;
    }

    WeylOperator factor() {
        enum class Base { Number, Variable, Paren };
        Base base;
        WeylOperator op(n_, p_);
        const Token& tok = peek();
        switch (tok.kind) {
        case Token::Number:
            op = WeylOperator::constant(n_, p_, rational());
            base = Base::Number;
            break;
        case Token::Ident:
            op = WeylOperator::from_term(variable(next()), 1);
            base = Base::Variable;
            break;
        case Token::LParen: {
            next();
            op = expr();
            if (!accept(Token::RParen))
                throw ParseError("missing closing parenthesis", peek().pos);
            base = Base::Paren;
            break;
        }
        default:
            throw ParseError(
                "expected a number, variable, or parenthesized expression",
                tok.pos);
        }
        if (peek().kind != Token::Caret) return op;
        const Token caret = next();
        if (peek().kind != Token::Number)
            throw ParseError("exponent must be a nonnegative integer literal",
                             peek().pos);
        if (base == Base::Paren && !op.in_a())
            throw ParseError("exponent on a non-atomic noncommutative factor",
                             caret.pos);
        const Token e_tok = next();
        unsigned long e = 0;
        for (const char c : e_tok.text) {
            e = e * 10 + static_cast<unsigned long>(c - '0');
            if (e > kExponentCap)
                throw ParseError("exponent exceeds " + std::to_string(kExponentCap),
                                 e_tok.pos);
        }
        WeylOperator out = WeylOperator::constant(n_, p_, 1);
        WeylOperator pw = op;
        while (e) {
            if (e & 1) out = weyl_mul(out, pw);
            e >>= 1;
            if (e) pw = weyl_mul(pw, pw);
        }
        return out;
    }

    Rat rational() {
        const Token num = next();
        if (!accept(Token::Slash)) return Rat(Int(num.text));
        if (peek().kind != Token::Number)
            throw ParseError("expected an integer denominator", peek().pos);
        const Token den = next();
        if (Int(den.text) == 0)
            throw ParseError("zero denominator", den.pos);
        Rat r(Int(num.text), Int(den.text));
        r.canonicalize();
        return r;
    }

    Monomial variable(const Token& tok) {
        const std::string& t = tok.text;
        std::size_t digits = 0;
        while (digits < t.size() &&
               !std::isdigit(static_cast<unsigned char>(t[digits])))
            ++digits;
        const std::string letters = t.substr(0, digits);
        const std::string index_text = t.substr(digits);
        if (letters.size() != 1 ||
            (letters[0] != 'x' && letters[0] != 'd' && letters[0] != 's') ||
            index_text.empty())
            throw ParseError("unknown variable '" + t + "'", tok.pos);
        unsigned long index = 0;
        for (const char c : index_text) {
            index = index * 10 + static_cast<unsigned long>(c - '0');
            if (index > 1000000)
                throw ParseError("variable index too large", tok.pos);
        }
        const std::size_t limit = letters[0] == 's' ? p_ : n_;
        if (index == 0 || index > limit)
            throw ParseError("variable " + t + " out of range (" +
                                 (letters[0] == 's' ? "p = " : "n = ") +
                                 std::to_string(limit) + ")",
                             tok.pos);
        Monomial m = Monomial::one(n_, p_);
        if (letters[0] == 'x')
            m.set_x(index - 1, 1);
        else if (letters[0] == 'd')
            m.set_d(index - 1, 1);
        else
            m.set_s(index - 1, 1);
        return m;
    }

    std::vector<Token> tokens_;
    std::size_t n_, p_;
    std::size_t at_ = 0;
};

} // namespace

WeylOperator parse_operator(const std::string& text, std::size_t n,
                            std::size_t p) {
    return Parser(text, n, p).parse();
}

RationalPoint parse_rational_point(const std::string& text, std::size_t p) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != p)
        throw ParseError("point has " + std::to_string(parts.size()) +
                             " coordinates; expected " + std::to_string(p),
                         0);
    RationalPoint out;
    std::size_t offset = 0;
    for (auto& part : parts) {
        const std::size_t head = part.find_first_not_of(" \t");
        const std::size_t tail = part.find_last_not_of(" \t");
        const std::string trimmed =
            head == std::string::npos ? "" : part.substr(head, tail - head + 1);
        try {
            out.coords.push_back(rat_from_string(trimmed));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what(), offset + (head == std::string::npos ? 0 : head));
        }
        offset += part.size() + 1;
    }
    return out;
}

} // namespace paramweyl
