#include "whitealg/parser.hpp"

#include <cctype>
#include <vector>

#include "whitealg/errors.hpp"

namespace whitealg {

namespace {

constexpr int kMaxDepth = 4096;

struct Token {
    enum class Kind { Ident, Number, Plus, Minus, Star, Slash, LBracket, RBracket, LParen, RParen,
                      Comma, Dot, End };
    Kind kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isalpha(c)) {
            size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            size_t k = j;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            if (k == j)
                fail(Errc::UnknownToken, "generator name without an index at position " +
                                             std::to_string(start));
            out.push_back({Token::Kind::Ident, s.substr(i, k - i), start});
            i = k;
            continue;
        }
        if (std::isdigit(c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Number, s.substr(i, j - i), start});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '/': k = Token::Kind::Slash; break;
            case '[': k = Token::Kind::LBracket; break;
            case ']': k = Token::Kind::RBracket; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            case ',': k = Token::Kind::Comma; break;
            case '.': k = Token::Kind::Dot; break;
            default:
                fail(Errc::UnknownToken, std::string("unexpected character '") + char(c) +
                                             "' at position " + std::to_string(start));
        }
        out.push_back({k, s.substr(i, 1), start});
        ++i;
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    BracketExpr run() {
        if (toks_.size() == 1) fail(Errc::EmptyInput, "empty expression");
        BracketExpr e = expr(0);
        const Token& t = peek();
        if (t.kind == Token::Kind::RBracket)
            fail(Errc::UnbalancedBracket, "unmatched ']' at position " + std::to_string(t.pos));
        if (t.kind != Token::Kind::End)
            fail(Errc::UnknownToken,
                 "unexpected '" + t.text + "' at position " + std::to_string(t.pos));
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }
    bool eat(Token::Kind k) {
        if (peek().kind == k) {
            ++i_;
            return true;
        }
        return false;
    }

    static BracketExpr negate(BracketExpr e) {
        if (e.kind == BracketExpr::Kind::Scale) {
            e.coeff = -e.coeff;
            return e;
        }
        return BracketExpr::scale(Rational(-1), std::move(e));
    }

    BracketExpr expr(int depth) {
        if (depth > kMaxDepth)
            fail(Errc::UnbalancedBracket, "expression nesting exceeds the supported depth");
        std::vector<BracketExpr> terms;
        bool neg = eat(Token::Kind::Minus);
        BracketExpr t = term(depth);
        terms.push_back(neg ? negate(std::move(t)) : std::move(t));
        for (;;) {
            if (eat(Token::Kind::Plus)) {
                terms.push_back(term(depth));
            } else if (eat(Token::Kind::Minus)) {
                terms.push_back(negate(term(depth)));
            } else {
                break;
            }
        }
        if (terms.size() == 1) return std::move(terms[0]);
        return BracketExpr::sum(std::move(terms));
    }

    BracketExpr term(int depth) {
        if (peek().kind == Token::Kind::Number) {
            Rational r = rational();
            if (eat(Token::Kind::Star)) return BracketExpr::scale(r, factor(depth));
            return BracketExpr::scale(r, BracketExpr::word({}));  // bare constant
        }
        return factor(depth);
    }

    Rational rational() {
        const Token& n = next();
        Integer num(n.text, 10);
        if (eat(Token::Kind::Slash)) {
            const Token& d = peek();
            if (d.kind != Token::Kind::Number)
                fail(Errc::UnknownToken,
                     "expected a denominator at position " + std::to_string(d.pos));
            next();
            Integer den(d.text, 10);
            if (den == 0)
                fail(Errc::ZeroDenominator, "zero denominator at position " + std::to_string(d.pos));
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    BracketExpr factor(int depth) {
        BracketExpr first = atom(depth);
        if (peek().kind != Token::Kind::Dot) return first;
        std::vector<BracketExpr> factors;
        factors.push_back(std::move(first));
        while (eat(Token::Kind::Dot)) factors.push_back(atom(depth));
        return BracketExpr::word(std::move(factors));
    }

    BracketExpr atom(int depth) {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Ident:
                next();
                return BracketExpr::generator(t.text);
            case Token::Kind::LBracket: {
                size_t open_pos = t.pos;
                next();
                BracketExpr l = expr(depth + 1);
                if (!eat(Token::Kind::Comma))
                    fail(Errc::UnbalancedBracket, "bracket opened at position " +
                                                      std::to_string(open_pos) + " needs ','");
                BracketExpr r = expr(depth + 1);
                if (!eat(Token::Kind::RBracket))
                    fail(Errc::UnbalancedBracket, "bracket opened at position " +
                                                      std::to_string(open_pos) + " is not closed");
                return BracketExpr::bracket(std::move(l), std::move(r));
            }
            case Token::Kind::LParen: {
                size_t open_pos = t.pos;
                next();
                BracketExpr inner = expr(depth + 1);
                if (!eat(Token::Kind::RParen))
                    fail(Errc::UnbalancedBracket, "parenthesis opened at position " +
                                                      std::to_string(open_pos) + " is not closed");
                return inner;
            }
            case Token::Kind::RBracket:
                fail(Errc::UnbalancedBracket, "unmatched ']' at position " + std::to_string(t.pos));
            case Token::Kind::End:
                fail(Errc::UnbalancedBracket, "unexpected end of input");
            default:
                fail(Errc::UnknownToken,
                     "unexpected '" + t.text + "' at position " + std::to_string(t.pos));
        }
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
};

}  // namespace

BracketExpr parse_expr(const std::string& text) { return Parser(text).run(); }

}  // namespace whitealg
