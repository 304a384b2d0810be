#ifndef WHITEALG_EXPR_HPP
#define WHITEALG_EXPR_HPP

#include <string>
#include <vector>

#include "whitealg/rational.hpp"

namespace whitealg {

// Surface syntax tree for bracket expressions. Word is the '.'-concatenation
// of factors (tensor product); an empty Word is the unit, so a bare rational
// constant parses as Scale(c, Word{}).
struct BracketExpr {
    enum class Kind { Generator, Bracket, Sum, Scale, Word };

    Kind kind = Kind::Word;
    std::string name;                   // Generator
    Rational coeff{0};                  // Scale
    std::vector<BracketExpr> children;  // Bracket: 2, Sum: >= 1, Scale: 1, Word: >= 0

    static BracketExpr generator(std::string n) {
        BracketExpr e;
        e.kind = Kind::Generator;
        e.name = std::move(n);
        return e;
    }
    static BracketExpr bracket(BracketExpr l, BracketExpr r) {
        BracketExpr e;
        e.kind = Kind::Bracket;
        e.children.push_back(std::move(l));
        e.children.push_back(std::move(r));
        return e;
    }
    static BracketExpr sum(std::vector<BracketExpr> terms) {
        BracketExpr e;
        e.kind = Kind::Sum;
        e.children = std::move(terms);
        return e;
    }
    static BracketExpr scale(Rational c, BracketExpr inner) {
        BracketExpr e;
        e.kind = Kind::Scale;
        e.coeff = std::move(c);
        e.children.push_back(std::move(inner));
        return e;
    }
    static BracketExpr word(std::vector<BracketExpr> factors) {
        BracketExpr e;
        e.kind = Kind::Word;
        e.children = std::move(factors);
        return e;
    }
};

}  // namespace whitealg

#endif
