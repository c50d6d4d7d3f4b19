#pragma once

// Shared tokenizer and operator-precedence reader for the formula, modal and
// consecution grammars.  Produces an untyped tree that each front end converts.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace cbi::syntax {

enum class Tok {
    Ident, LParen, RParen, End,
    // nullary
    Top, Bot, Emp, Coemp, UnitMod, InfMod, AEmpty, MEmpty,
    // prefix
    Not, MNot, InvMod, Sharp, Flat,
    // infix
    And, Or, Imp, Iff, Star, Par, Wand, Comp, CoWand, Semi, Comma, Turnstile,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

enum class Dialect { Formula, Modal, Structure };

std::vector<Token> tokenize(const std::string& text, Dialect d);
std::string describe(Tok t);

struct Tree {
    Tok kind;  // Ident for variables, otherwise the operator token
    std::string name;
    std::vector<std::shared_ptr<Tree>> kids;
    std::size_t offset = 0;
};
using TreePtr = std::shared_ptr<Tree>;

class Reader {
public:
    Reader(std::vector<Token> toks, Dialect d) : toks_(std::move(toks)), dialect_(d) {}

    TreePtr formula();             // full formula including <->
    TreePtr consecution();         // structure |- structure
    void expect_end();

private:
    TreePtr iff();
    TreePtr implication();
    TreePtr wand();
    TreePtr level(int lvl);
    TreePtr unary();
    TreePtr atom();
    TreePtr structure();
    TreePtr semi_chain();
    TreePtr comma_chain();
    TreePtr struct_unary();
    TreePtr struct_atom();

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    [[noreturn]] void fail(std::vector<Tok> expected) const;

    std::vector<Token> toks_;
    Dialect dialect_;
    std::size_t pos_ = 0;
};

}  // namespace cbi::syntax
