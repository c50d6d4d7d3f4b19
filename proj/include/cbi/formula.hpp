#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbi {

enum class Op {
    Var, Top, Bot, Not, And, Or, Imp,
    MTop, MBot, MNot, Star, Par, Wand
};

int arity(Op op);

class Formula {
public:
    Formula();  // Top

    static Formula var(std::string name);
    static Formula top();
    static Formula bot();
    static Formula mtop();
    static Formula mbot();
    static Formula unary(Op op, Formula a);
    static Formula binary(Op op, Formula a, Formula b);

    Op op() const { return node_->op; }
    const std::string& name() const { return node_->name; }
    const Formula& left() const { return node_->kids.at(0); }
    const Formula& right() const { return node_->kids.at(1); }
    const Formula& child() const { return node_->kids.at(0); }
    const std::vector<Formula>& kids() const { return node_->kids; }

    bool is_atom() const { return op() == Op::Var; }
    std::size_t size() const { return node_->size; }

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
    friend bool operator<(const Formula& a, const Formula& b);

private:
    struct Node {
        Op op;
        std::string name;
        std::vector<Formula> kids;
        std::size_t size;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

Formula Var(const std::string& n);
Formula Not(Formula a);
Formula MNot(Formula a);
Formula And(Formula a, Formula b);
Formula Or(Formula a, Formula b);
Formula Imp(Formula a, Formula b);
Formula Star(Formula a, Formula b);
Formula Par(Formula a, Formula b);
Formula Wand(Formula a, Formula b);
Formula Iff(Formula a, Formula b);

// Named macros: the nonconservativity pair and the partial-functionality pair.
Formula macro_I();
Formula macro_J();
Formula macro_K();
Formula macro_L();

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg);
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

struct ParseOptions {
    // When set, the identifiers I, J, K, L expand to the built-in macros.
    bool macros = false;
};

Formula parse_formula(const std::string& text, ParseOptions opts = {});

enum class Style { Ascii, Unicode, Latex };
std::string render(const Formula& f, Style style = Style::Ascii);

std::set<std::string> vars(const Formula& f);
std::set<Formula> subformulas(const Formula& f);
Formula substitute(const Formula& f, const std::string& p, const Formula& g);

}  // namespace cbi
