#include "cbi/formula.hpp"

#include <functional>

#include "cbi/syntax.hpp"

namespace cbi {

int arity(Op op) {
    switch (op) {
    case Op::Var: case Op::Top: case Op::Bot: case Op::MTop: case Op::MBot: return 0;
    case Op::Not: case Op::MNot: return 1;
    default: return 2;
    }
}

Formula::Formula() : Formula(top()) {}

Formula Formula::var(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    return Formula(std::make_shared<const Node>(Node{Op::Var, std::move(name), {}, 1}));
}

Formula Formula::top() {
    static const auto n = std::make_shared<const Node>(Node{Op::Top, "", {}, 1});
    return Formula(n);
}
Formula Formula::bot() {
    static const auto n = std::make_shared<const Node>(Node{Op::Bot, "", {}, 1});
    return Formula(n);
}
Formula Formula::mtop() {
    static const auto n = std::make_shared<const Node>(Node{Op::MTop, "", {}, 1});
    return Formula(n);
}
Formula Formula::mbot() {
    static const auto n = std::make_shared<const Node>(Node{Op::MBot, "", {}, 1});
    return Formula(n);
}

Formula Formula::unary(Op op, Formula a) {
    if (arity(op) != 1) throw std::invalid_argument("not a unary connective");
    std::size_t s = a.size() + 1;
    return Formula(std::make_shared<const Node>(Node{op, "", {std::move(a)}, s}));
}

Formula Formula::binary(Op op, Formula a, Formula b) {
    if (arity(op) != 2) throw std::invalid_argument("not a binary connective");
    std::size_t s = a.size() + b.size() + 1;
    return Formula(std::make_shared<const Node>(Node{op, "", {std::move(a), std::move(b)}, s}));
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.size() != b.size() || a.name() != b.name()) return false;
    for (std::size_t i = 0; i < a.kids().size(); ++i)
        if (a.kids()[i] != b.kids()[i]) return false;
    return true;
}

bool operator<(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return false;
    if (a.op() != b.op()) return a.op() < b.op();
    if (a.name() != b.name()) return a.name() < b.name();
    for (std::size_t i = 0; i < a.kids().size(); ++i) {
        if (a.kids()[i] < b.kids()[i]) return true;
        if (b.kids()[i] < a.kids()[i]) return false;
    }
    return false;
}

Formula Var(const std::string& n) { return Formula::var(n); }
Formula Not(Formula a) { return Formula::unary(Op::Not, std::move(a)); }
Formula MNot(Formula a) { return Formula::unary(Op::MNot, std::move(a)); }
Formula And(Formula a, Formula b) { return Formula::binary(Op::And, std::move(a), std::move(b)); }
Formula Or(Formula a, Formula b) { return Formula::binary(Op::Or, std::move(a), std::move(b)); }
Formula Imp(Formula a, Formula b) { return Formula::binary(Op::Imp, std::move(a), std::move(b)); }
Formula Star(Formula a, Formula b) { return Formula::binary(Op::Star, std::move(a), std::move(b)); }
Formula Par(Formula a, Formula b) { return Formula::binary(Op::Par, std::move(a), std::move(b)); }
Formula Wand(Formula a, Formula b) { return Formula::binary(Op::Wand, std::move(a), std::move(b)); }
Formula Iff(Formula a, Formula b) { return And(Imp(a, b), Imp(b, a)); }

Formula macro_I() { return Wand(Not(Formula::mtop()), Formula::bot()); }

Formula macro_J() {
    return Star(Formula::top(), And(Formula::mtop(), Not(Wand(Var("P"), Not(macro_I())))));
}

Formula macro_K() { return Not(Wand(Not(Formula::mbot()), Not(Formula::mtop()))); }

Formula macro_L() { return Wand(Not(Formula::mbot()), Formula::mtop()); }

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg)
    : std::runtime_error(msg), offset_(offset), expected_(std::move(expected)) {}

namespace {

using syntax::Tok;
using syntax::TreePtr;

Formula convert(const TreePtr& t, const ParseOptions& opts) {
    switch (t->kind) {
    case Tok::Ident:
        if (opts.macros) {
            if (t->name == "I") return macro_I();
            if (t->name == "J") return macro_J();
            if (t->name == "K") return macro_K();
            if (t->name == "L") return macro_L();
        }
        return Var(t->name);
    case Tok::Top: return Formula::top();
    case Tok::Bot: return Formula::bot();
    case Tok::Emp: return Formula::mtop();
    case Tok::Coemp: return Formula::mbot();
    case Tok::Not: return Not(convert(t->kids[0], opts));
    case Tok::MNot: return MNot(convert(t->kids[0], opts));
    default: break;
    }
    Formula a = convert(t->kids[0], opts);
    Formula b = convert(t->kids[1], opts);
    switch (t->kind) {
    case Tok::And: return And(a, b);
    case Tok::Or: return Or(a, b);
    case Tok::Imp: return Imp(a, b);
    case Tok::Iff: return Iff(a, b);
    case Tok::Star: return Star(a, b);
    case Tok::Par: return Par(a, b);
    case Tok::Wand: return Wand(a, b);
    default: throw ParseError(t->offset, {}, "unsupported operator");
    }
}

int level(Op op) {
    switch (op) {
    case Op::Imp: case Op::Wand: return 1;
    case Op::Or: return 2;
    case Op::Par: return 3;
    case Op::And: return 4;
    case Op::Star: return 5;
    default: return 6;
    }
}

struct Glyphs {
    const char* top; const char* bot; const char* mtop; const char* mbot;
    const char* neg; const char* mneg;
    const char* conj; const char* disj; const char* imp;
    const char* star; const char* par; const char* wand;
    const char* lp; const char* rp;
};

const Glyphs kAscii{"top", "bot", "emp", "coemp", "!", "~", "&", "|", "->", "*", "|*", "-*", "(", ")"};
const Glyphs kUnicode{"⊤", "⊥", "⊤*", "⊥*", "¬", "∼", "∧", "∨", "→", "∗", "⅋", "—∗", "(", ")"};
const Glyphs kLatex{"\\top", "\\bot", "\\top^{*}", "\\bot^{*}", "\\neg ", "{\\sim} ", "\\wedge", "\\vee",
                    "\\rightarrow", "\\ast", "\\bindnasrepma",
                    "\\mathrel{\\hbox{---}\\llap{$\\ast$}}", "(", ")"};

void emit(const Formula& f, const Glyphs& g, std::string& out) {
    auto sub = [&](const Formula& k, bool paren) {
        if (paren) out += g.lp;
        emit(k, g, out);
        if (paren) out += g.rp;
    };
    switch (f.op()) {
    case Op::Var: out += f.name(); return;
    case Op::Top: out += g.top; return;
    case Op::Bot: out += g.bot; return;
    case Op::MTop: out += g.mtop; return;
    case Op::MBot: out += g.mbot; return;
    case Op::Not:
    case Op::MNot:
        out += f.op() == Op::Not ? g.neg : g.mneg;
        sub(f.child(), arity(f.child().op()) == 2);
        return;
    default: break;
    }
    int lv = level(f.op());
    const char* sym = "";
    switch (f.op()) {
    case Op::And: sym = g.conj; break;
    case Op::Or: sym = g.disj; break;
    case Op::Imp: sym = g.imp; break;
    case Op::Star: sym = g.star; break;
    case Op::Par: sym = g.par; break;
    case Op::Wand: sym = g.wand; break;
    default: break;
    }
    const Formula& l = f.left();
    const Formula& r = f.right();
    bool lp, rp;
    if (lv == 1) {
        // right associative; the left operand at level 1 always needs parentheses
        lp = arity(l.op()) == 2 && level(l.op()) <= 1;
        rp = arity(r.op()) == 2 && level(r.op()) == 1 && r.op() != f.op();
    } else {
        lp = arity(l.op()) == 2 && level(l.op()) < lv;
        rp = arity(r.op()) == 2 && level(r.op()) <= lv;
    }
    sub(l, lp);
    out += " ";
    out += sym;
    out += " ";
    sub(r, rp);
}

}  // namespace

Formula parse_formula(const std::string& text, ParseOptions opts) {
    syntax::Reader rd(syntax::tokenize(text, syntax::Dialect::Formula), syntax::Dialect::Formula);
    TreePtr t = rd.formula();
    rd.expect_end();
    return convert(t, opts);
}

std::string render(const Formula& f, Style style) {
    std::string out;
    switch (style) {
    case Style::Ascii: emit(f, kAscii, out); break;
    case Style::Unicode: emit(f, kUnicode, out); break;
    case Style::Latex: emit(f, kLatex, out); break;
    }
    return out;
}

std::set<std::string> vars(const Formula& f) {
    std::set<std::string> out;
    std::function<void(const Formula&)> go = [&](const Formula& g) {
        if (g.op() == Op::Var) out.insert(g.name());
        for (const auto& k : g.kids()) go(k);
    };
    go(f);
    return out;
}

std::set<Formula> subformulas(const Formula& f) {
    std::set<Formula> out;
    std::function<void(const Formula&)> go = [&](const Formula& g) {
        if (!out.insert(g).second) return;
        for (const auto& k : g.kids()) go(k);
    };
    go(f);
    return out;
}

Formula substitute(const Formula& f, const std::string& p, const Formula& g) {
    switch (arity(f.op())) {
    case 0: return f.op() == Op::Var && f.name() == p ? g : f;
    case 1: return Formula::unary(f.op(), substitute(f.child(), p, g));
    default:
        return Formula::binary(f.op(), substitute(f.left(), p, g), substitute(f.right(), p, g));
    }
}

}  // namespace cbi
