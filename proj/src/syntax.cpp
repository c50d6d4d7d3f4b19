#include "cbi/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "cbi/formula.hpp"

namespace cbi::syntax {

namespace {

struct Spelling {
    const char* text;
    Tok kind;
    bool formula;
    bool modal;
    bool structure;
};

// Longest spellings first so that prefixes never shadow longer tokens.
const Spelling kSpellings[] = {
    {"<->", Tok::Iff, true, true, true},
    {"↔", Tok::Iff, true, true, true},
    {"—∗", Tok::Wand, true, false, true},
    {"⊤*", Tok::Emp, true, false, true},
    {"⊥*", Tok::Coemp, true, false, true},
    {"⊤∗", Tok::Emp, true, false, true},
    {"⊥∗", Tok::Coemp, true, false, true},
    {"|-", Tok::Turnstile, false, false, true},
    {"⊢", Tok::Turnstile, false, false, true},
    {"->", Tok::Imp, true, true, true},
    {"-*", Tok::Wand, true, false, true},
    {"-.", Tok::InvMod, false, true, false},
    {"|*", Tok::Par, true, false, true},
    {"o-", Tok::CoWand, false, true, false},
    {"⊸", Tok::CoWand, false, true, false},
    {"∘", Tok::Comp, false, true, false},
    {"∞", Tok::InfMod, false, true, false},
    {"−", Tok::InvMod, false, true, false},
    {"→", Tok::Imp, true, true, true},
    {"⊤", Tok::Top, true, true, true},
    {"⊥", Tok::Bot, true, true, true},
    {"¬", Tok::Not, true, true, true},
    {"∧", Tok::And, true, true, true},
    {"∨", Tok::Or, true, true, true},
    {"∼", Tok::MNot, true, false, true},
    {"∗", Tok::Star, true, false, true},
    {"⅋", Tok::Par, true, false, true},
    {"∅", Tok::AEmpty, false, false, true},
    {"⊘", Tok::MEmpty, false, false, true},
    {"♯", Tok::Sharp, false, false, true},
    {"♭", Tok::Flat, false, false, true},
    {"!", Tok::Not, true, true, true},
    {"~", Tok::MNot, true, false, true},
    {"&", Tok::And, true, true, true},
    {"|", Tok::Or, true, true, true},
    {"*", Tok::Star, true, false, true},
    {"(", Tok::LParen, true, true, true},
    {")", Tok::RParen, true, true, true},
    {"#", Tok::Sharp, false, false, true},
    {"%", Tok::Flat, false, false, true},
    {";", Tok::Semi, false, false, true},
    {",", Tok::Comma, false, false, true},
};

bool allowed(const Spelling& s, Dialect d) {
    switch (d) {
    case Dialect::Formula: return s.formula;
    case Dialect::Modal: return s.modal;
    case Dialect::Structure: return s.structure;
    }
    return false;
}

Tok keyword(const std::string& w, Dialect d) {
    if (w == "top") return Tok::Top;
    if (w == "bot") return Tok::Bot;
    if (d != Dialect::Modal) {
        if (w == "emp") return Tok::Emp;
        if (w == "coemp") return Tok::Coemp;
    }
    if (d == Dialect::Modal) {
        if (w == "E") return Tok::UnitMod;
        if (w == "INF") return Tok::InfMod;
        if (w == "o") return Tok::Comp;
    }
    if (d == Dialect::Structure) {
        if (w == "AE") return Tok::AEmpty;
        if (w == "ME") return Tok::MEmpty;
    }
    return Tok::Ident;
}

std::vector<Tok> level_ops(int lvl, Dialect d) {
    switch (lvl) {
    case 5:
        if (d == Dialect::Modal) return {Tok::Comp, Tok::CoWand};
        return {Tok::Star};
    case 4: return {Tok::And};
    case 3: return d == Dialect::Modal ? std::vector<Tok>{} : std::vector<Tok>{Tok::Par};
    case 2: return {Tok::Or};
    }
    return {};
}

}  // namespace

std::string describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
    case Tok::Top: return "'top'";
    case Tok::Bot: return "'bot'";
    case Tok::Emp: return "'emp'";
    case Tok::Coemp: return "'coemp'";
    case Tok::UnitMod: return "'E'";
    case Tok::InfMod: return "'INF'";
    case Tok::AEmpty: return "'AE'";
    case Tok::MEmpty: return "'ME'";
    case Tok::Not: return "'!'";
    case Tok::MNot: return "'~'";
    case Tok::InvMod: return "'-.'";
    case Tok::Sharp: return "'#'";
    case Tok::Flat: return "'%'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Star: return "'*'";
    case Tok::Par: return "'|*'";
    case Tok::Wand: return "'-*'";
    case Tok::Comp: return "'o'";
    case Tok::CoWand: return "'o-'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Turnstile: return "'|-'";
    }
    return "?";
}

std::vector<Token> tokenize(const std::string& text, Dialect d) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isalpha(c)) {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            std::string w = text.substr(i, j - i);
            Tok k = keyword(w, d);
            // "o-" is a single token in the modal dialect.
            if (k == Tok::Comp && j < text.size() && text[j] == '-' &&
                !(j + 1 < text.size() && (text[j + 1] == '>' || text[j + 1] == '.' || text[j + 1] == '*'))) {
                out.push_back({Tok::CoWand, "o-", i});
                i = j + 1;
                continue;
            }
            out.push_back({k, w, i});
            i = j;
            continue;
        }
        bool matched = false;
        for (const auto& s : kSpellings) {
            if (!allowed(s, d)) continue;
            std::size_t n = std::char_traits<char>::length(s.text);
            if (text.compare(i, n, s.text) == 0) {
                out.push_back({s.kind, s.text, i});
                i += n;
                matched = true;
                break;
            }
        }
        if (!matched)
            throw ParseError(i, {}, "unexpected character at offset " + std::to_string(i));
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

void Reader::fail(std::vector<Tok> expected) const {
    const Token& t = peek();
    std::vector<std::string> names;
    for (Tok k : expected) names.push_back(describe(k));
    std::string msg = "syntax error at offset " + std::to_string(t.offset) + ": found " +
                      (t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'") +
                      ", expected one of";
    for (const auto& n : names) msg += " " + n;
    throw ParseError(t.offset, names, msg);
}

void Reader::expect_end() {
    if (peek().kind != Tok::End) {
        std::vector<Tok> exp = {Tok::End};
        if (dialect_ != Dialect::Structure) {
            for (int l = 2; l <= 5; ++l)
                for (Tok k : level_ops(l, dialect_)) exp.push_back(k);
            exp.push_back(Tok::Imp);
            if (dialect_ == Dialect::Formula) exp.push_back(Tok::Wand);
            exp.push_back(Tok::Iff);
        }
        fail(exp);
    }
}

TreePtr Reader::formula() { return iff(); }

TreePtr Reader::iff() {
    TreePtr a = implication();
    if (peek().kind == Tok::Iff) {
        Token t = take();
        TreePtr b = implication();
        return std::make_shared<Tree>(Tree{Tok::Iff, "", {a, b}, t.offset});
    }
    return a;
}

// -> is the loosest binary connective and -* sits just above it; both
// associate to the right.
TreePtr Reader::implication() {
    TreePtr a = wand();
    if (peek().kind != Tok::Imp) return a;
    Token t = take();
    TreePtr b = implication();
    return std::make_shared<Tree>(Tree{Tok::Imp, "", {a, b}, t.offset});
}

TreePtr Reader::wand() {
    TreePtr a = level(2);
    if (peek().kind != Tok::Wand) return a;
    Token t = take();
    TreePtr b = wand();
    return std::make_shared<Tree>(Tree{Tok::Wand, "", {a, b}, t.offset});
}

TreePtr Reader::level(int lvl) {
    if (lvl > 5) return unary();
    std::vector<Tok> ops = level_ops(lvl, dialect_);
    TreePtr acc = level(lvl + 1);
    while (std::find(ops.begin(), ops.end(), peek().kind) != ops.end()) {
        Token t = take();
        TreePtr b = level(lvl + 1);
        acc = std::make_shared<Tree>(Tree{t.kind, "", {acc, b}, t.offset});
    }
    return acc;
}

TreePtr Reader::unary() {
    Tok k = peek().kind;
    bool prefix = k == Tok::Not || (k == Tok::MNot && dialect_ != Dialect::Modal) ||
                  (k == Tok::InvMod && dialect_ == Dialect::Modal);
    if (prefix) {
        Token t = take();
        TreePtr a = unary();
        return std::make_shared<Tree>(Tree{t.kind, "", {a}, t.offset});
    }
    return atom();
}

TreePtr Reader::atom() {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::Ident:
    case Tok::Top:
    case Tok::Bot: {
        Token u = take();
        return std::make_shared<Tree>(Tree{u.kind, u.text, {}, u.offset});
    }
    case Tok::Emp:
    case Tok::Coemp:
        if (dialect_ != Dialect::Modal) {
            Token u = take();
            return std::make_shared<Tree>(Tree{u.kind, u.text, {}, u.offset});
        }
        break;
    case Tok::UnitMod:
    case Tok::InfMod:
        if (dialect_ == Dialect::Modal) {
            Token u = take();
            return std::make_shared<Tree>(Tree{u.kind, u.text, {}, u.offset});
        }
        break;
    case Tok::LParen: {
        take();
        TreePtr a = iff();
        if (peek().kind != Tok::RParen) fail({Tok::RParen});
        take();
        return a;
    }
    default: break;
    }
    std::vector<Tok> exp = {Tok::Ident, Tok::Top, Tok::Bot, Tok::LParen, Tok::Not};
    if (dialect_ == Dialect::Modal) {
        exp.insert(exp.end(), {Tok::UnitMod, Tok::InfMod, Tok::InvMod});
    } else {
        exp.insert(exp.end(), {Tok::Emp, Tok::Coemp, Tok::MNot});
    }
    fail(exp);
}

// Structures: ';' binds loosest, then ',', then the prefixes '#' and '%'.
// A leaf is the longest formula that ends at a structure delimiter.
TreePtr Reader::consecution() {
    TreePtr l = structure();
    if (peek().kind != Tok::Turnstile) fail({Tok::Turnstile, Tok::Semi, Tok::Comma});
    Token t = take();
    TreePtr r = structure();
    return std::make_shared<Tree>(Tree{Tok::Turnstile, "", {l, r}, t.offset});
}

TreePtr Reader::structure() { return semi_chain(); }

TreePtr Reader::semi_chain() {
    TreePtr acc = comma_chain();
    while (peek().kind == Tok::Semi) {
        Token t = take();
        TreePtr b = comma_chain();
        acc = std::make_shared<Tree>(Tree{Tok::Semi, "", {acc, b}, t.offset});
    }
    return acc;
}

TreePtr Reader::comma_chain() {
    TreePtr acc = struct_unary();
    while (peek().kind == Tok::Comma) {
        Token t = take();
        TreePtr b = struct_unary();
        acc = std::make_shared<Tree>(Tree{Tok::Comma, "", {acc, b}, t.offset});
    }
    return acc;
}

TreePtr Reader::struct_unary() {
    Tok k = peek().kind;
    if (k == Tok::Sharp || k == Tok::Flat) {
        Token t = take();
        TreePtr a = struct_unary();
        return std::make_shared<Tree>(Tree{t.kind, "", {a}, t.offset});
    }
    return struct_atom();
}

TreePtr Reader::struct_atom() {
    Tok k = peek().kind;
    if (k == Tok::AEmpty || k == Tok::MEmpty) {
        Token t = take();
        return std::make_shared<Tree>(Tree{t.kind, t.text, {}, t.offset});
    }
    auto delimiter = [](Tok t) {
        return t == Tok::Semi || t == Tok::Comma || t == Tok::RParen || t == Tok::Turnstile ||
               t == Tok::End;
    };
    std::size_t save = pos_;
    try {
        TreePtr f = iff();
        if (delimiter(peek().kind)) {
            auto leaf = std::make_shared<Tree>(Tree{Tok::Ident, "<leaf>", {f}, f->offset});
            return leaf;
        }
    } catch (const ParseError&) {
        if (k != Tok::LParen) throw;
    }
    pos_ = save;
    if (k == Tok::LParen) {
        take();
        TreePtr s = structure();
        if (peek().kind != Tok::RParen) fail({Tok::RParen, Tok::Semi, Tok::Comma});
        take();
        return s;
    }
    iff();
    fail({Tok::Semi, Tok::Comma, Tok::RParen, Tok::Turnstile, Tok::End});
}

}  // namespace cbi::syntax
