#include "cbi/pattern.hpp"

#include <stdexcept>

namespace cbi {

bool is_structure_var(const std::string& n) { return n == "W" || n == "X" || n == "Y" || n == "Z"; }
bool is_formula_var(const std::string& n) { return n == "F" || n == "G"; }
bool is_atom_var(const std::string& n) { return n == "P"; }

namespace {

std::string kind_name(SKind k) {
    switch (k) {
    case SKind::Leaf: return "formula";
    case SKind::AEmpty: return "AE";
    case SKind::MEmpty: return "ME";
    case SKind::Sharp: return "#";
    case SKind::Flat: return "%";
    case SKind::Semi: return "';'";
    case SKind::Comma: return "','";
    }
    return "?";
}

bool match_formula(const Formula& pat, const Formula& f, Bindings& b, std::string* where, const std::string& pos) {
    auto fail = [&](const std::string& msg) {
        if (where) *where = pos + ": " + msg;
        return false;
    };
    if (pat.op() == Op::Var && (is_formula_var(pat.name()) || is_atom_var(pat.name()))) {
        if (is_atom_var(pat.name()) && f.op() != Op::Var)
            return fail("expected a propositional variable, found " + render(f));
        auto it = b.formulas.find(pat.name());
        if (it == b.formulas.end()) {
            b.formulas.emplace(pat.name(), f);
            return true;
        }
        if (it->second != f) return fail(pat.name() + " is " + render(it->second) + " elsewhere, found " + render(f));
        return true;
    }
    if (pat.op() != f.op()) return fail("expected " + render(pat) + ", found " + render(f));
    if (pat.op() == Op::Var && pat.name() != f.name()) return fail("expected " + pat.name() + ", found " + f.name());
    for (std::size_t i = 0; i < pat.kids().size(); ++i)
        if (!match_formula(pat.kids()[i], f.kids()[i], b, where, pos + (i ? ".right" : ".left"))) return false;
    return true;
}

bool match_structure(const Structure& pat, const Structure& s, Bindings& b, std::string* where,
                     const std::string& pos) {
    if (pat.kind() == SKind::Leaf && pat.formula().op() == Op::Var && is_structure_var(pat.formula().name())) {
        const std::string& v = pat.formula().name();
        auto it = b.structures.find(v);
        if (it == b.structures.end()) {
            b.structures.emplace(v, s);
            return true;
        }
        if (it->second != s) {
            if (where) *where = pos + ": " + v + " is " + render(it->second) + " elsewhere, found " + render(s);
            return false;
        }
        return true;
    }
    if (pat.kind() != s.kind()) {
        if (where) *where = pos + ": expected " + kind_name(pat.kind()) + ", found " + render(s);
        return false;
    }
    if (pat.kind() == SKind::Leaf) return match_formula(pat.formula(), s.formula(), b, where, pos);
    if (pat.is_unary()) return match_structure(pat.child(), s.child(), b, where, pos + (pat.kind() == SKind::Sharp ? ".sharp" : ".flat"));
    if (pat.is_binary())
        return match_structure(pat.left(), s.left(), b, where, pos + ".left") &&
               match_structure(pat.right(), s.right(), b, where, pos + ".right");
    return true;
}

Formula inst_formula(const Formula& pat, const Bindings& b) {
    if (pat.op() == Op::Var && (is_formula_var(pat.name()) || is_atom_var(pat.name()))) {
        auto it = b.formulas.find(pat.name());
        if (it == b.formulas.end()) throw std::logic_error("unbound formula variable " + pat.name());
        return it->second;
    }
    switch (arity(pat.op())) {
    case 0: return pat;
    case 1: return Formula::unary(pat.op(), inst_formula(pat.child(), b));
    default: return Formula::binary(pat.op(), inst_formula(pat.left(), b), inst_formula(pat.right(), b));
    }
}

Structure inst_structure(const Structure& pat, const Bindings& b) {
    switch (pat.kind()) {
    case SKind::Leaf:
        if (pat.formula().op() == Op::Var && is_structure_var(pat.formula().name())) {
            auto it = b.structures.find(pat.formula().name());
            if (it == b.structures.end()) throw std::logic_error("unbound structure variable " + pat.formula().name());
            return it->second;
        }
        return Structure::leaf(inst_formula(pat.formula(), b));
    case SKind::AEmpty:
    case SKind::MEmpty: return pat;
    case SKind::Sharp: return Structure::sharp(inst_structure(pat.child(), b));
    case SKind::Flat: return Structure::flat(inst_structure(pat.child(), b));
    case SKind::Semi: return Structure::semi(inst_structure(pat.left(), b), inst_structure(pat.right(), b));
    case SKind::Comma: return Structure::comma(inst_structure(pat.left(), b), inst_structure(pat.right(), b));
    }
    return pat;
}

}  // namespace

bool match(const Consecution& pattern, const Consecution& c, Bindings& b, std::string* where,
           const std::string& prefix) {
    return match_structure(pattern.lhs, c.lhs, b, where, prefix + "lhs") &&
           match_structure(pattern.rhs, c.rhs, b, where, prefix + "rhs");
}

Consecution instantiate(const Consecution& pattern, const Bindings& b) {
    return {inst_structure(pattern.lhs, b), inst_structure(pattern.rhs, b)};
}

}  // namespace cbi
