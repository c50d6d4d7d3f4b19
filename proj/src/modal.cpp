#include "cbi/modal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "cbi/syntax.hpp"

namespace cbi {

// ------------------------------------------------------------ formulas

ModalFormula::ModalFormula() : ModalFormula(constant(MOp::Top)) {}

ModalFormula ModalFormula::var(std::string name) {
    return ModalFormula(std::make_shared<const Node>(Node{MOp::Var, std::move(name), {}}));
}

ModalFormula ModalFormula::constant(MOp op) {
    return ModalFormula(std::make_shared<const Node>(Node{op, "", {}}));
}

ModalFormula ModalFormula::unary(MOp op, ModalFormula a) {
    return ModalFormula(std::make_shared<const Node>(Node{op, "", {std::move(a)}}));
}

ModalFormula ModalFormula::binary(MOp op, ModalFormula a, ModalFormula b) {
    return ModalFormula(std::make_shared<const Node>(Node{op, "", {std::move(a), std::move(b)}}));
}

bool operator==(const ModalFormula& a, const ModalFormula& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.name() != b.name() || a.kids().size() != b.kids().size()) return false;
    for (std::size_t i = 0; i < a.kids().size(); ++i)
        if (a.kids()[i] != b.kids()[i]) return false;
    return true;
}

namespace {

using M = ModalFormula;
using syntax::Tok;
using syntax::TreePtr;

M mnot(M a) { return M::unary(MOp::Not, std::move(a)); }
M minv(M a) { return M::unary(MOp::Inv, std::move(a)); }
M mbin(MOp op, M a, M b) { return M::binary(op, std::move(a), std::move(b)); }

M convert(const TreePtr& t) {
    switch (t->kind) {
    case Tok::Ident: return M::var(t->name);
    case Tok::Top: return M::constant(MOp::Top);
    case Tok::Bot: return M::constant(MOp::Bot);
    case Tok::UnitMod: return M::constant(MOp::Unit);
    case Tok::InfMod: return M::constant(MOp::Inf);
    case Tok::Not: return mnot(convert(t->kids[0]));
    case Tok::InvMod: return minv(convert(t->kids[0]));
    default: break;
    }
    M a = convert(t->kids[0]);
    M b = convert(t->kids[1]);
    switch (t->kind) {
    case Tok::And: return mbin(MOp::And, a, b);
    case Tok::Or: return mbin(MOp::Or, a, b);
    case Tok::Imp: return mbin(MOp::Imp, a, b);
    case Tok::Iff: return mbin(MOp::And, mbin(MOp::Imp, a, b), mbin(MOp::Imp, b, a));
    case Tok::Comp: return mbin(MOp::Comp, a, b);
    case Tok::CoWand: return mbin(MOp::CoWand, a, b);
    default: throw ParseError(t->offset, {}, "unsupported operator");
    }
}

int level(MOp op) {
    switch (op) {
    case MOp::Imp: return 1;
    case MOp::Or: return 2;
    case MOp::And: return 4;
    case MOp::Comp:
    case MOp::CoWand: return 5;
    default: return 6;
    }
}

bool is_binary(MOp op) {
    return op == MOp::And || op == MOp::Or || op == MOp::Imp || op == MOp::Comp || op == MOp::CoWand;
}

struct Glyphs {
    const char* top; const char* bot; const char* unit; const char* inf;
    const char* neg; const char* inv;
    const char* conj; const char* disj; const char* imp; const char* comp; const char* cowand;
};

const Glyphs kAscii{"top", "bot", "E", "INF", "!", "-.", "&", "|", "->", "o", "o-"};
const Glyphs kUnicode{"⊤", "⊥", "e", "∞", "¬", "−", "∧", "∨", "→", "∘", "⊸"};
const Glyphs kLatex{"\\top", "\\bot", "e", "\\infty", "\\neg ", "\\mathord{-}", "\\wedge", "\\vee",
                    "\\rightarrow", "\\circ", "\\mathbin{-\\!\\bullet}"};

void emit(const M& a, const Glyphs& g, std::string& out) {
    auto sub = [&](const M& k, bool paren) {
        if (paren) out += "(";
        emit(k, g, out);
        if (paren) out += ")";
    };
    switch (a.op()) {
    case MOp::Var: out += a.name(); return;
    case MOp::Top: out += g.top; return;
    case MOp::Bot: out += g.bot; return;
    case MOp::Unit: out += g.unit; return;
    case MOp::Inf: out += g.inf; return;
    case MOp::Not:
    case MOp::Inv:
        out += a.op() == MOp::Not ? g.neg : g.inv;
        sub(a.child(), is_binary(a.child().op()));
        return;
    default: break;
    }
    int lv = level(a.op());
    const char* sym = "";
    switch (a.op()) {
    case MOp::And: sym = g.conj; break;
    case MOp::Or: sym = g.disj; break;
    case MOp::Imp: sym = g.imp; break;
    case MOp::Comp: sym = g.comp; break;
    case MOp::CoWand: sym = g.cowand; break;
    default: break;
    }
    const M& l = a.left();
    const M& r = a.right();
    bool lp, rp;
    if (lv == 1) {
        lp = is_binary(l.op()) && level(l.op()) <= 1;
        rp = is_binary(r.op()) && level(r.op()) < 1;
    } else {
        lp = is_binary(l.op()) && level(l.op()) < lv;
        rp = is_binary(r.op()) && level(r.op()) <= lv;
    }
    sub(l, lp);
    out += " ";
    out += sym;
    out += " ";
    sub(r, rp);
}

}  // namespace

ModalFormula parse_modal(const std::string& text) {
    syntax::Reader rd(syntax::tokenize(text, syntax::Dialect::Modal), syntax::Dialect::Modal);
    TreePtr t = rd.formula();
    rd.expect_end();
    return convert(t);
}

std::string render(const ModalFormula& a, Style style) {
    std::string out;
    switch (style) {
    case Style::Ascii: emit(a, kAscii, out); break;
    case Style::Unicode: emit(a, kUnicode, out); break;
    case Style::Latex: emit(a, kLatex, out); break;
    }
    return out;
}

std::set<std::string> vars(const ModalFormula& a) {
    std::set<std::string> out;
    std::function<void(const M&)> go = [&](const M& b) {
        if (b.op() == MOp::Var) out.insert(b.name());
        for (const auto& k : b.kids()) go(k);
    };
    go(a);
    return out;
}

// ------------------------------------------------------------ frames

namespace {

template <class T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// Precomputed images so that denotations cost one pass per operand pair.
struct FrameTables {
    std::size_t n;
    std::vector<Bits> comp;    // [x*n+y] = x o y
    std::vector<Bits> cowand;  // [x*n+y] = x o- y
    std::vector<Bits> inv;
    Bits unit, inf;
    // Same tables as machine words, used when the carrier fits in one.
    bool small;
    std::vector<std::uint64_t> comp_w, cowand_w, inv_w;
    std::uint64_t unit_w = 0, inf_w = 0, full_w = 0;

    explicit FrameTables(const MLFrame& fr) : n(fr.size()), unit(fr.unit_bits()), inf(fr.infinity_bits()) {
        comp.assign(n * n, Bits(n));
        cowand.assign(n * n, Bits(n));
        inv.assign(n, Bits(n));
        for (const auto& [x, y, z] : fr.comp()) comp[x * n + y].set(z);
        for (const auto& [x, y, z] : fr.cowand()) cowand[x * n + y].set(z);
        for (Elem x = 0; x < n; ++x)
            for (Elem y : fr.inv(x)) inv[x].set(y);
        small = n <= 64;
        if (!small) return;
        auto word = [](const Bits& b) { return static_cast<std::uint64_t>(b.to_ulong()); };
        for (const auto& b : comp) comp_w.push_back(word(b));
        for (const auto& b : cowand) cowand_w.push_back(word(b));
        for (const auto& b : inv) inv_w.push_back(word(b));
        unit_w = word(unit);
        inf_w = word(inf);
        full_w = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
};

MLFrame::MLFrame(std::vector<std::string> names, std::vector<Triple> comp, std::vector<Triple> cowand,
                 std::vector<Elem> unit_set, std::vector<std::vector<Elem>> inv, std::vector<Elem> infinity_set,
                 std::string label)
    : names_(std::move(names)), comp_(std::move(comp)), cowand_(std::move(cowand)), unit_set_(std::move(unit_set)),
      infinity_set_(std::move(infinity_set)), inv_(std::move(inv)), label_(std::move(label)) {
    const std::size_t n = names_.size();
    if (n == 0) throw FrameError("frame carrier is empty");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != n) throw FrameError("duplicate carrier element");
    auto check = [&](Elem x, const char* what) {
        if (x >= n) throw FrameError(std::string(what) + " refers to an element outside the carrier");
    };
    for (const auto& t : comp_)
        for (Elem x : t) check(x, "comp");
    for (const auto& t : cowand_)
        for (Elem x : t) check(x, "cowand");
    for (Elem x : unit_set_) check(x, "unit_set");
    for (Elem x : infinity_set_) check(x, "infinity_set");
    if (inv_.empty()) inv_.resize(n);
    if (inv_.size() != n) throw FrameError("inv must list every carrier element");
    for (auto& s : inv_) {
        for (Elem x : s) check(x, "inv");
        sort_unique(s);
    }
    sort_unique(comp_);
    sort_unique(cowand_);
    sort_unique(unit_set_);
    sort_unique(infinity_set_);
    tables_ = std::make_shared<const FrameTables>(*this);
}

const FrameTables& MLFrame::tables() const {
    if (!tables_) throw FrameError("frame is empty");
    return *tables_;
}

std::optional<Elem> MLFrame::find(const std::string& n) const {
    for (Elem i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return i;
    return std::nullopt;
}

Bits MLFrame::unit_bits() const {
    Bits b(size());
    for (Elem x : unit_set_) b.set(x);
    return b;
}

Bits MLFrame::infinity_bits() const {
    Bits b(size());
    for (Elem x : infinity_set_) b.set(x);
    return b;
}

bool operator==(const MLFrame& a, const MLFrame& b) {
    return a.names_ == b.names_ && a.comp_ == b.comp_ && a.cowand_ == b.cowand_ && a.unit_set_ == b.unit_set_ &&
           a.infinity_set_ == b.infinity_set_ && a.inv_ == b.inv_;
}

// ------------------------------------------------------------ satisfaction

namespace {


Bits image(const std::vector<Bits>& table, std::size_t n, const Bits& a, const Bits& b) {
    Bits out(n);
    if (a.none() || b.none()) return out;
    for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x))
        for (auto y = b.find_first(); y != Bits::npos; y = b.find_next(y)) out |= table[x * n + y];
    return out;
}

std::uint64_t image_w(const std::vector<std::uint64_t>& table, std::size_t n, std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    for (; a; a &= a - 1) {
        const std::size_t x = std::countr_zero(a);
        for (std::uint64_t c = b; c; c &= c - 1) out |= table[x * n + std::countr_zero(c)];
    }
    return out;
}

std::uint64_t denote_w(const FrameTables& t, const Environment& env, const M& a) {
    switch (a.op()) {
    case MOp::Var: return lookup_word(env, a.name(), t.n);
    case MOp::Top: return t.full_w;
    case MOp::Bot: return 0;
    case MOp::Unit: return t.unit_w;
    case MOp::Inf: return t.inf_w;
    case MOp::Not: return ~denote_w(t, env, a.child()) & t.full_w;
    case MOp::Inv: {
        std::uint64_t out = 0;
        for (std::uint64_t s = denote_w(t, env, a.child()); s; s &= s - 1) out |= t.inv_w[std::countr_zero(s)];
        return out;
    }
    case MOp::And: return denote_w(t, env, a.left()) & denote_w(t, env, a.right());
    case MOp::Or: return denote_w(t, env, a.left()) | denote_w(t, env, a.right());
    case MOp::Imp: return (~denote_w(t, env, a.left()) & t.full_w) | denote_w(t, env, a.right());
    case MOp::Comp: return image_w(t.comp_w, t.n, denote_w(t, env, a.left()), denote_w(t, env, a.right()));
    case MOp::CoWand: return image_w(t.cowand_w, t.n, denote_w(t, env, a.left()), denote_w(t, env, a.right()));
    }
    return 0;
}

Bits denote_bits(const FrameTables& t, const Environment& env, const M& a);

Bits denote_in(const FrameTables& t, const Environment& env, const M& a) {
    if (t.small) return Bits(t.n, denote_w(t, env, a));
    return denote_bits(t, env, a);
}

Bits denote_bits(const FrameTables& t, const Environment& env, const M& a) {
    const std::size_t n = t.n;
    switch (a.op()) {
    case MOp::Var: return lookup(env, a.name(), n);
    case MOp::Top: return Bits(n).set();
    case MOp::Bot: return Bits(n);
    case MOp::Unit: return t.unit;
    case MOp::Inf: return t.inf;
    case MOp::Not: return ~denote_in(t, env, a.child());
    case MOp::Inv: {
        Bits s = denote_in(t, env, a.child());
        Bits out(n);
        for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) out |= t.inv[x];
        return out;
    }
    case MOp::And: return denote_in(t, env, a.left()) & denote_in(t, env, a.right());
    case MOp::Or: return denote_in(t, env, a.left()) | denote_in(t, env, a.right());
    case MOp::Imp: return ~denote_in(t, env, a.left()) | denote_in(t, env, a.right());
    case MOp::Comp: return image(t.comp, n, denote_in(t, env, a.left()), denote_in(t, env, a.right()));
    case MOp::CoWand: return image(t.cowand, n, denote_in(t, env, a.left()), denote_in(t, env, a.right()));
    }
    return Bits(n);
}

}  // namespace

bool msat(const MLFrame& fr, const Environment& env, Elem r, const ModalFormula& a) {
    if (r >= fr.size()) throw std::out_of_range("unknown element " + std::to_string(r));
    const std::size_t n = fr.size();
    auto holds = [&](const M& b, Elem x) { return msat(fr, env, x, b); };
    switch (a.op()) {
    case MOp::Var: return lookup(env, a.name(), n).test(r);
    case MOp::Top: return true;
    case MOp::Bot: return false;
    case MOp::Unit: return std::find(fr.unit_set().begin(), fr.unit_set().end(), r) != fr.unit_set().end();
    case MOp::Inf: return std::find(fr.infinity_set().begin(), fr.infinity_set().end(), r) != fr.infinity_set().end();
    case MOp::Not: return !holds(a.child(), r);
    case MOp::And: return holds(a.left(), r) && holds(a.right(), r);
    case MOp::Or: return holds(a.left(), r) || holds(a.right(), r);
    case MOp::Imp: return !holds(a.left(), r) || holds(a.right(), r);
    case MOp::Inv:
        for (Elem x = 0; x < n; ++x) {
            const auto& s = fr.inv(x);
            if (std::binary_search(s.begin(), s.end(), r) && holds(a.child(), x)) return true;
        }
        return false;
    case MOp::Comp:
    case MOp::CoWand:
        for (const auto& [x, y, z] : a.op() == MOp::Comp ? fr.comp() : fr.cowand())
            if (z == r && holds(a.left(), x) && holds(a.right(), y)) return true;
        return false;
    }
    return false;
}

Bits mdenote(const MLFrame& fr, const Environment& env, const ModalFormula& a) {
    return denote_in(fr.tables(), env, a);
}

TruthResult modal_truth(const MLFrame& fr, const ModalFormula& a, TruthBudget budget) {
    const FrameTables& t = fr.tables();
    const std::size_t n = fr.size();
    const auto names = vars(a);
    std::vector<std::string> ps(names.begin(), names.end());
    TruthResult res;
    Environment env;
    for (const auto& p : ps) env[p] = Bits(n);
    const std::size_t bits = ps.size() * n;
    for (;;) {
        if (res.assignments >= budget.max_assignments) {
            res.verdict = Verdict::Indeterminate;
            return res;
        }
        ++res.assignments;
        Bits d = denote_in(t, env, a);
        if (!d.all()) {
            res.verdict = Verdict::False;
            res.env = env;
            res.point = Elem(d.flip().find_first());
            return res;
        }
        std::size_t i = 0;
        for (; i < bits; ++i) {
            Bits& b = env[ps[i / n]];
            if (b.test(i % n)) {
                b.reset(i % n);
            } else {
                b.set(i % n);
                break;
            }
        }
        if (i == bits) return res;
    }
}

// ------------------------------------------------------------ axioms

ModalFormula axiom(int id) {
    static const char* const kText[kAxiomCount] = {
        "E o P -> P",
        "P -> E o P",
        "P o Q -> Q o P",
        "(P o Q) o R -> P o (Q o R)",
        "P o (Q o R) -> (P o Q) o R",
        "Q & (R o P) -> (R & (P o- Q)) o top",
        "R & (P o- Q) -> top o- (Q & (R o P))",
        "-.-.P -> P",
        "P -> -.-.P",
        "-.P -> P o- INF",
        "P o- INF -> -.P",
    };
    if (id < 1 || id > kAxiomCount) throw std::out_of_range("axiom ids run from 1 to 11");
    return parse_modal(kText[id - 1]);
}

int AxiomReport::passed() const {
    int k = 0;
    for (const auto& a : axioms) k += a.holds;
    return k;
}

std::optional<int> AxiomReport::first_failure() const {
    for (int i = 0; i < kAxiomCount; ++i)
        if (!axioms[i].holds) return i + 1;
    return std::nullopt;
}

namespace {

// Calls visit(env) for each instantiation; stops when it returns false.
void instantiations(std::size_t n, const std::vector<std::string>& ps, bool exhaustive, const AxiomCheckOptions& opts,
                    const std::function<bool(const Environment&)>& visit) {
    Environment env;
    if (exhaustive) {
        for (const auto& p : ps) env[p] = Bits(n);
        const std::size_t bits = ps.size() * n;
        for (;;) {
            if (!visit(env)) return;
            std::size_t i = 0;
            for (; i < bits; ++i) {
                Bits& b = env[ps[i / n]];
                if (b.test(i % n)) {
                    b.reset(i % n);
                } else {
                    b.set(i % n);
                    break;
                }
            }
            if (i == bits) return;
        }
    }
    // empty, full and singleton values in every combination, then random subsets
    std::vector<Bits> basic{Bits(n), Bits(n).set()};
    for (std::size_t x = 0; x < n; ++x) basic.push_back(Bits(n).set(x));
    std::vector<std::size_t> idx(ps.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < ps.size(); ++i) env[ps[i]] = basic[idx[i]];
        if (!visit(env)) return;
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < basic.size()) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    std::mt19937_64 rng(opts.seed);
    for (std::size_t s = 0; s < opts.samples; ++s) {
        for (const auto& p : ps) {
            Bits b(n);
            for (std::size_t x = 0; x < n; ++x)
                if (rng() & 1) b.set(x);
            env[p] = b;
        }
        if (!visit(env)) return;
    }
}

}  // namespace

AxiomReport check_axioms(const MLFrame& fr, const AxiomCheckOptions& opts) {
    std::vector<int> all;
    for (int i = 1; i <= kAxiomCount; ++i) all.push_back(i);
    return check_axioms(fr, all, opts);
}

AxiomReport check_axioms(const MLFrame& fr, const std::vector<int>& ids, const AxiomCheckOptions& opts) {
    const FrameTables& t = fr.tables();
    AxiomReport rep;
    rep.unitary = fr.unitary();
    const bool exhaustive = fr.size() <= opts.exhaustive_max_size;
    rep.sampled = !exhaustive;
    for (int id : ids) {
        M a = axiom(id);
        const auto names = vars(a);
        std::vector<std::string> ps(names.begin(), names.end());
        AxiomCheck& ck = rep.axioms.at(id - 1);
        instantiations(fr.size(), ps, exhaustive, opts, [&](const Environment& env) {
            Bits d = denote_in(t, env, a);
            if (d.all()) return true;
            ck.holds = false;
            ck.witness_env = env;
            ck.witness_point = Elem(d.flip().find_first());
            return false;
        });
    }
    return rep;
}

// ------------------------------------------------------------ Sahlqvist shape

namespace {

bool sahlqvist_antecedent(const M& s) {
    switch (s.op()) {
    case MOp::Top:
    case MOp::Bot:
    case MOp::Var:
    case MOp::Unit:
    case MOp::Inf: return true;
    case MOp::Inv: return sahlqvist_antecedent(s.child());
    case MOp::And:
    case MOp::Comp:
    case MOp::CoWand: return sahlqvist_antecedent(s.left()) && sahlqvist_antecedent(s.right());
    default: return false;
    }
}

// Variables may only occur under an even number of negations; the left of an
// implication counts as one.
bool positive(const M& a, bool negated) {
    switch (a.op()) {
    case MOp::Var: return !negated;
    case MOp::Not: return positive(a.child(), !negated);
    case MOp::Imp: return positive(a.left(), !negated) && positive(a.right(), negated);
    default:
        for (const auto& k : a.kids())
            if (!positive(k, negated)) return false;
        return true;
    }
}

}  // namespace

bool is_very_simple_sahlqvist(const ModalFormula& a) {
    if (a.op() != MOp::Imp) return false;
    return sahlqvist_antecedent(a.left()) && positive(a.right(), false);
}

// ------------------------------------------------------------ translations

ModalFormula embed_formula(const Formula& f) {
    switch (f.op()) {
    case Op::Var: return M::var(f.name());
    case Op::Top: return M::constant(MOp::Top);
    case Op::Bot: return M::constant(MOp::Bot);
    case Op::MTop: return M::constant(MOp::Unit);
    case Op::MBot: return mnot(M::constant(MOp::Inf));
    case Op::Not: return mnot(embed_formula(f.child()));
    case Op::MNot: return mnot(minv(embed_formula(f.child())));
    case Op::And: return mbin(MOp::And, embed_formula(f.left()), embed_formula(f.right()));
    case Op::Or: return mbin(MOp::Or, embed_formula(f.left()), embed_formula(f.right()));
    case Op::Imp: return mbin(MOp::Imp, embed_formula(f.left()), embed_formula(f.right()));
    case Op::Star: return mbin(MOp::Comp, embed_formula(f.left()), embed_formula(f.right()));
    case Op::Wand: return mnot(mbin(MOp::CoWand, embed_formula(f.left()), mnot(embed_formula(f.right()))));
    case Op::Par:
        return mnot(minv(mbin(MOp::Comp, mnot(minv(embed_formula(f.left()))), mnot(minv(embed_formula(f.right()))))));
    }
    throw std::logic_error("unknown connective");
}

Formula revembed_formula(const ModalFormula& a) {
    switch (a.op()) {
    case MOp::Var: return Var(a.name());
    case MOp::Top: return Formula::top();
    case MOp::Bot: return Formula::bot();
    case MOp::Unit: return Formula::mtop();
    case MOp::Inf: return Not(Formula::mbot());
    case MOp::Not: return Not(revembed_formula(a.child()));
    case MOp::Inv: return Not(MNot(revembed_formula(a.child())));
    case MOp::And: return And(revembed_formula(a.left()), revembed_formula(a.right()));
    case MOp::Or: return Or(revembed_formula(a.left()), revembed_formula(a.right()));
    case MOp::Imp: return Imp(revembed_formula(a.left()), revembed_formula(a.right()));
    case MOp::Comp: return Star(revembed_formula(a.left()), revembed_formula(a.right()));
    case MOp::CoWand: return Not(Wand(revembed_formula(a.left()), Not(revembed_formula(a.right()))));
    }
    throw std::logic_error("unknown modality");
}

Formula embed_round_trip_table(const Formula& f) {
    auto nn = [](Formula g) { return Not(Not(std::move(g))); };
    switch (f.op()) {
    case Op::Var:
    case Op::Top:
    case Op::Bot:
    case Op::MTop: return f;
    case Op::Not: return Not(embed_round_trip_table(f.child()));
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Star:
        return Formula::binary(f.op(), embed_round_trip_table(f.left()), embed_round_trip_table(f.right()));
    case Op::MBot: return nn(Formula::mbot());
    case Op::MNot: return nn(MNot(embed_round_trip_table(f.child())));
    case Op::Wand: return nn(Wand(embed_round_trip_table(f.left()), nn(embed_round_trip_table(f.right()))));
    case Op::Par:
        return nn(MNot(Star(nn(MNot(embed_round_trip_table(f.left()))), nn(MNot(embed_round_trip_table(f.right()))))));
    }
    throw std::logic_error("unknown connective");
}

// ------------------------------------------------------------ frames and models

MLFrame embed_model(const ResourceModel& m) {
    const std::size_t n = m.size();
    std::vector<Triple> cowand;
    // z in x o- y  iff  y in x o z
    for (Elem x = 0; x < n; ++x)
        for (Elem z = 0; z < n; ++z)
            for (Elem y : m.compose(x, z)) cowand.push_back({x, y, z});
    std::vector<std::vector<Elem>> inv(n);
    for (Elem x = 0; x < n; ++x) inv[x] = {m.inv(x)};
    return MLFrame(m.names(), m.triples(), cowand, {m.unit()}, inv, {m.infinity()}, m.label());
}

ResourceModel extract_cbi(const MLFrame& fr) {
    if (!fr.unitary())
        throw FrameError("frame is not unitary: unit_set has " + std::to_string(fr.unit_set().size()) + " elements");
    AxiomReport rep = check_axioms(fr);
    if (auto bad = rep.first_failure()) throw FrameError("frame fails axiom " + std::to_string(*bad));
    if (fr.infinity_set().size() != 1) throw FrameError("infinity_set is not a singleton");
    std::vector<Elem> inv(fr.size());
    for (Elem x = 0; x < fr.size(); ++x) {
        if (fr.inv(x).size() != 1) throw FrameError("inv(" + fr.name(x) + ") is not a singleton");
        inv[x] = fr.inv(x)[0];
    }
    return ResourceModel(fr.names(), fr.unit_set()[0], fr.infinity_set()[0], inv, fr.comp(), fr.label());
}

std::vector<MLFrame> decompose_unitary(const MLFrame& fr) {
    AxiomReport rep = check_axioms(fr, {1, 2, 3, 4, 5});
    if (auto bad = rep.first_failure())
        throw FrameError("decomposition needs axioms 1-5; axiom " + std::to_string(*bad) + " fails");
    std::vector<MLFrame> out;
    for (Elem u : fr.unit_set()) {
        std::vector<bool> keep(fr.size(), false);
        for (const auto& [x, y, z] : fr.comp())
            if (y == u) keep[x] = true;
        std::vector<Elem> to(fr.size(), 0);
        std::vector<std::string> names;
        for (Elem x = 0; x < fr.size(); ++x)
            if (keep[x]) {
                to[x] = Elem(names.size());
                names.push_back(fr.name(x));
            }
        auto restrict_triples = [&](const std::vector<Triple>& ts) {
            std::vector<Triple> r;
            for (const auto& [x, y, z] : ts)
                if (keep[x] && keep[y] && keep[z]) r.push_back({to[x], to[y], to[z]});
            return r;
        };
        auto restrict_set = [&](const std::vector<Elem>& s) {
            std::vector<Elem> r;
            for (Elem x : s)
                if (keep[x]) r.push_back(to[x]);
            return r;
        };
        std::vector<std::vector<Elem>> inv;
        for (Elem x = 0; x < fr.size(); ++x)
            if (keep[x]) inv.push_back(restrict_set(fr.inv(x)));
        out.emplace_back(names, restrict_triples(fr.comp()), restrict_triples(fr.cowand()),
                         restrict_set(fr.unit_set()), inv, restrict_set(fr.infinity_set()),
                         fr.label() + "[" + fr.name(u) + "]");
    }
    return out;
}

MLFrame frame_union(const MLFrame& a, const MLFrame& b) {
    const Elem off = Elem(a.size());
    std::vector<std::string> names;
    for (const auto& x : a.names()) names.push_back("l." + x);
    for (const auto& x : b.names()) names.push_back("r." + x);
    auto shift = [&](std::vector<Triple> ts) {
        for (auto& t : ts)
            for (auto& x : t) x += off;
        return ts;
    };
    auto join = [](std::vector<Triple> l, const std::vector<Triple>& r) {
        l.insert(l.end(), r.begin(), r.end());
        return l;
    };
    auto join_set = [&](std::vector<Elem> l, const std::vector<Elem>& r) {
        for (Elem x : r) l.push_back(x + off);
        return l;
    };
    std::vector<std::vector<Elem>> inv = a.inv_table();
    for (Elem x = 0; x < b.size(); ++x) inv.push_back(join_set({}, b.inv(x)));
    return MLFrame(names, join(a.comp(), shift(b.comp())), join(a.cowand(), shift(b.cowand())),
                   join_set(a.unit_set(), b.unit_set()), inv, join_set(a.infinity_set(), b.infinity_set()),
                   a.label() + "+" + b.label());
}

// ------------------------------------------------------------ JSON

json to_json(const MLFrame& fr) {
    json j;
    j["carrier"] = fr.names();
    auto triples = [&](const std::vector<Triple>& ts) {
        json a = json::array();
        for (const auto& [x, y, z] : ts) a.push_back({fr.name(x), fr.name(y), fr.name(z)});
        return a;
    };
    auto set = [&](const std::vector<Elem>& s) {
        json a = json::array();
        for (Elem x : s) a.push_back(fr.name(x));
        return a;
    };
    j["comp"] = triples(fr.comp());
    j["cowand"] = triples(fr.cowand());
    j["unit_set"] = set(fr.unit_set());
    j["infinity_set"] = set(fr.infinity_set());
    json inv = json::object();
    for (Elem x = 0; x < fr.size(); ++x) inv[fr.name(x)] = set(fr.inv(x));
    j["inv"] = inv;
    if (!fr.label().empty()) j["label"] = fr.label();
    return j;
}

MLFrame frame_from_json(const json& j) {
    if (!j.is_object()) throw FrameError("frame document must be a JSON object");
    for (const char* key : {"carrier", "comp", "cowand", "unit_set", "infinity_set", "inv"})
        if (!j.contains(key)) throw FrameError(std::string("frame is missing \"") + key + "\"");
    std::vector<std::string> names;
    std::map<std::string, Elem> index;
    for (const auto& v : j["carrier"]) {
        if (!v.is_string()) throw FrameError("carrier elements must be strings");
        index.emplace(v.get<std::string>(), Elem(names.size()));
        names.push_back(v.get<std::string>());
    }
    auto elem = [&](const json& v, const std::string& where) {
        if (!v.is_string() || !index.count(v.get<std::string>()))
            throw FrameError(where + " mentions an element that is not in the carrier");
        return index.at(v.get<std::string>());
    };
    auto triples = [&](const char* key) {
        std::vector<Triple> ts;
        for (const auto& t : j[key]) {
            if (!t.is_array() || t.size() != 3) throw FrameError(std::string(key) + " entries must be [x, y, z]");
            ts.push_back({elem(t[0], key), elem(t[1], key), elem(t[2], key)});
        }
        return ts;
    };
    auto set = [&](const json& a, const std::string& where) {
        if (!a.is_array()) throw FrameError(where + " must be an array");
        std::vector<Elem> s;
        for (const auto& v : a) s.push_back(elem(v, where));
        return s;
    };
    std::vector<std::vector<Elem>> inv(names.size());
    if (!j["inv"].is_object()) throw FrameError("inv must map element ids to arrays");
    for (const auto& [k, v] : j["inv"].items()) inv[elem(json(k), "inv")] = set(v, "inv");
    return MLFrame(names, triples("comp"), triples("cowand"), set(j["unit_set"], "unit_set"), inv,
                   set(j["infinity_set"], "infinity_set"), j.value("label", std::string()));
}

json to_json(const AxiomReport& r, const MLFrame& fr) {
    json j;
    json ax = json::array();
    for (int i = 0; i < kAxiomCount; ++i) {
        const AxiomCheck& c = r.axioms[i];
        json e{{"id", i + 1}, {"formula", render(axiom(i + 1))}, {"holds", c.holds}};
        if (!c.holds) {
            json env = json::object();
            for (const auto& [p, bits] : *c.witness_env) {
                json s = json::array();
                for (Elem x = 0; x < fr.size(); ++x)
                    if (bits.test(x)) s.push_back(fr.name(x));
                env[p] = s;
            }
            e["witness"] = {{"env", env}, {"point", fr.name(*c.witness_point)}};
        }
        ax.push_back(e);
    }
    j["axioms"] = ax;
    j["passed"] = r.passed();
    j["unitary"] = r.unitary;
    j["sampled"] = r.sampled;
    return j;
}

}  // namespace cbi
