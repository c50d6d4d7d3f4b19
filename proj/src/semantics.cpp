#include "cbi/semantics.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cbi {

Bits lookup(const Environment& env, const std::string& p, std::size_t n) {
    auto it = env.find(p);
    if (it == env.end()) return Bits(n);
    if (it->second.size() != n)
        throw std::invalid_argument("environment entry for " + p + " has the wrong carrier size");
    return it->second;
}

std::uint64_t lookup_word(const Environment& env, const std::string& p, std::size_t n) {
    auto it = env.find(p);
    if (it == env.end()) return 0;
    if (it->second.size() != n)
        throw std::invalid_argument("environment entry for " + p + " has the wrong carrier size");
    return it->second.to_ulong();
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

namespace {

struct View {
    const BbiModel& m;
    const ResourceModel* cbi;  // null for BBI models

    Elem inv(Elem x) const {
        if (!cbi) throw std::invalid_argument("connective needs an involution; model is BBI only");
        return cbi->inv(x);
    }
    Elem infinity() const {
        if (!cbi) throw std::invalid_argument("connective needs an infinity; model is BBI only");
        return cbi->infinity();
    }
};

bool sat_at(const View& v, const Environment& env, Elem r, const Formula& f) {
    const BbiModel& m = v.m;
    const Elem n = static_cast<Elem>(m.size());
    switch (f.op()) {
    case Op::Var: return lookup(env, f.name(), n).test(r);
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !sat_at(v, env, r, f.child());
    case Op::And: return sat_at(v, env, r, f.left()) && sat_at(v, env, r, f.right());
    case Op::Or: return sat_at(v, env, r, f.left()) || sat_at(v, env, r, f.right());
    case Op::Imp: return !sat_at(v, env, r, f.left()) || sat_at(v, env, r, f.right());
    case Op::MTop: return r == m.unit();
    case Op::MBot: return r != v.infinity();
    case Op::MNot: return !sat_at(v, env, v.inv(r), f.child());
    case Op::Star:
        for (auto [r1, r2] : m.splits(r))
            if (sat_at(v, env, r1, f.left()) && sat_at(v, env, r2, f.right())) return true;
        return false;
    case Op::Par: {
        for (auto [r1, r2] : m.splits(v.inv(r)))
            if (!sat_at(v, env, v.inv(r1), f.left()) && !sat_at(v, env, v.inv(r2), f.right())) return false;
        return true;
    }
    case Op::Wand:
        for (Elem r1 = 0; r1 < n; ++r1) {
            if (!sat_at(v, env, r1, f.left())) continue;
            for (Elem r2 : m.compose(r, r1))
                if (!sat_at(v, env, r2, f.right())) return false;
        }
        return true;
    }
    return false;
}

// Word-sized evaluation for carriers of at most 64 points.
std::uint64_t denote_w(const View& v, const Environment& env, const Formula& f, std::uint64_t full) {
    const BbiModel& m = v.m;
    const Elem n = static_cast<Elem>(m.size());
    auto rec = [&](const Formula& g) { return denote_w(v, env, g, full); };
    auto bit = [](Elem x) { return std::uint64_t{1} << x; };
    switch (f.op()) {
    case Op::Var: return lookup_word(env, f.name(), n);
    case Op::Top: return full;
    case Op::Bot: return 0;
    case Op::Not: return ~rec(f.child()) & full;
    case Op::And: return rec(f.left()) & rec(f.right());
    case Op::Or: return rec(f.left()) | rec(f.right());
    case Op::Imp: return (~rec(f.left()) & full) | rec(f.right());
    case Op::MTop: return bit(m.unit());
    case Op::MBot: return full & ~bit(v.infinity());
    case Op::MNot: {
        std::uint64_t a = rec(f.child()), s = 0;
        for (Elem r = 0; r < n; ++r)
            if (!(a & bit(v.inv(r)))) s |= bit(r);
        return s;
    }
    case Op::Star: {
        std::uint64_t a = rec(f.left()), b = rec(f.right()), s = 0;
        for (const auto& [x, y, z] : m.triples())
            if ((a >> x) & (b >> y) & 1) s |= bit(z);
        return s;
    }
    case Op::Par: {
        std::uint64_t a = rec(f.left()), b = rec(f.right()), s = full;
        for (const auto& [x, y, z] : m.triples())
            if (!(a & bit(v.inv(x))) && !(b & bit(v.inv(y)))) s &= ~bit(v.inv(z));
        return s;
    }
    case Op::Wand: {
        std::uint64_t a = rec(f.left()), b = rec(f.right()), s = full;
        for (const auto& [x, y, z] : m.triples())
            if ((a >> y) & ~(b >> z) & 1) s &= ~bit(x);
        return s;
    }
    }
    return 0;
}

Bits denote_bits(const View& v, const Environment& env, const Formula& f);

Bits denote_in(const View& v, const Environment& env, const Formula& f) {
    const std::size_t n = v.m.size();
    if (n <= 64) return Bits(n, denote_w(v, env, f, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1));
    return denote_bits(v, env, f);
}

Bits denote_bits(const View& v, const Environment& env, const Formula& f) {
    const BbiModel& m = v.m;
    const Elem n = static_cast<Elem>(m.size());
    switch (f.op()) {
    case Op::Var: return lookup(env, f.name(), n);
    case Op::Top: return m.full_set();
    case Op::Bot: return m.empty_set();
    case Op::Not: return ~denote_in(v, env, f.child());
    case Op::And: return denote_in(v, env, f.left()) & denote_in(v, env, f.right());
    case Op::Or: return denote_in(v, env, f.left()) | denote_in(v, env, f.right());
    case Op::Imp: return ~denote_in(v, env, f.left()) | denote_in(v, env, f.right());
    case Op::MTop: {
        Bits s = m.empty_set();
        s.set(m.unit());
        return s;
    }
    case Op::MBot: {
        Bits s = m.full_set();
        s.reset(v.infinity());
        return s;
    }
    case Op::MNot: {
        Bits a = denote_in(v, env, f.child());
        Bits s = m.empty_set();
        for (Elem r = 0; r < n; ++r)
            if (!a.test(v.inv(r))) s.set(r);
        return s;
    }
    case Op::Star: {
        Bits a = denote_in(v, env, f.left()), b = denote_in(v, env, f.right());
        Bits s = m.empty_set();
        for (const auto& [x, y, z] : m.triples())
            if (a.test(x) && b.test(y)) s.set(z);
        return s;
    }
    case Op::Par: {
        Bits a = denote_in(v, env, f.left()), b = denote_in(v, env, f.right());
        Bits s = m.full_set();
        for (const auto& [x, y, z] : m.triples())
            if (!a.test(v.inv(x)) && !b.test(v.inv(y))) s.reset(v.inv(z));
        return s;
    }
    case Op::Wand: {
        Bits a = denote_in(v, env, f.left()), b = denote_in(v, env, f.right());
        Bits s = m.full_set();
        for (const auto& [x, y, z] : m.triples())
            if (a.test(y) && !b.test(z)) s.reset(x);
        return s;
    }
    }
    return m.empty_set();
}

TruthResult truth_in(const View& v, const Formula& f, TruthBudget budget) {
    const std::size_t n = v.m.size();
    const auto names = vars(f);
    std::vector<std::string> ps(names.begin(), names.end());
    TruthResult res;
    // assignments enumerated as one counter of |ps| * n bits
    const std::size_t bits = ps.size() * n;
    Environment env;
    for (const auto& p : ps) env[p] = Bits(n);
    std::vector<Bits*> slots;
    for (const auto& p : ps) slots.push_back(&env[p]);
    while (true) {
        if (res.assignments >= budget.max_assignments) {
            res.verdict = Verdict::Indeterminate;
            return res;
        }
        ++res.assignments;
        Bits d = denote_in(v, env, f);
        if (!d.all()) {
            res.verdict = Verdict::False;
            res.env = env;
            for (Elem r = 0; r < n; ++r)
                if (!d.test(r)) {
                    res.point = r;
                    break;
                }
            return res;
        }
        // binary increment across the slots
        std::size_t i = 0;
        for (; i < bits; ++i) {
            Bits& b = *slots[i / n];
            std::size_t k = i % n;
            if (b.test(k)) {
                b.reset(k);
            } else {
                b.set(k);
                break;
            }
        }
        if (i == bits) break;
    }
    res.verdict = Verdict::True;
    return res;
}

}  // namespace

bool sat(const ResourceModel& m, const Environment& env, Elem r, const Formula& f) {
    if (r >= m.size()) throw std::out_of_range("unknown element id " + std::to_string(r));
    return sat_at(View{m, &m}, env, r, f);
}

bool sat(const BbiModel& m, const Environment& env, Elem r, const Formula& f) {
    if (r >= m.size()) throw std::out_of_range("unknown element id " + std::to_string(r));
    return sat_at(View{m, nullptr}, env, r, f);
}

Bits denote(const ResourceModel& m, const Environment& env, const Formula& f) {
    return denote_in(View{m, &m}, env, f);
}

Bits denote(const BbiModel& m, const Environment& env, const Formula& f) {
    return denote_in(View{m, nullptr}, env, f);
}

TruthResult truth(const ResourceModel& m, const Formula& f, TruthBudget budget) {
    return truth_in(View{m, &m}, f, budget);
}

TruthResult truth(const BbiModel& m, const Formula& f, TruthBudget budget) {
    return truth_in(View{m, nullptr}, f, budget);
}

std::string render_set(const BbiModel& m, const Bits& s) {
    std::string out = "{";
    bool first = true;
    for (Elem x = 0; x < m.size(); ++x) {
        if (!s.test(x)) continue;
        if (!first) out += ", ";
        out += m.name(x);
        first = false;
    }
    return out + "}";
}

}  // namespace cbi
