#include "support.hpp"

#include <functional>
#include <map>

#include "cbi/model_json.hpp"

namespace cbi::test {

std::string fixture_path(const std::string& rel) { return std::string(CBI_FIXTURE_DIR) + "/" + rel; }

ResourceModel relational_model() { return model_from_json(read_json_file(fixture_path("models/relational3.json"))); }
BbiModel nonconservative_model() { return bbi_model_from_json(read_json_file(fixture_path("models/nonconservative_bbi.json"))); }

std::vector<NamedModel> small_fixtures() {
    std::vector<NamedModel> out;
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 0; m < n; ++m)
            out.push_back({"zmod(" + std::to_string(n) + "," + std::to_string(m) + ")", z_mod(n, m)});
    out.push_back({"bitvec(1)", bitvec(1)});
    out.push_back({"bitvec(2)", bitvec(2)});
    out.push_back({"powerset{1}", powerset_model({"1"})});
    out.push_back({"powerset{1,2}", powerset_model({"1", "2"})});
    out.push_back({"action{a}", action_comm({"a"})});
    out.push_back({"relational3", relational_model()});
    return out;
}

std::vector<NamedModel> all_fixtures() {
    auto out = small_fixtures();
    out.push_back({"bitvec(3)", bitvec(3)});
    out.push_back({"action{a,b}", action_comm({"a", "b"})});
    out.push_back({"heap{4}x{0,1}", generalized_heap({"4"}, {"0", "1"})});
    out.push_back({"denyguar{a},2", deny_guarantee({"a"}, 2)});
    out.push_back({"zmod(2,0)xpowerset{1}", product_model({z_mod(2, 0), powerset_model({"1"})})});
    out.push_back({"bbiext(nonconservative)", bbi_extension(nonconservative_model())});
    return out;
}

bool oracle_sat(const ResourceModel& m, const Environment& env, Elem r, const Formula& f) {
    const Elem n = Elem(m.size());
    auto holds = [&](Elem x, const Formula& g) { return oracle_sat(m, env, x, g); };
    switch (f.op()) {
    case Op::Var: {
        auto it = env.find(f.name());
        return it != env.end() && it->second.test(r);
    }
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !holds(r, f.child());
    case Op::And: return holds(r, f.left()) && holds(r, f.right());
    case Op::Or: return holds(r, f.left()) || holds(r, f.right());
    case Op::Imp: return !holds(r, f.left()) || holds(r, f.right());
    case Op::MTop: return r == m.unit();
    case Op::MBot: return r != m.infinity();
    case Op::MNot: return !holds(m.inv(r), f.child());
    case Op::Star:
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (m.contains(a, b, r) && holds(a, f.left()) && holds(b, f.right())) return true;
        return false;
    case Op::Par:
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (m.contains(a, b, m.inv(r)) && !holds(m.inv(a), f.left()) && !holds(m.inv(b), f.right()))
                    return false;
        return true;
    case Op::Wand:
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (m.contains(r, a, b) && holds(a, f.left()) && !holds(b, f.right())) return false;
        return true;
    }
    return false;
}

std::vector<Environment> all_environments(std::size_t n, const std::vector<std::string>& vars) {
    std::vector<Environment> out{Environment{}};
    for (const auto& v : vars) {
        std::vector<Environment> next;
        for (const auto& e : out)
            for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
                Environment f = e;
                f[v] = Bits(n, mask);
                next.push_back(f);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Formula> formulas_of_size(int size, const std::vector<std::string>& vars) {
    static std::map<std::pair<int, std::vector<std::string>>, std::vector<Formula>> memo;
    auto key = std::make_pair(size, vars);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Formula> out;
    if (size == 1) {
        for (const auto& v : vars) out.push_back(Var(v));
        out.insert(out.end(), {Formula::top(), Formula::bot(), Formula::mtop(), Formula::mbot()});
    } else {
        for (const auto& a : formulas_of_size(size - 1, vars)) {
            out.push_back(Not(a));
            out.push_back(MNot(a));
        }
        for (int l = 1; l + 1 < size; ++l) {
            const auto& ls = formulas_of_size(l, vars);
            const auto& rs = formulas_of_size(size - 1 - l, vars);
            for (const auto& a : ls)
                for (const auto& b : rs)
                    for (Op op : {Op::And, Op::Or, Op::Imp, Op::Star, Op::Par, Op::Wand})
                        out.push_back(Formula::binary(op, a, b));
        }
    }
    memo[key] = out;
    return out;
}

std::vector<Formula> formulas_up_to(int size, const std::vector<std::string>& vars) {
    std::vector<Formula> out;
    for (int s = 1; s <= size; ++s) {
        auto fs = formulas_of_size(s, vars);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

Formula random_formula(std::mt19937_64& rng, int max_size, const std::vector<std::string>& vars) {
    auto pick = [&](int n) { return int(std::uniform_int_distribution<int>(0, n - 1)(rng)); };
    if (max_size <= 1 || pick(4) == 0) {
        int k = pick(int(vars.size()) + 4);
        if (k < int(vars.size())) return Var(vars[k]);
        switch (k - int(vars.size())) {
        case 0: return Formula::top();
        case 1: return Formula::bot();
        case 2: return Formula::mtop();
        default: return Formula::mbot();
        }
    }
    if (max_size < 3 || pick(3) == 0) return pick(2) ? Not(random_formula(rng, max_size - 1, vars))
                                                     : MNot(random_formula(rng, max_size - 1, vars));
    static const Op bin[] = {Op::And, Op::Or, Op::Imp, Op::Star, Op::Par, Op::Wand};
    int left = 1 + pick(max_size - 2);
    Formula a = random_formula(rng, left, vars);
    Formula b = random_formula(rng, max_size - 1 - int(a.size()), vars);
    return Formula::binary(bin[pick(6)], a, b);
}

Structure random_structure(std::mt19937_64& rng, int max_size) {
    auto pick = [&](int n) { return int(std::uniform_int_distribution<int>(0, n - 1)(rng)); };
    static const char* atoms[] = {"P", "Q", "R", "S"};
    if (max_size <= 1 || pick(4) == 0) {
        switch (pick(6)) {
        case 0: return Structure::aempty();
        case 1: return Structure::mempty();
        default: return Structure::leaf(Var(atoms[pick(4)]));
        }
    }
    if (max_size < 3 || pick(3) == 0) {
        Structure c = random_structure(rng, max_size - 1);
        return pick(2) ? Structure::sharp(c) : Structure::flat(c);
    }
    Structure a = random_structure(rng, 1 + pick(max_size - 2));
    Structure b = random_structure(rng, max_size - 1 - int(a.size()));
    return pick(2) ? Structure::semi(a, b) : Structure::comma(a, b);
}

Consecution random_consecution(std::mt19937_64& rng, int max_size) {
    int left = 1 + int(std::uniform_int_distribution<int>(0, max_size - 2)(rng));
    Structure l = random_structure(rng, left);
    Structure r = random_structure(rng, max_size - int(l.size()));
    return {l, r};
}

const std::vector<std::string>& proof_fixtures() {
    static const std::vector<std::string> names{"negation_swap", "lax_wand_axiom", "cowand_or", "par_round_trip"};
    return names;
}

Proof load_proof(const std::string& name) {
    return proof_from_json(read_json_file(fixture_path("proofs/" + name + ".json")));
}

std::vector<Formula> equivalence_schemata(const Formula& f, const Formula& g) {
    return {
        Iff(MNot(Formula::top()), Formula::bot()),
        Iff(MNot(Formula::mtop()), Formula::mbot()),
        Iff(MNot(MNot(f)), f),
        Iff(Not(MNot(f)), MNot(Not(f))),
        Iff(MNot(f), Wand(f, Formula::mbot())),
        Iff(Par(f, g), MNot(Star(MNot(f), MNot(g)))),
        Iff(Wand(f, g), Par(MNot(f), g)),
        Iff(Wand(f, g), Wand(MNot(g), MNot(f))),
        Iff(Wand(f, g), MNot(Star(f, MNot(g)))),
        Iff(Par(f, Formula::mbot()), f),
    };
}

// Permissions over one action with granularity k, written out directly.
ResourceModel fraction_table(unsigned k) {
    std::vector<std::string> names{"0", "1"};
    for (unsigned i = 1; i < k; ++i) names.push_back("d" + std::to_string(i));
    for (unsigned i = 1; i < k; ++i) names.push_back("g" + std::to_string(i));
    auto d = [&](unsigned i) { return Elem(i == 0 ? 0 : i == k ? 1 : 1 + i); };
    auto g = [&](unsigned i) { return Elem(i == 0 ? 0 : i == k ? 1 : k + i); };
    std::vector<Triple> t;
    for (Elem x = 0; x < names.size(); ++x) t.push_back({0, x, x});
    for (unsigned i = 1; i < k; ++i)
        for (unsigned j = 1; i + j <= k; ++j) {
            t.push_back({d(i), d(j), d(i + j)});
            t.push_back({g(i), g(j), g(i + j)});
        }
    std::vector<Elem> inv(names.size());
    inv[0] = 1;
    inv[1] = 0;
    for (unsigned i = 1; i < k; ++i) {
        inv[d(i)] = d(k - i);
        inv[g(i)] = g(k - i);
    }
    return ResourceModel(names, 0, 1, inv, commutative_closure(t));
}

ResourceModel square(const ResourceModel& f) {
    const Elem n = Elem(f.size());
    std::vector<std::string> names;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) names.push_back(f.name(a) + "|" + f.name(b));
    std::vector<Triple> t;
    for (const auto& [x1, y1, z1] : f.triples())
        for (const auto& [x2, y2, z2] : f.triples()) t.push_back({x1 * n + x2, y1 * n + y2, z1 * n + z2});
    std::vector<Elem> inv;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) inv.push_back(f.inv(a) * n + f.inv(b));
    return ResourceModel(names, f.unit() * n + f.unit(), f.infinity() * n + f.infinity(), inv, t);
}

}  // namespace cbi::test
