#include "cbi/builders.hpp"

#include <algorithm>
#include <map>

namespace cbi {

namespace {

std::string join_set(const std::vector<std::string>& universe, std::size_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        if (!first) s += ",";
        s += universe[i];
        first = false;
    }
    return s + "}";
}

}  // namespace

ResourceModel from_abelian_group(const std::vector<std::string>& elements,
                                 const std::vector<std::vector<std::size_t>>& op, std::size_t unit,
                                 const std::vector<std::size_t>& inverse) {
    const std::size_t n = elements.size();
    if (n == 0) throw ConstructionError("group has no elements");
    if (op.size() != n || inverse.size() != n || unit >= n)
        throw ConstructionError("group tables do not match the element list");
    for (const auto& row : op) {
        if (row.size() != n) throw ConstructionError("operation table is not square");
        for (std::size_t v : row)
            if (v >= n) throw ConstructionError("operation table leaves the carrier");
    }
    auto w = [&](std::initializer_list<std::size_t> xs) {
        std::string s = "(";
        bool first = true;
        for (auto x : xs) {
            if (!first) s += ",";
            s += elements[x];
            first = false;
        }
        return s + ")";
    };
    for (std::size_t x = 0; x < n; ++x) {
        if (op[x][unit] != x) throw ConstructionError("unit law fails at " + w({x}));
        if (inverse[x] >= n || op[x][inverse[x]] != unit)
            throw ConstructionError("inverse law fails at " + w({x}));
        for (std::size_t y = 0; y < n; ++y) {
            if (op[x][y] != op[y][x]) throw ConstructionError("commutativity fails at " + w({x, y}));
            for (std::size_t z = 0; z < n; ++z)
                if (op[op[x][y]][z] != op[x][op[y][z]])
                    throw ConstructionError("associativity fails at " + w({x, y, z}));
        }
    }
    std::vector<Triple> t;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            t.push_back({Elem(x), Elem(y), Elem(op[x][y])});
    std::vector<Elem> inv(inverse.begin(), inverse.end());
    return ResourceModel(elements, Elem(unit), Elem(unit), inv, t, "abelian group");
}

ResourceModel z_mod(unsigned n, unsigned m) {
    if (n == 0) throw ConstructionError("z_mod needs n >= 1");
    if (m >= n) throw ConstructionError("z_mod needs 0 <= m < n");
    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i) names.push_back(std::to_string(i));
    std::vector<Triple> t;
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) t.push_back({x, y, (x + y) % n});
    std::vector<Elem> inv;
    for (unsigned k = 0; k < n; ++k) inv.push_back((m + n - k) % n);
    return ResourceModel(names, 0, m, inv, t,
                         "z_mod(" + std::to_string(n) + "," + std::to_string(m) + ")");
}

ResourceModel bitvec(unsigned n) {
    if (n == 0 || n > 12) throw ConstructionError("bitvec width must be between 1 and 12");
    const Elem size = Elem(1) << n;
    std::vector<std::string> names;
    for (Elem v = 0; v < size; ++v) {
        std::string s;
        for (unsigned b = n; b-- > 0;) s += (v >> b & 1) ? '1' : '0';
        names.push_back(s);
    }
    std::vector<Triple> t;
    for (Elem x = 0; x < size; ++x)
        for (Elem y = 0; y < size; ++y) t.push_back({x, y, x ^ y});
    std::vector<Elem> inv;
    for (Elem x = 0; x < size; ++x) inv.push_back(~x & (size - 1));
    return ResourceModel(names, 0, size - 1, inv, t, "bitvec(" + std::to_string(n) + ")");
}

ResourceModel powerset_model(const std::vector<std::string>& universe) {
    if (universe.size() > 12) throw ConstructionError("powerset universe too large");
    const Elem size = Elem(1) << universe.size();
    std::vector<std::string> names;
    for (Elem v = 0; v < size; ++v) names.push_back(join_set(universe, v));
    std::vector<Triple> t;
    for (Elem x = 0; x < size; ++x)
        for (Elem y = 0; y < size; ++y)
            if ((x & y) == 0) t.push_back({x, y, x | y});
    std::vector<Elem> inv;
    for (Elem x = 0; x < size; ++x) inv.push_back(~x & (size - 1));
    return ResourceModel(names, 0, size - 1, inv, t, "powerset" + join_set(universe, size - 1));
}

ResourceModel action_comm(const std::vector<std::string>& actions) {
    if (actions.empty()) throw ConstructionError("action set is empty");
    for (const auto& a : actions)
        if (a == "0" || a == "tau" || a.rfind('~', 0) == 0)
            throw ConstructionError("action name clashes with a reserved element: " + a);
    // 0, tau, then a1, ~a1, a2, ~a2, ...
    std::vector<std::string> names{"0", "tau"};
    for (const auto& a : actions) {
        names.push_back(a);
        names.push_back("~" + a);
    }
    const Elem n = Elem(names.size());
    std::vector<Elem> inv(n);
    inv[0] = 1;
    inv[1] = 0;
    for (Elem i = 2; i < n; i += 2) {
        inv[i] = i + 1;
        inv[i + 1] = i;
    }
    std::vector<Triple> t;
    for (Elem b = 0; b < n; ++b) {
        t.push_back({b, 0, b});
        if (b != 0) t.push_back({0, b, b});
    }
    for (Elem i = 2; i < n; ++i) t.push_back({i, inv[i], 1});
    std::string label = "action_comm{";
    for (std::size_t i = 0; i < actions.size(); ++i) label += (i ? "," : "") + actions[i];
    return ResourceModel(names, 0, 1, inv, t, label + "}");
}

ResourceModel product_model(const std::vector<ResourceModel>& factors, std::size_t cap) {
    if (factors.empty()) throw ConstructionError("product of no factors");
    std::size_t total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > cap) throw ConstructionError("product carrier exceeds the size cap");
    }
    const std::size_t k = factors.size();
    auto digits = [&](std::size_t v) {
        std::vector<Elem> d(k);
        for (std::size_t i = k; i-- > 0;) {
            d[i] = Elem(v % factors[i].size());
            v /= factors[i].size();
        }
        return d;
    };
    auto encode = [&](const std::vector<Elem>& d) {
        std::size_t v = 0;
        for (std::size_t i = 0; i < k; ++i) v = v * factors[i].size() + d[i];
        return Elem(v);
    };
    std::vector<std::string> names;
    std::vector<Elem> inv;
    for (std::size_t v = 0; v < total; ++v) {
        auto d = digits(v);
        std::string s = "(";
        std::vector<Elem> id(k);
        for (std::size_t i = 0; i < k; ++i) {
            s += (i ? "," : "") + factors[i].name(d[i]);
            id[i] = factors[i].inv(d[i]);
        }
        names.push_back(s + ")");
        inv.push_back(encode(id));
    }
    std::vector<Elem> unit(k), inf(k);
    for (std::size_t i = 0; i < k; ++i) {
        unit[i] = factors[i].unit();
        inf[i] = factors[i].infinity();
    }
    std::vector<Triple> t;
    for (std::size_t x = 0; x < total; ++x) {
        auto dx = digits(x);
        for (std::size_t y = 0; y < total; ++y) {
            auto dy = digits(y);
            // cartesian product of the componentwise results
            std::vector<std::vector<Elem>> acc{{}};
            for (std::size_t i = 0; i < k && !acc.empty(); ++i) {
                std::vector<std::vector<Elem>> next;
                for (Elem z : factors[i].compose(dx[i], dy[i]))
                    for (const auto& pre : acc) {
                        auto p = pre;
                        p.push_back(z);
                        next.push_back(std::move(p));
                    }
                acc = std::move(next);
            }
            for (const auto& z : acc) t.push_back({Elem(x), Elem(y), encode(z)});
        }
    }
    std::string label = "product(";
    for (std::size_t i = 0; i < k; ++i) label += (i ? "," : "") + factors[i].label();
    return ResourceModel(names, encode(unit), encode(inf), inv, t, label + ")");
}

ResourceModel generalized_heap(const std::vector<std::string>& locations,
                               const std::vector<std::string>& values, std::size_t cap) {
    if (locations.empty() || values.empty()) throw ConstructionError("heap needs locations and values");
    std::size_t bits = locations.size() * values.size();
    if (bits >= 63 || (std::size_t(1) << bits) > cap)
        throw ConstructionError("heap carrier 2^" + std::to_string(bits) + " exceeds the size cap");
    std::vector<ResourceModel> factors(locations.size(), powerset_model(values));
    ResourceModel p = product_model(factors, cap);
    // rename (S1,...,Sk) to l1:S1 ... lk:Sk
    std::vector<std::string> names;
    const std::size_t per = std::size_t(1) << values.size();
    for (Elem v = 0; v < p.size(); ++v) {
        std::string s = "[";
        std::size_t rest = v;
        std::vector<std::string> parts(locations.size());
        for (std::size_t i = locations.size(); i-- > 0;) {
            parts[i] = locations[i] + ":" + join_set(values, rest % per);
            rest /= per;
        }
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
        names.push_back(s + "]");
    }
    return ResourceModel(names, p.unit(), p.infinity(), p.inv_table(), p.triples(), "generalized_heap");
}

ResourceModel deny_fragment(unsigned k, const std::string& tag) {
    if (k < 2) throw ConstructionError("granularity must be at least 2");
    // 0, tag1/k, ..., tag(k-1)/k, 1
    std::vector<std::string> names{"0"};
    for (unsigned i = 1; i < k; ++i) names.push_back(tag + std::to_string(i) + "/" + std::to_string(k));
    names.push_back("1");
    std::vector<Triple> t;
    for (unsigned x = 0; x <= k; ++x)
        for (unsigned y = 0; y <= k; ++y) {
            if (x == 0 || y == 0) {
                t.push_back({x, y, x + y});
            } else if (x != k && y != k && x + y <= k) {
                t.push_back({x, y, x + y});
            }
        }
    std::vector<Elem> inv;
    for (unsigned i = 0; i <= k; ++i) inv.push_back(k - i);
    return ResourceModel(names, 0, k, inv, t, tag + "-fragment/" + std::to_string(k));
}

ResourceModel fraction_dg(unsigned k) {
    ResourceModel u = disjoint_union(deny_fragment(k, "d"), deny_fragment(k, "g"));
    u.set_label("FractionDG_" + std::to_string(k));
    return u;
}

ResourceModel deny_guarantee(const std::vector<std::string>& actions, unsigned k, std::size_t cap) {
    if (actions.empty()) throw ConstructionError("deny-guarantee needs at least one action");
    std::vector<ResourceModel> factors(actions.size(), fraction_dg(k));
    ResourceModel p = product_model(factors, cap);
    p.set_label("deny_guarantee(" + std::to_string(actions.size()) + " actions, k=" + std::to_string(k) + ")");
    return p;
}

ResourceModel disjoint_union(const ResourceModel& a, const ResourceModel& b) {
    const bool a_trivial_inf = a.infinity() == a.unit();
    const bool b_trivial_inf = b.infinity() == b.unit();
    const bool a_ne = infinity_nonextensible(a);
    const bool b_ne = infinity_nonextensible(b);
    if (!((a_trivial_inf && b_trivial_inf) || (a_ne && b_ne))) {
        std::string which;
        if (!a_ne) which += "first model's infinity is extensible";
        if (!b_ne) which += std::string(which.empty() ? "" : "; ") + "second model's infinity is extensible";
        if (which.empty()) which = "exactly one model has infinity equal to its unit";
        throw ConstructionError("disjoint union side condition violated: " + which);
    }
    // e2 and inf2 are identified with e1 and inf1
    std::vector<Elem> mb(b.size());
    std::vector<std::string> names = a.names();
    std::map<std::string, int> seen;
    for (const auto& s : a.names()) seen[s] = 1;
    bool clash = false;
    for (Elem y = 0; y < b.size(); ++y)
        if (y != b.unit() && y != b.infinity() && seen.count(b.name(y))) clash = true;
    if (clash)
        for (auto& s : names) s = "1." + s;
    for (Elem y = 0; y < b.size(); ++y) {
        if (y == b.unit()) {
            mb[y] = a.unit();
        } else if (y == b.infinity()) {
            mb[y] = a.infinity();
        } else {
            mb[y] = Elem(names.size());
            names.push_back(clash ? "2." + b.name(y) : b.name(y));
        }
    }
    std::vector<Triple> t = a.triples();
    for (const auto& [x, y, z] : b.triples()) t.push_back({mb[x], mb[y], mb[z]});
    std::vector<Elem> inv = a.inv_table();
    inv.resize(names.size());
    for (Elem y = 0; y < b.size(); ++y)
        if (y != b.unit() && y != b.infinity()) inv[mb[y]] = mb[b.inv(y)];
    ResourceModel u(names, a.unit(), a.infinity(), inv, t, "union(" + a.label() + "," + b.label() + ")");
    ValidationReport r = validate_cbi(u);
    if (!r.ok) {
        const Failure& f = r.failures.front();
        std::string w;
        for (const auto& s : f.witness) w += (w.empty() ? "" : ",") + s;
        throw ConstructionError("disjoint union is not a CBI-model: " + f.axiom + " fails at (" + w + ")");
    }
    return u;
}

ResourceModel bbi_extension(const BbiModel& m) {
    if (!validate_bbi(m).ok) throw ConstructionError("bbi_extension needs a valid BBI-model");
    const Elem n = Elem(m.size());
    std::vector<std::string> names = m.names();
    for (Elem x = 0; x < n; ++x) names.push_back("~" + m.name(x));
    auto bar = [n](Elem x) { return x + n; };
    std::vector<Triple> t;
    for (const auto& [x, y, z] : m.triples()) {
        t.push_back({x, y, z});
        t.push_back({x, bar(z), bar(y)});
        t.push_back({bar(z), x, bar(y)});
    }
    std::vector<Elem> inv(2 * n);
    for (Elem x = 0; x < n; ++x) {
        inv[x] = bar(x);
        inv[bar(x)] = x;
    }
    return ResourceModel(names, m.unit(), bar(m.unit()), inv, t, "bbi_extension(" + m.label() + ")");
}

BbiModel nonconservativity_bbi_model() {
    std::vector<Triple> t;
    for (Elem x = 0; x < 3; ++x) {
        t.push_back({0, x, x});
        t.push_back({x, 0, x});
    }
    return BbiModel({"e", "a", "b"}, 0, t, "three-point BBI model");
}

ResourceModel non_functional_cbi_model() {
    // e=0, a=1, inf=2
    std::vector<Triple> t;
    for (Elem x = 0; x < 3; ++x) {
        t.push_back({0, x, x});
        t.push_back({x, 0, x});
    }
    t.push_back({1, 1, 0});
    t.push_back({1, 1, 2});
    for (auto [x, y] : {std::pair<Elem, Elem>{1, 2}, {2, 1}, {2, 2}}) {
        t.push_back({x, y, 0});
        t.push_back({x, y, 1});
    }
    return ResourceModel({"e", "a", "inf"}, 0, 2, {2, 1, 0}, t, "three-point CBI model");
}

}  // namespace cbi
