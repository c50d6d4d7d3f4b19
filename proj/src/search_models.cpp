#include "cbi/search_models.hpp"

#include <algorithm>
#include <numeric>

#include "cbi/builders.hpp"

namespace cbi {

namespace {

std::vector<Triple> permuted(const std::vector<Triple>& t, const std::vector<Elem>& p) {
    std::vector<Triple> out;
    for (const auto& [x, y, z] : t) out.push_back({p[x], p[y], p[z]});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<ResourceModel> enumerate_cbi_models(unsigned max_size, bool up_to_iso) {
    if (max_size < 1 || max_size > 3) throw std::invalid_argument("enumeration supports sizes 1..3");
    std::vector<ResourceModel> out;
    for (Elem n = 1; n <= max_size; ++n) {
        std::vector<std::string> names;
        for (Elem i = 0; i < n; ++i) names.push_back(std::to_string(i));
        std::vector<std::pair<Elem, Elem>> pairs;
        for (Elem i = 1; i < n; ++i)
            for (Elem j = i; j < n; ++j) pairs.push_back({i, j});
        const std::uint64_t combos = std::uint64_t(1) << (pairs.size() * n);
        // permutations fixing the unit
        std::vector<std::vector<Elem>> perms;
        std::vector<Elem> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin() + 1, p.end()));
        for (Elem inf = 0; inf < n; ++inf) {
            for (std::uint64_t mask = 0; mask < combos; ++mask) {
                std::vector<Triple> t;
                for (Elem x = 0; x < n; ++x) {
                    t.push_back({0, x, x});
                    t.push_back({x, 0, x});
                }
                for (std::size_t k = 0; k < pairs.size(); ++k)
                    for (Elem z = 0; z < n; ++z)
                        if (mask >> (k * n + z) & 1) {
                            t.push_back({pairs[k].first, pairs[k].second, z});
                            t.push_back({pairs[k].second, pairs[k].first, z});
                        }
                t = commutative_closure(t);
                // the involution is forced by uniqueness of duals
                std::vector<Elem> inv(n, n);
                bool ok = true;
                for (Elem x = 0; x < n && ok; ++x) {
                    for (Elem y = 0; y < n; ++y) {
                        bool hit = std::binary_search(t.begin(), t.end(), Triple{x, y, inf});
                        if (!hit) continue;
                        if (inv[x] != n) {
                            ok = false;
                            break;
                        }
                        inv[x] = y;
                    }
                    if (inv[x] == n) ok = false;
                }
                if (!ok) continue;
                ResourceModel m(names, 0, inf, inv, t, "enumerated");
                if (!validate_cbi(m).ok) continue;
                if (up_to_iso) {
                    bool least = true;
                    for (const auto& q : perms) {
                        auto pt = permuted(t, q);
                        Elem pinf = q[inf];
                        if (std::tie(pinf, pt) < std::tie(inf, t)) {
                            least = false;
                            break;
                        }
                    }
                    if (!least) continue;
                }
                m.set_label("enumerated size " + std::to_string(n) + " #" + std::to_string(out.size()));
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

std::vector<std::string> countermodel_families() {
    return {"enumerated", "zmod", "bitvec", "powerset", "action", "product", "union"};
}

CountermodelResult countermodel_search(const Formula& f, const CountermodelBudget& budget) {
    CountermodelResult res;
    auto wanted = [&](const std::string& fam) {
        return budget.families.empty() ||
               std::find(budget.families.begin(), budget.families.end(), fam) != budget.families.end();
    };
    auto attempt = [&](const ResourceModel& m, const std::string& fam) {
        if (m.size() > budget.carrier_cap) return false;
        ++res.models_checked;
        TruthResult t = truth(m, f, budget.truth);
        if (t.verdict == Verdict::Indeterminate) ++res.indeterminate;
        if (t.verdict != Verdict::False) return false;
        res.found = true;
        res.model = m;
        res.env = *t.env;
        res.point = *t.point;
        res.family = fam;
        return true;
    };
    if (wanted("enumerated"))
        for (const auto& m : enumerate_cbi_models(std::min(3u, budget.max_enumerated_size), true))
            if (attempt(m, "enumerated")) return res;
    std::vector<ResourceModel> small;
    if (wanted("zmod"))
        for (unsigned n = 1; n <= budget.max_zmod; ++n)
            for (unsigned m = 0; m < n; ++m) {
                auto z = z_mod(n, m);
                if (attempt(z, "zmod")) return res;
                if (n <= 2) small.push_back(z);
            }
    if (wanted("bitvec"))
        for (unsigned n = 1; n <= budget.max_bitvec; ++n)
            if (attempt(bitvec(n), "bitvec")) return res;
    if (wanted("powerset"))
        for (unsigned k = 0; k <= budget.max_powerset; ++k) {
            std::vector<std::string> u;
            for (unsigned i = 1; i <= k; ++i) u.push_back(std::to_string(i));
            auto p = powerset_model(u);
            if (attempt(p, "powerset")) return res;
            if (k <= 1) small.push_back(p);
        }
    if (wanted("action"))
        for (unsigned k = 1; k <= budget.max_actions; ++k) {
            std::vector<std::string> a;
            for (unsigned i = 0; i < k; ++i) a.push_back(std::string(1, char('a' + i)));
            auto m = action_comm(a);
            if (attempt(m, "action")) return res;
            if (k == 1) small.push_back(m);
        }
    if (budget.products && wanted("product"))
        for (std::size_t i = 0; i < small.size(); ++i)
            for (std::size_t j = i; j < small.size(); ++j) {
                if (small[i].size() * small[j].size() > budget.carrier_cap) continue;
                if (attempt(product_model({small[i], small[j]}), "product")) return res;
            }
    if (budget.unions && wanted("union"))
        for (std::size_t i = 0; i < small.size(); ++i)
            for (std::size_t j = i; j < small.size(); ++j) {
                try {
                    if (attempt(disjoint_union(small[i], small[j]), "union")) return res;
                } catch (const ConstructionError&) {
                }
            }
    return res;
}

}  // namespace cbi
