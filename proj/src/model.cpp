#include "cbi/model.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cbi {

BbiModel::BbiModel(std::vector<std::string> names, Elem unit, std::vector<Triple> triples,
                   std::string label)
    : names_(std::move(names)), unit_(unit), label_(std::move(label)) {
    const std::size_t n = names_.size();
    if (n == 0) throw MalformedModel("empty carrier");
    for (Elem i = 0; i < n; ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw MalformedModel("duplicate carrier element '" + names_[i] + "'");
    }
    if (unit_ >= n) throw MalformedModel("unit outside carrier");
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    for (const auto& t : triples)
        for (Elem v : t)
            if (v >= n) throw MalformedModel("composition triple mentions an element outside the carrier");
    triples_ = std::move(triples);
    table_.assign(n * n, {});
    splits_.assign(n, {});
    for (const auto& [x, y, z] : triples_) {
        table_[x * n + y].push_back(z);
        splits_[z].push_back({x, y});
    }
}

Elem BbiModel::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown element '" + name + "'");
    return it->second;
}

std::optional<Elem> BbiModel::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool BbiModel::contains(Elem x, Elem y, Elem z) const {
    const auto& v = compose(x, y);
    return std::binary_search(v.begin(), v.end(), z);
}

ResourceModel::ResourceModel(std::vector<std::string> names, Elem unit, Elem infinity,
                             std::vector<Elem> inv, std::vector<Triple> triples, std::string label)
    : BbiModel(std::move(names), unit, std::move(triples), std::move(label)),
      infinity_(infinity),
      inv_(std::move(inv)) {
    if (infinity_ >= size()) throw MalformedModel("infinity outside carrier");
    if (inv_.size() != size()) throw MalformedModel("involution is not total on the carrier");
    for (Elem v : inv_)
        if (v >= size()) throw MalformedModel("involution maps outside the carrier");
}

std::vector<Triple> commutative_closure(std::vector<Triple> triples) {
    std::size_t n = triples.size();
    for (std::size_t i = 0; i < n; ++i) triples.push_back({triples[i][1], triples[i][0], triples[i][2]});
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    return triples;
}

void ValidationReport::add(std::string axiom, std::vector<std::string> witness) {
    ok = false;
    failures.push_back({std::move(axiom), std::move(witness)});
}

ValidationReport validate_bbi(const BbiModel& m) {
    ValidationReport r;
    const Elem n = static_cast<Elem>(m.size());
    const Elem e = m.unit();
    for (const auto& [x, y, z] : m.triples())
        if (!m.contains(y, x, z)) r.add("commutativity", {m.name(x), m.name(y), m.name(z)});
    for (Elem x = 0; x < n; ++x) {
        const auto& v = m.compose(x, e);
        if (v.size() != 1 || v[0] != x) r.add("unit", {m.name(x), m.name(e)});
    }
    // (x o y) o z and x o (y o z) under the pointwise extension
    std::vector<Bits> row(n * n, Bits(n));
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z : m.compose(x, y)) row[x * n + y].set(z);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z) {
                Bits left(n), right(n);
                for (Elem v : m.compose(x, y)) left |= row[v * n + z];
                for (Elem w : m.compose(y, z)) right |= row[x * n + w];
                if (left != right) r.add("associativity", {m.name(x), m.name(y), m.name(z)});
            }
    return r;
}

ValidationReport validate_cbi(const ResourceModel& m) {
    ValidationReport r = validate_bbi(m);
    const Elem n = static_cast<Elem>(m.size());
    const Elem inf = m.infinity();
    for (Elem x = 0; x < n; ++x) {
        std::vector<Elem> duals;
        for (Elem y = 0; y < n; ++y)
            if (m.contains(x, y, inf)) duals.push_back(y);
        if (duals.empty()) {
            r.add("dual", {m.name(x)});
        } else if (duals.size() > 1) {
            std::vector<std::string> w{m.name(x)};
            for (Elem y : duals) w.push_back(m.name(y));
            r.add("dual-uniqueness", w);
        } else if (duals[0] != m.inv(x)) {
            r.add("dual-involution", {m.name(x), m.name(duals[0]), m.name(m.inv(x))});
        }
    }
    for (Elem x = 0; x < n; ++x)
        if (m.inv(m.inv(x)) != x) r.add("double-inverse", {m.name(x)});
    if (m.inv(m.unit()) != inf) r.add("inverse-unit", {m.name(m.unit())});
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z) {
                bool a = m.contains(x, y, z);
                bool b = m.contains(y, m.inv(z), m.inv(x));
                bool c = m.contains(x, m.inv(z), m.inv(y));
                if (a != b || a != c) r.add("rotation", {m.name(x), m.name(y), m.name(z)});
            }
    return r;
}

bool is_partial_functional(const BbiModel& m) {
    const Elem n = static_cast<Elem>(m.size());
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (m.compose(x, y).size() > 1) return false;
    return true;
}

bool infinity_nonextensible(const ResourceModel& m) {
    for (Elem x = 0; x < m.size(); ++x)
        if (x != m.unit() && !m.compose(x, m.infinity()).empty()) return false;
    return true;
}

bool is_effect_algebra(const ResourceModel& m) {
    return is_partial_functional(m) && infinity_nonextensible(m);
}

bool same_model(const ResourceModel& a, const ResourceModel& b) {
    return a.names() == b.names() && a.unit() == b.unit() && a.infinity() == b.infinity() &&
           a.inv_table() == b.inv_table() && a.triples() == b.triples();
}

namespace {

// Colour refinement followed by individualisation; sufficient for the model
// sizes handled here (a few hundred elements at most).
class IsoSearch {
public:
    IsoSearch(const BbiModel& a, const BbiModel& b, const std::vector<Elem>* inva,
              const std::vector<Elem>* invb, std::vector<std::pair<Elem, Elem>> fixed)
        : a_(a), b_(b), inva_(inva), invb_(invb), fixed_(std::move(fixed)) {}

    std::optional<std::vector<Elem>> run() {
        const std::size_t n = a_.size();
        if (n != b_.size() || a_.triples().size() != b_.triples().size()) return std::nullopt;
        std::vector<Elem> map(n, kNone), used(n, 0);
        for (auto [x, y] : fixed_) {
            if (map[x] != kNone && map[x] != y) return std::nullopt;
            if (map[x] == kNone && used[y]) return std::nullopt;
            map[x] = y;
            used[y] = 1;
        }
        if (!consistent(map)) return std::nullopt;
        if (extend(map, used)) return map;
        return std::nullopt;
    }

private:
    static constexpr Elem kNone = static_cast<Elem>(-1);

    // Joint refinement of both models so that colours are comparable.
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> colours(const std::vector<Elem>& map) {
        const std::size_t n = a_.size();
        std::vector<std::size_t> ca(n, 0), cb(n, 0);
        for (Elem x = 0; x < n; ++x) {
            ca[x] = map[x] == kNone ? 0 : 1 + x;
        }
        for (Elem x = 0; x < n; ++x) cb[x] = 0;
        for (Elem x = 0; x < n; ++x)
            if (map[x] != kNone) cb[map[x]] = 1 + x;
        for (int round = 0; round < 64; ++round) {
            std::map<std::vector<std::size_t>, std::size_t> ids;
            auto sig = [&](const BbiModel& m, const std::vector<Elem>* inv, const std::vector<std::size_t>& c,
                           Elem x) {
                std::vector<std::size_t> s{c[x]};
                if (inv) s.push_back(c[(*inv)[x]]);
                std::vector<std::vector<std::size_t>> cells;
                for (Elem y = 0; y < m.size(); ++y) {
                    std::vector<std::size_t> cell{c[y]};
                    std::vector<std::size_t> zs;
                    for (Elem z : m.compose(x, y)) zs.push_back(c[z]);
                    std::sort(zs.begin(), zs.end());
                    cell.insert(cell.end(), zs.begin(), zs.end());
                    cell.push_back(static_cast<std::size_t>(-1));
                    cells.push_back(std::move(cell));
                }
                std::sort(cells.begin(), cells.end());
                for (auto& cell : cells) s.insert(s.end(), cell.begin(), cell.end());
                return s;
            };
            std::vector<std::vector<std::size_t>> sa(n), sb(n);
            for (Elem x = 0; x < n; ++x) sa[x] = sig(a_, inva_, ca, x);
            for (Elem x = 0; x < n; ++x) sb[x] = sig(b_, invb_, cb, x);
            std::set<std::vector<std::size_t>> all(sa.begin(), sa.end());
            all.insert(sb.begin(), sb.end());
            std::size_t k = 0;
            for (const auto& s : all) ids[s] = k++;
            std::vector<std::size_t> na(n), nb(n);
            for (Elem x = 0; x < n; ++x) na[x] = ids[sa[x]];
            for (Elem x = 0; x < n; ++x) nb[x] = ids[sb[x]];
            std::set<std::size_t> before(ca.begin(), ca.end()), after(na.begin(), na.end());
            ca = std::move(na);
            cb = std::move(nb);
            if (after.size() == before.size()) break;
        }
        return {ca, cb};
    }

    bool consistent(const std::vector<Elem>& map) const {
        const std::size_t n = a_.size();
        for (Elem x = 0; x < n; ++x) {
            if (map[x] == kNone) continue;
            if (inva_) {
                Elem ix = (*inva_)[x];
                if (map[ix] != kNone && map[ix] != (*invb_)[map[x]]) return false;
            }
            for (Elem y = 0; y < n; ++y) {
                if (map[y] == kNone) continue;
                const auto& za = a_.compose(x, y);
                const auto& zb = b_.compose(map[x], map[y]);
                if (za.size() != zb.size()) return false;
                for (Elem z : za)
                    if (map[z] != kNone && !b_.contains(map[x], map[y], map[z])) return false;
            }
        }
        return true;
    }

    bool extend(std::vector<Elem>& map, std::vector<Elem>& used) {
        const std::size_t n = a_.size();
        auto [ca, cb] = colours(map);
        std::multiset<std::size_t> ma(ca.begin(), ca.end()), mb(cb.begin(), cb.end());
        if (ma != mb) return false;
        Elem pick = kNone;
        std::size_t best = n + 1;
        for (Elem x = 0; x < n; ++x) {
            if (map[x] != kNone) continue;
            std::size_t cnt = std::count(cb.begin(), cb.end(), ca[x]);
            if (cnt < best) {
                best = cnt;
                pick = x;
            }
        }
        if (pick == kNone) return true;
        for (Elem y = 0; y < n; ++y) {
            if (used[y] || cb[y] != ca[pick]) continue;
            map[pick] = y;
            used[y] = 1;
            if (consistent(map) && extend(map, used)) return true;
            map[pick] = kNone;
            used[y] = 0;
        }
        return false;
    }

    const BbiModel& a_;
    const BbiModel& b_;
    const std::vector<Elem>* inva_;
    const std::vector<Elem>* invb_;
    std::vector<std::pair<Elem, Elem>> fixed_;
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const ResourceModel& a, const ResourceModel& b) {
    if (a.size() != b.size()) return std::nullopt;
    IsoSearch s(a, b, &a.inv_table(), &b.inv_table(),
                {{a.unit(), b.unit()}, {a.infinity(), b.infinity()}});
    return s.run();
}

std::optional<std::vector<Elem>> find_isomorphism(const BbiModel& a, const BbiModel& b) {
    if (a.size() != b.size()) return std::nullopt;
    IsoSearch s(a, b, nullptr, nullptr, {{a.unit(), b.unit()}});
    return s.run();
}

}  // namespace cbi
