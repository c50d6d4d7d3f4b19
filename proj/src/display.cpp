#include "cbi/display.hpp"

#include <deque>
#include <map>

#include "cbi/pattern.hpp"

namespace cbi {

namespace {

struct PostulateDef {
    Postulate name;
    const char* text;
    const char* source;
    const char* target;
};

const PostulateDef kDefs[] = {
    {Postulate::AD1a, "AD1a", "X ; Y |- Z", "X |- #Y ; Z"},
    {Postulate::AD1b, "AD1b", "X |- #Y ; Z", "Y ; X |- Z"},
    {Postulate::AD2a, "AD2a", "X |- Y ; Z", "X ; #Y |- Z"},
    {Postulate::AD2b, "AD2b", "X ; #Y |- Z", "X |- Z ; Y"},
    {Postulate::AD3a, "AD3a", "X |- Y", "#Y |- #X"},
    {Postulate::AD3b, "AD3b", "#Y |- #X", "##X |- Y"},
    {Postulate::MD1a, "MD1a", "X , Y |- Z", "X |- %Y , Z"},
    {Postulate::MD1b, "MD1b", "X |- %Y , Z", "Y , X |- Z"},
    {Postulate::MD2a, "MD2a", "X |- Y , Z", "X , %Y |- Z"},
    {Postulate::MD2b, "MD2b", "X , %Y |- Z", "X |- Z , Y"},
    {Postulate::MD3a, "MD3a", "X |- Y", "%Y |- %X"},
    {Postulate::MD3b, "MD3b", "%Y |- %X", "%%X |- Y"},
};

struct Schema {
    Consecution source, target;
};

const std::vector<Schema>& schemata() {
    static const std::vector<Schema> s = [] {
        std::vector<Schema> out;
        for (const auto& d : kDefs) out.push_back({parse_consecution(d.source), parse_consecution(d.target)});
        return out;
    }();
    return s;
}

}  // namespace

const std::vector<Postulate>& all_postulates() {
    static const std::vector<Postulate> all = [] {
        std::vector<Postulate> v;
        for (const auto& d : kDefs) v.push_back(d.name);
        return v;
    }();
    return all;
}

std::string to_string(Postulate p) { return kDefs[static_cast<int>(p)].text; }

std::optional<Postulate> postulate_from_string(const std::string& s) {
    for (const auto& d : kDefs)
        if (s == d.text) return d.name;
    return std::nullopt;
}

std::string to_string(Direction d) { return d == Direction::Forward ? "fwd" : "bwd"; }

std::optional<Direction> direction_from_string(const std::string& s) {
    if (s == "fwd" || s == "forward") return Direction::Forward;
    if (s == "bwd" || s == "backward") return Direction::Backward;
    return std::nullopt;
}

std::string to_string(const PostulateStep& s) { return to_string(s.name) + " " + to_string(s.dir); }

const Consecution& postulate_source(Postulate p) { return schemata()[static_cast<int>(p)].source; }
const Consecution& postulate_target(Postulate p) { return schemata()[static_cast<int>(p)].target; }

std::optional<Consecution> try_postulate(const Consecution& c, const PostulateStep& step) {
    const Schema& s = schemata()[static_cast<int>(step.name)];
    const Consecution& from = step.dir == Direction::Forward ? s.source : s.target;
    const Consecution& to = step.dir == Direction::Forward ? s.target : s.source;
    Bindings b;
    if (!match(from, c, b)) return std::nullopt;
    return instantiate(to, b);
}

Consecution apply_postulate(const Consecution& c, const PostulateStep& step) {
    const Schema& s = schemata()[static_cast<int>(step.name)];
    const Consecution& from = step.dir == Direction::Forward ? s.source : s.target;
    const Consecution& to = step.dir == Direction::Forward ? s.target : s.source;
    Bindings b;
    std::string where;
    if (!match(from, c, b, &where))
        throw ShapeMismatch(to_string(step) + " expects " + render(from) + " but got " + render(c) + " (" + where + ")");
    return instantiate(to, b);
}

Consecution replay(const Consecution& c, const Trace& trace) {
    Consecution cur = c;
    for (const auto& s : trace) cur = apply_postulate(cur, s);
    return cur;
}

Displayed display_at(const Consecution& c, const Path& p) {
    at(c, p);  // dangling paths fail here
    const auto F = Direction::Forward;
    const auto B = Direction::Backward;
    Displayed d{c, {}};
    Side side = p.side;
    std::size_t i = 0;
    auto run = [&](std::initializer_list<PostulateStep> steps) {
        for (const auto& s : steps) {
            d.result = apply_postulate(d.result, s);
            d.trace.push_back(s);
        }
    };
    using P = Postulate;
    while (i < p.steps.size()) {
        Step st = p.steps[i++];
        if (side == Side::Lhs) {
            SKind k = d.result.lhs.kind();
            bool add = k == SKind::Semi;
            if (k == SKind::Semi || k == SKind::Comma) {
                P a = add ? P::AD1a : P::MD1a, b = add ? P::AD1b : P::MD1b;
                if (st == Step::Left) run({{a, F}});
                else run({{a, F}, {b, F}, {a, F}});
            } else {
                P a = k == SKind::Sharp ? P::AD3a : P::MD3a, b = k == SKind::Sharp ? P::AD3b : P::MD3b;
                run({{a, F}, {a, F}, {b, F}, {a, B}, {a, B}});
                side = Side::Rhs;
            }
        } else {
            SKind k = d.result.rhs.kind();
            bool add = k == SKind::Semi;
            if (k == SKind::Semi || k == SKind::Comma) {
                P a = add ? P::AD2a : P::MD2a, b = add ? P::AD2b : P::MD2b;
                if (st == Step::Right) run({{a, F}});
                else run({{a, F}, {b, F}, {a, F}});
            } else {
                P a = k == SKind::Sharp ? P::AD3a : P::MD3a, b = k == SKind::Sharp ? P::AD3b : P::MD3b;
                run({{a, F}, {b, B}, {a, B}});
                side = Side::Lhs;
            }
        }
    }
    return d;
}

std::optional<Trace> find_display_trace(const Consecution& from, const Consecution& to, std::size_t max_steps,
                                        std::size_t max_size) {
    if (from == to) return Trace{};
    std::map<Consecution, std::pair<Consecution, PostulateStep>> parent;
    std::deque<std::pair<Consecution, std::size_t>> queue{{from, 0}};
    parent.emplace(from, std::make_pair(from, PostulateStep{Postulate::AD1a, Direction::Forward}));
    while (!queue.empty()) {
        auto [c, depth] = queue.front();
        queue.pop_front();
        if (depth == max_steps) continue;
        for (Postulate p : all_postulates())
            for (Direction dir : {Direction::Forward, Direction::Backward}) {
                PostulateStep s{p, dir};
                auto n = try_postulate(c, s);
                if (!n || n->lhs.size() + n->rhs.size() > max_size || parent.count(*n)) continue;
                parent.emplace(*n, std::make_pair(c, s));
                if (*n == to) {
                    Trace t;
                    Consecution cur = *n;
                    while (cur != from) {
                        const auto& [prev, step] = parent.at(cur);
                        t.push_back(step);
                        cur = prev;
                    }
                    return Trace(t.rbegin(), t.rend());
                }
                queue.push_back({*n, depth + 1});
            }
    }
    return std::nullopt;
}

}  // namespace cbi
