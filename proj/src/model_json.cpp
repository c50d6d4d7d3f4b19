#include "cbi/model_json.hpp"

#include <fstream>
#include <map>

namespace cbi {

namespace {

std::string id_of(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw MalformedModel("element ids must be strings");
}

struct Parsed {
    std::vector<std::string> names;
    std::map<std::string, Elem> index;
    Elem unit = 0;
    std::vector<Triple> triples;
    std::string label;
};

Elem resolve(const Parsed& p, const json& v, const std::string& where) {
    std::string s = id_of(v);
    auto it = p.index.find(s);
    if (it == p.index.end()) throw MalformedModel(where + " mentions '" + s + "', which is not in the carrier");
    return it->second;
}

Parsed parse_common(const json& j) {
    if (!j.is_object()) throw MalformedModel("model document must be a JSON object");
    for (const char* key : {"carrier", "unit", "comp"})
        if (!j.contains(key)) throw MalformedModel(std::string("model is missing \"") + key + "\"");
    Parsed p;
    if (!j["carrier"].is_array() || j["carrier"].empty()) throw MalformedModel("carrier must be a nonempty array");
    for (const auto& v : j["carrier"]) {
        std::string s = id_of(v);
        if (!p.index.emplace(s, Elem(p.names.size())).second)
            throw MalformedModel("duplicate carrier element '" + s + "'");
        p.names.push_back(s);
    }
    p.unit = resolve(p, j["unit"], "unit");
    if (!j["comp"].is_array()) throw MalformedModel("comp must be an array of triples");
    for (const auto& t : j["comp"]) {
        if (!t.is_array() || t.size() != 3) throw MalformedModel("comp entries must be [x, y, z] triples");
        p.triples.push_back({resolve(p, t[0], "comp"), resolve(p, t[1], "comp"), resolve(p, t[2], "comp")});
    }
    bool closed = j.value("comp_closed", false);
    if (!closed) p.triples = commutative_closure(p.triples);
    p.label = j.value("label", std::string());
    return p;
}

json comp_json(const BbiModel& m) {
    // one orientation per unordered pair
    json comp = json::array();
    for (const auto& [x, y, z] : m.triples())
        if (x <= y || !m.contains(y, x, z)) comp.push_back({m.name(x), m.name(y), m.name(z)});
    return comp;
}

}  // namespace

ResourceModel model_from_json(const json& j) {
    Parsed p = parse_common(j);
    if (!j.contains("infinity")) throw MalformedModel("model is missing \"infinity\"");
    if (!j.contains("inv") || !j["inv"].is_object()) throw MalformedModel("inv must be an object id -> id");
    Elem inf = resolve(p, j["infinity"], "infinity");
    std::vector<Elem> inv(p.names.size(), Elem(-1));
    for (auto it = j["inv"].begin(); it != j["inv"].end(); ++it) {
        auto k = p.index.find(it.key());
        if (k == p.index.end()) throw MalformedModel("inv mentions '" + it.key() + "', which is not in the carrier");
        inv[k->second] = resolve(p, it.value(), "inv");
    }
    for (Elem x = 0; x < inv.size(); ++x)
        if (inv[x] == Elem(-1)) throw MalformedModel("inv is not defined on '" + p.names[x] + "'");
    return ResourceModel(p.names, p.unit, inf, inv, p.triples, p.label);
}

BbiModel bbi_model_from_json(const json& j) {
    Parsed p = parse_common(j);
    return BbiModel(p.names, p.unit, p.triples, p.label);
}

json to_json(const BbiModel& m) {
    json j;
    j["carrier"] = m.names();
    j["unit"] = m.name(m.unit());
    j["comp"] = comp_json(m);
    if (!m.label().empty()) j["label"] = m.label();
    return j;
}

json to_json(const ResourceModel& m) {
    json j = to_json(static_cast<const BbiModel&>(m));
    j["infinity"] = m.name(m.infinity());
    json inv = json::object();
    for (Elem x = 0; x < m.size(); ++x) inv[m.name(x)] = m.name(m.inv(x));
    j["inv"] = inv;
    return j;
}

json to_json(const ValidationReport& r) {
    json f = json::array();
    for (const auto& x : r.failures) f.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
    return {{"ok", r.ok}, {"failures", f}};
}

Environment env_from_json(const BbiModel& m, const json& j) {
    if (!j.is_object()) throw MalformedModel("environment must be an object var -> [ids]");
    Environment env;
    for (auto it = j.begin(); it != j.end(); ++it) {
        Bits s = m.empty_set();
        for (const auto& v : it.value()) {
            std::string id = id_of(v);
            auto e = m.find(id);
            if (!e) throw MalformedModel("environment mentions '" + id + "', which is not in the carrier");
            s.set(*e);
        }
        env[it.key()] = s;
    }
    return env;
}

json to_json(const BbiModel& m, const Environment& env) {
    json j = json::object();
    for (const auto& [p, s] : env) {
        json a = json::array();
        for (Elem x = 0; x < m.size(); ++x)
            if (s.test(x)) a.push_back(m.name(x));
        j[p] = a;
    }
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw MalformedModel(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace cbi
