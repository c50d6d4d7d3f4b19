// Command-line front end.  Exit status: 0 success/holds, 1 property fails,
// countermodel found, proof rejected or search exhausted, 2 usage or input error.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "cbi/builders.hpp"
#include "cbi/modal.hpp"
#include "cbi/model_json.hpp"
#include "cbi/proof.hpp"
#include "cbi/search.hpp"
#include "cbi/search_models.hpp"

using namespace cbi;

namespace {

enum Status { kOk = 0, kFails = 1, kInputError = 2 };

struct Input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool g_json = false;

void emit(const json& j, const std::string& human) {
    if (g_json) std::cout << j.dump(2) << "\n";
    else std::cout << human;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

unsigned to_unsigned(const std::string& s) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return unsigned(v);
    } catch (const std::logic_error&) {
        throw Input("expected a non-negative integer, got '" + s + "'");
    }
}

Formula formula_arg(const std::string& text) { return parse_formula(text, ParseOptions{true}); }

Style style_arg(const std::string& s) {
    if (s == "ascii") return Style::Ascii;
    if (s == "unicode") return Style::Unicode;
    if (s == "latex") return Style::Latex;
    throw Input("unknown rendering '" + s + "' (ascii, unicode, latex)");
}

// A CBI-model when the document has an involution, a BBI-model otherwise.
struct AnyModel {
    std::optional<ResourceModel> cbi;
    BbiModel bbi;
    const BbiModel& base() const { return cbi ? static_cast<const BbiModel&>(*cbi) : bbi; }
};

AnyModel load_model(const std::string& path) {
    json j = read_json_file(path);
    AnyModel m;
    if (j.contains("infinity") || j.contains("inv")) {
        m.cbi = model_from_json(j);
    } else {
        m.bbi = bbi_model_from_json(j);
    }
    return m;
}

std::string set_text(const BbiModel& m, const Environment& env) {
    std::string out;
    for (const auto& [p, s] : env) out += " " + p + "=" + render_set(m, s);
    return out.empty() ? " (empty environment)" : out;
}

// ------------------------------------------------------------ parse

int cmd_parse(const std::string& text, const std::string& style) {
    Formula f = formula_arg(text);
    json j{{"ascii", render(f)}, {"unicode", render(f, Style::Unicode)}, {"latex", render(f, Style::Latex)},
           {"size", f.size()}};
    emit(j, render(f, style_arg(style)) + "\n");
    return kOk;
}

// ------------------------------------------------------------ model

const std::vector<std::pair<std::string, std::string>> kBuilders = {
    {"abelian", "abelian <n1> [n2 ...]     product of cyclic groups Z_n1 x Z_n2 ..."},
    {"zmod", "zmod <n> <m>               integers mod n, infinity m"},
    {"bitvec", "bitvec <n>                 n-bit vectors under xor"},
    {"powerset", "powerset <a> [b ...]       subsets of the universe"},
    {"action", "action <a> [b ...]         action communication"},
    {"heap", "heap <l1,l2..> <v1,v2..>   generalised heaps"},
    {"denyguar", "denyguar <a1,a2..> <k>     deny-guarantee permissions"},
    {"union", "union <a.json> <b.json>    disjoint union"},
    {"product", "product <a.json> <b.json>.. generalised product"},
    {"bbiext", "bbiext <bbi.json>          CBI-extension of a BBI-model"},
};

ResourceModel abelian(const std::vector<unsigned>& orders) {
    std::vector<std::vector<unsigned>> elems{{}};
    for (unsigned n : orders) {
        if (n == 0) throw Input("group orders must be positive");
        std::vector<std::vector<unsigned>> next;
        for (const auto& e : elems)
            for (unsigned i = 0; i < n; ++i) {
                auto f = e;
                f.push_back(i);
                next.push_back(f);
            }
        elems = next;
    }
    auto index = [&](const std::vector<unsigned>& v) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) k = k * orders[i] + v[i];
        return k;
    };
    std::vector<std::string> names;
    for (const auto& e : elems) {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "." : "") + std::to_string(e[i]);
        names.push_back(s);
    }
    std::vector<std::vector<std::size_t>> op(elems.size(), std::vector<std::size_t>(elems.size()));
    std::vector<std::size_t> inverse(elems.size());
    for (std::size_t a = 0; a < elems.size(); ++a) {
        std::vector<unsigned> neg(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) neg[i] = (orders[i] - elems[a][i]) % orders[i];
        inverse[a] = index(neg);
        for (std::size_t b = 0; b < elems.size(); ++b) {
            std::vector<unsigned> sum(orders.size());
            for (std::size_t i = 0; i < orders.size(); ++i) sum[i] = (elems[a][i] + elems[b][i]) % orders[i];
            op[a][b] = index(sum);
        }
    }
    return from_abelian_group(names, op, 0, inverse);
}

ResourceModel build_model(const std::string& name, const std::vector<std::string>& args) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) throw Input("wrong number of parameters for '" + name + "'");
    };
    if (name == "abelian") {
        need(1, 8);
        std::vector<unsigned> orders;
        for (const auto& a : args) orders.push_back(to_unsigned(a));
        return abelian(orders);
    }
    if (name == "zmod") {
        need(2, 2);
        return z_mod(to_unsigned(args[0]), to_unsigned(args[1]));
    }
    if (name == "bitvec") {
        need(1, 1);
        return bitvec(to_unsigned(args[0]));
    }
    if (name == "powerset") return powerset_model(args);
    if (name == "action") {
        need(1, 64);
        return action_comm(args);
    }
    if (name == "heap") {
        need(2, 2);
        return generalized_heap(split(args[0]), split(args[1]));
    }
    if (name == "denyguar") {
        need(2, 2);
        return deny_guarantee(split(args[0]), to_unsigned(args[1]));
    }
    if (name == "union") {
        need(2, 2);
        return disjoint_union(model_from_json(read_json_file(args[0])), model_from_json(read_json_file(args[1])));
    }
    if (name == "product") {
        need(1, 16);
        std::vector<ResourceModel> fs;
        for (const auto& a : args) fs.push_back(model_from_json(read_json_file(a)));
        return product_model(fs);
    }
    if (name == "bbiext") {
        need(1, 1);
        return bbi_extension(bbi_model_from_json(read_json_file(args[0])));
    }
    throw Input("unknown model family '" + name + "' (see 'model list')");
}

int cmd_model_build(const std::string& name, const std::vector<std::string>& args, const std::string& out) {
    ResourceModel m;
    try {
        m = build_model(name, args);
    } catch (const ConstructionError& e) {
        emit(json{{"ok", false}, {"error", e.what()}}, std::string("construction failed: ") + e.what() + "\n");
        return kFails;
    }
    json j = to_json(m);
    if (!out.empty()) {
        write_json_file(out, j);
        emit(json{{"ok", true}, {"output", out}, {"size", m.size()}},
             "wrote " + out + " (" + std::to_string(m.size()) + " elements)\n");
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kOk;
}

int cmd_model_list() {
    json j = json::array();
    std::string human;
    for (const auto& [name, usage] : kBuilders) {
        j.push_back({{"name", name}, {"usage", usage}});
        human += "  " + usage + "\n";
    }
    emit(j, human);
    return kOk;
}

int cmd_model_validate(const std::string& path) {
    AnyModel m = load_model(path);
    ValidationReport r = m.cbi ? validate_cbi(*m.cbi) : validate_bbi(m.bbi);
    json j = to_json(r);
    j["kind"] = m.cbi ? "cbi" : "bbi";
    j["size"] = m.base().size();
    std::string human = std::string(m.cbi ? "CBI" : "BBI") + "-model, " + std::to_string(m.base().size()) +
                        " elements: " + (r.ok ? "ok" : "INVALID") + "\n";
    for (const auto& f : r.failures) {
        human += "  " + f.axiom + " fails at (";
        for (std::size_t i = 0; i < f.witness.size(); ++i) human += (i ? ", " : "") + f.witness[i];
        human += ")\n";
    }
    emit(j, human);
    return r.ok ? kOk : kFails;
}

// ------------------------------------------------------------ eval

int cmd_eval(const std::string& path, const std::string& text, const std::string& env_path, const std::string& at,
             bool truth_flag) {
    AnyModel m = load_model(path);
    const BbiModel& base = m.base();
    Formula f = formula_arg(text);
    if (!at.empty() && truth_flag) throw Input("--at and --truth are exclusive");
    std::optional<Environment> env;
    if (!env_path.empty()) env = env_from_json(base, read_json_file(env_path));
    auto sat_at = [&](Elem r) { return m.cbi ? sat(*m.cbi, *env, r, f) : sat(m.bbi, *env, r, f); };

    if (!at.empty()) {
        auto r = base.find(at);
        if (!r) throw Input("'" + at + "' is not an element of the model");
        if (!env) env = Environment{};
        bool v = sat_at(*r);
        emit(json{{"formula", render(f)}, {"point", at}, {"value", v}, {"env", to_json(base, *env)}},
             render(f, Style::Unicode) + " at " + at + ": " + (v ? "true" : "false") + "\n");
        return v ? kOk : kFails;
    }
    if (env) {
        // every point, this environment
        Bits d = m.cbi ? denote(*m.cbi, *env, f) : denote(m.bbi, *env, f);
        json j{{"formula", render(f)}, {"env", to_json(base, *env)}, {"verdict", d.all() ? "true" : "false"}};
        std::string human = render(f, Style::Unicode) + " under" + set_text(base, *env) + ": ";
        if (d.all()) {
            human += "true at every point\n";
        } else {
            Elem w = Elem(Bits(d).flip().find_first());
            j["witness"] = {{"point", base.name(w)}};
            human += "false, witness " + base.name(w) + "\n";
        }
        emit(j, human);
        return d.all() ? kOk : kFails;
    }
    TruthResult t = m.cbi ? truth(*m.cbi, f) : truth(m.bbi, f);
    json j{{"formula", render(f)}, {"verdict", to_string(t.verdict)}, {"assignments", t.assignments}};
    std::string human = render(f, Style::Unicode) + ": " + to_string(t.verdict);
    if (t.verdict == Verdict::False) {
        j["witness"] = {{"point", base.name(*t.point)}, {"env", to_json(base, *t.env)}};
        human += ", witness " + base.name(*t.point) + " under" + set_text(base, *t.env);
    }
    emit(j, human + "\n");
    return t.verdict == Verdict::True ? kOk : kFails;
}

// ------------------------------------------------------------ countermodel

int cmd_countermodel(const std::string& text, unsigned max_size, const std::string& families) {
    Formula f = formula_arg(text);
    CountermodelBudget b;
    b.max_enumerated_size = max_size;
    b.families = split(families);
    for (const auto& fam : b.families) {
        auto all = countermodel_families();
        if (std::find(all.begin(), all.end(), fam) == all.end()) throw Input("unknown family '" + fam + "'");
    }
    CountermodelResult r = countermodel_search(f, b);
    json j{{"formula", render(f)}, {"found", r.found}, {"models_checked", r.models_checked},
           {"indeterminate", r.indeterminate}};
    std::string human;
    if (r.found) {
        j["family"] = r.family;
        j["model"] = to_json(r.model);
        j["point"] = r.model.name(r.point);
        j["env"] = to_json(r.model, r.env);
        human = "countermodel (" + r.family + "), " + std::to_string(r.model.size()) + " elements, false at " +
                r.model.name(r.point) + " under" + set_text(r.model, r.env) + "\n" + to_json(r.model).dump(2) + "\n";
    } else {
        j["status"] = "exhausted";
        human = "exhausted: no countermodel among " + std::to_string(r.models_checked) + " models\n";
    }
    emit(j, human);
    return kFails;
}

// ------------------------------------------------------------ proof

void print_proof(const Proof& p, int indent, std::string& out) {
    out += std::string(indent * 2, ' ') + render(p.conclusion) + "    [" + to_string(p.rule);
    if (p.direction) out += " " + to_string(*p.direction);
    if (!p.trace.empty()) {
        out += ":";
        for (const auto& s : p.trace) out += " " + to_string(s);
    }
    out += "]\n";
    for (const auto& q : p.premises) print_proof(q, indent + 1, out);
}

json report_json(const ProofReport& r) {
    json errs = json::array();
    for (const auto& e : r.errors) errs.push_back({{"node", e.node}, {"message", e.message}});
    return {{"ok", r.ok}, {"cut_free", r.cut_free}, {"subformula_ok", r.subformula_ok}, {"errors", errs}};
}

int cmd_proof_check(const std::string& path) {
    Proof p;
    try {
        p = proof_from_json(read_json_file(path));
    } catch (const std::invalid_argument& e) {
        throw Input(std::string("malformed proof: ") + e.what());
    }
    ProofReport r = check_proof(p);
    json j = report_json(r);
    j["nodes"] = p.node_count();
    j["conclusion"] = render(p.conclusion);
    std::string human = render(p.conclusion, Style::Unicode) + ": " + (r.ok ? "ok" : "REJECTED") +
                        (r.cut_free ? ", cut-free" : ", uses cut") +
                        (r.subformula_ok ? ", subformula property holds" : "") + " (" +
                        std::to_string(p.node_count()) + " nodes)\n";
    for (const auto& e : r.errors) human += "  " + e.node + ": " + e.message + "\n";
    emit(j, human);
    return r.ok ? kOk : kFails;
}

int cmd_proof_prove(const std::string& text, int depth, std::uint64_t budget) {
    Consecution c = parse_consecution(text);
    SearchConfig cfg;
    if (depth < 1) throw Input("--depth must be at least 1");
    cfg.depth = depth;
    cfg.node_budget = budget;
    SearchOutcome o = prove(c, cfg);
    json stats{{"nodes", o.stats.nodes},
               {"pruned_semantic", o.stats.pruned_semantic},
               {"pruned_loop", o.stats.pruned_loop},
               {"pruned_formula_free", o.stats.pruned_formula_free},
               {"depth_completed", o.stats.depth_completed},
               {"budget_exhausted", o.stats.budget_exhausted},
               {"millis", o.stats.millis}};
    json j{{"conclusion", render(c)}, {"status", o.proved ? "proved" : "exhausted"}, {"stats", stats}};
    std::string human;
    if (o.proved) {
        j["proof"] = proof_to_json(*o.proof);
        human = "proved (" + std::to_string(o.proof->node_count()) + " nodes, " + std::to_string(o.stats.nodes) +
                " searched)\n";
        print_proof(*o.proof, 1, human);
    } else {
        human = "exhausted at depth " + std::to_string(depth) + " after " + std::to_string(o.stats.nodes) +
                " nodes" + (o.stats.budget_exhausted ? " (node budget hit)" : "") + "\n";
    }
    emit(j, human);
    return o.proved ? kOk : kFails;
}

int cmd_proof_identity(const std::string& text) {
    Formula f = formula_arg(text);
    Proof p = identity_proof(f);
    std::string human;
    print_proof(p, 0, human);
    emit(proof_to_json(p), human);
    return kOk;
}

int cmd_proof_audit() {
    AuditReport r = audit_belnap_conditions();
    json conds = json::object();
    std::string human;
    for (const char* c : {"C1", "C3", "C4", "C5"}) {
        conds[c] = r.passes(c);
        human += std::string(c) + ": " + (r.passes(c) ? "pass" : "FAIL") + "\n";
    }
    json v = json::array();
    for (const auto& e : r.violations) {
        v.push_back({{"rule", e.rule}, {"direction", e.direction}, {"condition", e.condition}, {"detail", e.detail}});
        human += "  " + e.rule + (e.direction.empty() ? "" : " " + e.direction) + " " + e.condition + ": " +
                 e.detail + "\n";
    }
    human += std::to_string(r.checked.size()) + " rule directions checked\n";
    emit(json{{"conditions", conds}, {"violations", v}, {"checked", r.checked.size()}}, human);
    return r.ok() ? kOk : kFails;
}

// ------------------------------------------------------------ modal

int cmd_modal_embed(const std::string& text) {
    Formula f = formula_arg(text);
    ModalFormula a = embed_formula(f);
    emit(json{{"formula", render(f)}, {"embedded", render(a)}, {"unicode", render(a, Style::Unicode)}},
         render(a) + "\n");
    return kOk;
}

int cmd_modal_embed_model(const std::string& path, const std::string& out) {
    ResourceModel m = model_from_json(read_json_file(path));
    json j = to_json(embed_model(m));
    if (!out.empty()) {
        write_json_file(out, j);
        emit(json{{"output", out}}, "wrote " + out + "\n");
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kOk;
}

int cmd_modal_check_axioms(const std::string& path) {
    MLFrame fr;
    try {
        fr = frame_from_json(read_json_file(path));
    } catch (const FrameError& e) {
        throw Input(e.what());
    }
    AxiomReport r = check_axioms(fr);
    std::string human = std::to_string(r.passed()) + "/" + std::to_string(kAxiomCount) + " axioms hold, " +
                        (r.unitary ? "unitary" : "not unitary") + (r.sampled ? " (instantiations sampled)" : "") +
                        "\n";
    for (int i = 0; i < kAxiomCount; ++i) {
        const auto& c = r.axioms[i];
        if (c.holds) continue;
        std::string env;
        for (const auto& [p, s] : *c.witness_env) {
            env += " " + p + "={";
            bool first = true;
            for (Elem x = 0; x < fr.size(); ++x)
                if (s.test(x)) {
                    env += (first ? "" : ",") + fr.name(x);
                    first = false;
                }
            env += "}";
        }
        human += "  axiom " + std::to_string(i + 1) + " (" + render(axiom(i + 1)) + ") fails at " +
                 fr.name(*c.witness_point) + " under" + env + "\n";
    }
    emit(to_json(r, fr), human);
    return r.all() ? kOk : kFails;
}

int cmd_modal_sahlqvist(const std::string& text) {
    ModalFormula a = parse_modal(text);
    bool ok = is_very_simple_sahlqvist(a);
    emit(json{{"formula", render(a)}, {"very_simple_sahlqvist", ok}}, std::string(ok ? "true" : "false") + "\n");
    return ok ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical BI workbench: formulas, models, display proofs and the modal translation"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "machine-readable output");

    std::function<int()> run;

    std::string text, style = "unicode", path, env_path, at, out, families, name;
    std::vector<std::string> params;
    bool truth_flag = false;
    unsigned max_size = 3;
    int depth = 20;
    std::uint64_t node_budget = 5'000'000;

    auto* parse = app.add_subcommand("parse", "parse and render a formula");
    parse->add_option("formula", text)->required();
    parse->add_option("--render", style, "ascii | unicode | latex");
    parse->callback([&] { run = [&] { return cmd_parse(text, style); }; });

    auto* model = app.add_subcommand("model", "build, validate and list models");
    model->require_subcommand(1);
    auto* validate = model->add_subcommand("validate", "check the model axioms");
    validate->add_option("model", path)->required();
    validate->callback([&] { run = [&] { return cmd_model_validate(path); }; });
    auto* build = model->add_subcommand("build", "construct a model (see 'model list')");
    build->add_option("name", name)->required();
    build->add_option("params", params);
    build->add_option("-o,--output", out, "write the model here instead of stdout");
    build->callback([&] { run = [&] { return cmd_model_build(name, params, out); }; });
    auto* list = model->add_subcommand("list", "available model families");
    list->callback([&] { run = [&] { return cmd_model_list(); }; });

    auto* eval = app.add_subcommand("eval", "evaluate a formula in a model");
    eval->add_option("model", path)->required();
    eval->add_option("formula", text)->required();
    eval->add_option("--env", env_path, "environment file {\"P\": [ids]}");
    eval->add_option("--at", at, "a single point");
    eval->add_flag("--truth", truth_flag, "every point (and every environment unless --env is given)");
    eval->callback([&] { run = [&] { return cmd_eval(path, text, env_path, at, truth_flag); }; });

    auto* cm = app.add_subcommand("countermodel", "search for a model falsifying a formula");
    cm->add_option("formula", text)->required();
    cm->add_option("--max-size", max_size, "largest exhaustively enumerated carrier");
    cm->add_option("--families", families, "comma-separated families to try");
    cm->callback([&] { run = [&] { return cmd_countermodel(text, max_size, families); }; });

    auto* proof = app.add_subcommand("proof", "check, search and audit display proofs");
    proof->require_subcommand(1);
    auto* check = proof->add_subcommand("check", "check a proof document");
    check->add_option("proof", path)->required();
    check->callback([&] { run = [&] { return cmd_proof_check(path); }; });
    auto* prv = proof->add_subcommand("prove", "bounded cut-free proof search");
    prv->add_option("consecution", text, "\"<structure> |- <structure>\"")->required();
    prv->add_option("--depth", depth, "rule applications per branch");
    prv->add_option("--node-budget", node_budget, "give up after this many search nodes");
    prv->callback([&] { run = [&] { return cmd_proof_prove(text, depth, node_budget); }; });
    auto* ident = proof->add_subcommand("identity", "cut-free proof of F |- F");
    ident->add_option("formula", text)->required();
    ident->callback([&] { run = [&] { return cmd_proof_identity(text); }; });
    auto* audit = proof->add_subcommand("audit", "Belnap conditions over the rule table");
    audit->callback([&] { run = [&] { return cmd_proof_audit(); }; });

    auto* modal = app.add_subcommand("modal", "the modal-logic translation");
    modal->require_subcommand(1);
    auto* emb = modal->add_subcommand("embed", "translate a formula into modal logic");
    emb->add_option("formula", text)->required();
    emb->callback([&] { run = [&] { return cmd_modal_embed(text); }; });
    auto* embm = modal->add_subcommand("embed-model", "the frame of a CBI-model");
    embm->add_option("model", path)->required();
    embm->add_option("-o,--output", out);
    embm->callback([&] { run = [&] { return cmd_modal_embed_model(path, out); }; });
    auto* ax = modal->add_subcommand("check-axioms", "check the eleven frame axioms");
    ax->add_option("frame", path)->required();
    ax->callback([&] { run = [&] { return cmd_modal_check_axioms(path); }; });
    auto* sq = modal->add_subcommand("sahlqvist", "very simple Sahlqvist shape test");
    sq->add_option("formula", text)->required();
    sq->callback([&] { run = [&] { return cmd_modal_sahlqvist(text); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        if (g_json) std::cout << json{{"error", e.what()}, {"offset", e.offset()}}.dump(2) << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        // malformed files, unknown names, bad parameters
        std::cerr << "error: " << e.what() << "\n";
        if (g_json) std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return kInputError;
    }
}
