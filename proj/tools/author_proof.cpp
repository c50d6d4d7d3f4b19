// Development helper: fills in missing DisplayEq traces of a proof script by
// breadth-first search and writes the fully tagged proof JSON.
//   author_proof <script.json> <out.json> [max_steps]

#include <iostream>

#include "cbi/model_json.hpp"
#include "cbi/proof.hpp"

using namespace cbi;

namespace {

std::size_t g_max_steps = 10;

void fill(Proof& p, const std::string& where) {
    for (std::size_t i = 0; i < p.premises.size(); ++i) fill(p.premises[i], where + "." + std::to_string(i));
    if (p.rule != Rule::DisplayEq || !p.trace.empty() || p.premises.size() != 1) return;
    auto t = find_display_trace(p.conclusion, p.premises[0].conclusion, g_max_steps);
    if (!t) throw std::runtime_error(where + ": no display trace from " + render(p.conclusion) + " to " +
                                     render(p.premises[0].conclusion));
    p.trace = *t;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: author_proof <script.json> <out.json> [max_steps]\n";
        return 2;
    }
    if (argc > 3) g_max_steps = std::stoul(argv[3]);
    try {
        Proof p = proof_from_json(read_json_file(argv[1]));
        fill(p, "root");
        ProofReport r = check_proof(p);
        for (const auto& e : r.errors) std::cerr << e.node << ": " << e.message << "\n";
        write_json_file(argv[2], proof_to_json(p));
        std::cout << "ok=" << r.ok << " cut_free=" << r.cut_free << " subformula_ok=" << r.subformula_ok
                  << " nodes=" << p.node_count() << "\n";
        return r.ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
