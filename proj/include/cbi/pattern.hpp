#pragma once

// Rule schemata are ordinary consecutions read with a convention:
// leaves W, X, Y, Z stand for structures, F and G for formulas, P for a
// propositional variable.

#include <map>
#include <optional>
#include <string>

#include "cbi/structure.hpp"

namespace cbi {

struct Bindings {
    std::map<std::string, Structure> structures;
    std::map<std::string, Formula> formulas;
};

bool is_structure_var(const std::string& name);
bool is_formula_var(const std::string& name);
bool is_atom_var(const std::string& name);

// On failure, *where (if given) receives the first differing position.
bool match(const Consecution& pattern, const Consecution& c, Bindings& b, std::string* where = nullptr,
           const std::string& prefix = "");
Consecution instantiate(const Consecution& pattern, const Bindings& b);

}  // namespace cbi
