#pragma once

// Shared helpers for the test suites and the acceptance runner.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cbi/builders.hpp"
#include "cbi/formula.hpp"
#include "cbi/model.hpp"
#include "cbi/proof.hpp"
#include "cbi/semantics.hpp"
#include "cbi/structure.hpp"

namespace cbi::test {

std::string fixture_path(const std::string& rel);

struct NamedModel {
    std::string name;
    ResourceModel model;
};

// Small models used by property suites: z_mod(n, m) for n <= 4, bitvec(1..2),
// powerset over {1} and {1,2}, one-action communication, the three-point
// relational model.  All have at most four points.
std::vector<NamedModel> small_fixtures();
// small_fixtures plus larger constructions (heaps, deny-guarantee, products,
// the BBI-extension of the nonconservativity model).
std::vector<NamedModel> all_fixtures();

ResourceModel relational_model();  // read from the fixture file
BbiModel nonconservative_model();

// Direct reading of the satisfaction clauses; shares no code with denote/sat
// beyond BbiModel::contains.
bool oracle_sat(const ResourceModel& m, const Environment& env, Elem r, const Formula& f);

// All environments over the given variables (2^(n*|vars|) of them).
std::vector<Environment> all_environments(std::size_t n, const std::vector<std::string>& vars);

// Every formula with exactly `size` nodes over the given variables and the
// four constants.
std::vector<Formula> formulas_of_size(int size, const std::vector<std::string>& vars);
std::vector<Formula> formulas_up_to(int size, const std::vector<std::string>& vars);

Formula random_formula(std::mt19937_64& rng, int max_size, const std::vector<std::string>& vars);
Structure random_structure(std::mt19937_64& rng, int max_size);
Consecution random_consecution(std::mt19937_64& rng, int max_size);

// negation_swap, lax_wand_axiom, cowand_or, par_round_trip
const std::vector<std::string>& proof_fixtures();
Proof load_proof(const std::string& name);

// Ten CBI-valid biconditionals relating the multiplicative connectives, at F, G.
std::vector<Formula> equivalence_schemata(const Formula& f, const Formula& g);

// Deny-guarantee permissions over one action, written out directly, and the
// componentwise square of a model.
ResourceModel fraction_table(unsigned k);
ResourceModel square(const ResourceModel& f);

}  // namespace cbi::test
