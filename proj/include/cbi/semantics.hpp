#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cbi/formula.hpp"
#include "cbi/model.hpp"

namespace cbi {

// Unmentioned variables denote the empty set.
using Environment = std::map<std::string, Bits>;

Bits lookup(const Environment& env, const std::string& p, std::size_t n);
// Same, for carriers of at most 64 points.
std::uint64_t lookup_word(const Environment& env, const std::string& p, std::size_t n);

// Pointwise satisfaction, one clause per connective.  BBI models reject the
// connectives that need an involution (~, coemp, |*).
bool sat(const ResourceModel& m, const Environment& env, Elem r, const Formula& f);
bool sat(const BbiModel& m, const Environment& env, Elem r, const Formula& f);

// The set of points satisfying f; agrees with sat everywhere.
Bits denote(const ResourceModel& m, const Environment& env, const Formula& f);
Bits denote(const BbiModel& m, const Environment& env, const Formula& f);

enum class Verdict { True, False, Indeterminate };
std::string to_string(Verdict v);

struct TruthResult {
    Verdict verdict = Verdict::True;
    std::optional<Environment> env;  // counterexample when False
    std::optional<Elem> point;
    std::uint64_t assignments = 0;   // environments examined
};

struct TruthBudget {
    std::uint64_t max_assignments = 1u << 22;
};

TruthResult truth(const ResourceModel& m, const Formula& f, TruthBudget budget = {});
TruthResult truth(const BbiModel& m, const Formula& f, TruthBudget budget = {});

std::string render_set(const BbiModel& m, const Bits& s);

}  // namespace cbi
