#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cbi/formula.hpp"
#include "cbi/model.hpp"
#include "cbi/semantics.hpp"

namespace cbi {

// Unit, Inf, Inv, Comp and CoWand are diamond modalities: Inv is monotone,
// CoWand is monotone in both arguments.
enum class MOp { Var, Top, Bot, Not, And, Or, Imp, Unit, Inf, Inv, Comp, CoWand };

class ModalFormula {
public:
    ModalFormula();  // Top

    static ModalFormula var(std::string name);
    static ModalFormula constant(MOp op);
    static ModalFormula unary(MOp op, ModalFormula a);
    static ModalFormula binary(MOp op, ModalFormula a, ModalFormula b);

    MOp op() const { return node_->op; }
    const std::string& name() const { return node_->name; }
    const ModalFormula& child() const { return node_->kids.at(0); }
    const ModalFormula& left() const { return node_->kids.at(0); }
    const ModalFormula& right() const { return node_->kids.at(1); }
    const std::vector<ModalFormula>& kids() const { return node_->kids; }

    friend bool operator==(const ModalFormula& a, const ModalFormula& b);
    friend bool operator!=(const ModalFormula& a, const ModalFormula& b) { return !(a == b); }

private:
    struct Node {
        MOp op;
        std::string name;
        std::vector<ModalFormula> kids;
    };
    explicit ModalFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// ASCII: E, INF, prefix -., infix o and o- at the level of *.
ModalFormula parse_modal(const std::string& text);
std::string render(const ModalFormula& a, Style style = Style::Ascii);
std::set<std::string> vars(const ModalFormula& a);

class FrameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FrameTables;

// An unconstrained frame: comp (x,y,z) means z in x o y, cowand (x,y,z)
// means z in x o- y, inv[x] is the set -x.
class MLFrame {
public:
    MLFrame() = default;
    MLFrame(std::vector<std::string> names, std::vector<Triple> comp, std::vector<Triple> cowand,
            std::vector<Elem> unit_set, std::vector<std::vector<Elem>> inv, std::vector<Elem> infinity_set,
            std::string label = "");

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Elem x) const { return names_.at(x); }
    std::optional<Elem> find(const std::string& n) const;
    const std::vector<Triple>& comp() const { return comp_; }
    const std::vector<Triple>& cowand() const { return cowand_; }
    const std::vector<Elem>& unit_set() const { return unit_set_; }
    const std::vector<Elem>& infinity_set() const { return infinity_set_; }
    const std::vector<Elem>& inv(Elem x) const { return inv_.at(x); }
    const std::vector<std::vector<Elem>>& inv_table() const { return inv_; }
    const std::string& label() const { return label_; }
    bool unitary() const { return unit_set_.size() == 1; }

    Bits unit_bits() const;
    Bits infinity_bits() const;
    // Relation images as bitsets, built once at construction.
    const FrameTables& tables() const;

    friend bool operator==(const MLFrame& a, const MLFrame& b);

private:
    std::vector<std::string> names_;
    std::vector<Triple> comp_, cowand_;
    std::vector<Elem> unit_set_, infinity_set_;
    std::vector<std::vector<Elem>> inv_;
    std::string label_;
    std::shared_ptr<const FrameTables> tables_;
};

bool msat(const MLFrame& fr, const Environment& env, Elem r, const ModalFormula& a);
Bits mdenote(const MLFrame& fr, const Environment& env, const ModalFormula& a);
// Truth at every point under every environment over the formula's variables.
TruthResult modal_truth(const MLFrame& fr, const ModalFormula& a, TruthBudget budget = {});

inline constexpr int kAxiomCount = 11;
ModalFormula axiom(int id);  // 1..11

struct AxiomCheck {
    bool holds = true;
    std::optional<Environment> witness_env;
    std::optional<Elem> witness_point;
};

struct AxiomReport {
    std::array<AxiomCheck, kAxiomCount> axioms;  // index id-1
    bool unitary = false;
    bool sampled = false;  // instantiations were sampled rather than enumerated
    int passed() const;
    bool all() const { return passed() == kAxiomCount; }
    std::optional<int> first_failure() const;
};

struct AxiomCheckOptions {
    // Larger carriers switch to sampling; 8^n instantiations otherwise.
    std::size_t exhaustive_max_size = 6;
    std::size_t samples = 20000;
    std::uint64_t seed = 1;
};

AxiomReport check_axioms(const MLFrame& fr, const AxiomCheckOptions& opts = {});
// Checks only the listed axioms (ids 1..11).
AxiomReport check_axioms(const MLFrame& fr, const std::vector<int>& ids, const AxiomCheckOptions& opts = {});

bool is_very_simple_sahlqvist(const ModalFormula& a);

ModalFormula embed_formula(const Formula& f);
Formula revembed_formula(const ModalFormula& a);
// The composite revembed(embed(f)) computed directly by its own recursion.
Formula embed_round_trip_table(const Formula& f);

MLFrame embed_model(const ResourceModel& m);
// Throws FrameError unless the frame is unitary and satisfies every axiom.
ResourceModel extract_cbi(const MLFrame& fr);
// One unitary frame per unit, restricted to the points that compose with it.
std::vector<MLFrame> decompose_unitary(const MLFrame& fr);
// Renames points apart ("l.x", "r.x") and takes the union of all relations.
MLFrame frame_union(const MLFrame& a, const MLFrame& b);

using json = nlohmann::json;
json to_json(const MLFrame& fr);
MLFrame frame_from_json(const json& j);
json to_json(const AxiomReport& r, const MLFrame& fr);

}  // namespace cbi
