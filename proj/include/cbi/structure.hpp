#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cbi/formula.hpp"
#include "cbi/model.hpp"
#include "cbi/semantics.hpp"

namespace cbi {

enum class SKind { Leaf, AEmpty, MEmpty, Sharp, Flat, Semi, Comma };

class Structure {
public:
    Structure();  // the additive empty structure
    static Structure leaf(Formula f);
    static Structure aempty();
    static Structure mempty();
    static Structure sharp(Structure a);
    static Structure flat(Structure a);
    static Structure semi(Structure a, Structure b);
    static Structure comma(Structure a, Structure b);

    SKind kind() const { return node_->kind; }
    const Formula& formula() const { return node_->formula; }
    const Structure& child() const { return node_->kids.at(0); }
    const Structure& left() const { return node_->kids.at(0); }
    const Structure& right() const { return node_->kids.at(1); }
    const std::vector<Structure>& kids() const { return node_->kids; }
    std::size_t size() const { return node_->size; }

    bool is_unary() const { return kind() == SKind::Sharp || kind() == SKind::Flat; }
    bool is_binary() const { return kind() == SKind::Semi || kind() == SKind::Comma; }

    friend bool operator==(const Structure& a, const Structure& b);
    friend bool operator!=(const Structure& a, const Structure& b) { return !(a == b); }
    friend bool operator<(const Structure& a, const Structure& b);

private:
    struct Node {
        SKind kind;
        Formula formula;
        std::vector<Structure> kids;
        std::size_t size;
    };
    explicit Structure(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Consecution {
    Structure lhs;
    Structure rhs;
    friend bool operator==(const Consecution& a, const Consecution& b) {
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
    friend bool operator!=(const Consecution& a, const Consecution& b) { return !(a == b); }
    friend bool operator<(const Consecution& a, const Consecution& b) {
        if (a.lhs != b.lhs) return a.lhs < b.lhs;
        return a.rhs < b.rhs;
    }
};

enum class Side { Lhs, Rhs };
enum class Step { IntoSharp, IntoFlat, Left, Right };

struct Path {
    Side side = Side::Lhs;
    std::vector<Step> steps;
    friend bool operator==(const Path& a, const Path& b) { return a.side == b.side && a.steps == b.steps; }
};

enum class Part { Antecedent, Consequent };

class DanglingPath : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Consecution parse_consecution(const std::string& text);
Structure parse_structure(const std::string& text);
std::string render(const Structure& s, Style style = Style::Ascii);
std::string render(const Consecution& c, Style style = Style::Ascii);
std::string render(const Path& p);

// Psi and Upsilon: the formula read off an antecedent / consequent structure.
Formula ant_formula(const Structure& x);
Formula con_formula(const Structure& x);
Formula consecution_formula(const Consecution& c);

TruthResult consecution_truth(const ResourceModel& m, const Consecution& c, TruthBudget budget = {});
bool consecution_valid_on(const ResourceModel& m, const Consecution& c, TruthBudget budget = {});

const Structure& at(const Consecution& c, const Path& p);
Consecution replace_at(const Consecution& c, const Path& p, const Structure& s);
Part classify_part(const Consecution& c, const Path& p);
std::vector<Path> all_paths(const Consecution& c);

// Every formula occurring as a leaf.
std::vector<Formula> leaf_formulas(const Consecution& c);

}  // namespace cbi
