#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbi/structure.hpp"

namespace cbi {

enum class Postulate { AD1a, AD1b, AD2a, AD2b, AD3a, AD3b, MD1a, MD1b, MD2a, MD2b, MD3a, MD3b };
enum class Direction { Forward, Backward };

struct PostulateStep {
    Postulate name;
    Direction dir = Direction::Forward;
    friend bool operator==(const PostulateStep& a, const PostulateStep& b) {
        return a.name == b.name && a.dir == b.dir;
    }
};

using Trace = std::vector<PostulateStep>;

const std::vector<Postulate>& all_postulates();
std::string to_string(Postulate p);
std::optional<Postulate> postulate_from_string(const std::string& s);
std::string to_string(Direction d);  // "fwd" / "bwd"
std::optional<Direction> direction_from_string(const std::string& s);
std::string to_string(const PostulateStep& s);

// Source and target schemata; forward rewrites source to target.
const Consecution& postulate_source(Postulate p);
const Consecution& postulate_target(Postulate p);

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Consecution apply_postulate(const Consecution& c, const PostulateStep& step);
std::optional<Consecution> try_postulate(const Consecution& c, const PostulateStep& step);
Consecution replay(const Consecution& c, const Trace& trace);

struct Displayed {
    Consecution result;
    Trace trace;
};

// Brings the constituent at p to be the whole lhs (antecedent part) or the
// whole rhs (consequent part).
Displayed display_at(const Consecution& c, const Path& p);

// Breadth-first search for a postulate trace from one consecution to another.
std::optional<Trace> find_display_trace(const Consecution& from, const Consecution& to, std::size_t max_steps,
                                        std::size_t max_size = 64);

}  // namespace cbi
