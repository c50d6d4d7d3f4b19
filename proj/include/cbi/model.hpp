#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cbi {

using Elem = std::uint32_t;
using Bits = boost::dynamic_bitset<>;
using Triple = std::array<Elem, 3>;  // (x, y, z) means z in x o y

class MalformedModel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Relational commutative monoid candidate.  Nothing is assumed about the
// triples beyond range; validate_bbi decides whether the laws hold.
class BbiModel {
public:
    BbiModel() = default;
    BbiModel(std::vector<std::string> names, Elem unit, std::vector<Triple> triples,
             std::string label = "");

    std::size_t size() const { return names_.size(); }
    const std::string& name(Elem x) const { return names_.at(x); }
    const std::vector<std::string>& names() const { return names_; }
    Elem index(const std::string& name) const;
    std::optional<Elem> find(const std::string& name) const;
    Elem unit() const { return unit_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    const std::vector<Elem>& compose(Elem x, Elem y) const { return table_[x * size() + y]; }
    bool contains(Elem x, Elem y, Elem z) const;
    // All (x, y) with z in x o y.
    const std::vector<std::pair<Elem, Elem>>& splits(Elem z) const { return splits_[z]; }
    const std::vector<Triple>& triples() const { return triples_; }

    Bits empty_set() const { return Bits(size()); }
    Bits full_set() const { return Bits(size()).set(); }

private:
    std::vector<std::string> names_;
    std::map<std::string, Elem> index_;
    Elem unit_ = 0;
    std::vector<Triple> triples_;
    std::vector<std::vector<Elem>> table_;
    std::vector<std::vector<std::pair<Elem, Elem>>> splits_;
    std::string label_;
};

class ResourceModel : public BbiModel {
public:
    ResourceModel() = default;
    ResourceModel(std::vector<std::string> names, Elem unit, Elem infinity, std::vector<Elem> inv,
                  std::vector<Triple> triples, std::string label = "");

    Elem infinity() const { return infinity_; }
    Elem inv(Elem x) const { return inv_.at(x); }
    const std::vector<Elem>& inv_table() const { return inv_; }

private:
    Elem infinity_ = 0;
    std::vector<Elem> inv_;
};

// Adds (y, x, z) for every (x, y, z); sorted and deduplicated.
std::vector<Triple> commutative_closure(std::vector<Triple> triples);

struct Failure {
    std::string axiom;
    std::vector<std::string> witness;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Failure> failures;
    void add(std::string axiom, std::vector<std::string> witness);
};

ValidationReport validate_bbi(const BbiModel& m);
ValidationReport validate_cbi(const ResourceModel& m);

bool is_partial_functional(const BbiModel& m);
bool is_effect_algebra(const ResourceModel& m);
// x o inf is empty for every x other than the unit.
bool infinity_nonextensible(const ResourceModel& m);

// Structural equality: same names in the same order, same unit/infinity/inv/triples.
bool same_model(const ResourceModel& a, const ResourceModel& b);

// A bijection f with f(unit)=unit, f(inf)=inf, f(inv x)=inv f(x) and
// (x,y,z) in comp iff (fx,fy,fz) in comp.
std::optional<std::vector<Elem>> find_isomorphism(const ResourceModel& a, const ResourceModel& b);
std::optional<std::vector<Elem>> find_isomorphism(const BbiModel& a, const BbiModel& b);

}  // namespace cbi
