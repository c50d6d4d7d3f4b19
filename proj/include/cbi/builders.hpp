#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbi/model.hpp"

namespace cbi {

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Largest carrier any builder will materialise.
inline constexpr std::size_t kDefaultCarrierCap = 4096;

// op[i][j] is the index of elements[i] + elements[j]; inverse[i] the index of -elements[i].
ResourceModel from_abelian_group(const std::vector<std::string>& elements,
                                 const std::vector<std::vector<std::size_t>>& op, std::size_t unit,
                                 const std::vector<std::size_t>& inverse);

ResourceModel z_mod(unsigned n, unsigned m);
ResourceModel bitvec(unsigned n);
ResourceModel powerset_model(const std::vector<std::string>& universe);
ResourceModel action_comm(const std::vector<std::string>& actions);
ResourceModel generalized_heap(const std::vector<std::string>& locations,
                               const std::vector<std::string>& values,
                               std::size_t cap = kDefaultCarrierCap);

// Fragments of the discretised deny-guarantee permission model.
ResourceModel deny_fragment(unsigned k, const std::string& tag);
ResourceModel fraction_dg(unsigned k);
ResourceModel deny_guarantee(const std::vector<std::string>& actions, unsigned k,
                             std::size_t cap = kDefaultCarrierCap);

ResourceModel disjoint_union(const ResourceModel& a, const ResourceModel& b);
ResourceModel product_model(const std::vector<ResourceModel>& factors,
                            std::size_t cap = kDefaultCarrierCap);
ResourceModel bbi_extension(const BbiModel& m);

// Fixtures taken from the separation results.
BbiModel nonconservativity_bbi_model();   // {e,a,b}, only unit compositions
ResourceModel non_functional_cbi_model(); // {e,a,inf}, a o a = {e,inf}

}  // namespace cbi
