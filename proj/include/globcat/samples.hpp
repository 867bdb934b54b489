#pragma once

// Small strict n-categories used by tests, the acceptance run and the CLI.

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "globcat/freecat.hpp"

namespace globcat {

// Fills composites for every composable pair: an iterated identity on the
// gluing cell is neutral; other pairs go to rule (by id).
using CompositionRule = std::function<std::optional<std::string>(int d, int k, const std::string& a, const std::string& b)>;
CompositionTables strict_from_rule(const GlobSet& cells, const std::map<std::string, std::string>& identities,
                                   const CompositionRule& rule);

CompositionTables arrow_category();      // a -> b
CompositionTables cyclic_monoid(int n);  // one object, Z/n
CompositionTables chain_category();      // a -> b -> c with the composite
CompositionTables z2_two_category();     // one object, one 1-cell, 2-cells Z/2
CompositionTables z2_two_group();        // one object, 1-cells and 2-cells both Z/2
CompositionTables loop_two_category();   // x -> y, one 2-cell f => f squaring to the identity
CompositionTables parallel_two_category();  // x -> y, f => g

}  // namespace globcat
