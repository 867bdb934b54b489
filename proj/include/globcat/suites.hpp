#pragma once

// Check suites assembled from the module checks, shared by the command-line
// tool and the acceptance run.

#include <vector>

#include "globcat/enrich.hpp"
#include "globcat/freecat.hpp"
#include "globcat/report.hpp"
#include "globcat/setmt.hpp"

namespace globcat {

// Every pair of same-dimension trees: isomorphic realizations force equal
// trees and the identity, and 0-cell maps of isos preserve order.
Report check_tight(int max_dim, int max_size);

// Pentagon on every 4-tuple and triangle on every pair drawn from the panel.
Report check_pentagon_panel(const std::vector<SetOperad>& panel, int bound, int injective_grade = 2);

// Algebra of the identity operad from the tables, its category over the
// product multitensor, check_ecat, and both round trips.
Report check_bar_roundtrip(const CompositionTables& ct, const ECatBounds& b);
Report check_bar_roundtrip(const ECat& c);

// Iterated enrichment round trip, and truncation commuting with the passage
// to enrichment at every level below the top.
Report check_psi(const CompositionTables& ct, const ECatBounds& b);

}  // namespace globcat
