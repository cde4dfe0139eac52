#pragma once

#include <vector>

namespace prockit {

struct Assignment {
    double total = 0.0;
    /// match[r] = column assigned to row r, or -1 when the row is unmatched.
    std::vector<int> match;
};

/// Maximum-weight one-to-one assignment between the rows and columns of a
/// rectangular weight matrix (Kuhn-Munkres with row/column potentials).
/// Unmatched rows and columns contribute zero, so with non-negative weights
/// this is the maximum-weight bipartite matching.
Assignment max_weight_assignment(const std::vector<std::vector<double>>& weights);

}  // namespace prockit
