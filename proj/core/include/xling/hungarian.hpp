#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace xling {

using Matching = std::vector<std::pair<Eigen::Index, Eigen::Index>>;

// Maximum-weight bipartite matching of size min(rows, cols) over a dense
// weight matrix, solved by the Kuhn-Munkres algorithm in O(n^3). The
// result is sorted by row index. Among equal-total optima the
// lexicographically smallest pair set is returned. Entries must be finite.
Matching hungarian_matching(const Eigen::MatrixXd& weights);

// Total weight of a matching, accumulated in row order.
double matching_total(const Eigen::MatrixXd& weights, const Matching& matching);

} // namespace xling
