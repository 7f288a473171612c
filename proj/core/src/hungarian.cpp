#include "xling/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "xling/errors.hpp"

namespace xling {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Kuhn-Munkres with dual potentials on a square cost matrix (minimization),
// O(n^3). Returns row -> col and the final potentials, which satisfy
// u_i + v_j <= cost(i, j) with equality on assignment edges.
void solve_square(const Eigen::MatrixXd& cost, std::vector<int>& row_to_col,
                  std::vector<double>& u, std::vector<double>& v) {
    const int n = static_cast<int>(cost.rows());
    u.assign(static_cast<std::size_t>(n) + 1, 0.0);
    v.assign(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0); // col -> row, 1-indexed
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                                   v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    row_to_col.assign(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j)
        if (p[static_cast<std::size_t>(j)] > 0)
            row_to_col[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
}

// Augmenting path over the tight subgraph, restricted to columns that are
// not yet fixed. Rows reached through matched columns are always unfixed.
bool augment(int row, const std::vector<std::vector<int>>& adj, std::vector<int>& col_to_row,
             std::vector<int>& row_to_col, std::vector<char>& fixed_col,
             std::vector<char>& visited) {
    for (const int j : adj[static_cast<std::size_t>(row)]) {
        if (fixed_col[static_cast<std::size_t>(j)] || visited[static_cast<std::size_t>(j)])
            continue;
        visited[static_cast<std::size_t>(j)] = 1;
        const int other = col_to_row[static_cast<std::size_t>(j)];
        if (other == -1 ||
            augment(other, adj, col_to_row, row_to_col, fixed_col, visited)) {
            col_to_row[static_cast<std::size_t>(j)] = row;
            row_to_col[static_cast<std::size_t>(row)] = j;
            return true;
        }
    }
    return false;
}

// Rewrites the assignment into the lexicographically smallest one over the
// tight subgraph (which contains exactly the optimal assignments, up to
// floating-point slack). Rows are fixed in ascending order, each taking
// the smallest feasible column.
void lexicographic_pass(const Eigen::MatrixXd& cost, const std::vector<double>& u,
                        const std::vector<double>& v, std::vector<int>& row_to_col) {
    const int n = static_cast<int>(cost.rows());
    const double scale = cost.size() > 0 ? cost.cwiseAbs().maxCoeff() : 0.0;
    const double tol = 1e-9 * (1.0 + scale);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double slack = cost(i, j) - u[static_cast<std::size_t>(i) + 1] -
                                 v[static_cast<std::size_t>(j) + 1];
            if (std::abs(slack) <= tol || row_to_col[static_cast<std::size_t>(i)] == j)
                adj[static_cast<std::size_t>(i)].push_back(j);
        }
    }

    std::vector<int> col_to_row(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) col_to_row[static_cast<std::size_t>(row_to_col[static_cast<std::size_t>(i)])] = i;

    std::vector<char> fixed_col(static_cast<std::size_t>(n), 0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const int current = row_to_col[static_cast<std::size_t>(i)];
        for (const int j : adj[static_cast<std::size_t>(i)]) {
            if (j >= current) break;
            if (fixed_col[static_cast<std::size_t>(j)]) continue;
            const int displaced = col_to_row[static_cast<std::size_t>(j)];

            // Tentatively take column j and try to rematch the displaced row.
            col_to_row[static_cast<std::size_t>(current)] = -1;
            col_to_row[static_cast<std::size_t>(j)] = i;
            row_to_col[static_cast<std::size_t>(i)] = j;
            fixed_col[static_cast<std::size_t>(j)] = 1;
            std::fill(visited.begin(), visited.end(), 0);
            if (displaced == -1 ||
                augment(displaced, adj, col_to_row, row_to_col, fixed_col, visited)) {
                break;
            }
            // Revert.
            fixed_col[static_cast<std::size_t>(j)] = 0;
            col_to_row[static_cast<std::size_t>(j)] = displaced;
            col_to_row[static_cast<std::size_t>(current)] = i;
            row_to_col[static_cast<std::size_t>(i)] = current;
        }
        fixed_col[static_cast<std::size_t>(row_to_col[static_cast<std::size_t>(i)])] = 1;
    }
}

Matching real_pairs(const std::vector<int>& row_to_col, Eigen::Index nx, Eigen::Index ny) {
    Matching out;
    for (Eigen::Index i = 0; i < nx; ++i) {
        const int j = row_to_col[static_cast<std::size_t>(i)];
        if (j >= 0 && j < ny) out.emplace_back(i, static_cast<Eigen::Index>(j));
    }
    return out;
}

} // namespace

double matching_total(const Eigen::MatrixXd& weights, const Matching& matching) {
    double total = 0.0;
    for (const auto& [i, j] : matching) total += weights(i, j);
    return total;
}

Matching hungarian_matching(const Eigen::MatrixXd& weights) {
    const Eigen::Index nx = weights.rows();
    const Eigen::Index ny = weights.cols();
    if (nx == 0 || ny == 0) return {};
    if (!weights.allFinite())
        throw numeric_error("hungarian_matching: weight matrix has non-finite entries");

    // Pad to square with zero-cost dummies; negated weights turn the
    // maximization into a min-cost assignment. Dummies sit at the high
    // indices so the lexicographic pass prefers real pairs.
    const Eigen::Index n = std::max(nx, ny);
    Eigen::MatrixXd cost = Eigen::MatrixXd::Zero(n, n);
    cost.topLeftCorner(nx, ny) = -weights;

    std::vector<int> row_to_col;
    std::vector<double> u, v;
    solve_square(cost, row_to_col, u, v);
    const Matching solver = real_pairs(row_to_col, nx, ny);
    const double solver_total = matching_total(weights, solver);

    std::vector<int> canonical_cols = row_to_col;
    lexicographic_pass(cost, u, v, canonical_cols);
    const Matching canonical = real_pairs(canonical_cols, nx, ny);

    // The tight subgraph is built with a small slack tolerance; accept the
    // canonical assignment only if it is exactly as good.
    if (canonical.size() == solver.size() &&
        matching_total(weights, canonical) == solver_total)
        return canonical;
    return solver;
}

} // namespace xling
