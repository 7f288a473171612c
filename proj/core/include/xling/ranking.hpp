#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

#include "xling/transforms.hpp"

namespace xling {

enum class Distance { Euclidean, InverseCosine };

double point_distance(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b, Distance d);

struct RankingConfig {
    double margin = 0.0;
    int negatives_per_side = 50;
    int epochs = 5;
    double learning_rate = 0.01;
    Distance distance = Distance::Euclidean;
    std::uint64_t seed = 0;
};

// Max-margin rank of `truth` against the rows of `negatives` as seen from
// `estimate`: sum over negatives of max(0, margin + D(estimate, truth)
// - D(estimate, negative)). An empty negative set scores 0.
double rank_loss(const Eigen::RowVectorXd& estimate, const Eigen::RowVectorXd& truth,
                 const Eigen::MatrixXd& negatives, double margin, Distance dist);

// The k rows of `pool` other than `self` minimizing
// D(estimate, n_j) - D(truth, n_j), i.e. the most intruding rows.
// Ties break toward the lower index; the result is sorted ascending.
// Requires k < pool.rows().
std::vector<Eigen::Index> select_negatives(const Eigen::RowVectorXd& estimate,
                                           const Eigen::RowVectorXd& truth,
                                           const Eigen::MatrixXd& pool, Eigen::Index self,
                                           int k, Distance dist);

struct ObjectiveValue {
    double loss = 0.0;
    Eigen::MatrixXd gradient; // with respect to T
};

// sum_i rank_loss(x_i T, y_i, Y[negatives[i]]) with the negative sets held
// fixed, plus its (sub)gradient in T. Hinge terms sitting exactly at the
// kink contribute zero gradient.
ObjectiveValue ranking_objective(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                 const Eigen::MatrixXd& T,
                                 std::span<const std::vector<Eigen::Index>> negatives,
                                 double margin, Distance dist);

// Two-sided objective: the forward term maps x_i through T against
// negatives from Y, the backward term maps y_i through T^T against
// negatives from X.
ObjectiveValue dual_ranking_objective(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                      const Eigen::MatrixXd& T,
                                      std::span<const std::vector<Eigen::Index>> forward_negatives,
                                      std::span<const std::vector<Eigen::Index>> backward_negatives,
                                      double margin, Distance dist);

// SGD on the one-directional ranking objective, initialized at the
// orthogonal fit. Negatives are reselected per example per epoch; the
// per-example step averages the gradient over the negative set. With
// epochs == 0 the orthogonal fit is returned unchanged. Deterministic
// given (X, Y, config.seed).
AlignmentMatrix fit_ranking(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                            const RankingConfig& config = {});

// SGD on the two-sided objective sharing one matrix and its transpose,
// which pushes T toward orthogonality without enforcing it.
AlignmentMatrix fit_orthogonal_ranking(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                       const RankingConfig& config = {});

} // namespace xling
