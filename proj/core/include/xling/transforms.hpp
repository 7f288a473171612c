#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xling {

enum class Method { LS, OT, CCA, RT, ORT };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct FitReport {
    // ||Y - X T||_F^2 on the training pairs.
    double residual = std::numeric_limits<double>::quiet_NaN();
    // ||T T^T - I||_F at the end of the fit.
    double orthogonality_defect = std::numeric_limits<double>::quiet_NaN();
    // Ranking fits: objective value accumulated over each epoch.
    std::vector<double> epoch_losses;
    // Dual-direction ranking fits: defect after each epoch.
    std::vector<double> epoch_orthogonality;
    // CCA: canonical correlations in nonincreasing order.
    std::vector<double> canonical_correlations;
};

// A fitted d x d map between two spaces. Vectors are rows and the map is
// applied on the right: estimate = v * matrix.
struct AlignmentMatrix {
    Eigen::MatrixXd matrix;
    Method method = Method::OT;
    FitReport report;

    Eigen::Index dim() const { return matrix.rows(); }
};

// ridge < 0 selects the scale-aware default 1e-8 * trace(X^T X) / d.
// An explicit ridge of 0 disables regularization and turns rank
// deficiency into an error.
inline constexpr double kAutoRidge = -1.0;

// Unconstrained least squares: T = (X^T X + ridge I)^-1 X^T Y via a
// symmetric factorization of the normal equations.
AlignmentMatrix fit_least_squares(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                  double ridge = kAutoRidge);

// Orthogonal Procrustes: with Y^T X = U S V^T the minimizer of
// ||Y - X T||_F over orthogonal T is T = V U^T.
AlignmentMatrix fit_orthogonal(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y);

// Canonical correlation analysis. Columns are centered over the rows,
// both covariances are whitened, and the canonical direction bases
// Cx, Cy give T = Cx pinv(Cy). Canonical correlations land in the report.
AlignmentMatrix fit_cca(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                        double ridge = kAutoRidge);

// Row-vector application: returns v * T.
Eigen::RowVectorXd apply_transform(const AlignmentMatrix& transform,
                                   const Eigen::RowVectorXd& v);
Eigen::MatrixXd apply_transform_rows(const AlignmentMatrix& transform,
                                     const Eigen::MatrixXd& rows);

// Text persistence: header "<METHOD> <d>" then d rows of d reals at 17
// significant digits, which round-trips IEEE doubles exactly. Fit reports
// are not persisted.
void save_alignment(const AlignmentMatrix& transform, std::ostream& out);
void save_alignment_file(const AlignmentMatrix& transform, const std::string& path);
AlignmentMatrix load_alignment(std::istream& in);
AlignmentMatrix load_alignment_file(const std::string& path);

} // namespace xling
