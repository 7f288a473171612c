#include "xling/transforms.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "xling/errors.hpp"
#include "xling/sentence.hpp"

namespace xling {

namespace {

void check_pair_shape(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
    if (X.rows() != Y.rows())
        throw numeric_error("fit: X and Y must have the same number of rows");
    if (X.cols() != Y.cols())
        throw numeric_error("fit: X and Y must have the same dimension");
    if (X.rows() == 0) throw numeric_error("fit: empty training matrices");
    if (!X.allFinite() || !Y.allFinite())
        throw numeric_error("fit: training matrices contain non-finite values");
}

double orthogonality_defect(const Eigen::MatrixXd& T) {
    const Eigen::Index d = T.rows();
    return (T * T.transpose() - Eigen::MatrixXd::Identity(d, d)).norm();
}

double resolve_ridge(double ridge, const Eigen::MatrixXd& gram) {
    if (ridge >= 0.0) return ridge;
    return 1e-8 * gram.trace() / static_cast<double>(gram.rows());
}

// Symmetric inverse square root via eigendecomposition. With ridge == 0 a
// rank-deficient matrix is an error instructing ridge use.
Eigen::MatrixXd inverse_sqrt(const Eigen::MatrixXd& sym, double eps, const char* what) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    if (es.info() != Eigen::Success)
        throw numeric_error(std::string(what) + ": eigendecomposition failed");
    Eigen::VectorXd lam = es.eigenvalues();
    const double lam_max = lam.maxCoeff();
    for (Eigen::Index i = 0; i < lam.rows(); ++i) {
        const double v = lam(i) + eps;
        if (v <= 0.0 || (eps == 0.0 && v <= 1e-12 * lam_max))
            throw numeric_error(std::string(what) +
                                ": covariance is rank deficient; refit with a positive ridge");
        lam(i) = 1.0 / std::sqrt(v);
    }
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

// Moore-Penrose pseudo-inverse; singular values below 1e-10 * sigma_max
// are treated as zero.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? 1e-10 * sv(0) : 0.0;
    Eigen::VectorXd inv = sv;
    for (Eigen::Index i = 0; i < inv.size(); ++i)
        inv(i) = sv(i) > cutoff ? 1.0 / sv(i) : 0.0;
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

} // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::LS: return "LS";
        case Method::OT: return "OT";
        case Method::CCA: return "CCA";
        case Method::RT: return "RT";
        case Method::ORT: return "ORT";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    const std::string lower = to_lower(name);
    if (lower == "ls") return Method::LS;
    if (lower == "ot") return Method::OT;
    if (lower == "cca") return Method::CCA;
    if (lower == "rt") return Method::RT;
    if (lower == "ort") return Method::ORT;
    return std::nullopt;
}

AlignmentMatrix fit_least_squares(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                  double ridge) {
    check_pair_shape(X, Y);
    const Eigen::Index d = X.cols();

    Eigen::MatrixXd gram = X.transpose() * X;
    const double eps = resolve_ridge(ridge, gram);
    if (eps == 0.0) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
        if (lu.rank() < d)
            throw numeric_error(
                "least squares: X^T X is rank deficient; refit with a positive ridge");
    }
    gram.diagonal().array() += eps;

    AlignmentMatrix out;
    out.method = Method::LS;
    out.matrix = gram.ldlt().solve(X.transpose() * Y);
    if (!out.matrix.allFinite())
        throw numeric_error("least squares: solve produced non-finite entries");
    out.report.residual = (Y - X * out.matrix).squaredNorm();
    out.report.orthogonality_defect = orthogonality_defect(out.matrix);
    return out;
}

AlignmentMatrix fit_orthogonal(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
    check_pair_shape(X, Y);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Y.transpose() * X,
                                          Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) throw numeric_error("orthogonal fit: SVD failed");

    AlignmentMatrix out;
    out.method = Method::OT;
    out.matrix = svd.matrixV() * svd.matrixU().transpose();
    out.report.residual = (Y - X * out.matrix).squaredNorm();
    out.report.orthogonality_defect = orthogonality_defect(out.matrix);

    const Eigen::Index d = out.matrix.rows();
    const double defect_inf =
        (out.matrix * out.matrix.transpose() - Eigen::MatrixXd::Identity(d, d))
            .cwiseAbs()
            .maxCoeff();
    if (!(defect_inf < 1e-8))
        throw numeric_error("orthogonal fit: result is not orthogonal to 1e-8");
    return out;
}

AlignmentMatrix fit_cca(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y, double ridge) {
    check_pair_shape(X, Y);
    if (X.rows() < 2) throw numeric_error("cca: need at least two rows");

    const Eigen::MatrixXd Xc = X.rowwise() - X.colwise().mean();
    const Eigen::MatrixXd Yc = Y.rowwise() - Y.colwise().mean();
    const Eigen::MatrixXd sxx = Xc.transpose() * Xc;
    const Eigen::MatrixXd syy = Yc.transpose() * Yc;

    const double eps_x = resolve_ridge(ridge, sxx);
    const double eps_y = resolve_ridge(ridge, syy);
    const Eigen::MatrixXd wx = inverse_sqrt(sxx, eps_x, "cca");
    const Eigen::MatrixXd wy = inverse_sqrt(syy, eps_y, "cca");

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(wx * (Xc.transpose() * Yc) * wy,
                                          Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) throw numeric_error("cca: SVD failed");

    const Eigen::MatrixXd cx = wx * svd.matrixU();
    const Eigen::MatrixXd cy = wy * svd.matrixV();

    AlignmentMatrix out;
    out.method = Method::CCA;
    out.matrix = cx * pseudo_inverse(cy);
    if (!out.matrix.allFinite()) throw numeric_error("cca: solve produced non-finite entries");
    const Eigen::VectorXd& corr = svd.singularValues();
    out.report.canonical_correlations.assign(corr.data(), corr.data() + corr.size());
    out.report.residual = (Y - X * out.matrix).squaredNorm();
    out.report.orthogonality_defect = orthogonality_defect(out.matrix);
    return out;
}

Eigen::RowVectorXd apply_transform(const AlignmentMatrix& transform,
                                   const Eigen::RowVectorXd& v) {
    if (v.cols() != transform.matrix.rows())
        throw numeric_error("apply_transform: vector dimension " + std::to_string(v.cols()) +
                            " does not match transform dimension " +
                            std::to_string(transform.matrix.rows()));
    return v * transform.matrix;
}

Eigen::MatrixXd apply_transform_rows(const AlignmentMatrix& transform,
                                     const Eigen::MatrixXd& rows) {
    if (rows.cols() != transform.matrix.rows())
        throw numeric_error("apply_transform: row dimension does not match transform");
    return rows * transform.matrix;
}

void save_alignment(const AlignmentMatrix& transform, std::ostream& out) {
    const Eigen::Index d = transform.matrix.rows();
    out << method_name(transform.method) << ' ' << d << '\n';
    out << std::setprecision(17);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            if (j) out << ' ';
            out << transform.matrix(i, j);
        }
        out << '\n';
    }
}

void save_alignment_file(const AlignmentMatrix& transform, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open for writing: " + path);
    save_alignment(transform, out);
    if (!out) throw io_error("write failed: " + path);
}

AlignmentMatrix load_alignment(std::istream& in) {
    std::string method_token;
    Eigen::Index d = 0;
    if (!(in >> method_token >> d) || d <= 0)
        throw io_error("alignment file: expected header \"<method> <d>\"");
    const auto method = method_from_name(method_token);
    if (!method) throw io_error("alignment file: unknown method '" + method_token + "'");

    AlignmentMatrix out;
    out.method = *method;
    out.matrix.resize(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            double v;
            if (!(in >> v))
                throw io_error("alignment file: truncated matrix (expected " +
                               std::to_string(d * d) + " values)");
            if (!std::isfinite(v)) throw io_error("alignment file: non-finite entry");
            out.matrix(i, j) = v;
        }
    return out;
}

AlignmentMatrix load_alignment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open alignment file: " + path);
    try {
        return load_alignment(in);
    } catch (const io_error& e) {
        throw io_error(path + ": " + e.what());
    }
}

} // namespace xling
