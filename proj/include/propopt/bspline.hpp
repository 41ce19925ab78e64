#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace propopt {

/// Clamped B-spline curve of arbitrary degree with points in R^1 or R^2.
/// All radial distribution curves are stored in this form. Curves are
/// immutable after construction; every operation is pure.
class BSplineCurve {
public:
    /// knots: size n_ctrl + degree + 1, nondecreasing, first and last knot
    /// with multiplicity degree + 1. control_points: n_ctrl x dim, dim in {1, 2}.
    BSplineCurve(int degree, Eigen::VectorXd knots, Eigen::MatrixXd control_points);

    int degree() const { return degree_; }
    int dim() const { return static_cast<int>(ctrl_.cols()); }
    int num_ctrl() const { return static_cast<int>(ctrl_.rows()); }
    const Eigen::VectorXd& knots() const { return knots_; }
    const Eigen::MatrixXd& control_points() const { return ctrl_; }

    /// Parameter domain [knots[degree], knots[n_ctrl]].
    std::pair<double, double> domain() const;

    /// de Boor evaluation. Throws std::domain_error outside the domain.
    Eigen::VectorXd evaluate(double t) const;
    /// Scalar shortcut for dim() == 1 curves.
    double evaluate1(double t) const;

    /// Exact derivative of the given order (1 or 2, order <= degree).
    Eigen::VectorXd derivative(double t, int order) const;

    /// New curve with control points at `indices` shifted by `displacements`
    /// (one row per index). The original curve is untouched.
    BSplineCurve displaced(const Eigen::MatrixXd& displacements,
                           const std::vector<int>& indices) const;

    /// Sign changes of the second derivative sampled at n_scan uniform
    /// parameters; magnitudes below 1e-10 are ignored. For planar curves the
    /// signed curvature numerator x'y'' - y'x'' is scanned instead.
    int count_inflections(int n_scan) const;

    /// Plain-text record: three lines (degree / knots / control points,
    /// row-major), comma-separated.
    std::string to_text() const;
    static BSplineCurve from_text(const std::string& record);

private:
    int find_span(double t) const;
    Eigen::VectorXd basis_at(int span, double t) const;
    BSplineCurve derivative_curve() const;

    int degree_;
    Eigen::VectorXd knots_;
    Eigen::MatrixXd ctrl_;
};

struct SplineFit {
    BSplineCurve curve;
    double max_residual = 0.0;  // max_j ||curve(t_j) - y_j||
    double rms_residual = 0.0;
    double sum_sq_residual = 0.0;
};

/// Constrained least-squares fit of a clamped spline through (t_j, y_j).
/// `ts` must be strictly increasing and ys must have one row per sample.
/// Knots are placed by averaging of the data parameters. When
/// `interpolate_ends` is set the first/last control points are pinned to the
/// end samples and the reduced system is solved for the interior points.
SplineFit fit_least_squares(const Eigen::VectorXd& ts, const Eigen::MatrixXd& ys,
                            int degree, int n_ctrl, bool interpolate_ends);

}  // namespace propopt
