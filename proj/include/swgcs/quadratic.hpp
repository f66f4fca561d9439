#pragma once

#include <Eigen/Dense>

namespace swgcs {

/// Convex-quadratic function in homogenized matrix form: f(x) = [1;x]' H [1;x]
/// with H symmetric of size (dim+1) x (dim+1). Block layout:
///
///   H = [ c     q'/2 ]
///       [ q/2   Q    ]
///
/// so that f(x) = x'Qx + q'x + c.
class QuadraticFunction {
 public:
  /// Zero function over a zero-dimensional space; placeholder for members
  /// assigned later.
  QuadraticFunction() : H_(Eigen::MatrixXd::Zero(1, 1)) {}
  explicit QuadraticFunction(Eigen::MatrixXd H);
  static QuadraticFunction zero(int dim);
  static QuadraticFunction constant(int dim, double value);
  static QuadraticFunction from_blocks(const Eigen::MatrixXd& Q, const Eigen::VectorXd& q,
                                       double c);

  int dim() const { return static_cast<int>(H_.rows()) - 1; }
  const Eigen::MatrixXd& H() const { return H_; }
  Eigen::MatrixXd Q() const { return H_.bottomRightCorner(dim(), dim()); }
  Eigen::VectorXd q() const { return 2.0 * H_.col(0).tail(dim()); }
  double c() const { return H_(0, 0); }

  double eval(const Eigen::VectorXd& x) const;
  bool is_zero() const;
  // Q-block PSD up to `tol` on the smallest eigenvalue.
  bool is_convex(double tol = 1e-9) const;

  QuadraticFunction plus_constant(double value) const;
  /// Embeds the function into a larger ambient space: the result acts on
  /// y of size ambient_dim and evaluates f(y[offset : offset+dim]).
  QuadraticFunction lifted(int ambient_dim, int offset) const;

 private:
  Eigen::MatrixXd H_;
};

}  // namespace swgcs
