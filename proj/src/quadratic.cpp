#include "swgcs/quadratic.hpp"

#include <stdexcept>
#include <string>

namespace swgcs {

QuadraticFunction::QuadraticFunction(Eigen::MatrixXd H) : H_(std::move(H)) {
  if (H_.rows() < 1 || H_.rows() != H_.cols()) {
    throw std::invalid_argument("QuadraticFunction: H must be square with size >= 1");
  }
  if ((H_ - H_.transpose()).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, H_.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("QuadraticFunction: H must be symmetric");
  }
  H_ = 0.5 * (H_ + H_.transpose()).eval();
}

QuadraticFunction QuadraticFunction::zero(int dim) {
  return QuadraticFunction(Eigen::MatrixXd::Zero(dim + 1, dim + 1));
}

QuadraticFunction QuadraticFunction::constant(int dim, double value) {
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim + 1, dim + 1);
  H(0, 0) = value;
  return QuadraticFunction(std::move(H));
}

QuadraticFunction QuadraticFunction::from_blocks(const Eigen::MatrixXd& Q,
                                                 const Eigen::VectorXd& q, double c) {
  const int n = static_cast<int>(q.size());
  if (Q.rows() != n || Q.cols() != n) {
    throw std::invalid_argument("QuadraticFunction: Q/q dimension mismatch");
  }
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n + 1, n + 1);
  H(0, 0) = c;
  H.col(0).tail(n) = 0.5 * q;
  H.row(0).tail(n) = 0.5 * q.transpose();
  H.bottomRightCorner(n, n) = 0.5 * (Q + Q.transpose());
  return QuadraticFunction(std::move(H));
}

double QuadraticFunction::eval(const Eigen::VectorXd& x) const {
  if (x.size() != dim()) {
    throw std::invalid_argument("QuadraticFunction: expected dimension " + std::to_string(dim()) +
                                ", got " + std::to_string(x.size()));
  }
  Eigen::VectorXd z(dim() + 1);
  z(0) = 1.0;
  z.tail(dim()) = x;
  return z.dot(H_ * z);
}

bool QuadraticFunction::is_zero() const { return H_.cwiseAbs().maxCoeff() == 0.0; }

bool QuadraticFunction::is_convex(double tol) const {
  if (dim() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Q());
  return eig.eigenvalues().minCoeff() >= -tol;
}

QuadraticFunction QuadraticFunction::plus_constant(double value) const {
  Eigen::MatrixXd H = H_;
  H(0, 0) += value;
  return QuadraticFunction(std::move(H));
}

QuadraticFunction QuadraticFunction::lifted(int ambient_dim, int offset) const {
  if (offset < 0 || offset + dim() > ambient_dim) {
    throw std::invalid_argument("QuadraticFunction: lift window out of range");
  }
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(ambient_dim + 1, ambient_dim + 1);
  H(0, 0) = H_(0, 0);
  H.block(0, 1 + offset, 1, dim()) = H_.block(0, 1, 1, dim());
  H.block(1 + offset, 0, dim(), 1) = H_.block(1, 0, dim(), 1);
  H.block(1 + offset, 1 + offset, dim(), dim()) = H_.block(1, 1, dim(), dim());
  return QuadraticFunction(std::move(H));
}

}  // namespace swgcs
