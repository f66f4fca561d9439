#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace swgcs {

enum class SolveStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kNumericalFailure,
};

std::string to_string(SolveStatus status);

struct SolveSettings {
  // Interior-point convergence tolerance (gap and feasibility).
  double tolerance = 1e-8;
  int max_iterations = 200;
  // Wall-clock limit per solve in seconds; 0 disables the limit.
  double time_limit_s = 0.0;
  // Worker threads for solve_batch. Results are independent of this value.
  int jobs = 1;
  bool verbose = false;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kNumericalFailure;
  // Objective value including the program's constant term; NaN unless optimal.
  double objective = std::numeric_limits<double>::quiet_NaN();
  // Primal solution; sized num_variables() iff status == kOptimal.
  Eigen::VectorXd primal;
  int iterations = 0;
  double solve_time_s = 0.0;
  // Backend termination detail, e.g. "Solved" or "AlmostSolved".
  std::string solver_status;
  // Worst constraint violation of `primal`, recomputed by re-substitution.
  double max_violation = std::numeric_limits<double>::quiet_NaN();

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

/// A conic program in the form
///
///   minimize    x'Px/2-style convex quadratic + linear + constant
///   subject to  affine equalities, affine inequalities,
///               second-order cones on affine rows,
///               PSD constraints on affine symmetric matrices.
///
/// Variables are indexed densely from zero in creation order. Construction is
/// single-threaded per program; solving is reentrant.
class ConicProgram {
 public:
  struct LinTerm {
    int var;
    double coeff;
  };
  // Affine scalar expression: sum_i coeff_i * x_{var_i} + constant.
  struct AffineRow {
    std::vector<LinTerm> terms;
    double constant = 0.0;
  };
  struct PsdBlock {
    int size = 0;
    // Upper-triangle entries (row <= col) as affine expressions.
    std::vector<std::vector<AffineRow>> entries;
  };

  int add_variables(int count);
  int num_variables() const { return num_vars_; }

  void add_objective_constant(double value) { obj_constant_ += value; }
  void add_linear_objective(int var, double coeff);
  // Adds coeff * x_i * x_j to the objective. The accumulated quadratic part
  // must be convex for the solve to be meaningful.
  void add_quadratic_objective(int var_i, int var_j, double coeff);

  // row == 0 and row <= 0 respectively.
  void add_equality(AffineRow row);
  void add_inequality(AffineRow row);
  // || rows[1..] ||_2 <= rows[0]
  void add_second_order_cone(std::vector<AffineRow> rows);

  /// Convex quadratic constraint z'Qz + q'z + c <= 0 over the affine vector
  /// z given by `rows`; Q must be PSD (factorized internally, eigenvalues
  /// below 1e-12 are dropped).
  void add_convex_quadratic_le(const Eigen::MatrixXd& Q, const Eigen::VectorXd& q, double c,
                               const std::vector<AffineRow>& rows);

  // Affine-in-x symmetric matrix constrained to the PSD cone. Entries are
  // accumulated; (row, col) and (col, row) refer to the same entry.
  int add_psd_block(int size);
  void add_psd_term(int block, int row, int col, int var, double coeff);
  void add_psd_constant(int block, int row, int col, double value);

  double objective_constant() const { return obj_constant_; }
  double objective_value_at(const Eigen::VectorXd& x) const;
  // Worst violation across all constraints at x (0 when feasible).
  double max_violation_at(const Eigen::VectorXd& x) const;
  // Value of the PSD block's matrix at x (for certificate re-assembly).
  Eigen::MatrixXd psd_block_value_at(int block, const Eigen::VectorXd& x) const;

  const std::vector<AffineRow>& equalities() const { return equalities_; }
  const std::vector<AffineRow>& inequalities() const { return inequalities_; }
  const std::vector<std::vector<AffineRow>>& soc_blocks() const { return socs_; }
  const std::vector<PsdBlock>& psd_blocks() const { return psd_; }

 private:
  friend SolveReport solve(const ConicProgram&, const SolveSettings&);
  friend void write_debug_dump(const ConicProgram&, std::ostream&);

  void check_var(int var) const;
  void check_row(const AffineRow& row) const;

  int num_vars_ = 0;
  double obj_constant_ = 0.0;
  std::vector<double> obj_lin_;
  std::vector<Eigen::Triplet<double>> obj_quad_;
  std::vector<AffineRow> equalities_;
  std::vector<AffineRow> inequalities_;
  std::vector<std::vector<AffineRow>> socs_;
  std::vector<PsdBlock> psd_;
};

/// Solves one program. Infeasibility and unboundedness are reported through
/// the status, never as exceptions; numerical failures carry the backend
/// status string.
SolveReport solve(const ConicProgram& program, const SolveSettings& settings = {});

/// Solves a list of programs, optionally fanning out to settings.jobs worker
/// threads. Reports are order-matched to the inputs and bitwise identical to
/// solving each program sequentially; a failure in one program does not
/// affect the others.
std::vector<SolveReport> solve_batch(const std::vector<ConicProgram>& programs,
                                     const SolveSettings& settings = {});

/// Writes the assembled sparse form (P, q, A, b, cones) as plain text with
/// MatrixMarket-style coordinate triplets.
void write_debug_dump(const ConicProgram& program, std::ostream& out);

}  // namespace swgcs
