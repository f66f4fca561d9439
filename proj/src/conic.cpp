#include "swgcs/conic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace swgcs {

// --- C ABI of the Rust solver backend (solver_backend/src/lib.rs) ---

extern "C" {

struct SwgcsFfiProblem {
  int64_t num_vars;
  int64_t num_rows;
  const int64_t* p_colptr;
  const int64_t* p_rowidx;
  const double* p_values;
  const double* q;
  const int64_t* a_colptr;
  const int64_t* a_rowidx;
  const double* a_values;
  const double* b;
  int64_t num_cones;
  const int32_t* cone_tags;
  const int64_t* cone_dims;
  double tolerance;
  int64_t max_iterations;
  double time_limit_s;
  int32_t verbose;
};

struct SwgcsFfiSolution {
  int32_t status;
  double obj_val;
  int32_t iterations;
  double solve_time_s;
  double* x;
};

int32_t swgcs_solve(const SwgcsFfiProblem* problem, SwgcsFfiSolution* solution);

}  // extern "C"

namespace {

constexpr int32_t kConeZero = 0;
constexpr int32_t kConeNonneg = 1;
constexpr int32_t kConeSoc = 2;
constexpr int32_t kConePsdTriangle = 3;

constexpr double kSqrt2 = 1.4142135623730951;

// The backend's eigenvalue routines go through BLAS; pinning OpenBLAS to one
// thread keeps concurrent batch solves reentrant and bit-reproducible.
struct BlasThreadPin {
  BlasThreadPin() { setenv("OPENBLAS_NUM_THREADS", "1", /*overwrite=*/0); }
};
const BlasThreadPin blas_thread_pin;

struct Csc {
  std::vector<int64_t> colptr;
  std::vector<int64_t> rowidx;
  std::vector<double> values;
};

Csc csc_from_triplets(int rows, int cols, std::vector<Eigen::Triplet<double>> triplets) {
  Eigen::SparseMatrix<double> mat(rows, cols);
  mat.setFromTriplets(triplets.begin(), triplets.end());
  mat.makeCompressed();
  Csc out;
  out.colptr.assign(mat.outerIndexPtr(), mat.outerIndexPtr() + cols + 1);
  out.rowidx.assign(mat.innerIndexPtr(), mat.innerIndexPtr() + mat.nonZeros());
  out.values.assign(mat.valuePtr(), mat.valuePtr() + mat.nonZeros());
  return out;
}

}  // namespace

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kNumericalFailure:
      return "numerical-failure";
  }
  return "unknown";
}

void ConicProgram::check_var(int var) const {
  if (var < 0 || var >= num_vars_) {
    throw std::out_of_range("ConicProgram: variable index " + std::to_string(var) +
                            " out of range (have " + std::to_string(num_vars_) + ")");
  }
}

void ConicProgram::check_row(const AffineRow& row) const {
  for (const LinTerm& t : row.terms) check_var(t.var);
}

int ConicProgram::add_variables(int count) {
  if (count < 0) throw std::invalid_argument("ConicProgram: negative variable count");
  const int first = num_vars_;
  num_vars_ += count;
  obj_lin_.resize(num_vars_, 0.0);
  return first;
}

void ConicProgram::add_linear_objective(int var, double coeff) {
  check_var(var);
  obj_lin_[var] += coeff;
}

void ConicProgram::add_quadratic_objective(int var_i, int var_j, double coeff) {
  check_var(var_i);
  check_var(var_j);
  obj_quad_.emplace_back(std::min(var_i, var_j), std::max(var_i, var_j), coeff);
}

void ConicProgram::add_equality(AffineRow row) {
  check_row(row);
  equalities_.push_back(std::move(row));
}

void ConicProgram::add_inequality(AffineRow row) {
  check_row(row);
  inequalities_.push_back(std::move(row));
}

void ConicProgram::add_second_order_cone(std::vector<AffineRow> rows) {
  if (rows.empty()) throw std::invalid_argument("ConicProgram: empty second-order cone");
  for (const AffineRow& row : rows) check_row(row);
  socs_.push_back(std::move(rows));
}

void ConicProgram::add_convex_quadratic_le(const Eigen::MatrixXd& Q, const Eigen::VectorXd& q,
                                           double c, const std::vector<AffineRow>& rows) {
  const int n = static_cast<int>(rows.size());
  if (Q.rows() != n || Q.cols() != n || q.size() != n) {
    throw std::invalid_argument("ConicProgram: quadratic constraint dimension mismatch");
  }
  // z'Qz + q'z + c <= 0  <=>  ||L'z||^2 <= t with t = -q'z - c, encoded as the
  // second-order cone || [2 L'z; 1 - t] || <= 1 + t.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (Q + Q.transpose()));
  if (eig.eigenvalues().minCoeff() < -1e-9) {
    throw std::invalid_argument("ConicProgram: quadratic constraint matrix is not PSD");
  }
  std::vector<Eigen::VectorXd> factor_rows;  // rows of L'
  for (int k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues()(k);
    if (lambda > 1e-12) {
      factor_rows.push_back(std::sqrt(lambda) * eig.eigenvectors().col(k));
    }
  }

  auto combine = [&rows](const Eigen::VectorXd& w, double scale, double shift) {
    AffineRow out;
    out.constant = shift;
    for (int i = 0; i < w.size(); ++i) {
      if (w(i) == 0.0) continue;
      for (const LinTerm& t : rows[i].terms) out.terms.push_back({t.var, scale * w(i) * t.coeff});
      out.constant += scale * w(i) * rows[i].constant;
    }
    return out;
  };

  // t = -q'z - c as an affine row.
  AffineRow t_row = combine(-q, 1.0, -c);

  std::vector<AffineRow> cone;
  AffineRow head = t_row;  // 1 + t
  head.constant += 1.0;
  cone.push_back(std::move(head));
  for (const Eigen::VectorXd& w : factor_rows) cone.push_back(combine(w, 2.0, 0.0));
  AffineRow last;  // 1 - t
  last.constant = 1.0 - t_row.constant;
  for (const LinTerm& t : t_row.terms) last.terms.push_back({t.var, -t.coeff});
  cone.push_back(std::move(last));
  add_second_order_cone(std::move(cone));
}

int ConicProgram::add_psd_block(int size) {
  if (size <= 0) throw std::invalid_argument("ConicProgram: PSD block size must be positive");
  PsdBlock block;
  block.size = size;
  block.entries.resize(size);
  for (int c = 0; c < size; ++c) block.entries[c].resize(c + 1);
  psd_.push_back(std::move(block));
  return static_cast<int>(psd_.size()) - 1;
}

void ConicProgram::add_psd_term(int block, int row, int col, int var, double coeff) {
  check_var(var);
  PsdBlock& blk = psd_.at(block);
  const int r = std::min(row, col);
  const int c = std::max(row, col);
  if (r < 0 || c >= blk.size) throw std::out_of_range("ConicProgram: PSD entry out of range");
  blk.entries[c][r].terms.push_back({var, coeff});
}

void ConicProgram::add_psd_constant(int block, int row, int col, double value) {
  PsdBlock& blk = psd_.at(block);
  const int r = std::min(row, col);
  const int c = std::max(row, col);
  if (r < 0 || c >= blk.size) throw std::out_of_range("ConicProgram: PSD entry out of range");
  blk.entries[c][r].constant += value;
}

namespace {

double row_value(const ConicProgram::AffineRow& row, const Eigen::VectorXd& x) {
  double v = row.constant;
  for (const auto& t : row.terms) v += t.coeff * x(t.var);
  return v;
}

}  // namespace

double ConicProgram::objective_value_at(const Eigen::VectorXd& x) const {
  double value = obj_constant_;
  for (int i = 0; i < num_vars_; ++i) value += obj_lin_[i] * x(i);
  for (const auto& t : obj_quad_) {
    value += t.value() * x(t.row()) * x(t.col());
  }
  return value;
}

Eigen::MatrixXd ConicProgram::psd_block_value_at(int block, const Eigen::VectorXd& x) const {
  const PsdBlock& blk = psd_.at(block);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(blk.size, blk.size);
  for (int c = 0; c < blk.size; ++c) {
    for (int r = 0; r <= c; ++r) {
      const double v = row_value(blk.entries[c][r], x);
      m(r, c) = v;
      m(c, r) = v;
    }
  }
  return m;
}

double ConicProgram::max_violation_at(const Eigen::VectorXd& x) const {
  double worst = 0.0;
  for (const AffineRow& row : equalities_) worst = std::max(worst, std::abs(row_value(row, x)));
  for (const AffineRow& row : inequalities_) worst = std::max(worst, row_value(row, x));
  for (const auto& cone : socs_) {
    double norm2 = 0.0;
    for (size_t i = 1; i < cone.size(); ++i) {
      const double v = row_value(cone[i], x);
      norm2 += v * v;
    }
    worst = std::max(worst, std::sqrt(norm2) - row_value(cone[0], x));
  }
  for (int b = 0; b < static_cast<int>(psd_.size()); ++b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(psd_block_value_at(b, x));
    worst = std::max(worst, -eig.eigenvalues().minCoeff());
  }
  return worst;
}

namespace {

struct Assembled {
  Csc p;
  std::vector<double> q;
  Csc a;
  std::vector<double> b;
  std::vector<int32_t> cone_tags;
  std::vector<int64_t> cone_dims;
  int64_t num_rows = 0;
};

Assembled assemble(const ConicProgram& prog, const std::vector<double>& obj_lin,
                   const std::vector<Eigen::Triplet<double>>& obj_quad,
                   const std::vector<ConicProgram::AffineRow>& eqs,
                   const std::vector<ConicProgram::AffineRow>& ineqs,
                   const std::vector<std::vector<ConicProgram::AffineRow>>& socs,
                   const std::vector<ConicProgram::PsdBlock>& psd) {
  const int n = prog.num_variables();
  Assembled out;
  out.q = obj_lin;

  // 0.5 x'Px convention: doubled diagonal, single off-diagonal (upper).
  std::vector<Eigen::Triplet<double>> p_triplets;
  p_triplets.reserve(obj_quad.size());
  for (const auto& t : obj_quad) {
    const double v = t.row() == t.col() ? 2.0 * t.value() : t.value();
    p_triplets.emplace_back(t.row(), t.col(), v);
  }
  out.p = csc_from_triplets(n, n, std::move(p_triplets));

  std::vector<Eigen::Triplet<double>> a_triplets;
  int64_t row_cursor = 0;
  auto push_row = [&](const ConicProgram::AffineRow& row, double scale) {
    for (const auto& term : row.terms) {
      a_triplets.emplace_back(static_cast<int>(row_cursor), term.var, -scale * term.coeff);
    }
    out.b.push_back(scale * row.constant);
    ++row_cursor;
  };

  if (!eqs.empty()) {
    // a'x + c == 0  ->  s = -(a'x + c) in the zero cone.
    for (const auto& row : eqs) push_row(row, 1.0);
    out.cone_tags.push_back(kConeZero);
    out.cone_dims.push_back(static_cast<int64_t>(eqs.size()));
  }
  if (!ineqs.empty()) {
    // a'x + c <= 0  ->  s = -(a'x + c) >= 0.
    for (const auto& row : ineqs) push_row(row, -1.0);
    out.cone_tags.push_back(kConeNonneg);
    out.cone_dims.push_back(static_cast<int64_t>(ineqs.size()));
  }
  for (const auto& cone : socs) {
    for (const auto& row : cone) push_row(row, 1.0);
    out.cone_tags.push_back(kConeSoc);
    out.cone_dims.push_back(static_cast<int64_t>(cone.size()));
  }
  for (const auto& blk : psd) {
    // Scaled upper triangle, column-major: s = svec(M(x)).
    for (int c = 0; c < blk.size; ++c) {
      for (int r = 0; r <= c; ++r) {
        push_row(blk.entries[c][r], r == c ? 1.0 : kSqrt2);
      }
    }
    out.cone_tags.push_back(kConePsdTriangle);
    out.cone_dims.push_back(blk.size);
  }

  out.num_rows = row_cursor;
  out.a = csc_from_triplets(static_cast<int>(row_cursor), n, std::move(a_triplets));
  return out;
}

}  // namespace

SolveReport solve(const ConicProgram& program, const SolveSettings& settings) {
  Assembled asmb = assemble(program, program.obj_lin_, program.obj_quad_, program.equalities_,
                            program.inequalities_, program.socs_, program.psd_);
  const int n = program.num_variables();

  SwgcsFfiProblem ffi{};
  ffi.num_vars = n;
  ffi.num_rows = asmb.num_rows;
  ffi.p_colptr = asmb.p.colptr.data();
  ffi.p_rowidx = asmb.p.rowidx.data();
  ffi.p_values = asmb.p.values.data();
  ffi.q = asmb.q.data();
  ffi.a_colptr = asmb.a.colptr.data();
  ffi.a_rowidx = asmb.a.rowidx.data();
  ffi.a_values = asmb.a.values.data();
  ffi.b = asmb.b.data();
  ffi.num_cones = static_cast<int64_t>(asmb.cone_tags.size());
  ffi.cone_tags = asmb.cone_tags.data();
  ffi.cone_dims = asmb.cone_dims.data();
  ffi.tolerance = settings.tolerance;
  ffi.max_iterations = settings.max_iterations;
  ffi.time_limit_s = settings.time_limit_s;
  ffi.verbose = settings.verbose ? 1 : 0;

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  SwgcsFfiSolution sol{};
  sol.x = x.data();
  swgcs_solve(&ffi, &sol);

  SolveReport report;
  report.iterations = sol.iterations;
  report.solve_time_s = sol.solve_time_s;
  switch (sol.status) {
    case 0:
      report.status = SolveStatus::kOptimal;
      report.solver_status = "Solved";
      break;
    case 1:
      report.status = SolveStatus::kOptimal;
      report.solver_status = "AlmostSolved";
      break;
    case 2:
      report.status = SolveStatus::kInfeasible;
      report.solver_status = "PrimalInfeasible";
      break;
    case 3:
      report.status = SolveStatus::kInfeasible;
      report.solver_status = "AlmostPrimalInfeasible";
      break;
    case 4:
      report.status = SolveStatus::kUnbounded;
      report.solver_status = "DualInfeasible";
      break;
    case 5:
      report.status = SolveStatus::kUnbounded;
      report.solver_status = "AlmostDualInfeasible";
      break;
    case 6:
      report.status = SolveStatus::kNumericalFailure;
      report.solver_status = "MaxIterations";
      break;
    case 7:
      report.status = SolveStatus::kNumericalFailure;
      report.solver_status = "MaxTime";
      break;
    case 8:
      report.status = SolveStatus::kNumericalFailure;
      report.solver_status = "NumericalError";
      break;
    case 9:
      report.status = SolveStatus::kNumericalFailure;
      report.solver_status = "InsufficientProgress";
      break;
    default:
      report.status = SolveStatus::kNumericalFailure;
      report.solver_status = "Unsolved";
      break;
  }
  if (report.status == SolveStatus::kOptimal) {
    report.primal = x;
    report.objective = sol.obj_val + program.objective_constant();
    report.max_violation = program.max_violation_at(x);
  }
  return report;
}

std::vector<SolveReport> solve_batch(const std::vector<ConicProgram>& programs,
                                     const SolveSettings& settings) {
  std::vector<SolveReport> reports(programs.size());
  const int jobs = std::max(1, settings.jobs);
  if (jobs == 1 || programs.size() <= 1) {
    for (size_t i = 0; i < programs.size(); ++i) reports[i] = solve(programs[i], settings);
    return reports;
  }
  const int workers = std::min<int>(jobs, static_cast<int>(programs.size()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (size_t i = w; i < programs.size(); i += workers) {
        reports[i] = solve(programs[i], settings);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return reports;
}

void write_debug_dump(const ConicProgram& program, std::ostream& out) {
  Assembled asmb = assemble(program, program.obj_lin_, program.obj_quad_, program.equalities_,
                            program.inequalities_, program.socs_, program.psd_);
  const int n = program.num_variables();
  out.precision(17);
  out << "conic-program\n";
  out << "vars " << n << "\nrows " << asmb.num_rows << "\n";
  out << "objective-constant " << program.objective_constant() << "\n";
  out << "P coordinate " << asmb.p.values.size() << "\n";
  for (int c = 0; c < n; ++c) {
    for (int64_t k = asmb.p.colptr[c]; k < asmb.p.colptr[c + 1]; ++k) {
      out << asmb.p.rowidx[k] << " " << c << " " << asmb.p.values[k] << "\n";
    }
  }
  out << "q dense " << n << "\n";
  for (int i = 0; i < n; ++i) out << asmb.q[i] << "\n";
  out << "A coordinate " << asmb.a.values.size() << "\n";
  for (int c = 0; c < n; ++c) {
    for (int64_t k = asmb.a.colptr[c]; k < asmb.a.colptr[c + 1]; ++k) {
      out << asmb.a.rowidx[k] << " " << c << " " << asmb.a.values[k] << "\n";
    }
  }
  out << "b dense " << asmb.b.size() << "\n";
  for (double v : asmb.b) out << v << "\n";
  out << "cones " << asmb.cone_tags.size() << "\n";
  static const char* kNames[] = {"zero", "nonneg", "soc", "psd"};
  for (size_t i = 0; i < asmb.cone_tags.size(); ++i) {
    out << kNames[asmb.cone_tags[i]] << " " << asmb.cone_dims[i] << "\n";
  }
}

}  // namespace swgcs
