//! C ABI around the Clarabel conic solver.
//!
//! The C++ side hands over a problem in Clarabel's native form
//!
//!     minimize    0.5 x'Px + q'x
//!     subject to  Ax + s = b,  s in K
//!
//! with P (upper triangle) and A in compressed sparse column layout and K a
//! product of zero, nonnegative, second-order and PSD-triangle cones.

use clarabel::algebra::*;
use clarabel::solver::*;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

pub const CONE_ZERO: i32 = 0;
pub const CONE_NONNEG: i32 = 1;
pub const CONE_SOC: i32 = 2;
pub const CONE_PSD_TRIANGLE: i32 = 3;

#[repr(C)]
pub struct FfiProblem {
    pub num_vars: i64,
    pub num_rows: i64,

    // Objective, P upper-triangular CSC (num_vars x num_vars) plus linear q.
    pub p_colptr: *const i64,
    pub p_rowidx: *const i64,
    pub p_values: *const f64,
    pub q: *const f64,

    // Constraint matrix A, CSC (num_rows x num_vars), and right-hand side b.
    pub a_colptr: *const i64,
    pub a_rowidx: *const i64,
    pub a_values: *const f64,
    pub b: *const f64,

    // Cone blocks, in row order. For PSD blocks `dim` is the matrix side
    // length; the corresponding rows hold the scaled upper triangle.
    pub num_cones: i64,
    pub cone_tags: *const i32,
    pub cone_dims: *const i64,

    pub tolerance: f64,
    pub max_iterations: i64,
    pub time_limit_s: f64,
    pub verbose: i32,
}

#[repr(C)]
pub struct FfiSolution {
    pub status: i32,
    pub obj_val: f64,
    pub iterations: i32,
    pub solve_time_s: f64,
    // Caller-allocated buffer of length num_vars; filled for every
    // terminating status (contents are meaningful only when solved).
    pub x: *mut f64,
}

pub const STATUS_SOLVED: i32 = 0;
pub const STATUS_ALMOST_SOLVED: i32 = 1;
pub const STATUS_PRIMAL_INFEASIBLE: i32 = 2;
pub const STATUS_ALMOST_PRIMAL_INFEASIBLE: i32 = 3;
pub const STATUS_DUAL_INFEASIBLE: i32 = 4;
pub const STATUS_ALMOST_DUAL_INFEASIBLE: i32 = 5;
pub const STATUS_MAX_ITERATIONS: i32 = 6;
pub const STATUS_MAX_TIME: i32 = 7;
pub const STATUS_NUMERICAL_ERROR: i32 = 8;
pub const STATUS_INSUFFICIENT_PROGRESS: i32 = 9;
pub const STATUS_OTHER: i32 = 10;
pub const STATUS_BAD_PROBLEM: i32 = -1;

fn map_status(status: SolverStatus) -> i32 {
    match status {
        SolverStatus::Solved => STATUS_SOLVED,
        SolverStatus::AlmostSolved => STATUS_ALMOST_SOLVED,
        SolverStatus::PrimalInfeasible => STATUS_PRIMAL_INFEASIBLE,
        SolverStatus::AlmostPrimalInfeasible => STATUS_ALMOST_PRIMAL_INFEASIBLE,
        SolverStatus::DualInfeasible => STATUS_DUAL_INFEASIBLE,
        SolverStatus::AlmostDualInfeasible => STATUS_ALMOST_DUAL_INFEASIBLE,
        SolverStatus::MaxIterations => STATUS_MAX_ITERATIONS,
        SolverStatus::MaxTime => STATUS_MAX_TIME,
        SolverStatus::NumericalError => STATUS_NUMERICAL_ERROR,
        SolverStatus::InsufficientProgress => STATUS_INSUFFICIENT_PROGRESS,
        _ => STATUS_OTHER,
    }
}

unsafe fn csc_from_raw(
    rows: usize,
    cols: usize,
    colptr: *const i64,
    rowidx: *const i64,
    values: *const f64,
) -> Option<CscMatrix<f64>> {
    if colptr.is_null() {
        return None;
    }
    let colptr = slice::from_raw_parts(colptr, cols + 1);
    let nnz = colptr[cols] as usize;
    let rowidx = slice::from_raw_parts(rowidx, nnz);
    let values = slice::from_raw_parts(values, nnz);
    Some(CscMatrix::new(
        rows,
        cols,
        colptr.iter().map(|&v| v as usize).collect(),
        rowidx.iter().map(|&v| v as usize).collect(),
        values.to_vec(),
    ))
}

/// Solves one conic program. Returns the status code (also stored in the
/// solution struct), or STATUS_BAD_PROBLEM on malformed input or internal
/// panic. Reentrant; solves share no mutable state.
#[no_mangle]
pub unsafe extern "C" fn swgcs_solve(problem: *const FfiProblem, solution: *mut FfiSolution) -> i32 {
    let result = catch_unwind(AssertUnwindSafe(|| solve_impl(&*problem, &mut *solution)));
    match result {
        Ok(code) => code,
        Err(_) => {
            (*solution).status = STATUS_BAD_PROBLEM;
            STATUS_BAD_PROBLEM
        }
    }
}

unsafe fn solve_impl(problem: &FfiProblem, solution: &mut FfiSolution) -> i32 {
    let n = problem.num_vars as usize;
    let m = problem.num_rows as usize;

    let p = csc_from_raw(n, n, problem.p_colptr, problem.p_rowidx, problem.p_values)
        .unwrap_or_else(|| CscMatrix::zeros((n, n)));
    let a = csc_from_raw(m, n, problem.a_colptr, problem.a_rowidx, problem.a_values)
        .unwrap_or_else(|| CscMatrix::zeros((m, n)));
    let q = slice::from_raw_parts(problem.q, n);
    let b = slice::from_raw_parts(problem.b, m);

    let tags = slice::from_raw_parts(problem.cone_tags, problem.num_cones as usize);
    let dims = slice::from_raw_parts(problem.cone_dims, problem.num_cones as usize);
    let mut cones: Vec<SupportedConeT<f64>> = Vec::with_capacity(tags.len());
    for (tag, dim) in tags.iter().zip(dims.iter()) {
        let dim = *dim as usize;
        match *tag {
            CONE_ZERO => cones.push(ZeroConeT(dim)),
            CONE_NONNEG => cones.push(NonnegativeConeT(dim)),
            CONE_SOC => cones.push(SecondOrderConeT(dim)),
            CONE_PSD_TRIANGLE => cones.push(PSDTriangleConeT(dim)),
            _ => return STATUS_BAD_PROBLEM,
        }
    }

    let mut builder = DefaultSettingsBuilder::default();
    builder
        .verbose(problem.verbose != 0)
        .max_iter(problem.max_iterations.max(1) as u32)
        .tol_gap_abs(problem.tolerance)
        .tol_gap_rel(problem.tolerance)
        .tol_feas(problem.tolerance);
    if problem.time_limit_s > 0.0 {
        builder.time_limit(problem.time_limit_s);
    }
    let settings = match builder.build() {
        Ok(s) => s,
        Err(_) => return STATUS_BAD_PROBLEM,
    };

    let mut solver = match DefaultSolver::new(&p, q, &a, b, &cones, settings) {
        Ok(s) => s,
        Err(_) => return STATUS_BAD_PROBLEM,
    };
    solver.solve();

    let code = map_status(solver.solution.status);
    solution.status = code;
    solution.obj_val = solver.solution.obj_val;
    solution.iterations = solver.solution.iterations as i32;
    solution.solve_time_s = solver.solution.solve_time;
    if !solution.x.is_null() {
        let out = slice::from_raw_parts_mut(solution.x, n);
        out.copy_from_slice(&solver.solution.x);
    }
    code
}
