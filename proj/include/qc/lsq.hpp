#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qc/assembly.hpp"

namespace qc {

struct LsqSolution {
    std::vector<cd> V;      // length n_v, IndexMap layout
    double residual2 = 0.0;       // ||AV - B||_2
    double residualInf = 0.0;     // ||AV - B||_inf
    double normalResidual = 0.0;  // ||A^H (AV - B)||_2
    int iterations = 0;           // 0 for the direct path
    std::string method;           // "normal-cholesky" or "lsqr-cg"
};

// Least-squares minimizer of ||AV - B||_2.  Default route is the normal
// equations with a sparse Cholesky factorization; an iterative solver is the
// fallback.  Throws SolverError if the optimality certificate
// ||A^H(AV-B)|| <= tol ||A^H B|| cannot be met.
LsqSolution solve_lsq(const SparseSystem& system, double tol = 1e-10, int maxIter = 10000);

struct RowClassResidual {
    double l2 = 0.0;
    double max = 0.0;
    int count = 0;
};

// Residual breakdown by row class; the class l2 values combine to residual2.
std::map<RowKind, RowClassResidual> residual_report(const SparseSystem& system,
                                                    const std::vector<cd>& V);

const char* row_kind_name(RowKind kind);

}  // namespace qc
