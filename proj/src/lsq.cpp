#include "qc/lsq.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <cmath>
#include <sstream>

#include "qc/errors.hpp"

namespace qc {

namespace {

using SpMat = Eigen::SparseMatrix<cd>;
using Vec = Eigen::VectorXcd;

SpMat to_eigen(const SparseSystem& sys) {
    std::vector<Eigen::Triplet<cd>> trip;
    trip.reserve(sys.entries.size());
    for (const SparseEntry& e : sys.entries) trip.emplace_back(e.row, e.col, e.value);
    SpMat A(sys.nRows, sys.nCols);
    A.setFromTriplets(trip.begin(), trip.end());
    return A;
}

Vec to_eigen_rhs(const SparseSystem& sys) {
    Vec b(sys.nRows);
    for (int i = 0; i < sys.nRows; ++i) b(i) = sys.rhs[i];
    return b;
}

void fill_residuals(const SpMat& A, const Vec& b, const Vec& v, LsqSolution& sol) {
    const Vec r = A * v - b;
    sol.residual2 = r.norm();
    sol.residualInf = r.lpNorm<Eigen::Infinity>();
    sol.normalResidual = (A.adjoint() * r).norm();
}

}  // namespace

LsqSolution solve_lsq(const SparseSystem& system, double tol, int maxIter) {
    if (tol <= 0.0) throw ParameterError("solve_lsq: tol must be > 0");
    if (system.nRows < system.nCols)
        throw Error("solve_lsq: system must be overdetermined");

    const SpMat A = to_eigen(system);
    const Vec b = to_eigen_rhs(system);
    const SpMat AtA = (A.adjoint() * A).pruned();
    const Vec Atb = A.adjoint() * b;
    const double certScale = Atb.norm();

    LsqSolution sol;

    Eigen::SimplicialLLT<SpMat> llt;
    llt.compute(AtA);
    if (llt.info() == Eigen::Success) {
        Vec v = llt.solve(Atb);
        // One round of iterative refinement on the normal equations.
        v += llt.solve(Atb - AtA * v);
        fill_residuals(A, b, v, sol);
        if (sol.normalResidual <= tol * certScale) {
            sol.method = "normal-cholesky";
            sol.V.assign(v.data(), v.data() + v.size());
            return sol;
        }
    }

    // Fallback: iterative least squares on the original rectangular system.
    Eigen::LeastSquaresConjugateGradient<SpMat> cg;
    cg.setTolerance(tol * 1e-2);
    cg.setMaxIterations(maxIter);
    cg.compute(A);
    Vec v = cg.solve(b);
    fill_residuals(A, b, v, sol);
    if (sol.normalResidual <= tol * certScale) {
        sol.method = "lsqr-cg";
        sol.iterations = static_cast<int>(cg.iterations());
        sol.V.assign(v.data(), v.data() + v.size());
        return sol;
    }

    std::ostringstream msg;
    msg << "solve_lsq: optimality certificate not met: ||A^H r|| = " << sol.normalResidual
        << ", required <= " << tol * certScale << " (" << cg.iterations() << " iterations)";
    throw SolverError(msg.str());
}

std::map<RowKind, RowClassResidual> residual_report(const SparseSystem& system,
                                                    const std::vector<cd>& V) {
    if (static_cast<int>(V.size()) != system.nCols)
        throw Error("residual_report: dimension mismatch");
    std::vector<cd> r(system.rhs.begin(), system.rhs.end());
    for (const SparseEntry& e : system.entries) r[e.row] -= e.value * V[e.col];

    std::map<RowKind, RowClassResidual> out;
    for (int i = 0; i < system.nRows; ++i) {
        RowClassResidual& c = out[system.rowKind[i]];
        const double a = std::abs(r[i]);
        c.l2 += a * a;
        if (a > c.max) c.max = a;
        ++c.count;
    }
    for (auto& [kind, c] : out) c.l2 = std::sqrt(c.l2);
    return out;
}

const char* row_kind_name(RowKind kind) {
    switch (kind) {
        case RowKind::TriangleLeft: return "triangleLeft";
        case RowKind::TriangleRight: return "triangleRight";
        case RowKind::BoundaryLeft: return "boundaryLeft";
        case RowKind::BoundaryRight: return "boundaryRight";
        case RowKind::Normalization: return "normalization";
    }
    return "unknown";
}

}  // namespace qc
