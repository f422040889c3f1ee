#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qc/lsq.hpp"
#include "qc/mesh.hpp"

namespace qc {

struct ResidualSummary {
    double residual2 = 0.0;
    double residualInf = 0.0;
    double normalResidual = 0.0;
    std::string method;
};

// Solved mesh in the W- and w-planes plus the induced PL-map evaluator.
class SolutionMesh {
  public:
    SolutionMesh(LogMesh mesh, std::vector<cd> W, ResidualSummary residual);

    const LogMesh& mesh() const { return mesh_; }
    const std::vector<cd>& W() const { return W_; }
    cd W(int j, int k) const { return W_[mesh_.indexMap().col(j, k)]; }
    // w_jk = exp(W_jk), valid for j <= 0.
    cd w(int j, int k) const { return w_[mesh_.indexMap().col(j, k)]; }
    const std::vector<int>& flippedTriangles() const { return flipped_; }
    const ResidualSummary& residual() const { return residual_; }

    // PL-map value at a point of the meshed annulus exp(R_{-M}) <= |z| <= 1.
    cd evaluate(cd z) const;

  private:
    int locate(cd z) const;

    LogMesh mesh_;
    std::vector<cd> W_;
    std::vector<cd> w_;
    std::vector<int> flipped_;
    ResidualSummary residual_;
};

SolutionMesh exponentiate(const LogMesh& mesh, const LsqSolution& solution);

inline cd evaluate_pl(const SolutionMesh& sol, cd z) { return sol.evaluate(z); }

struct VertexErrorReport {
    double maxError = 0.0;
    std::vector<double> perRadius;  // max over k for each j = -M..0 (index j+M)
};

// Max discrepancy between solved w-vertices and an oracle map on the disk.
VertexErrorReport max_vertex_error(const SolutionMesh& sol,
                                   const std::function<cd(cd)>& oracle);

}  // namespace qc
