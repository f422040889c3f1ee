#include "qc/pipeline.hpp"

#include "qc/assembly.hpp"

namespace qc {

SolutionMesh solve_disk(const BeltramiSpec& spec, MeshOrder order, SolveOptions opts) {
    LogMesh mesh = build_mesh(order);
    const NuTable nu = nu_table(spec, mesh);
    const SparseSystem system = assemble(spec, mesh, nu);
    const LsqSolution solution = solve_lsq(system, opts.tol, opts.maxIter);
    return exponentiate(mesh, solution);
}

}  // namespace qc
