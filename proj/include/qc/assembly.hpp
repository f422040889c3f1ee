#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qc/beltrami.hpp"
#include "qc/mesh.hpp"

namespace qc {

enum class RowKind : std::uint8_t {
    TriangleLeft,
    TriangleRight,
    BoundaryLeft,
    BoundaryRight,
    Normalization,
};

struct SparseEntry {
    int row;
    int col;  // 0-based column, IndexMap::col
    cd value;
};

// Overdetermined complex system A V = B in triplet form, n_e x n_v.
struct SparseSystem {
    int nRows = 0;
    int nCols = 0;
    std::vector<SparseEntry> entries;
    std::vector<cd> rhs;
    std::vector<RowKind> rowKind;
};

// Corollary-of-similarity coefficients for one triangle: L_nu applied to the
// directed opposite-side differences.  Their sum is 0 and none vanishes.
std::array<cd, 3> triangle_coeffs(cd nu, cd Za, cd Zb, cd Zc);

// Lifted-ellipse boundary targets D_k = E_k - E_{k-1}, k = 1..N-1, with the
// branch of E_k = log e_k unwrapped continuously from Im E_0 in [0, 2pi).
std::vector<cd> boundary_targets(const BeltramiSpec& spec, const LogMesh& mesh);

// Average of mu over the innermost mesh circle vertices z_{-M,k}.
cd inner_mu_average(const BeltramiSpec& spec, const LogMesh& mesh);

SparseSystem assemble(const BeltramiSpec& spec, const LogMesh& mesh, const NuTable& nu);
SparseSystem assemble_serial(const BeltramiSpec& spec, const LogMesh& mesh, const NuTable& nu);

}  // namespace qc
