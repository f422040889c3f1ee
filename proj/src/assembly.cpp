#include "qc/assembly.hpp"

#include <cmath>

#include "qc/errors.hpp"

namespace qc {

std::array<cd, 3> triangle_coeffs(cd nu, cd Za, cd Zb, cd Zc) {
    if (Za == Zb || Zb == Zc || Zc == Za)
        throw DegenerateInputError("triangle_coeffs: vertices must be distinct");
    // Coefficient of the vertex image is L_nu of the opposite side difference.
    return {L_mu(nu, Zb - Zc), L_mu(nu, Zc - Za), L_mu(nu, Za - Zb)};
}

cd inner_mu_average(const BeltramiSpec& spec, const LogMesh& mesh) {
    const int M = mesh.order().M;
    const int N = mesh.order().N;
    cd sum = 0.0;
    for (int k = 0; k < N; ++k) sum += spec(mesh.z(-M, k));
    return sum / static_cast<double>(N);
}

std::vector<cd> boundary_targets(const BeltramiSpec& spec, const LogMesh& mesh) {
    const int M = mesh.order().M;
    const int N = mesh.order().N;
    const cd mu0 = inner_mu_average(spec, mesh);
    if (std::abs(mu0) >= 1.0)
        throw InadmissibleFieldError("boundary_targets: |mu_0| >= 1");

    // Lifted ellipse: e_k = r_{-M} L_{mu0}(exp(i theta_k)) at the actual
    // inner vertex angles.  D_k = E_k - E_{k-1} on the continuous branch.
    std::vector<cd> e(N);
    for (int k = 0; k < N; ++k)
        e[k] = L_mu(mu0, std::exp(cd(0.0, mesh.Z(-M, k).imag())));
    std::vector<cd> D(N - 1);
    for (int k = 1; k < N; ++k) {
        const cd ratio = e[k] / e[k - 1];
        D[k - 1] = cd(std::log(std::abs(ratio)), std::arg(ratio));
    }
    return D;
}

namespace {

SparseSystem assemble_impl(const BeltramiSpec& spec, const LogMesh& mesh,
                           const NuTable& nu, bool parallel) {
    const MeshOrder& order = mesh.order();
    const int M = order.M;
    const int N = order.N;
    const auto& tris = mesh.triangles();
    const int nTri = static_cast<int>(tris.size());
    if (static_cast<int>(nu.values.size()) != nTri)
        throw Error("assemble: nu table does not match mesh");

    SparseSystem sys;
    sys.nRows = order.numEquations();
    sys.nCols = order.numVertices();
    sys.entries.resize(3 * static_cast<std::size_t>(nTri));
    sys.rhs.assign(sys.nRows, cd(0.0, 0.0));
    sys.rowKind.resize(sys.nRows);

    const IndexMap& index = mesh.indexMap();
    const cd twoPiI(0.0, 2.0 * kPi);

    // One row per triangle; wrap shifts move to the right-hand side.
#pragma omp parallel for schedule(static) if (parallel)
    for (int t = 0; t < nTri; ++t) {
        const Triangle& tri = tris[t];
        const auto coeff =
            triangle_coeffs(nu.values[t], mesh.Z(tri.v[0]), mesh.Z(tri.v[1]), mesh.Z(tri.v[2]));
        cd rhs = 0.0;
        for (int i = 0; i < 3; ++i) {
            sys.entries[3 * t + i] = {t, index.col(tri.v[i].j, tri.v[i].k), coeff[i]};
            rhs -= coeff[i] * (twoPiI * static_cast<double>(tri.v[i].wrap));
        }
        sys.rhs[t] = rhs;
        sys.rowKind[t] =
            tri.half == HalfPlane::Left ? RowKind::TriangleLeft : RowKind::TriangleRight;
    }

    // Boundary rows: the image of the inner circle is a translate of the
    // lifted ellipse; its reflection gets -conj(D_k) so that the identity
    // assignment W = Z stays exact for mu = 0.
    const std::vector<cd> D = boundary_targets(spec, mesh);
    int row = nTri;
    for (int k = 1; k < N; ++k, ++row) {
        sys.entries.push_back({row, index.col(-M, k), cd(1.0, 0.0)});
        sys.entries.push_back({row, index.col(-M, k - 1), cd(-1.0, 0.0)});
        sys.rhs[row] = D[k - 1];
        sys.rowKind[row] = RowKind::BoundaryLeft;
    }
    for (int k = 1; k < N; ++k, ++row) {
        sys.entries.push_back({row, index.col(M, k), cd(1.0, 0.0)});
        sys.entries.push_back({row, index.col(M, k - 1), cd(-1.0, 0.0)});
        sys.rhs[row] = -std::conj(D[k - 1]);
        sys.rowKind[row] = RowKind::BoundaryRight;
    }

    sys.entries.push_back({row, index.col(0, 0), cd(1.0, 0.0)});
    sys.rhs[row] = cd(0.0, 0.0);
    sys.rowKind[row] = RowKind::Normalization;
    ++row;
    if (row != sys.nRows) throw Error("assemble: row count mismatch");
    return sys;
}

}  // namespace

SparseSystem assemble(const BeltramiSpec& spec, const LogMesh& mesh, const NuTable& nu) {
    return assemble_impl(spec, mesh, nu, true);
}

SparseSystem assemble_serial(const BeltramiSpec& spec, const LogMesh& mesh, const NuTable& nu) {
    return assemble_impl(spec, mesh, nu, false);
}

}  // namespace qc
