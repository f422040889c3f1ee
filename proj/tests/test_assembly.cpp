#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "qc/assembly.hpp"

using namespace qc;

namespace {

SparseSystem assembled(const BeltramiSpec& spec, MeshOrder order) {
    LogMesh mesh = build_mesh(order);
    return assemble(spec, mesh, nu_table(spec, mesh));
}

}  // namespace

TEST_CASE("triangle coefficients sum to zero and never vanish") {
    std::mt19937 rng(515);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> mod(0.0, 0.95);
    int done = 0;
    while (done < 1000) {
        const cd nu = std::polar(mod(rng), kPi * unit(rng));
        const cd Za(unit(rng), unit(rng)), Zb(unit(rng), unit(rng)), Zc(unit(rng), unit(rng));
        if (std::abs(Za - Zb) < 1e-3 || std::abs(Zb - Zc) < 1e-3 || std::abs(Zc - Za) < 1e-3)
            continue;
        const auto [a, b, c] = triangle_coeffs(nu, Za, Zb, Zc);
        CHECK(std::abs(a + b + c) < 1e-12);
        CHECK(std::abs(a) > 0.0);
        CHECK(std::abs(b) > 0.0);
        CHECK(std::abs(c) > 0.0);
        ++done;
    }
    CHECK_THROWS_AS(triangle_coeffs(cd(0, 0), cd(0, 0), cd(0, 0), cd(1, 0)),
                    DegenerateInputError);
}

TEST_CASE("nu = 0 coefficients are the opposite-side differences") {
    const int N = 16;
    LogMesh mesh = build_mesh({2, N});
    const auto& t = mesh.triangles()[0];
    const auto co = triangle_coeffs(cd(0, 0), mesh.Z(t.v[0]), mesh.Z(t.v[1]), mesh.Z(t.v[2]));
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(co[i]) == doctest::Approx(2.0 * kPi / N).epsilon(1e-12));
        CHECK(std::abs(co[i] - (mesh.Z(t.v[(i + 1) % 3]) - mesh.Z(t.v[(i + 2) % 3]))) < 1e-13);
    }
}

TEST_CASE("inner average and boundary targets") {
    LogMesh mesh = build_mesh({4, 8});
    const cd c(0.3, -0.2);
    auto spec = BeltramiSpec::makeConstant(c);
    CHECK(std::abs(inner_mu_average(spec, mesh) - c) < 1e-15);

    const auto D = boundary_targets(spec, mesh);
    REQUIRE(static_cast<int>(D.size()) == 8 - 1);
    // differences telescope to E_{N-1} - E_0 on the continuous branch
    cd total = 0.0;
    for (cd d : D) {
        total += d;
        CHECK(d.imag() > 0.0);  // the lifted ellipse winds monotonically
    }
    const cd e0 = L_mu(c, std::exp(cd(0.0, mesh.Z(-4, 0).imag())));
    const cd e7 = L_mu(c, std::exp(cd(0.0, mesh.Z(-4, 7).imag())));
    CHECK(std::abs(std::exp(total) - e7 / e0) < 1e-13);
    // magnitude of r_{-M} never enters
    CHECK(std::abs(total.imag()) < 2.0 * kPi);
}

TEST_CASE("assembled shape, row classes and sparsity pattern") {
    const MeshOrder order{12, 16};
    for (const char* text : {"constant:0.3", "radial", "sectorial", "daripa1", "daripa2",
                             "oscillate"}) {
        auto spec = BeltramiSpec::parse(text);
        auto sys = assembled(spec, order);
        CHECK(sys.nRows == order.numEquations());
        CHECK(sys.nCols == order.numVertices());

        std::vector<int> perRow(sys.nRows, 0), perCol(sys.nCols, 0);
        for (const auto& e : sys.entries) {
            ++perRow[e.row];
            ++perCol[e.col];
        }
        int colAtSeven = 0;
        for (int r = 0; r < sys.nRows; ++r) CHECK(perRow[r] <= 3);
        for (int c = 0; c < sys.nCols; ++c) {
            CHECK(perCol[c] <= 7);
            if (perCol[c] == 7) ++colAtSeven;
        }
        CHECK(colAtSeven == 1);  // only the normalized vertex W_00

        int tri = 0, bdry = 0, norm = 0;
        for (RowKind k : sys.rowKind) {
            if (k == RowKind::TriangleLeft || k == RowKind::TriangleRight) ++tri;
            else if (k == RowKind::Normalization) ++norm;
            else ++bdry;
        }
        CHECK(tri == 4 * order.M * order.N);
        CHECK(bdry == 2 * (order.N - 1));
        CHECK(norm == 1);
    }
}

TEST_CASE("triangle rows sum to zero coefficient-wise") {
    auto sys = assembled(BeltramiSpec::radial(), {6, 12});
    std::vector<cd> rowSum(sys.nRows, cd(0, 0));
    for (const auto& e : sys.entries) rowSum[e.row] += e.value;
    for (int r = 0; r < sys.nRows; ++r)
        if (sys.rowKind[r] == RowKind::TriangleLeft || sys.rowKind[r] == RowKind::TriangleRight)
            CHECK(std::abs(rowSum[r]) < 1e-12);
}

TEST_CASE("identity assignment W = Z is exact for mu = 0") {
    const MeshOrder order{6, 12};
    LogMesh mesh = build_mesh(order);
    auto spec = BeltramiSpec::makeConstant(cd(0, 0));
    auto sys = assemble(spec, mesh, nu_table(spec, mesh));
    std::vector<cd> W(order.numVertices());
    for (int k = 0; k < order.N; ++k)
        for (int j = -order.M; j <= order.M; ++j)
            W[mesh.indexMap().col(j, k)] = mesh.Z(j, k);
    std::vector<cd> res(sys.nRows, cd(0, 0));
    for (const auto& e : sys.entries) res[e.row] += e.value * W[e.col];
    for (int r = 0; r < sys.nRows; ++r) CHECK(std::abs(res[r] - sys.rhs[r]) < 1e-12);
}

TEST_CASE("wrapped rows move the 2 pi i shift to the right-hand side") {
    const MeshOrder order{2, 8};
    LogMesh mesh = build_mesh(order);
    auto spec = BeltramiSpec::makeConstant(cd(0, 0));
    auto sys = assemble(spec, mesh, nu_table(spec, mesh));
    const auto& tris = mesh.triangles();
    int wrappedRows = 0;
    for (std::size_t t = 0; t < tris.size(); ++t) {
        if (!tris[t].wrapped()) {
            CHECK(std::abs(sys.rhs[t]) == 0.0);
            continue;
        }
        ++wrappedRows;
        CHECK(std::abs(sys.rhs[t]) > 1e-12);
        // rhs is -sum coeff * 2 pi i wrap over the wrapped vertices
        const auto co = triangle_coeffs(cd(0, 0), mesh.Z(tris[t].v[0]), mesh.Z(tris[t].v[1]),
                                        mesh.Z(tris[t].v[2]));
        cd expect = 0.0;
        for (int i = 0; i < 3; ++i)
            expect -= co[i] * cd(0.0, 2.0 * kPi * tris[t].v[i].wrap);
        CHECK(std::abs(sys.rhs[t] - expect) < 1e-13);
    }
    CHECK(wrappedRows == 4 * order.M);
}

TEST_CASE("nu table size mismatch is rejected") {
    LogMesh mesh = build_mesh({2, 8});
    auto spec = BeltramiSpec::makeConstant(cd(0.1, 0));
    NuTable bad;
    bad.values.resize(3);
    CHECK_THROWS_AS(assemble(spec, mesh, bad), Error);
}
