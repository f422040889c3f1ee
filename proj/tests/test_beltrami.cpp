#include <doctest.h>

#include <cmath>
#include <random>

#include "qc/beltrami.hpp"

using namespace qc;

TEST_CASE("L_mu basics") {
    CHECK(std::abs(L_mu(0.0, cd(0.3, -0.7)) - cd(0.3, -0.7)) < 1e-15);
    for (cd mu : {cd(0.5, 0.0), cd(0.2, 0.3), cd(-0.4, 0.1)}) {
        CHECK(std::abs(L_mu(mu, cd(0, 0))) < 1e-15);
        CHECK(std::abs(L_mu(mu, cd(1, 0)) - cd(1, 0)) < 1e-15);
    }
    CHECK_THROWS_AS(L_mu(cd(1.0, 0.0), cd(1, 0)), DomainError);
}

TEST_CASE("affine interpolation and implicit mu round trip") {
    std::mt19937 rng(20240917);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> mod(0.0, 0.95);
    int done = 0;
    while (done < 1000) {
        const double r = mod(rng), phi = kPi * unit(rng);
        const cd mu = std::polar(r, phi);
        const cd z1(unit(rng), unit(rng)), z2(unit(rng), unit(rng)), z3(unit(rng), unit(rng));
        const double area = std::imag(std::conj(z2 - z1) * (z3 - z1));
        if (std::abs(area) < 1e-3) continue;  // keep the triple well conditioned
        const cd w1(unit(rng), unit(rng)), w2(unit(rng), unit(rng));
        if (std::abs(z1 - z2) < 1e-3 || std::abs(w1 - w2) < 1e-3) continue;
        AffineMap B = affine_B(mu, z1, z2, w1, w2);
        CHECK(std::abs(B(z1) - w1) < 1e-12);
        CHECK(std::abs(B(z2) - w2) < 1e-12);
        const cd rec = implicit_mu(z1, z2, z3, B(z1), B(z2), B(z3));
        CHECK(std::abs(rec - mu) < 1e-9);
        ++done;
    }
}

TEST_CASE("implicit mu rejects degenerate triples") {
    CHECK_THROWS_AS(implicit_mu(cd(0, 0), cd(1, 0), cd(2, 0), cd(0, 0), cd(1, 0), cd(2, 1)),
                    DegenerateInputError);
    CHECK_THROWS_AS(implicit_mu(cd(0, 0), cd(1, 0), cd(0, 1), cd(0, 0), cd(1, 0), cd(2, 0)),
                    DegenerateInputError);
}

TEST_CASE("affine map parameter checks") {
    CHECK_THROWS_AS(affine_B(cd(1.2, 0), cd(0, 0), cd(1, 0), cd(0, 0), cd(1, 0)), DomainError);
    CHECK_THROWS_AS(affine_B(cd(0.2, 0), cd(1, 0), cd(1, 0), cd(0, 0), cd(1, 0)),
                    DegenerateInputError);
}

TEST_CASE("triangle discrepancy") {
    CHECK(std::abs(triangle_discrepancy(cd(0.5, 1.0), cd(0.5, 1.0))) < 1e-15);
    CHECK_THROWS_AS(triangle_discrepancy(cd(0.5, -1.0), cd(0.5, 1.0)), DomainError);
}

TEST_CASE("pullback is 2 pi i periodic and carries the (-1,1) weight") {
    auto spec = BeltramiSpec::makeConstant(cd(0.4, 0.1));
    const cd Z(-0.3, 1.1);
    CHECK(std::abs(pullback_nu(spec, Z) - pullback_nu(spec, Z + cd(0, 2 * kPi))) < 1e-14);
    CHECK(std::abs(pullback_nu(spec, Z) - spec(std::exp(Z)) * std::exp(cd(0, -2.0 * Z.imag()))) <
          1e-15);
}

TEST_CASE("nu table: zero field, symmetry, admissibility") {
    LogMesh mesh = build_mesh({4, 8});
    auto zero = nu_table(BeltramiSpec::makeConstant(cd(0, 0)), mesh);
    for (cd v : zero.values) CHECK(std::abs(v) == 0.0);

    auto table = nu_table(BeltramiSpec::radial(), mesh);
    const auto& tris = mesh.triangles();
    for (std::size_t i = 0; i < tris.size(); ++i) {
        CHECK(std::abs(table[i]) < 1.0);
        CHECK(std::abs(table[tris[i].partner] - std::conj(table[i])) == 0.0);
    }

    BeltramiSpec bad;
    bad.name = "bad";
    // large enough that the three-vertex phase averaging cannot pull |nu| under 1
    bad.eval = [](cd) { return cd(2.5, 0.0); };
    CHECK_THROWS_AS(nu_table(bad, mesh), InadmissibleFieldError);
}

TEST_CASE("nu table mean converges to the centroid value at O(h^2)") {
    const cd c(0.35, 0.15);
    auto spec = BeltramiSpec::makeConstant(c);
    double prev = 0.0;
    for (int step = 0; step < 3; ++step) {
        const int N = 8 << step;
        LogMesh mesh = build_mesh({2, N});
        auto table = nu_table(spec, mesh);
        double worst = 0.0;
        const auto& tris = mesh.triangles();
        for (std::size_t i = 0; i < tris.size() / 2; ++i) {
            const cd Zc = (mesh.Z(tris[i].v[0]) + mesh.Z(tris[i].v[1]) + mesh.Z(tris[i].v[2])) / 3.0;
            worst = std::max(worst, std::abs(table[i] - c * std::exp(cd(0, -2.0 * Zc.imag()))));
        }
        if (step > 0) CHECK(worst < 0.30 * prev);  // ~4x drop per halving
        prev = worst;
    }
}

TEST_CASE("spec parser") {
    CHECK(BeltramiSpec::parse("constant:0.3").constant == cd(0.3, 0.0));
    CHECK(BeltramiSpec::parse("constant:0.1+0.2i").constant == cd(0.1, 0.2));
    CHECK(BeltramiSpec::parse("constant:-0.25-0.5i").constant == cd(-0.25, -0.5));
    CHECK(BeltramiSpec::parse("radial").kind == FieldKind::Radial);
    CHECK(BeltramiSpec::parse("sectorial").kind == FieldKind::Sectorial);
    CHECK(BeltramiSpec::parse("daripa1").kind == FieldKind::Daripa1);
    CHECK(BeltramiSpec::parse("daripa2").kind == FieldKind::Daripa2);
    CHECK(BeltramiSpec::parse("oscillate").kind == FieldKind::Oscillate);
    auto f = BeltramiSpec::parse("fuchsian:0.5:3");
    CHECK(f.kind == FieldKind::Fuchsian);
    CHECK(f.fuchsianC == 0.5);
    CHECK(f.wordLen == 3);
    CHECK_THROWS_AS(BeltramiSpec::parse("constant:"), ParameterError);
    CHECK_THROWS_AS(BeltramiSpec::parse("nope"), ParameterError);
    CHECK_THROWS_AS(BeltramiSpec::parse("constant:1.5"), ParameterError);
    CHECK_THROWS_AS(BeltramiSpec::parse("fuchsian:1.5"), ParameterError);
    CHECK(!BeltramiSpec::catalog().empty());
}

TEST_CASE("builtin fields stay sub-unit away from their singularities") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> rad(0.05, 0.999);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (auto spec : {BeltramiSpec::radial(), BeltramiSpec::sectorial(), BeltramiSpec::daripa1(),
                      BeltramiSpec::daripa2(), BeltramiSpec::oscillate()}) {
        for (int i = 0; i < 200; ++i) {
            const cd z = std::polar(rad(rng), ang(rng));
            CHECK(std::abs(spec(z)) < 1.0);
        }
    }
    CHECK_THROWS_AS(BeltramiSpec::radial()(cd(0, 0)), DomainError);
    CHECK_THROWS_AS(BeltramiSpec::sectorial()(cd(0, 0)), DomainError);
}
