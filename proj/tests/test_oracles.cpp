#include <doctest.h>

#include <cmath>

#include "qc/beltrami.hpp"
#include "qc/oracles.hpp"

using namespace qc;

TEST_CASE("complete elliptic integral") {
    CHECK(complete_K(1e-15) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    // Abramowitz & Stegun 17.3.x reference value
    CHECK(complete_K(0.5) == doctest::Approx(1.854074677301372).epsilon(1e-14));
    CHECK(complete_K(0.25) == doctest::Approx(1.685750354812596).epsilon(1e-14));
}

TEST_CASE("jacobi sn special values") {
    for (double m : {0.1, 0.5, 0.9}) {
        const double K = complete_K(m);
        CHECK(std::abs(jacobi_sn(cd(K, 0), m) - cd(1, 0)) < 1e-12);
        CHECK(std::abs(jacobi_sn(cd(0, 0), m)) < 1e-15);
        // odd function
        const cd u(0.3, 0.2);
        CHECK(std::abs(jacobi_sn(u, m) + jacobi_sn(-u, m)) < 1e-13);
        // sn(u + 2K) = -sn(u)
        CHECK(std::abs(jacobi_sn(u + 2.0 * K, m) + jacobi_sn(u, m)) < 1e-12);
    }
    // small-m limit: sn -> sin
    CHECK(std::abs(jacobi_sn(cd(0.7, 0), 1e-12) - std::sin(0.7)) < 1e-10);
}

TEST_CASE("elliptic parameters for the focal ellipse") {
    for (double mu : {0.1, 0.3, 0.5, 0.7}) {
        const auto p = elliptic_params(mu);
        CHECK(p.a * p.a - p.b * p.b == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.q == doctest::Approx(mu * mu).epsilon(1e-14));
        CHECK(p.q == doctest::Approx(std::pow(p.a + p.b, -4.0)).epsilon(1e-12));
        CHECK(p.m == doctest::Approx(p.k * p.k).epsilon(1e-14));
        CHECK(p.b / p.a == doctest::Approx((1.0 - mu) / (1.0 + mu)).epsilon(1e-12));
    }
}

TEST_CASE("constant-mu map: normalization, boundary, symmetry") {
    for (double mu : {0.1, 0.3, 0.5, 0.7}) {
        CHECK(std::abs(exact_constant_map(mu, cd(1, 0)) - cd(1, 0)) < 1e-10);
        CHECK(std::abs(exact_constant_map(mu, cd(0, 0))) < 1e-12);
        for (int i = 0; i < 256; ++i) {
            const cd z = std::polar(1.0, 2.0 * kPi * i / 256);
            const cd w = exact_constant_map(mu, z);
            CHECK(std::abs(std::abs(w) - 1.0) < 1e-8);
            CHECK(std::abs(exact_constant_map(mu, std::conj(z)) - std::conj(w)) < 1e-10);
            CHECK(std::abs(exact_constant_map(mu, -z) + w) < 1e-10);
        }
    }
}

TEST_CASE("constant-mu map against independently computed points") {
    // frozen from a 40-digit theta-function evaluation
    const cd w1 = exact_constant_map(0.5, std::polar(1.0, 1.3744467859455345));
    CHECK(std::arg(w1) == doctest::Approx(0.779365743315).epsilon(1e-9));
    const cd w2 = exact_constant_map(0.5, std::polar(1.0, 1.1780972450961724));
    CHECK(std::arg(w2) == doctest::Approx(0.334172967824).epsilon(1e-9));
}

TEST_CASE("constant-mu map is mu-conformal") {
    const double mu = 0.45, h = 1e-5;
    for (cd z0 : {cd(0.3, 0.1), cd(-0.5, 0.4), cd(0.1, -0.8), cd(0.85, 0.2)}) {
        const cd m = implicit_mu(z0, z0 + h, z0 + cd(0, h), exact_constant_map(mu, z0),
                                 exact_constant_map(mu, z0 + h),
                                 exact_constant_map(mu, z0 + cd(0, h)));
        CHECK(std::abs(m - cd(mu, 0)) < 1e-3);
    }
}

TEST_CASE("radial pair is consistent") {
    auto [spec, exact] = radial_pair();
    CHECK(std::abs(exact(cd(1, 0)) - cd(1, 0)) < 1e-14);
    CHECK(std::abs(exact(cd(0, 0))) == 0.0);
    const double h = 1e-6;
    for (cd z0 : {cd(0.4, 0.2), cd(-0.3, 0.6), cd(0.1, -0.7)}) {
        const cd m = implicit_mu(z0, z0 + h, z0 + cd(0, h), exact(z0), exact(z0 + h),
                                 exact(z0 + cd(0, h)));
        CHECK(std::abs(m - spec(z0)) < 1e-4);
    }
}

TEST_CASE("sectorial pair boundary map") {
    auto [spec, oracle] = sectorial_pair();
    CHECK(oracle.psi(0.0) == doctest::Approx(0.0));
    CHECK(oracle.psi(kPi) == doctest::Approx(kPi / 2.0));
    CHECK(oracle.psi(2.0 * kPi) == doctest::Approx(2.0 * kPi));
    CHECK(oracle.psi(kPi / 2.0) == doctest::Approx(kPi / 4.0));
    const cd w = oracle.boundary(std::polar(1.0, 0.4));
    CHECK(std::abs(w - std::polar(1.0, 0.2)) < 1e-14);
    // slopes match the field
    CHECK(std::abs(spec(std::polar(0.5, 1.0)) -
                   std::polar(0.5 / 1.5, 2.0)) < 1e-12);
}

TEST_CASE("exterior ellipse map") {
    const double alpha = 0.4;
    CHECK(std::abs(exterior_map(alpha, cd(1, 0)) - cd(1, 0)) < 1e-14);
    for (int i = 1; i < 16; ++i) {
        const cd w = exterior_map(alpha, std::polar(1.0, 2.0 * kPi * i / 16));
        // image of the unit circle: semiaxes 1 and 1/alpha
        const double x = w.real(), y = w.imag() * alpha;
        CHECK(x * x + y * y == doctest::Approx(1.0).epsilon(1e-12));
    }
}
