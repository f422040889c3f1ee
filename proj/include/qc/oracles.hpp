#pragma once

#include <complex>
#include <functional>
#include <utility>

#include "qc/beltrami.hpp"

namespace qc {

// Jacobi theta null values theta_2(q), theta_3(q), series summed to 1e-16
// relative truncation.
std::pair<double, double> theta2_theta3(double q);

// Complete elliptic integral K(m) via the arithmetic-geometric mean.
double complete_K(double m);

// Jacobi sn for complex argument, parameter m = k^2 in (0,1).
cd jacobi_sn(cd u, double m);

// Derived quantities for the constant-mu elliptic map.
struct EllipticParams {
    double mu;  // real, in (0,1)
    double a, b;  // semiaxes of the focal ellipse, a^2 - b^2 = 1
    double q;     // nome, q = (a+b)^-4 = mu^2
    double k;     // modulus
    double m;     // parameter m = k^2
    double K;     // complete elliptic integral of m
};

EllipticParams elliptic_params(double mu);

// Exact normalized mu-conformal self-map of the disk for real constant mu.
cd exact_constant_map(double mu, cd z);

// Radial test pair: the builtin radial field together with its exact map.
std::pair<BeltramiSpec, std::function<cd(cd)>> radial_pair();

// Sectorial test pair: the field and the exact boundary angle map psi.
struct SectorialOracle {
    std::function<double(double)> psi;     // boundary angle map on [0, 2pi]
    std::function<cd(cd)> boundary;        // f(e^{i theta}) = e^{i psi(theta)}
};
std::pair<BeltramiSpec, SectorialOracle> sectorial_pair();

// Conformal map from the disk to the exterior of an ellipse of aspect
// ratio alpha, h(z) = ((1+alpha) - (1-alpha) z^2) / (2 alpha z).
cd exterior_map(double alpha, cd z);

}  // namespace qc
