#include "qc/oracles.hpp"

#include <cmath>

#include "qc/errors.hpp"

namespace qc {

namespace {

// theta_1(v, q) = 2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1) v)
cd theta1(cd v, double q) {
    cd sum = 0.0;
    double sign = 1.0;
    for (int n = 0; n < 64; ++n) {
        const double coeff = std::pow(q, (n + 0.5) * (n + 0.5));
        const cd term = sign * coeff * std::sin(static_cast<double>(2 * n + 1) * v);
        sum += term;
        if (n > 2 && std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) break;
        sign = -sign;
    }
    return 2.0 * sum;
}

// theta_4(v, q) = 1 + 2 sum (-1)^n q^{n^2} cos(2 n v)
cd theta4(cd v, double q) {
    cd sum = 1.0;
    double sign = -1.0;
    for (int n = 1; n < 64; ++n) {
        const cd term = 2.0 * sign * std::pow(q, static_cast<double>(n) * n) *
                        std::cos(static_cast<double>(2 * n) * v);
        sum += term;
        if (n > 2 && std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) break;
        sign = -sign;
    }
    return sum;
}

}  // namespace

std::pair<double, double> theta2_theta3(double q) {
    if (q <= 0.0 || q >= 1.0) throw DomainError("theta2_theta3: q must be in (0,1)");
    double t2 = 0.0;
    for (int n = 0; n < 64; ++n) {
        const double term = std::pow(q, n * (n + 1.0));
        t2 += term;
        if (term < 1e-16 * t2) break;
    }
    t2 *= 2.0 * std::pow(q, 0.25);
    double t3 = 1.0;
    for (int n = 1; n < 64; ++n) {
        const double term = 2.0 * std::pow(q, static_cast<double>(n) * n);
        t3 += term;
        if (term < 1e-16 * t3) break;
    }
    return {t2, t3};
}

double complete_K(double m) {
    if (m <= 0.0 || m >= 1.0) throw DomainError("complete_K: m must be in (0,1)");
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (2.0 * a);
}

cd jacobi_sn(cd u, double m) {
    if (m <= 0.0 || m >= 1.0) throw DomainError("jacobi_sn: m must be in (0,1)");
    const double K = complete_K(m);
    const double Kp = complete_K(1.0 - m);
    const double q = std::exp(-kPi * Kp / K);
    const auto [t2, t3] = theta2_theta3(q);
    const cd v = u * kPi / (2.0 * K);
    const cd den = theta4(v, q);
    if (std::abs(den) < 1e-8)
        throw DomainError("jacobi_sn: argument too close to a pole");
    return (t3 / t2) * theta1(v, q) / den;
}

EllipticParams elliptic_params(double mu) {
    if (mu <= 0.0 || mu >= 1.0)
        throw DomainError("elliptic oracle: mu must be real in (0,1)");
    EllipticParams p;
    p.mu = mu;
    const double s = 0.5 / std::sqrt(mu);
    p.a = s * (1.0 + mu);
    p.b = s * (1.0 - mu);
    p.q = mu * mu;  // (a+b)^-4
    const auto [t2, t3] = theta2_theta3(p.q);
    p.k = (t2 / t3) * (t2 / t3);
    p.m = p.k * p.k;
    p.K = complete_K(p.m);
    return p;
}

cd exact_constant_map(double mu, cd z) {
    const EllipticParams p = elliptic_params(mu);
    const auto [t2, t3] = theta2_theta3(p.q);
    // Scale so the L_mu image of the unit circle has foci +-1.
    const cd u = (z + mu * std::conj(z)) / (2.0 * std::sqrt(mu));
    const cd v = std::asin(u);
    const cd den = theta4(v, p.q);
    if (std::abs(den) < 1e-10)
        throw DomainError("exact_constant_map: evaluation hit a pole");
    return std::sqrt(p.k) * (t3 / t2) * theta1(v, p.q) / den;
}

std::pair<BeltramiSpec, std::function<cd(cd)>> radial_pair() {
    auto exact = [](cd z) -> cd {
        const double r = std::abs(z);
        if (r == 0.0) return cd(0.0, 0.0);
        const double phi = (1.0 - std::cos(3.0 * r)) / (1.0 - std::cos(3.0));
        return phi * z / r;
    };
    return {BeltramiSpec::radial(), exact};
}

std::pair<BeltramiSpec, SectorialOracle> sectorial_pair() {
    SectorialOracle oracle;
    oracle.psi = [](double theta) {
        return theta <= kPi ? 0.5 * theta : 0.5 * kPi + 1.5 * (theta - kPi);
    };
    oracle.boundary = [psi = oracle.psi](cd z) {
        double theta = std::arg(z);
        if (theta < 0.0) theta += 2.0 * kPi;
        return std::exp(cd(0.0, psi(theta)));
    };
    return {BeltramiSpec::sectorial(), oracle};
}

cd exterior_map(double alpha, cd z) {
    if (alpha <= 0.0 || alpha >= 1.0)
        throw DomainError("exterior_map: alpha must be in (0,1)");
    if (z == cd(0.0, 0.0)) throw DomainError("exterior_map: pole at z = 0");
    return ((1.0 + alpha) - (1.0 - alpha) * z * z) / (2.0 * alpha * z);
}

}  // namespace qc
