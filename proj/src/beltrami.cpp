#include "qc/beltrami.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "qc/errors.hpp"
#include "qc/fuchsian.hpp"

namespace qc {

cd L_mu(cd mu, cd z) {
    if (std::abs(mu) >= 1.0) throw DomainError("L_mu: |mu| must be < 1");
    return (z + mu * std::conj(z)) / (1.0 + mu);
}

AffineMap::AffineMap(cd mu, cd z1, cd z2, cd w1, cd w2) : mu_(mu), z1_(z1), w1_(w1) {
    if (std::abs(mu) >= 1.0) throw DomainError("affine_B: |mu| must be < 1");
    if (z1 == z2 || w1 == w2)
        throw DegenerateInputError("affine_B: interpolation points must be distinct");
    scale_ = (w2 - w1) / L_mu(mu, z2 - z1);
}

cd AffineMap::operator()(cd z) const {
    return w1_ + scale_ * L_mu(mu_, z - z1_);
}

cd implicit_mu(cd z1, cd z2, cd z3, cd w1, cd w2, cd w3) {
    const cd dz2 = z2 - z1, dz3 = z3 - z1;
    const cd dw2 = w2 - w1, dw3 = w3 - w1;
    const double zArea = std::imag(std::conj(dz2) * dz3);
    const double wArea = std::imag(std::conj(dw2) * dw3);
    const double zScale = std::norm(dz2) + std::norm(dz3);
    const double wScale = std::norm(dw2) + std::norm(dw3);
    if (zScale == 0.0 || std::abs(zArea) < 1e-14 * zScale)
        throw DegenerateInputError("implicit_mu: collinear z-triple");
    if (wScale == 0.0 || std::abs(wArea) < 1e-14 * wScale)
        throw DegenerateInputError("implicit_mu: collinear w-triple");
    const cd num = dz2 * dw3 - dz3 * dw2;
    const cd den = std::conj(dz2) * dw3 - std::conj(dz3) * dw2;
    if (den == cd(0.0, 0.0))
        return cd(std::numeric_limits<double>::infinity(), 0.0);
    return -num / den;
}

cd triangle_discrepancy(cd c0, cd c) {
    if (c0.imag() <= 0.0 || c.imag() <= 0.0)
        throw DomainError("triangle_discrepancy: both parameters need positive imaginary part");
    return -(c - c0) / (c - std::conj(c0));
}

cd pullback_nu(const BeltramiSpec& spec, cd Z) {
    return spec.eval(std::exp(Z)) * std::exp(cd(0.0, -2.0 * Z.imag()));
}

// ---- builtin field catalog --------------------------------------------

BeltramiSpec BeltramiSpec::makeConstant(cd c) {
    if (std::abs(c) >= 1.0) throw ParameterError("constant field: |c| must be < 1");
    BeltramiSpec s;
    s.kind = FieldKind::Constant;
    s.constant = c;
    std::ostringstream name;
    name << "constant:" << c.real();
    if (c.imag() != 0.0) name << "+" << c.imag() << "i";
    s.name = name.str();
    s.eval = [c](cd) { return c; };
    return s;
}

BeltramiSpec BeltramiSpec::radial() {
    BeltramiSpec s;
    s.kind = FieldKind::Radial;
    s.name = "radial";
    s.eval = [](cd z) {
        const double r = std::abs(z);
        if (r == 0.0) throw DomainError("radial field: undefined at z = 0");
        // phi(r) = (1 - cos 3r)/(1 - cos 3); rho = r phi'(r)/phi(r)
        const double rho = 3.0 * r * std::sin(3.0 * r) / (1.0 - std::cos(3.0 * r));
        return (rho - 1.0) / (rho + 1.0) * (z / std::conj(z));
    };
    return s;
}

BeltramiSpec BeltramiSpec::sectorial() {
    BeltramiSpec s;
    s.kind = FieldKind::Sectorial;
    s.name = "sectorial";
    s.eval = [](cd z) {
        if (z == cd(0.0, 0.0)) throw DomainError("sectorial field: undefined at z = 0");
        double theta = std::arg(z);
        if (theta < 0.0) theta += 2.0 * kPi;
        const double dpsi = (theta < kPi) ? 0.5 : 1.5;
        return (1.0 - dpsi) / (1.0 + dpsi) * (z / std::conj(z));
    };
    return s;
}

BeltramiSpec BeltramiSpec::daripa1() {
    BeltramiSpec s;
    s.kind = FieldKind::Daripa1;
    s.name = "daripa1";
    s.eval = [](cd z) {
        const cd z5 = z * z * z * z * z;
        return std::norm(z) * std::exp(0.65 * (cd(0.0, 1.0) * z5 - 2.0));
    };
    return s;
}

BeltramiSpec BeltramiSpec::daripa2() {
    BeltramiSpec s;
    s.kind = FieldKind::Daripa2;
    s.name = "daripa2";
    s.eval = [](cd z) { return cd(0.5 * std::norm(z) * std::sin(5.0 * z.real()), 0.0); };
    return s;
}

BeltramiSpec BeltramiSpec::oscillate() {
    BeltramiSpec s;
    s.kind = FieldKind::Oscillate;
    s.name = "oscillate";
    s.eval = [](cd z) { return cd(0.9 * std::sin(20.0 * std::abs(z)), 0.0); };
    return s;
}

BeltramiSpec BeltramiSpec::fuchsian(double c, int wordLen) {
    if (std::abs(c) >= 1.0) throw ParameterError("fuchsian field: |c| must be < 1");
    BeltramiSpec s;
    s.kind = FieldKind::Fuchsian;
    s.fuchsianC = c;
    s.wordLen = wordLen;
    std::ostringstream name;
    name << "fuchsian:" << c << ":" << wordLen;
    s.name = name.str();
    auto en = std::make_shared<GroupEnumeration>(enumerate_group(wordLen));
    s.eval = [c, en](cd z) {
        // mesh vertices on the unit circle hit the |z| < 1 precondition of the
        // series; the truncated sum is analytic through the circle (its poles
        // lie outside), so nudge such points inward instead of failing
        const double r = std::abs(z);
        if (r >= 1.0 - 1e-12) z *= (1.0 - 1e-12) / r;
        return fuchsian_mu(c, *en, z);
    };
    return s;
}

std::vector<std::string> BeltramiSpec::catalog() {
    return {"constant:<re>[+<im>i]", "radial",    "sectorial",
            "daripa1",               "daripa2",   "oscillate",
            "fuchsian:<c>[:<wordLen>]"};
}

BeltramiSpec BeltramiSpec::parse(const std::string& text) {
    auto fail = [&]() -> BeltramiSpec {
        std::ostringstream msg;
        msg << "unknown Beltrami spec '" << text << "'; valid:";
        for (const auto& c : catalog()) msg << " " << c;
        throw ParameterError(msg.str());
    };
    if (text == "radial") return radial();
    if (text == "sectorial") return sectorial();
    if (text == "daripa1") return daripa1();
    if (text == "daripa2") return daripa2();
    if (text == "oscillate") return oscillate();
    if (text.rfind("constant:", 0) == 0) {
        const std::string body = text.substr(9);
        double re = 0.0, im = 0.0;
        std::size_t pos = 0;
        try {
            re = std::stod(body, &pos);
        } catch (const std::exception&) {
            return fail();
        }
        if (pos < body.size()) {
            std::string rest = body.substr(pos);
            if (rest.size() < 2 || rest.back() != 'i') return fail();
            if (rest.front() == '+') rest = rest.substr(1);
            try {
                im = std::stod(rest.substr(0, rest.size() - 1));
            } catch (const std::exception&) {
                return fail();
            }
        }
        return makeConstant(cd(re, im));
    }
    if (text.rfind("fuchsian:", 0) == 0) {
        const std::string body = text.substr(9);
        const std::size_t colon = body.find(':');
        try {
            const double c = std::stod(body.substr(0, colon));
            int L = 6;
            if (colon != std::string::npos) L = std::stoi(body.substr(colon + 1));
            return fuchsian(c, L);
        } catch (const ParameterError&) {
            throw;
        } catch (const std::exception&) {
            return fail();
        }
    }
    return fail();
}

// ---- per-triangle averages --------------------------------------------

namespace {

cd triangle_nu(const BeltramiSpec& spec, const LogMesh& mesh, const Triangle& t) {
    cd sum = 0.0;
    for (const TriangleVertex& tv : t.v) sum += pullback_nu(spec, mesh.Z(tv));
    return sum / 3.0;
}

void check_nu(const NuTable& table, const LogMesh& mesh) {
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        if (std::abs(table.values[i]) >= 1.0) {
            const Triangle& t = mesh.triangles()[i];
            std::ostringstream msg;
            msg << "inadmissible Beltrami field: |nu| >= 1 on triangle ("
                << t.j << "," << t.k << ","
                << (t.family == TriangleFamily::Rightward ? "+" : "-") << ")";
            throw InadmissibleFieldError(msg.str());
        }
    }
}

}  // namespace

NuTable nu_table(const BeltramiSpec& spec, const LogMesh& mesh) {
    const auto& tris = mesh.triangles();
    const int nLeft = static_cast<int>(tris.size()) / 2;
    NuTable table;
    table.values.resize(tris.size());
    // Field evaluation may throw (e.g. a theta-series zero); exceptions must
    // not escape the parallel region, so capture one and rethrow after.
    std::exception_ptr err;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nLeft; ++i) {
        try {
            table.values[i] = triangle_nu(spec, mesh, tris[i]);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    for (int i = 0; i < nLeft; ++i)
        table.values[tris[i].partner] = std::conj(table.values[i]);
    check_nu(table, mesh);
    return table;
}

NuTable nu_table_serial(const BeltramiSpec& spec, const LogMesh& mesh) {
    const auto& tris = mesh.triangles();
    const int nLeft = static_cast<int>(tris.size()) / 2;
    NuTable table;
    table.values.resize(tris.size());
    for (int i = 0; i < nLeft; ++i)
        table.values[i] = triangle_nu(spec, mesh, tris[i]);
    for (int i = 0; i < nLeft; ++i)
        table.values[tris[i].partner] = std::conj(table.values[i]);
    check_nu(table, mesh);
    return table;
}

}  // namespace qc
