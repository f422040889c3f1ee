#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qc/mesh.hpp"

namespace qc {

// Normalized real-linear mu-conformal map fixing 0 and 1.
cd L_mu(cd mu, cd z);

// Unique mu-conformal affine map with B(z1)=w1, B(z2)=w2.
class AffineMap {
  public:
    AffineMap(cd mu, cd z1, cd z2, cd w1, cd w2);
    cd operator()(cd z) const;
    cd mu() const { return mu_; }

  private:
    cd mu_, z1_, w1_, scale_;
};

inline AffineMap affine_B(cd mu, cd z1, cd z2, cd w1, cd w2) {
    return AffineMap(mu, z1, z2, w1, w2);
}

// Beltrami derivative of the affine map sending the z-triple to the w-triple.
// A (numerically) zero denominator yields an out-of-range modulus, not a crash.
cd implicit_mu(cd z1, cd z2, cd z3, cd w1, cd w2, cd w3);

// Similarity-class distance parameter between normalized triangles (0,1,c0)
// and (0,1,c): -(c - c0)/(c - conj(c0)).
cd triangle_discrepancy(cd c0, cd c);

enum class FieldKind { Constant, Radial, Sectorial, Daripa1, Daripa2, Oscillate, Fuchsian };

// A named, evaluable Beltrami field on the disk.
struct BeltramiSpec {
    FieldKind kind = FieldKind::Constant;
    cd constant{0.0, 0.0};
    double fuchsianC = 0.0;
    int wordLen = 6;
    std::string name;
    std::function<cd(cd)> eval;

    cd operator()(cd z) const { return eval(z); }

    static BeltramiSpec makeConstant(cd c);
    static BeltramiSpec radial();
    static BeltramiSpec sectorial();
    static BeltramiSpec daripa1();
    static BeltramiSpec daripa2();
    static BeltramiSpec oscillate();
    static BeltramiSpec fuchsian(double c, int wordLen = 6);

    // CLI syntax: constant:<re>[+<im>i] | radial | sectorial | daripa1 |
    // daripa2 | oscillate | fuchsian:<c>[:<wordLen>]
    static BeltramiSpec parse(const std::string& text);
    static std::vector<std::string> catalog();
};

// Pullback of mu to logarithmic coordinates as a (-1,1)-differential.
cd pullback_nu(const BeltramiSpec& spec, cd Z);

// Per-triangle averaged pullback, aligned with LogMesh::triangles().
// Right-half values are conjugates of their reflected partners.
struct NuTable {
    std::vector<cd> values;
    cd operator[](std::size_t t) const { return values[t]; }
};

NuTable nu_table(const BeltramiSpec& spec, const LogMesh& mesh);
NuTable nu_table_serial(const BeltramiSpec& spec, const LogMesh& mesh);

}  // namespace qc
