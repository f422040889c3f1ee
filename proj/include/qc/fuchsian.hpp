#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qc/mesh.hpp"

namespace qc {

// Determinant-1 linear-fractional transformation z -> (az+b)/(cz+d).
struct Mobius {
    cd a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    cd operator()(cd z) const { return (a * z + b) / (c * z + d); }
    cd deriv(cd z) const {
        const cd den = c * z + d;
        return 1.0 / (den * den);
    }
    Mobius compose(const Mobius& o) const {  // this after o
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mobius inverse() const { return {d, -b, -c, a}; }
    Mobius normalized() const;
};

// All freely reduced words of length <= L over the two standard generators
// and their inverses, as normalized Mobius elements.
struct GroupEnumeration {
    int maxLen = 0;
    std::vector<Mobius> words;        // identity first, then by length
    std::array<Mobius, 4> gens;       // g1, g1^-1, g2, g2^-1
};

GroupEnumeration enumerate_group(int L);

// Truncated Poincare series sum_gamma gamma'(z)^2 evaluated directly.
cd theta_series_direct(const GroupEnumeration& en, cd z);

// Series evaluation with fundamental-domain reduction: z is first pulled
// toward the origin by group elements and the invariance relation
// Theta(z) = Theta(gamma(z)) gamma'(z)^2 is applied.
cd theta_series(const GroupEnumeration& en, cd z);

// Teichmuller-type differential mu = c conj(Theta)/Theta, |mu| = |c|.
cd fuchsian_mu(double c, const GroupEnumeration& en, cd z);

}  // namespace qc
