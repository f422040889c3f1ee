#include "qc/fuchsian.hpp"

#include <cmath>

#include "qc/errors.hpp"

namespace qc {

Mobius Mobius::normalized() const {
    const cd det = a * d - b * c;
    const cd s = std::sqrt(det);
    return {a / s, b / s, c / s, d / s};
}

namespace {

std::array<Mobius, 4> standard_generators() {
    const double r = std::sqrt(2.0);
    const Mobius g1 = Mobius{cd(r), cd(1.0), cd(1.0), cd(r)}.normalized();
    const Mobius g2 = Mobius{cd(r), cd(0.0, 1.0), cd(0.0, -1.0), cd(r)}.normalized();
    return {g1, g1.inverse(), g2, g2.inverse()};
}

int inverse_letter(int i) { return i ^ 1; }

}  // namespace

GroupEnumeration enumerate_group(int L) {
    if (L < 0) throw ParameterError("enumerate_group: L must be >= 0");
    if (L > 12) throw ParameterError("enumerate_group: word length cap exceeded (L <= 12)");

    GroupEnumeration en;
    en.maxLen = L;
    en.gens = standard_generators();
    en.words.push_back(Mobius{});

    struct Node {
        Mobius m;
        int last;
    };
    std::vector<Node> frontier;
    for (int i = 0; i < 4; ++i)
        if (L >= 1) frontier.push_back({en.gens[i], i});
    for (const Node& n : frontier) en.words.push_back(n.m);

    for (int len = 2; len <= L; ++len) {
        std::vector<Node> next;
        next.reserve(frontier.size() * 3);
        for (const Node& n : frontier) {
            for (int i = 0; i < 4; ++i) {
                if (i == inverse_letter(n.last)) continue;  // freely reduced
                next.push_back({en.gens[i].compose(n.m).normalized(), i});
            }
        }
        for (const Node& n : next) en.words.push_back(n.m);
        frontier = std::move(next);
    }
    return en;
}

cd theta_series_direct(const GroupEnumeration& en, cd z) {
    if (std::abs(z) >= 1.0) throw DomainError("theta_series: |z| must be < 1");
    cd sum = 0.0;
    for (const Mobius& m : en.words) {
        const cd d = m.deriv(z);
        sum += d * d;
    }
    return sum;
}

cd theta_series(const GroupEnumeration& en, cd z) {
    if (std::abs(z) >= 1.0) throw DomainError("theta_series: |z| must be < 1");
    // Pull z toward the origin; each step shrinks |z| or we stop.
    cd chain = 1.0;
    cd p = z;
    for (int step = 0; step < 100; ++step) {
        int best = -1;
        double bestAbs = std::abs(p) - 1e-15;
        for (int i = 0; i < 4; ++i) {
            const double r = std::abs(en.gens[i](p));
            if (r < bestAbs) {
                bestAbs = r;
                best = i;
            }
        }
        if (best < 0) break;
        chain *= en.gens[best].deriv(p);
        p = en.gens[best](p);
    }
    const cd theta0 = theta_series_direct(en, p);
    return theta0 * chain * chain;
}

cd fuchsian_mu(double c, const GroupEnumeration& en, cd z) {
    if (std::abs(c) >= 1.0) throw DomainError("fuchsian_mu: |c| must be < 1");
    const cd theta = theta_series(en, z);
    if (std::abs(theta) < 1e-12)
        throw DomainError("fuchsian_mu: evaluation at a zero of Theta");
    return c * std::conj(theta) / theta;
}

}  // namespace qc
