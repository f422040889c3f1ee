#include "qc/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qc/errors.hpp"

namespace qc {

namespace {

double cross(cd u, cd v) { return std::imag(std::conj(u) * v); }

// Barycentric coordinates of p with respect to (a,b,c).
std::array<double, 3> barycentric(cd p, cd a, cd b, cd c) {
    const double area = cross(b - a, c - a);
    const double la = cross(b - p, c - p) / area;
    const double lb = cross(c - p, a - p) / area;
    return {la, lb, 1.0 - la - lb};
}

}  // namespace

SolutionMesh::SolutionMesh(LogMesh mesh, std::vector<cd> W, ResidualSummary residual)
    : mesh_(std::move(mesh)), W_(std::move(W)), residual_(std::move(residual)) {
    const MeshOrder& order = mesh_.order();
    const IndexMap& index = mesh_.indexMap();
    w_.assign(W_.size(), cd(std::numeric_limits<double>::quiet_NaN(), 0.0));
    for (int j = -order.M; j <= 0; ++j)
        for (int k = 0; k < order.N; ++k)
            w_[index.col(j, k)] = std::exp(W_[index.col(j, k)]);

    // Orientation audit of the left-half image triangles.  The domain triples
    // are positively oriented, so a nonpositive image area marks a flip.
    const auto& tris = mesh_.triangles();
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        const Triangle& tri = tris[t];
        if (tri.half != HalfPlane::Left) continue;
        const cd wa = w_[index.col(tri.v[0].j, tri.v[0].k)];
        const cd wb = w_[index.col(tri.v[1].j, tri.v[1].k)];
        const cd wc = w_[index.col(tri.v[2].j, tri.v[2].k)];
        if (cross(wb - wa, wc - wa) <= 0.0) flipped_.push_back(t);
    }
}

SolutionMesh exponentiate(const LogMesh& mesh, const LsqSolution& solution) {
    ResidualSummary r;
    r.residual2 = solution.residual2;
    r.residualInf = solution.residualInf;
    r.normalResidual = solution.normalResidual;
    r.method = solution.method;
    return SolutionMesh(mesh, solution.V, r);
}

int SolutionMesh::locate(cd z) const {
    const MeshOrder& order = mesh_.order();
    const int M = order.M;
    const int N = order.N;
    const double h = std::sqrt(3.0) * kPi / N;

    double re = std::log(std::abs(z));
    re = std::clamp(re, -h * M, 0.0);
    double im = std::arg(z);
    if (im < 0.0) im += 2.0 * kPi;
    const cd Zp(re, im);

    const int jBand = std::clamp(static_cast<int>(std::ceil(re / h)), -M + 1, 0);
    const int k0 = static_cast<int>(std::floor(im * N / (2.0 * kPi)));

    const auto triPlus = [&](int j, int k) { return (j + M - 1) * N + k; };
    const auto triMinus = [&](int j, int k) { return M * N + (j + M) * N + k; };

    // Candidate triangles from the band around Re Z, containment tested in
    // the z-plane so the selection matches the PL complex exactly.
    int best = -1;
    double bestScore = -std::numeric_limits<double>::infinity();
    const auto consider = [&](int t) {
        const Triangle& tri = mesh_.triangles()[t];
        const cd a = std::exp(mesh_.Z(tri.v[0]));
        const cd b = std::exp(mesh_.Z(tri.v[1]));
        const cd c = std::exp(mesh_.Z(tri.v[2]));
        const auto lam = barycentric(z, a, b, c);
        const double score = std::min({lam[0], lam[1], lam[2]});
        if (score > bestScore + 1e-15) {
            bestScore = score;
            best = t;
        }
    };
    for (int dj = -1; dj <= 1; ++dj) {
        for (int dk = -2; dk <= 2; ++dk) {
            const int k = ((k0 + dk) % N + N) % N;
            const int jp = jBand + dj;
            if (jp >= -M + 1 && jp <= 0) consider(triPlus(jp, k));
            const int jm = jBand + dj - 1;
            if (jm >= -M && jm <= -1) consider(triMinus(jm, k));
        }
    }
    return best;
}

cd SolutionMesh::evaluate(cd z) const {
    const MeshOrder& order = mesh_.order();
    const double rInner = std::exp(mesh_.R(-order.M));
    const double r = std::abs(z);
    if (r < rInner * (1.0 - 1e-9)) {
        std::ostringstream msg;
        msg << "evaluate_pl: |z| = " << r << " lies inside the mesh hole (inner radius "
            << rInner << ")";
        throw DomainError(msg.str());
    }
    if (r > 1.0 + 1e-9) throw DomainError("evaluate_pl: |z| > 1");

    const Triangle& tri = mesh_.triangles()[locate(z)];
    const IndexMap& index = mesh_.indexMap();
    const cd a = std::exp(mesh_.Z(tri.v[0]));
    const cd b = std::exp(mesh_.Z(tri.v[1]));
    const cd c = std::exp(mesh_.Z(tri.v[2]));
    const auto lam = barycentric(z, a, b, c);
    return lam[0] * w_[index.col(tri.v[0].j, tri.v[0].k)] +
           lam[1] * w_[index.col(tri.v[1].j, tri.v[1].k)] +
           lam[2] * w_[index.col(tri.v[2].j, tri.v[2].k)];
}

VertexErrorReport max_vertex_error(const SolutionMesh& sol,
                                   const std::function<cd(cd)>& oracle) {
    const MeshOrder& order = sol.mesh().order();
    VertexErrorReport report;
    report.perRadius.assign(order.M + 1, 0.0);
    for (int j = -order.M; j <= 0; ++j) {
        double rowMax = 0.0;
        for (int k = 0; k < order.N; ++k) {
            const double err = std::abs(sol.w(j, k) - oracle(sol.mesh().z(j, k)));
            rowMax = std::max(rowMax, err);
        }
        report.perRadius[j + order.M] = rowMax;
        report.maxError = std::max(report.maxError, rowMax);
    }
    return report;
}

}  // namespace qc
