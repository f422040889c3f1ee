#include "qc/mesh.hpp"

#include <cmath>
#include <limits>

namespace qc {

int choose_M(int N) {
    if (N < 3) throw ParameterError("choose_M: N must be >= 3, got " + std::to_string(N));
    const double target = N * std::log(static_cast<double>(N)) / (kPi * std::sqrt(3.0));
    int M = 4 * static_cast<int>(std::ceil(target / 4.0 - 1e-12));
    if (M < 4) M = 4;
    return M;
}

double LogMesh::R(int j) const {
    return std::sqrt(3.0) * kPi / order_.N * j;
}

namespace {

bool odd(int j) { return (j % 2) != 0; }

// Stored index plus wrap count for an angular index possibly one step
// outside 0..N-1.
TriangleVertex slot(int j, int k, int N) {
    if (k == -1) return {j, N - 1, -1};
    if (k == N) return {j, 0, +1};
    return {j, k, 0};
}

}  // namespace

LogMesh::LogMesh(MeshOrder order) : order_(order), index_{order.M, order.N} {
    order_.validate();
    const int M = order_.M;
    const int N = order_.N;

    vertices_.resize(order_.numVertices());
    for (int j = -M; j <= 0; ++j) {
        const double half = odd(j) ? 0.5 : 0.0;
        for (int k = 0; k < N; ++k) {
            const cd Zjk(R(j), 2.0 * kPi * (k + half) / N);
            vertices_[index_.col(j, k)] = Zjk;
            vertices_[index_.col(-j, k)] = -std::conj(Zjk);  // rho-reflection
        }
    }

    // Left-half triangles.  The stored triples are positively oriented,
    // which for the rightward family means swapping the first two vertices
    // of the defining lists.
    triangles_.reserve(4 * M * N);
    for (int j = -M + 1; j <= 0; ++j) {
        for (int k = 0; k < N; ++k) {
            Triangle t;
            if (odd(j)) {
                t.v = {slot(j - 1, k + 1, N), slot(j - 1, k, N), slot(j, k, N)};
            } else {
                t.v = {slot(j - 1, k, N), slot(j - 1, k - 1, N), slot(j, k, N)};
            }
            t.family = TriangleFamily::Rightward;
            t.half = HalfPlane::Left;
            t.j = j;
            t.k = k;
            t.partner = -1;
            triangles_.push_back(t);
        }
    }
    for (int j = -M; j <= -1; ++j) {
        for (int k = 0; k < N; ++k) {
            Triangle t;
            if (odd(j)) {
                t.v = {slot(j + 1, k, N), slot(j + 1, k + 1, N), slot(j, k, N)};
            } else {
                t.v = {slot(j + 1, k - 1, N), slot(j + 1, k, N), slot(j, k, N)};
            }
            t.family = TriangleFamily::Leftward;
            t.half = HalfPlane::Left;
            t.j = j;
            t.k = k;
            t.partner = -1;
            triangles_.push_back(t);
        }
    }

    // Reflections to the right half.  rho reverses orientation, so the
    // first two vertices are swapped back into positive order.  Wrap counts
    // are unchanged: rho(Z + 2 pi i) = rho(Z) + 2 pi i.
    const int nLeft = static_cast<int>(triangles_.size());
    for (int i = 0; i < nLeft; ++i) {
        const Triangle& src = triangles_[i];
        Triangle t;
        t.v = {TriangleVertex{-src.v[1].j, src.v[1].k, src.v[1].wrap},
               TriangleVertex{-src.v[0].j, src.v[0].k, src.v[0].wrap},
               TriangleVertex{-src.v[2].j, src.v[2].k, src.v[2].wrap}};
        t.family = src.family;
        t.half = HalfPlane::Right;
        t.j = -src.j;
        t.k = src.k;
        t.partner = i;
        triangles_.push_back(t);
        triangles_[i].partner = nLeft + i;
    }
}

std::vector<cd> LogMesh::diskVertices() const {
    std::vector<cd> out(vertices_.size(),
                        cd(std::numeric_limits<double>::quiet_NaN(),
                           std::numeric_limits<double>::quiet_NaN()));
    for (int j = -order_.M; j <= 0; ++j)
        for (int k = 0; k < order_.N; ++k)
            out[index_.col(j, k)] = std::exp(Z(j, k));
    return out;
}

}  // namespace qc
