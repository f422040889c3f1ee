#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "qc/errors.hpp"

namespace qc {

using cd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Mesh order (M,N): M radial layers per half-plane, N angular divisions.
struct MeshOrder {
    int M = 0;
    int N = 0;

    int numVertices() const { return (2 * M + 1) * N; }  // n_v
    int numEquations() const { return 4 * M * N + 2 * (N - 1) + 1; }  // n_e

    void validate() const {
        if (M < 1) throw ParameterError("mesh order: M must be >= 1, got " + std::to_string(M));
        if (N < 3) throw ParameterError("mesh order: N must be >= 3, got " + std::to_string(N));
    }
};

// Smallest multiple of 4 that is >= N*ln(N)/(pi*sqrt(3)).
int choose_M(int N);

enum class TriangleFamily : std::uint8_t { Rightward, Leftward };  // tau+ / tau-
enum class HalfPlane : std::uint8_t { Left, Right };

// One vertex slot of a triangle: the stored index pair plus the 2*pi*i wrap
// count needed to recover the true position when the triangle crosses the
// periodic seam.  wrap is -1, 0 or +1.
struct TriangleVertex {
    int j;
    int k;
    int wrap;
};

struct Triangle {
    std::array<TriangleVertex, 3> v;  // positively oriented
    TriangleFamily family;
    HalfPlane half;
    int j;  // label of the defining vertex Z_jk
    int k;
    int partner;  // index of the rho-reflected triangle in the other half

    bool wrapped() const { return v[0].wrap != 0 || v[1].wrap != 0 || v[2].wrap != 0; }
};

// Bijection (j,k) <-> p, with p in 1..n_v.  Layout is k-major,
// p(j,k) = k*(2M+1) + (j+M) + 1, so triangle equations couple nearby
// indices except across the periodic seam.
struct IndexMap {
    int M = 0;
    int N = 0;

    int forward(int j, int k) const { return k * (2 * M + 1) + (j + M) + 1; }
    std::pair<int, int> backward(int p) const {
        const int q = p - 1;
        return {q % (2 * M + 1) - M, q / (2 * M + 1)};
    }
    // 0-based column index, used internally for linear algebra.
    int col(int j, int k) const { return forward(j, k) - 1; }
};

// Structured logarithmic mesh of the paper's strip construction: vertices
// Z_jk for -M <= j <= M, 0 <= k <= N-1, left-half triangles plus their
// reflections in the imaginary axis.
class LogMesh {
  public:
    explicit LogMesh(MeshOrder order);

    const MeshOrder& order() const { return order_; }
    const IndexMap& indexMap() const { return index_; }

    double R(int j) const;  // radial coordinate, R_j = (sqrt(3) pi / N) j for j <= 0
    cd Z(int j, int k) const { return vertices_[index_.col(j, k)]; }
    cd Z(const TriangleVertex& tv) const {
        return Z(tv.j, tv.k) + cd(0.0, 2.0 * kPi * tv.wrap);
    }
    const std::vector<cd>& vertices() const { return vertices_; }

    const std::vector<Triangle>& triangles() const { return triangles_; }

    // z_jk = exp(Z_jk) for the left half (j <= 0), keyed by column index.
    // Right-half entries are left unset (the disk map only uses j <= 0).
    std::vector<cd> diskVertices() const;
    cd z(int j, int k) const { return std::exp(Z(j, k)); }

  private:
    MeshOrder order_;
    IndexMap index_;
    std::vector<cd> vertices_;
    std::vector<Triangle> triangles_;
};

inline LogMesh build_mesh(MeshOrder order) { return LogMesh(order); }

}  // namespace qc
