// Timing comparison of the OpenMP kernels against their serial references.
// Build target: bench_kernels.  Not registered with ctest.

#include <chrono>
#include <cstdio>
#include <functional>

#include "qc/assembly.hpp"

using namespace qc;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void bench_field(const char* label, const BeltramiSpec& spec, MeshOrder order, int reps) {
    LogMesh mesh = build_mesh(order);
    const double tSer = time_best_of(reps, [&] { (void)nu_table_serial(spec, mesh); });
    const double tPar = time_best_of(reps, [&] { (void)nu_table(spec, mesh); });
    auto nu = nu_table_serial(spec, mesh);
    const double aSer = time_best_of(reps, [&] { (void)assemble_serial(spec, mesh, nu); });
    const double aPar = time_best_of(reps, [&] { (void)assemble(spec, mesh, nu); });
    std::printf("%-16s (%3d,%3d)  nu: serial %8.2f ms  parallel %8.2f ms  x%.2f"
                "   assemble: serial %7.2f ms  parallel %7.2f ms  x%.2f\n",
                label, order.M, order.N, tSer * 1e3, tPar * 1e3, tSer / tPar, aSer * 1e3,
                aPar * 1e3, aSer / aPar);
}

}  // namespace

int main() {
    std::printf("kernel benchmark, best of 5 runs\n");
    bench_field("radial", BeltramiSpec::radial(), {36, 48}, 5);
    bench_field("radial", BeltramiSpec::radial(), {72, 84}, 5);
    bench_field("daripa1", BeltramiSpec::daripa1(), {72, 84}, 5);
    // the theta series makes each field evaluation expensive; this is the
    // case the parallel kernel exists for
    bench_field("fuchsian:0.5:6", BeltramiSpec::fuchsian(0.5, 6), {24, 32}, 3);
    return 0;
}
