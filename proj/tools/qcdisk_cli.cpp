#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <vector>

#include "qc/assembly.hpp"
#include "qc/errors.hpp"
#include "qc/fuchsian.hpp"
#include "qc/io.hpp"
#include "qc/oracles.hpp"
#include "qc/pipeline.hpp"

namespace {

using namespace qc;

struct TimedSolution {
    SolutionMesh sol;
    double seconds;  // assemble + solve only
};

TimedSolution timed_solve(const BeltramiSpec& spec, MeshOrder order, double tol) {
    LogMesh mesh = build_mesh(order);
    const NuTable nu = nu_table(spec, mesh);
    const auto t0 = std::chrono::steady_clock::now();
    const SparseSystem system = assemble(spec, mesh, nu);
    const LsqSolution solution = solve_lsq(system, tol);
    const auto t1 = std::chrono::steady_clock::now();
    return {exponentiate(mesh, solution), std::chrono::duration<double>(t1 - t0).count()};
}

MeshOrder resolve_order(int N, std::optional<int> M) {
    return MeshOrder{M ? *M : choose_M(N), N};
}

// Error metric of the paper's tables for the specs that have an oracle.
double verify_error(const BeltramiSpec& spec, const SolutionMesh& sol) {
    if (spec.kind == FieldKind::Constant) {
        if (spec.constant.imag() != 0.0 || spec.constant.real() < 0.0 ||
            spec.constant.real() >= 1.0)
            throw ParameterError("verify: constant oracle needs real mu in [0,1)");
        const double c = spec.constant.real();
        if (c == 0.0)
            return max_vertex_error(sol, [](cd z) { return z; }).maxError;
        return max_vertex_error(sol, [c](cd z) { return exact_constant_map(c, z); }).maxError;
    }
    if (spec.kind == FieldKind::Radial) {
        auto [field, exact] = radial_pair();
        return max_vertex_error(sol, exact).maxError;
    }
    if (spec.kind == FieldKind::Sectorial) {
        auto [field, oracle] = sectorial_pair();
        const int N = sol.mesh().order().N;
        double worst = 0.0;
        for (int k = 0; k < N; ++k) {
            const double theta = 2.0 * kPi * k / N;
            const double d =
                std::remainder(oracle.psi(theta) - std::arg(sol.w(0, k)), 2.0 * kPi);
            worst = std::max(worst, std::abs(d));
        }
        return worst;
    }
    throw ParameterError("verify: no oracle for spec '" + spec.name + "'");
}

struct VerifyRow {
    std::string mu;
    int M, N;
    double error;
    double seconds;
};

void print_csv(const std::vector<VerifyRow>& rows) {
    std::printf("mu,M,N,max_error,runtime_s\n");
    for (const auto& r : rows)
        std::printf("%s,%d,%d,%.6g,%.3f\n", r.mu.c_str(), r.M, r.N, r.error, r.seconds);
}

int run(int argc, char** argv) {
    CLI::App app{"Quasiconformal self-maps of the disk from a Beltrami derivative"};
    app.require_subcommand(1);

    std::string muText = "constant:0";
    int N = 16;
    std::optional<int> M;
    double tol = 1e-10;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--mu", muText, "Beltrami field spec");
        cmd->add_option("--N", N, "angular mesh count");
        cmd->add_option("--M", M, "radial layers (default: growth rule)");
        cmd->add_option("--tol", tol, "least-squares certificate tolerance");
    };

    auto* solve = app.add_subcommand("solve", "solve and write the mesh JSON");
    std::string outPath = "solution.json";
    std::string svgPath;
    char plane = 'w';
    addCommon(solve);
    solve->add_option("--out", outPath, "output JSON path");
    solve->add_option("--svg", svgPath, "also write an SVG plot");
    solve->add_option("--plane", plane, "plot plane: z, W or w");

    auto* verify = app.add_subcommand("verify", "compare against the exact oracle");
    addCommon(verify);

    auto* table = app.add_subcommand("table", "reproduce an error table as CSV");
    int tableId = 1;
    int nMax = 84;
    std::vector<std::string> tableMus;
    table->add_option("--table", tableId, "table number: 1, 2 or 3")->required();
    table->add_option("--mu", tableMus, "row subset for table 1 (constants)");
    table->add_option("--n-max", nMax, "largest N of the schedule to run");
    table->add_option("--tol", tol, "least-squares certificate tolerance");

    auto* plot = app.add_subcommand("plot", "render a solved mesh as SVG");
    std::string inPath;
    double size = 800.0, stroke = 0.6;
    addCommon(plot);
    plot->add_option("--in", inPath, "previously solved JSON (otherwise solve inline)");
    plot->add_option("--svg", svgPath, "output SVG path")->required();
    plot->add_option("--plane", plane, "plot plane: z, W or w");
    plot->add_option("--size", size, "viewport side in px");
    plot->add_option("--stroke", stroke, "stroke width");

    auto* demo = app.add_subcommand("fuchsian-demo", "Poincare-series deformation demo");
    double demoC = 0.5;
    int wordLen = 6;
    demo->add_option("--c", demoC, "Teichmuller constant, |c| < 1");
    demo->add_option("--wordlen", wordLen, "series truncation length");
    demo->add_option("--N", N, "angular mesh count");
    demo->add_option("--M", M, "radial layers");
    demo->add_option("--tol", tol, "tolerance");
    demo->add_option("--out", outPath, "output JSON path");
    demo->add_option("--svg", svgPath, "output SVG path");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        const BeltramiSpec spec = BeltramiSpec::parse(muText);
        const MeshOrder order = resolve_order(N, M);
        const TimedSolution ts = timed_solve(spec, order, tol);
        save_solution_json(outPath, ts.sol, spec.name);
        if (!svgPath.empty()) write_svg(svgPath, ts.sol, {plane, size, stroke});
        std::printf("solved %s on (M,N)=(%d,%d): residual_l2=%.3e residual_inf=%.3e "
                    "flipped=%zu runtime=%.3fs -> %s\n",
                    spec.name.c_str(), order.M, order.N, ts.sol.residual().residual2,
                    ts.sol.residual().residualInf, ts.sol.flippedTriangles().size(),
                    ts.seconds, outPath.c_str());
        return 0;
    }

    if (verify->parsed()) {
        const BeltramiSpec spec = BeltramiSpec::parse(muText);
        const MeshOrder order = resolve_order(N, M);
        const TimedSolution ts = timed_solve(spec, order, tol);
        print_csv({{spec.name, order.M, order.N, verify_error(spec, ts.sol), ts.seconds}});
        return 0;
    }

    if (table->parsed()) {
        if (tableId < 1 || tableId > 3) throw ParameterError("table: --table must be 1, 2 or 3");
        std::vector<std::string> specs;
        if (tableId == 1) {
            specs = tableMus.empty()
                        ? std::vector<std::string>{"constant:0.1", "constant:0.3",
                                                   "constant:0.5", "constant:0.7"}
                        : tableMus;
        } else if (tableId == 2) {
            specs = {"radial"};
        } else {
            specs = {"sectorial"};
        }
        std::vector<VerifyRow> rows;
        for (const std::string& text : specs) {
            const BeltramiSpec spec = BeltramiSpec::parse(text);
            for (int n : {16, 32, 48, 64, 72, 84}) {
                if (n > nMax) continue;
                const MeshOrder order{choose_M(n), n};
                const TimedSolution ts = timed_solve(spec, order, tol);
                rows.push_back(
                    {spec.name, order.M, order.N, verify_error(spec, ts.sol), ts.seconds});
            }
        }
        print_csv(rows);
        return 0;
    }

    if (plot->parsed()) {
        if (!inPath.empty()) {
            const SolutionMesh sol = load_solution_json(inPath);
            write_svg(svgPath, sol, {plane, size, stroke});
        } else {
            const BeltramiSpec spec = BeltramiSpec::parse(muText);
            const TimedSolution ts = timed_solve(spec, resolve_order(N, M), tol);
            write_svg(svgPath, ts.sol, {plane, size, stroke});
        }
        std::printf("wrote %s\n", svgPath.c_str());
        return 0;
    }

    if (demo->parsed()) {
        const BeltramiSpec spec = BeltramiSpec::fuchsian(demoC, wordLen);
        const MeshOrder order = resolve_order(N, M);
        const TimedSolution ts = timed_solve(spec, order, tol);
        const GroupEnumeration en = enumerate_group(wordLen);
        const cd theta0 = theta_series_direct(en, cd(0.0, 0.0));
        std::printf("group words (len<=%d): %zu\n", wordLen, en.words.size());
        for (int g : {0, 2}) {
            const cd gz = en.gens[g](cd(0.0, 0.0));
            const cd dg = en.gens[g].deriv(cd(0.0, 0.0));
            const cd res = theta_series_direct(en, gz) * dg * dg - theta0;
            std::printf("invariance residual, generator %d: %.3e\n", g / 2 + 1,
                        std::abs(res) / std::abs(theta0));
        }
        std::printf("solved %s on (M,N)=(%d,%d): residual_l2=%.3e flipped=%zu runtime=%.3fs\n",
                    spec.name.c_str(), order.M, order.N, ts.sol.residual().residual2,
                    ts.sol.flippedTriangles().size(), ts.seconds);
        save_solution_json(outPath, ts.sol, spec.name);
        if (!svgPath.empty()) write_svg(svgPath, ts.sol, {plane, size, stroke});
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qc::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 2;
    } catch (const qc::InadmissibleFieldError& e) {
        std::cerr << "inadmissible field: " << e.what() << "\n";
        return 3;
    } catch (const qc::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 4;
    } catch (const qc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
