#include "qc/io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qc/errors.hpp"

namespace qc {

using nlohmann::json;

void save_solution_json(const std::string& path, const SolutionMesh& sol,
                        const std::string& muSpec) {
    const LogMesh& mesh = sol.mesh();
    const MeshOrder& order = mesh.order();
    const IndexMap& index = mesh.indexMap();

    json doc;
    doc["M"] = order.M;
    doc["N"] = order.N;
    doc["mu_spec"] = muSpec;
    doc["residual_l2"] = sol.residual().residual2;
    doc["residual_inf"] = sol.residual().residualInf;
    doc["flipped"] = sol.flippedTriangles();

    json verts = json::array();
    for (int k = 0; k < order.N; ++k) {
        for (int j = -order.M; j <= order.M; ++j) {
            json v;
            v["j"] = j;
            v["k"] = k;
            const cd Z = mesh.Z(j, k);
            const cd W = sol.W(j, k);
            v["Z"] = {Z.real(), Z.imag()};
            v["W"] = {W.real(), W.imag()};
            if (j <= 0) {
                const cd z = mesh.z(j, k);
                const cd w = sol.w(j, k);
                v["z"] = {z.real(), z.imag()};
                v["w"] = {w.real(), w.imag()};
            } else {
                v["z"] = nullptr;
                v["w"] = nullptr;
            }
            verts.push_back(std::move(v));
        }
    }
    doc["vertices"] = std::move(verts);

    json tris = json::array();
    for (const Triangle& t : mesh.triangles())
        tris.push_back({index.forward(t.v[0].j, t.v[0].k), index.forward(t.v[1].j, t.v[1].k),
                        index.forward(t.v[2].j, t.v[2].k)});
    doc["triangles"] = std::move(tris);

    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << doc.dump(1) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

SolutionMesh load_solution_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw IoError("malformed solution JSON in " + path + ": " + e.what());
    }

    const MeshOrder order{doc.at("M").get<int>(), doc.at("N").get<int>()};
    LogMesh mesh = build_mesh(order);
    std::vector<cd> W(order.numVertices());
    for (const json& v : doc.at("vertices")) {
        const int j = v.at("j").get<int>();
        const int k = v.at("k").get<int>();
        const auto& wv = v.at("W");
        W[mesh.indexMap().col(j, k)] = cd(wv.at(0).get<double>(), wv.at(1).get<double>());
    }
    ResidualSummary res;
    res.residual2 = doc.at("residual_l2").get<double>();
    res.residualInf = doc.at("residual_inf").get<double>();
    return SolutionMesh(std::move(mesh), std::move(W), res);
}

namespace {

struct Frame {
    double xmin, xmax, ymin, ymax;
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(8);
    s << x;
    return s.str();
}

}  // namespace

void write_svg(const std::string& path, const SolutionMesh& sol, const PlotOptions& opts) {
    if (opts.plane != 'z' && opts.plane != 'W' && opts.plane != 'w')
        throw ParameterError("write_svg: plane must be one of z, W, w");

    const LogMesh& mesh = sol.mesh();
    const MeshOrder& order = mesh.order();
    const bool logPlane = opts.plane == 'W';

    const auto vertexPoint = [&](const TriangleVertex& tv) -> cd {
        switch (opts.plane) {
            case 'z': return std::exp(mesh.Z(tv));
            case 'W': return sol.W(tv.j, tv.k) + cd(0.0, 2.0 * kPi * tv.wrap);
            default: return std::exp(sol.W(tv.j, tv.k));
        }
    };

    Frame f;
    if (logPlane) {
        const double rm = std::abs(mesh.R(-order.M));
        const double pad = 0.5;
        const double span = std::max(2.0 * rm, 2.0 * kPi + 1.0) + 2.0 * pad;
        f = {-span / 2.0, span / 2.0, kPi - span / 2.0, kPi + span / 2.0};
    } else {
        f = {-1.1, 1.1, -1.1, 1.1};
    }
    const double scale = opts.size / (f.xmax - f.xmin);
    const auto px = [&](cd p) {
        return std::pair<double, double>{(p.real() - f.xmin) * scale,
                                         (f.ymax - p.imag()) * scale};
    };

    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\""
        << opts.size << "\" viewBox=\"0 0 " << opts.size << " " << opts.size << "\">\n";
    out << "<g stroke=\"black\" stroke-width=\"" << opts.strokeWidth << "\" fill=\"none\">\n";

    // Only left-half triangles carry disk data; the W plane shows both halves.
    for (const Triangle& t : mesh.triangles()) {
        if (!logPlane && t.half != HalfPlane::Left) continue;
        const cd p0 = vertexPoint(t.v[0]);
        const cd p1 = vertexPoint(t.v[1]);
        const cd p2 = vertexPoint(t.v[2]);
        const std::array<std::pair<cd, cd>, 3> edges{{{p0, p1}, {p1, p2}, {p2, p0}}};
        for (const auto& [ea, eb] : edges) {
            const auto [x1, y1] = px(ea);
            const auto [x2, y2] = px(eb);
            out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
                << "\" y2=\"" << fmt(y2) << "\"/>\n";
        }
    }
    if (!logPlane) {
        const auto [cx, cy] = px(cd(0.0, 0.0));
        out << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\""
            << fmt(scale) << "\" stroke=\"gray\"/>\n";
    }
    out << "</g>\n</svg>\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace qc
