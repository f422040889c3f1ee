#pragma once

#include <string>

#include "qc/mapping.hpp"

namespace qc {

void save_solution_json(const std::string& path, const SolutionMesh& sol,
                        const std::string& muSpec);
SolutionMesh load_solution_json(const std::string& path);

struct PlotOptions {
    char plane = 'w';         // 'z', 'W' or 'w'
    double size = 800.0;      // viewport side, px
    double strokeWidth = 0.6;
};

void write_svg(const std::string& path, const SolutionMesh& sol, const PlotOptions& opts);

}  // namespace qc
