// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links
//
// Angle-plane characterization: branch-dominance maps over rotation/misalignment grids and
// boundary-distance landscapes over arbitrary angle or aperture axes.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nearfield/closed_form.hpp"

namespace nearfield {

struct GridAxis {
    std::string name;           // theta | theta_prime | phi | alpha | beta | d1 | d2
    std::vector<double> values; // radians for angle axes, meters for aperture axes

    static GridAxis linspace(std::string name, double lo, double hi, int count);
};

enum class RegionLabel : int {
    branch_a = 0,
    branch_b = 1,
    tie = 2 // branch values agree within the tie tolerance (single-expression families always tie-free)
};

// Dense field over a 2-D grid: a branch label and the boundary distance per cell, row-major with
// axis1 as the slow index.
struct RegionMap {
    GridAxis axis1;
    GridAxis axis2;
    std::vector<RegionLabel> labels;
    std::vector<double> values;               // boundary distance [m]
    std::optional<double> theta_threshold;    // dominance-box half-width [rad], when defined

    std::size_t index(std::size_t i, std::size_t j) const { return i * axis2.values.size() + j; }
    RegionLabel label_at(std::size_t i, std::size_t j) const { return labels[index(i, j)]; }
    double value_at(std::size_t i, std::size_t j) const { return values[index(i, j)]; }
};

// Branch dominance of the exact linear-link form over (theta_prime, alpha). Records the
// threshold angle, inside whose box branch (a) is guaranteed to dominate.
RegionMap dominance_map_l2l(const BoundaryParams &p, const GridAxis &theta_prime, const GridAxis &alpha,
                            double tie_tol = 1e-12);

// Branch dominance of the dual-rotation planar form over (theta_prime, phi) at fixed alpha.
RegionMap dominance_map_p2p(const BoundaryParams &p, const GridAxis &theta_prime, const GridAxis &phi,
                            double alpha, double tie_tol = 1e-12);

// Boundary distance of any family over two axes; remaining angles/apertures are fixed.
// Axis values of theta_prime shift theta by the cell's alpha. Labels carry branch dominance for
// two-branch families.
RegionMap boundary_landscape(Family family, const BoundaryParams &p, const GridAxis &axis1,
                             const GridAxis &axis2, const AngleSet &fixed, double tie_tol = 1e-12);

// Point evaluation with axis-name assignments applied on top of the fixed parameters; backs the
// landscape cells and the 1-D CLI sweeps.
BoundaryResult evaluate_with_axes(Family family, const BoundaryParams &p, const AngleSet &fixed,
                                  const std::vector<std::pair<std::string, double>> &assignments);

} // namespace nearfield
