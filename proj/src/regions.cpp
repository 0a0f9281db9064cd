// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include "nearfield/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "nearfield/oracle.hpp" // worker_count

namespace nearfield {

GridAxis GridAxis::linspace(std::string name, double lo, double hi, int count) {
    if (count < 1)
        throw std::domain_error("grid axis needs at least one sample");
    GridAxis axis{std::move(name), {}};
    axis.values.resize(static_cast<std::size_t>(count));
    if (count == 1) {
        axis.values[0] = lo;
        return axis;
    }
    const double step = (hi - lo) / (count - 1);
    for (int k = 0; k < count; k++)
        axis.values[static_cast<std::size_t>(k)] = lo + k * step;
    return axis;
}

namespace {

RegionLabel classify(double a, double b, double tie_tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (std::abs(a - b) <= tie_tol * scale)
        return RegionLabel::tie;
    return a > b ? RegionLabel::branch_a : RegionLabel::branch_b;
}

// Applies one axis value to the evaluation point. theta_prime is resolved into theta after both
// axes are applied, so it combines correctly with an alpha axis.
struct EvalPoint {
    BoundaryParams params;
    AngleSet angles;
    std::optional<double> theta_prime;

    void apply(const std::string &axis, double v) {
        if (axis == "theta")
            angles.theta = v;
        else if (axis == "theta_prime")
            theta_prime = v;
        else if (axis == "phi")
            angles.phi = v;
        else if (axis == "alpha")
            angles.alpha = v;
        else if (axis == "beta")
            angles.beta = v;
        else if (axis == "d1")
            params.d1 = v;
        else if (axis == "d2")
            params.d2 = v;
        else
            throw std::invalid_argument("unknown grid axis '" + axis + "'");
    }

    AngleSet resolved() const {
        AngleSet a = angles;
        if (theta_prime)
            a.theta = *theta_prime + a.alpha;
        return a;
    }
};

// Parallel grid fill; exceptions raised in cells are captured and rethrown once.
template <typename CellFn>
RegionMap fill_map(const GridAxis &axis1, const GridAxis &axis2, CellFn &&cell) {
    RegionMap map{axis1, axis2, {}, {}, std::nullopt};
    const std::size_t n1 = axis1.values.size(), n2 = axis2.values.size();
    map.labels.resize(n1 * n2);
    map.values.resize(n1 * n2);
    bool failed = false;
    std::string message;
    const auto total = static_cast<long>(n1 * n2);
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long flat = 0; flat < total; flat++) {
        const auto i = static_cast<std::size_t>(flat) / n2;
        const auto j = static_cast<std::size_t>(flat) % n2;
        try {
            cell(i, j, map.labels[static_cast<std::size_t>(flat)],
                 map.values[static_cast<std::size_t>(flat)]);
        } catch (const std::exception &e) {
#pragma omp critical
            {
                failed = true;
                message = e.what();
            }
        }
    }
    if (failed)
        throw std::domain_error("grid evaluation failed: " + message);
    return map;
}

} // namespace

RegionMap dominance_map_l2l(const BoundaryParams &p, const GridAxis &theta_prime, const GridAxis &alpha,
                            double tie_tol) {
    p.validate();
    RegionMap map = fill_map(theta_prime, alpha, [&](std::size_t i, std::size_t j, RegionLabel &label,
                                                     double &value) {
        const double tp = theta_prime.values[i], al = alpha.values[j];
        const BoundaryResult res = boundary::l2l_off_exact(p, tp + al, al);
        label = classify(res.branches->first, res.branches->second, tie_tol);
        value = res.distance;
    });
    if (std::max(p.d1, p.d2) > 0.0)
        map.theta_threshold = boundary::theta_threshold(p).theta_threshold;
    return map;
}

RegionMap dominance_map_p2p(const BoundaryParams &p, const GridAxis &theta_prime, const GridAxis &phi,
                            double alpha, double tie_tol) {
    p.validate();
    return fill_map(theta_prime, phi, [&](std::size_t i, std::size_t j, RegionLabel &label,
                                          double &value) {
        const double tp = theta_prime.values[i], ph = phi.values[j];
        const BoundaryResult res = boundary::p2p_off_dual(p, tp + alpha, ph, alpha);
        label = classify(res.branches->first, res.branches->second, tie_tol);
        value = res.distance;
    });
}

RegionMap boundary_landscape(Family family, const BoundaryParams &p, const GridAxis &axis1,
                             const GridAxis &axis2, const AngleSet &fixed, double tie_tol) {
    p.validate();
    return fill_map(axis1, axis2, [&](std::size_t i, std::size_t j, RegionLabel &label, double &value) {
        const BoundaryResult res = evaluate_with_axes(
            family, p, fixed, {{axis1.name, axis1.values[i]}, {axis2.name, axis2.values[j]}});
        label = res.branches ? classify(res.branches->first, res.branches->second, tie_tol)
                             : RegionLabel::branch_a;
        value = res.distance;
    });
}

BoundaryResult evaluate_with_axes(Family family, const BoundaryParams &p, const AngleSet &fixed,
                                  const std::vector<std::pair<std::string, double>> &assignments) {
    EvalPoint point{p, fixed, std::nullopt};
    for (const auto &[axis, value] : assignments)
        point.apply(axis, value);
    return evaluate_family(family, point.params, point.resolved());
}

} // namespace nearfield
