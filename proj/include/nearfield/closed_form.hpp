// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links
//
// Closed-form boundary distances for every link family, derived from the phase-spread criterion
// max(r') - min(r') = lambda * varphi / (2 pi) with a tunable threshold varphi. All formulas share
// the scale pi * (aperture term)^2 / (4 lambda varphi); two-branch families report both branch
// values and which one attains the maximum.

#pragma once

#include <optional>
#include <utility>

#include "nearfield/geometry.hpp"

namespace nearfield {

// Scalar problem parameters shared by all closed forms.
struct BoundaryParams {
    double d1 = 0.0;                              // Tx aperture [m]
    double d2 = 0.0;                              // Rx aperture [m]
    double wavelength = speed_of_light / 300.0e9; // carrier wavelength [m], default 300 GHz
    double phase_threshold = pi / 8.0;            // phase-spread threshold varphi, in (0, pi]

    void validate() const; // apertures >= 0, wavelength > 0, threshold in (0, pi]
};

enum class BranchSel {
    single, // family has a single expression
    a,      // branch (a) attains the maximum (ties resolve to a)
    b       // branch (b) is strictly larger
};

// Rotation coupling factors of the dual-rotation planar family. eta scales the Tx aperture seen
// along the Rx-plane horizontal, xi the one seen along the link-elevation direction.
struct BranchTerms {
    double eta_plus = 0.0;
    double eta_minus = 0.0;
    double xi_plus = 0.0;
    double xi_minus = 0.0;
};

struct BoundaryResult {
    double distance = 0.0; // boundary distance [m]
    BranchSel branch = BranchSel::single;
    std::optional<std::pair<double, double>> branches; // (a, b) values for two-branch families
    std::optional<BranchTerms> terms;                  // dual-rotation coupling factors
};

// Rotation-angle threshold below which branch (a) dominates, with the concentration parameter
// kappa = pi * max(d1, d2) / (lambda * varphi); sin(theta) solves kappa sin^2 + sin - kappa = 0.
struct ThresholdResult {
    double kappa = 0.0;
    double theta_threshold = 0.0; // [rad]
};

namespace boundary {

// Linear -> linear, boresight, Tx rotated in-plane by theta (|theta| <= pi/2).
double l2l_on(const BoundaryParams &p, double theta);

// Linear -> linear, Rx displaced by alpha, Tx rotated by theta (theta within alpha +/- pi/2).
// Exact form takes the larger of two branches, each a quadratic term plus a residual linear term.
BoundaryResult l2l_off_exact(const BoundaryParams &p, double theta, double alpha);

// Quadratic term of branch (a) alone; underestimates the exact form by at most (d1 + d2) / 2.
double l2l_off_approx(const BoundaryParams &p, double theta, double alpha);

// Point -> linear at elevation alpha; quadratic_only drops the d2 |sin(alpha)| / 2 residual.
double l2o_off(const BoundaryParams &p, double alpha, bool quadratic_only = false);

// Branch-dominance threshold angle (requires max(d1, d2) > 0).
ThresholdResult theta_threshold(const BoundaryParams &p);

// Planar -> planar, boresight, Tx tilted by theta and spun by phi (each within [-pi/2, pi/2]).
double p2p_on(const BoundaryParams &p, double theta, double phi);

// Planar -> planar, Rx at alpha, Tx tilted by theta (theta within alpha +/- pi/2).
double p2p_off_single(const BoundaryParams &p, double theta, double alpha);

// Coupling factors eta(+/-) and xi(+/-) of the dual-rotation family.
BranchTerms p2p_branch_terms(double theta, double phi, double alpha);

// Planar -> planar, Rx at alpha, Tx tilted by theta and spun by phi; maximum of two branches
// pairing (eta+, xi-) and (eta-, xi+). Reduces to p2p_off_single at phi = 0 and p2p_on at alpha = 0.
BoundaryResult p2p_off_dual(const BoundaryParams &p, double theta, double phi, double alpha);

// Linear -> planar, boresight, Tx tilted by theta; decomposes exactly into the Rx-aperture
// term pi d2^2 / (4 lambda varphi) plus l2l_on(theta).
double p2l_on(const BoundaryParams &p, double theta);

// Point -> planar with the link at elevation alpha and azimuth beta.
double p2o_off(const BoundaryParams &p, double alpha, double beta);

// Gap between the diagonal-matched single-rotation planar bound (apertures d/sqrt(2)) and the
// linear-link quadratic approximation; nonnegative on the valid domain.
double diag_matched_gap(const BoundaryParams &p, double theta, double alpha);

// |rotated - baseline| / baseline, the rotation-induced boundary shift (baseline > 0).
double relative_deviation(double rotated, double baseline);

} // namespace boundary

// Angle tuple consumed by the family dispatcher; unused members stay zero.
struct AngleSet {
    double theta = 0.0;
    double phi = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

// Evaluates the family's exact closed form (two-branch where applicable) at the given angles.
BoundaryResult evaluate_family(Family family, const BoundaryParams &p, const AngleSet &angles);

} // namespace nearfield
