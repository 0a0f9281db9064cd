// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include "nearfield/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nearfield {

void BoundaryParams::validate() const {
    if (d1 < 0.0 || d2 < 0.0)
        throw std::domain_error("apertures must be nonnegative");
    if (wavelength <= 0.0)
        throw std::domain_error("wavelength must be positive");
    if (!(phase_threshold > 0.0) || phase_threshold > pi)
        throw std::domain_error("phase threshold must lie in (0, pi]");
}

namespace boundary {

namespace {

// pi * s^2 / (4 lambda varphi): the quadratic boundary term for an effective aperture sum s.
double quad_term(const BoundaryParams &p, double s) {
    return pi * s * s / (4.0 * p.wavelength * p.phase_threshold);
}

// Rounding slack so composed angles (e.g. theta = theta' + alpha) sitting on the domain edge pass.
constexpr double angle_slack = 16.0 * std::numeric_limits<double>::epsilon();

void check_half_turn(double value, const char *name) {
    if (std::abs(value) > pi / 2.0 + angle_slack)
        throw std::domain_error(std::string(name) + " is outside [-pi/2, pi/2]");
}

void check_theta_domain(double theta, double alpha) {
    check_half_turn(alpha, "alpha");
    if (std::abs(theta - alpha) > pi / 2.0 + angle_slack)
        throw std::domain_error("theta must lie within alpha +/- pi/2");
}

} // namespace

double l2l_on(const BoundaryParams &p, double theta) {
    p.validate();
    check_half_turn(theta, "theta");
    return quad_term(p, p.d1 * std::cos(theta) + p.d2);
}

BoundaryResult l2l_off_exact(const BoundaryParams &p, double theta, double alpha) {
    p.validate();
    check_theta_domain(theta, alpha);
    const double tp = theta - alpha;
    const double a = quad_term(p, p.d1 * std::cos(tp) + p.d2 * std::cos(alpha)) +
                     0.5 * std::abs(p.d1 * std::sin(tp) - p.d2 * std::sin(alpha));
    const double b = quad_term(p, p.d1 * std::cos(tp) - p.d2 * std::cos(alpha)) +
                     0.5 * std::abs(p.d1 * std::sin(tp) + p.d2 * std::sin(alpha));
    BoundaryResult res;
    res.distance = std::max(a, b);
    res.branch = a >= b ? BranchSel::a : BranchSel::b;
    res.branches = {a, b};
    return res;
}

double l2l_off_approx(const BoundaryParams &p, double theta, double alpha) {
    p.validate();
    check_theta_domain(theta, alpha);
    return quad_term(p, p.d1 * std::cos(theta - alpha) + p.d2 * std::cos(alpha));
}

double l2o_off(const BoundaryParams &p, double alpha, bool quadratic_only) {
    p.validate();
    check_half_turn(alpha, "alpha");
    const double quad = quad_term(p, p.d2 * std::cos(alpha));
    return quadratic_only ? quad : quad + 0.5 * p.d2 * std::abs(std::sin(alpha));
}

ThresholdResult theta_threshold(const BoundaryParams &p) {
    p.validate();
    const double d = std::max(p.d1, p.d2);
    if (d <= 0.0)
        throw std::domain_error("threshold angle needs a positive aperture");
    const double kappa = pi * d / (p.wavelength * p.phase_threshold);
    const double s = (-1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa)) / (2.0 * kappa);
    return {kappa, std::asin(s)};
}

double p2p_on(const BoundaryParams &p, double theta, double phi) {
    p.validate();
    check_half_turn(theta, "theta");
    check_half_turn(phi, "phi");
    const double widen = std::cos(phi) + std::abs(std::sin(theta) * std::sin(phi));
    return quad_term(p, p.d1 * std::cos(theta) + p.d2) + quad_term(p, p.d1 * widen + p.d2);
}

double p2p_off_single(const BoundaryParams &p, double theta, double alpha) {
    p.validate();
    check_theta_domain(theta, alpha);
    return quad_term(p, p.d1 + p.d2) +
           quad_term(p, p.d1 * std::cos(theta - alpha) + p.d2 * std::cos(alpha));
}

BranchTerms p2p_branch_terms(double theta, double phi, double alpha) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    BranchTerms t;
    t.eta_plus = std::abs(cp + sp * st);
    t.eta_minus = std::abs(cp - sp * st);
    t.xi_plus = std::abs(ct * ca + cp * st * sa + sa * sp);
    t.xi_minus = std::abs(ct * ca + cp * st * sa - sa * sp);
    return t;
}

BoundaryResult p2p_off_dual(const BoundaryParams &p, double theta, double phi, double alpha) {
    p.validate();
    check_theta_domain(theta, alpha);
    check_half_turn(phi, "phi");
    const BranchTerms t = p2p_branch_terms(theta, phi, alpha);
    const double ca = std::cos(alpha);
    const double a = quad_term(p, p.d2 + p.d1 * t.eta_plus) + quad_term(p, p.d2 * ca + p.d1 * t.xi_minus);
    const double b = quad_term(p, p.d2 + p.d1 * t.eta_minus) + quad_term(p, p.d2 * ca + p.d1 * t.xi_plus);
    BoundaryResult res;
    res.distance = std::max(a, b);
    res.branch = a >= b ? BranchSel::a : BranchSel::b;
    res.branches = {a, b};
    res.terms = t;
    return res;
}

double p2l_on(const BoundaryParams &p, double theta) {
    return quad_term(p, p.d2) + l2l_on(p, theta);
}

double p2o_off(const BoundaryParams &p, double alpha, double beta) {
    p.validate();
    check_half_turn(alpha, "alpha");
    check_half_turn(beta, "beta");
    const double cb = std::cos(beta);
    const double spread = std::abs(std::sin(alpha) * std::sin(beta)) + std::cos(alpha);
    return quad_term(p, p.d2 * cb) + quad_term(p, p.d2 * spread);
}

double diag_matched_gap(const BoundaryParams &p, double theta, double alpha) {
    p.validate();
    check_theta_domain(theta, alpha);
    const double tp = theta - alpha;
    const double s = p.d1 * std::sin(tp) + p.d2 * std::sin(alpha);
    return pi * s * s / (8.0 * p.wavelength * p.phase_threshold) +
           pi * p.d1 * p.d2 * (1.0 - std::cos(2.0 * alpha - theta)) /
               (4.0 * p.wavelength * p.phase_threshold);
}

double relative_deviation(double rotated, double baseline) {
    if (baseline <= 0.0)
        throw std::domain_error("baseline boundary distance must be positive");
    return std::abs(rotated - baseline) / baseline;
}

} // namespace boundary

BoundaryResult evaluate_family(Family family, const BoundaryParams &p, const AngleSet &angles) {
    BoundaryResult res;
    switch (family) {
    case Family::l2l_on:
        res.distance = boundary::l2l_on(p, angles.theta);
        return res;
    case Family::l2l_off:
        return boundary::l2l_off_exact(p, angles.theta, angles.alpha);
    case Family::l2o:
        res.distance = boundary::l2o_off(p, angles.alpha);
        return res;
    case Family::p2p_on:
        res.distance = boundary::p2p_on(p, angles.theta, angles.phi);
        return res;
    case Family::p2p_off_single:
        res.distance = boundary::p2p_off_single(p, angles.theta, angles.alpha);
        return res;
    case Family::p2p_off_dual:
        return boundary::p2p_off_dual(p, angles.theta, angles.phi, angles.alpha);
    case Family::p2l_on:
        res.distance = boundary::p2l_on(p, angles.theta);
        return res;
    case Family::p2o:
        res.distance = boundary::p2o_off(p, angles.alpha, angles.beta);
        return res;
    }
    throw std::domain_error("unknown family");
}

} // namespace nearfield
