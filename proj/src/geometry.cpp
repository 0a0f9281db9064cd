// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include "nearfield/geometry.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nearfield {

// ====================================================================================================
// Vectors / matrices
// ====================================================================================================

Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3 &v) { return {s * v.x, s * v.y, s * v.z}; }
double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3 &v) { return std::sqrt(dot(v, v)); }

Vec3 operator*(const Mat3 &a, const Vec3 &v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
            a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
            a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

Mat3 operator*(const Mat3 &a, const Mat3 &b) {
    Mat3 out;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
            out.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
    return out;
}

Mat3 rotation_x(double angle_rad) {
    const double c = std::cos(angle_rad), s = std::sin(angle_rad);
    Mat3 r;
    r.m[0][0] = 1.0, r.m[0][1] = 0.0, r.m[0][2] = 0.0;
    r.m[1][0] = 0.0, r.m[1][1] = c, r.m[1][2] = -s;
    r.m[2][0] = 0.0, r.m[2][1] = s, r.m[2][2] = c;
    return r;
}

Mat3 rotation_z(double angle_rad) {
    const double c = std::cos(angle_rad), s = std::sin(angle_rad);
    Mat3 r;
    r.m[0][0] = c, r.m[0][1] = -s, r.m[0][2] = 0.0;
    r.m[1][0] = s, r.m[1][1] = c, r.m[1][2] = 0.0;
    r.m[2][0] = 0.0, r.m[2][1] = 0.0, r.m[2][2] = 1.0;
    return r;
}

// ====================================================================================================
// Array layouts
// ====================================================================================================

ArraySpec ArraySpec::point() { return {ArrayKind::point, 1, 0.0}; }

ArraySpec ArraySpec::with_elements(ArrayKind kind, int per_dim, double spacing) {
    ArraySpec spec{kind, per_dim, spacing};
    spec.validate();
    return spec;
}

ArraySpec ArraySpec::with_aperture(ArrayKind kind, double aperture, double spacing) {
    if (kind == ArrayKind::point)
        return point();
    if (spacing <= 0.0)
        throw std::domain_error("array spacing must be positive");
    if (aperture < 0.0)
        throw std::domain_error("array aperture must be nonnegative");
    const int per_dim = static_cast<int>(std::lround(aperture / spacing)) + 1;
    return with_elements(kind, per_dim, spacing);
}

double ArraySpec::aperture() const { return (per_dim - 1) * spacing; }

std::size_t ArraySpec::element_count() const {
    const auto n = static_cast<std::size_t>(per_dim);
    return kind == ArrayKind::planar ? n * n : n;
}

bool ArraySpec::centered() const { return per_dim % 2 == 1; }

double ArraySpec::half_diagonal() const {
    switch (kind) {
    case ArrayKind::point:
        return 0.0;
    case ArrayKind::linear:
        return 0.5 * aperture();
    case ArrayKind::planar:
        return 0.5 * aperture() * std::sqrt(2.0);
    }
    return 0.0;
}

void ArraySpec::validate() const {
    if (per_dim < 1)
        throw std::domain_error("array needs at least one element per dimension");
    if (kind == ArrayKind::point && per_dim != 1)
        throw std::domain_error("a point array has exactly one element");
    if (per_dim > 1 && spacing <= 0.0)
        throw std::domain_error("array spacing must be positive");
    if (spacing < 0.0)
        throw std::domain_error("array spacing must be nonnegative");
}

std::vector<double> element_offsets(const ArraySpec &spec) {
    spec.validate();
    std::vector<double> offsets(static_cast<std::size_t>(spec.per_dim));
    const double mid = 0.5 * (spec.per_dim - 1);
    for (int k = 0; k < spec.per_dim; k++)
        offsets[static_cast<std::size_t>(k)] = (k - mid) * spec.spacing;
    return offsets;
}

// ====================================================================================================
// Link descriptions
// ====================================================================================================

const char *family_name(Family family) {
    switch (family) {
    case Family::l2l_on:
        return "l2l-on";
    case Family::l2l_off:
        return "l2l-off";
    case Family::l2o:
        return "l2o";
    case Family::p2p_on:
        return "p2p-on";
    case Family::p2p_off_single:
        return "p2p-off-single";
    case Family::p2p_off_dual:
        return "p2p-off-dual";
    case Family::p2l_on:
        return "p2l-on";
    case Family::p2o:
        return "p2o";
    }
    return "unknown";
}

namespace {

struct FamilyTraits {
    ArrayKind tx_kind;
    ArrayKind rx_kind;
    bool uses_theta;
    bool uses_phi;
    bool uses_alpha;
    bool uses_beta;
};

FamilyTraits traits(Family family) {
    switch (family) {
    case Family::l2l_on:
        return {ArrayKind::linear, ArrayKind::linear, true, false, false, false};
    case Family::l2l_off:
        return {ArrayKind::linear, ArrayKind::linear, true, false, true, false};
    case Family::l2o:
        return {ArrayKind::point, ArrayKind::linear, false, false, true, false};
    case Family::p2p_on:
        return {ArrayKind::planar, ArrayKind::planar, true, true, false, false};
    case Family::p2p_off_single:
        return {ArrayKind::planar, ArrayKind::planar, true, false, true, false};
    case Family::p2p_off_dual:
        return {ArrayKind::planar, ArrayKind::planar, true, true, true, false};
    case Family::p2l_on:
        return {ArrayKind::linear, ArrayKind::planar, true, false, false, false};
    case Family::p2o:
        return {ArrayKind::point, ArrayKind::planar, false, false, true, true};
    }
    throw std::domain_error("unknown family");
}

void check_angle(bool used, double value, const char *name, double limit = pi / 2.0) {
    if (!used && value != 0.0)
        throw std::domain_error(std::string(name) + " is not used by this family and must be 0");
    if (used && std::abs(value) > limit)
        throw std::domain_error(std::string(name) + " is outside [-pi/2, pi/2]");
}

} // namespace

double LinkConfig::min_separation() const { return tx.half_diagonal() + rx.half_diagonal(); }

void LinkConfig::validate() const {
    tx.validate();
    rx.validate();
    const FamilyTraits t = traits(family);
    if (tx.kind != t.tx_kind || rx.kind != t.rx_kind)
        throw std::domain_error(std::string("array kinds do not match family ") + family_name(family));
    check_angle(t.uses_phi, orientation.phi, "phi");
    check_angle(t.uses_alpha, link.alpha, "alpha");
    check_angle(t.uses_beta, link.beta, "beta");
    // The Tx rotation must stay within a quarter turn of the link direction; outside that range the
    // Tx faces away from the Rx and the boundary formulas do not apply. Rejected, not clamped.
    if (t.uses_theta) {
        const double rel = orientation.theta - (t.uses_alpha ? link.alpha : 0.0);
        if (std::abs(rel) > pi / 2.0)
            throw std::domain_error("theta must lie within alpha +/- pi/2");
    } else if (orientation.theta != 0.0) {
        throw std::domain_error("theta is not used by this family and must be 0");
    }
    if (link.wavelength <= 0.0)
        throw std::domain_error("wavelength must be positive");
    if (!(link.phase_threshold > 0.0) || link.phase_threshold > pi)
        throw std::domain_error("phase threshold must lie in (0, pi]");
    if (link.distance < min_separation())
        throw std::domain_error("link distance is below the minimum array separation");
}

Vec3 link_unit_vector(double alpha, double beta) {
    return {std::sin(beta) * std::cos(alpha), std::cos(beta) * std::cos(alpha), std::sin(alpha)};
}

double effective_distance_raw(const Vec3 &sep, double r, const Vec3 &dir) {
    return norm(sep - r * dir) + dot(sep, dir);
}

// ====================================================================================================
// Link frames
// ====================================================================================================

namespace {

// Local element position before the Tx rotation. Linear arrays lie along the y-axis for in-plane
// (l2l/l2o) links and along the z-axis for the tilted linear-to-planar Tx; planar arrays span x-z.
Vec3 local_position(const ArraySpec &spec, const std::vector<double> &offsets, std::size_t index,
                    bool linear_along_z) {
    if (index >= spec.element_count())
        throw std::out_of_range("element index out of range");
    switch (spec.kind) {
    case ArrayKind::point:
        return {0.0, 0.0, 0.0};
    case ArrayKind::linear: {
        const double d = offsets[index];
        return linear_along_z ? Vec3{0.0, 0.0, d} : Vec3{0.0, d, 0.0};
    }
    case ArrayKind::planar: {
        const auto n = static_cast<std::size_t>(spec.per_dim);
        return {offsets[index / n], 0.0, offsets[index % n]};
    }
    }
    throw std::domain_error("unknown array kind");
}

struct FrameLayout {
    Vec3 dir;
    Mat3 tx_rotation;
    bool tx_along_z;
    bool rx_along_z;
};

FrameLayout layout(const LinkConfig &config) {
    const double theta = config.orientation.theta;
    const double phi = config.orientation.phi;
    const double alpha = config.link.alpha;
    switch (config.family) {
    case Family::l2l_on:
    case Family::l2l_off:
        return {{std::cos(alpha), std::sin(alpha), 0.0}, rotation_z(theta), false, false};
    case Family::l2o:
        return {{std::cos(alpha), std::sin(alpha), 0.0}, Mat3{}, false, false};
    case Family::p2p_on:
    case Family::p2p_off_dual:
        return {link_unit_vector(alpha, 0.0), rotation_z(phi) * rotation_x(theta), false, false};
    case Family::p2p_off_single:
        return {link_unit_vector(alpha, 0.0), rotation_x(theta), false, false};
    case Family::p2l_on:
        return {link_unit_vector(0.0, 0.0), rotation_x(theta), true, false};
    case Family::p2o:
        return {link_unit_vector(alpha, config.link.beta), Mat3{}, false, false};
    }
    throw std::domain_error("unknown family");
}

std::vector<std::size_t> all_indices(const ArraySpec &spec) {
    std::vector<std::size_t> idx(spec.element_count());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

} // namespace

LinkFrame make_link_frame(const LinkConfig &config, const std::vector<std::size_t> &tx_subset,
                          const std::vector<std::size_t> &rx_subset) {
    config.validate();
    const FrameLayout lay = layout(config);
    const std::vector<double> tx_off = element_offsets(config.tx);
    const std::vector<double> rx_off = element_offsets(config.rx);

    LinkFrame frame;
    frame.dir = lay.dir;
    frame.tx.reserve(tx_subset.size());
    for (std::size_t i : tx_subset)
        frame.tx.push_back(lay.tx_rotation * local_position(config.tx, tx_off, i, lay.tx_along_z));
    frame.rx.reserve(rx_subset.size());
    for (std::size_t i : rx_subset)
        frame.rx.push_back(local_position(config.rx, rx_off, i, lay.rx_along_z));
    return frame;
}

LinkFrame make_link_frame(const LinkConfig &config) {
    return make_link_frame(config, all_indices(config.tx), all_indices(config.rx));
}

double effective_distance(const LinkConfig &config, std::size_t tx_index, std::size_t rx_index) {
    const LinkFrame frame = make_link_frame(config, {tx_index}, {rx_index});
    return effective_distance_raw(frame.rx[0] - frame.tx[0], config.link.distance, frame.dir);
}

} // namespace nearfield
