// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links
//
// Core geometry: small fixed-size linear algebra, array layouts, link descriptions, and the exact
// per-element-pair effective distance (propagation distance plus pre-steering phase compensation).

#pragma once

#include <cstddef>
#include <vector>

namespace nearfield {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double speed_of_light = 299792458.0; // m/s

// ====================================================================================================
// 3-vectors and 3x3 matrices
// ====================================================================================================

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Vec3 operator+(const Vec3 &a, const Vec3 &b);
Vec3 operator-(const Vec3 &a, const Vec3 &b);
Vec3 operator*(double s, const Vec3 &v);
double dot(const Vec3 &a, const Vec3 &b);
double norm(const Vec3 &v);

struct Mat3 {
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; // row-major, defaults to identity
};

Vec3 operator*(const Mat3 &a, const Vec3 &v);
Mat3 operator*(const Mat3 &a, const Mat3 &b);

// Right-handed rotation about the x-axis: y tilts towards z.
Mat3 rotation_x(double angle_rad);

// Right-handed rotation about the z-axis: x rotates towards y.
Mat3 rotation_z(double angle_rad);

// ====================================================================================================
// Array layouts
// ====================================================================================================

enum class ArrayKind {
    point,  // single element
    linear, // uniform linear array, n elements
    planar  // uniform square planar array, n x n elements
};

struct ArraySpec {
    ArrayKind kind = ArrayKind::linear;
    int per_dim = 1;      // elements per dimension
    double spacing = 0.0; // inter-element spacing [m]

    static ArraySpec point();
    static ArraySpec with_elements(ArrayKind kind, int per_dim, double spacing);

    // Chooses per_dim = round(aperture / spacing) + 1; the realized aperture is (per_dim-1)*spacing.
    static ArraySpec with_aperture(ArrayKind kind, double aperture, double spacing);

    double aperture() const;           // edge length (per_dim - 1) * spacing [m]
    std::size_t element_count() const; // 1, n, or n^2
    bool centered() const;             // true when an element sits at the geometric center (odd n)
    double half_diagonal() const;      // max distance of an element from the array center [m]
    void validate() const;             // throws std::domain_error on an ill-formed spec
};

// Per-dimension element offsets from the array center: (k - (n-1)/2) * spacing, k = 0..n-1.
std::vector<double> element_offsets(const ArraySpec &spec);

// ====================================================================================================
// Link descriptions
// ====================================================================================================

// Tx/Rx configuration families. "on" = receiver on the transmit boresight, "off" = receiver
// displaced by the elevation angle alpha (and azimuth beta for the point-to-planar case).
enum class Family {
    l2l_on,         // linear -> linear, boresight, Tx rotated in-plane by theta
    l2l_off,        // linear -> linear, Rx at alpha, Tx rotated in-plane by theta
    l2o,            // point -> linear, Rx at alpha
    p2p_on,         // planar -> planar, boresight, Tx tilted by theta and spun by phi
    p2p_off_single, // planar -> planar, Rx at alpha, Tx tilted by theta
    p2p_off_dual,   // planar -> planar, Rx at alpha, Tx tilted by theta and spun by phi
    p2l_on,         // linear -> planar, boresight, Tx tilted by theta
    p2o             // point -> planar, Rx at (alpha, beta)
};

const char *family_name(Family family);

struct Orientation {
    double theta = 0.0; // Tx rotation [rad]; in-plane (about z) for linear links, tilt (about x) otherwise
    double phi = 0.0;   // second Tx rotation about z [rad]; used by p2p_on and p2p_off_dual only
};

struct LinkGeometry {
    double distance = 0.0;             // center-to-center separation r [m]
    double alpha = 0.0;                // link elevation off the Tx boresight [rad]
    double beta = 0.0;                 // link azimuth [rad]; p2o only
    double wavelength = 0.0;           // carrier wavelength [m]
    double phase_threshold = pi / 8.0; // phase-spread criterion threshold, in (0, pi]
};

struct LinkConfig {
    Family family = Family::l2l_on;
    ArraySpec tx;
    ArraySpec rx;
    Orientation orientation;
    LinkGeometry link;

    // Smallest admissible center separation: sum of the two half-diagonals.
    double min_separation() const;

    // Enforces array kinds, angle domains (alpha and theta-alpha within [-pi/2, pi/2], unused
    // angles zero), positive wavelength, threshold in (0, pi], and distance >= min_separation().
    void validate() const;
};

// Unit vector from the Rx-plane center towards the Tx for planar-receiver links:
// (sin(beta) cos(alpha), cos(beta) cos(alpha), sin(alpha)).
Vec3 link_unit_vector(double alpha, double beta);

// Effective distance for a separation vector `sep` between two elements whose array centers are
// r apart along `dir`: ||sep - r dir|| + dot(sep, dir). The dot terms are the Tx/Rx pre-steering
// phase compensation; the minimum over elements is exactly r (attained at the centers).
double effective_distance_raw(const Vec3 &sep, double r, const Vec3 &dir);

// Effective distance between one Tx and one Rx element. Element indices are row-major over
// (dimension 1, dimension 2) for planar arrays. Throws on invalid config or index.
double effective_distance(const LinkConfig &config, std::size_t tx_index, std::size_t rx_index);

// ====================================================================================================
// Link frames (element positions resolved into the global frame, Tx rotation applied)
// ====================================================================================================

struct LinkFrame {
    Vec3 dir;             // unit vector from Rx center towards Tx center
    std::vector<Vec3> tx; // Tx element offsets from the Tx center, rotated
    std::vector<Vec3> rx; // Rx element offsets from the Rx center
};

LinkFrame make_link_frame(const LinkConfig &config);
LinkFrame make_link_frame(const LinkConfig &config, const std::vector<std::size_t> &tx_subset,
                          const std::vector<std::size_t> &rx_subset);

} // namespace nearfield
