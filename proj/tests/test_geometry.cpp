// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include <cmath>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "nearfield/geometry.hpp"

using namespace nearfield;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Mat3 transpose(const Mat3 &a) {
    Mat3 t;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
            t.m[i][j] = a.m[j][i];
    return t;
}

double max_abs_diff_from_identity(const Mat3 &a) {
    double worst = 0.0;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
            worst = std::max(worst, std::abs(a.m[i][j] - (i == j ? 1.0 : 0.0)));
    return worst;
}

LinkConfig linear_link(double d1, double d2, double spacing, double theta, double alpha,
                       double distance) {
    LinkConfig config;
    config.family = Family::l2l_off;
    config.tx = ArraySpec::with_aperture(ArrayKind::linear, d1, spacing);
    config.rx = ArraySpec::with_aperture(ArrayKind::linear, d2, spacing);
    config.orientation.theta = theta;
    config.link.alpha = alpha;
    config.link.distance = distance;
    config.link.wavelength = 1e-3;
    return config;
}

} // namespace

TEST_CASE("rotation matrices act on basis vectors as right-handed rotations", "[geometry]") {
    const Vec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};

    const Vec3 zx = rotation_z(pi / 2.0) * ex;
    CHECK_THAT(zx.x, WithinAbs(0.0, 1e-15));
    CHECK_THAT(zx.y, WithinAbs(1.0, 1e-15));
    CHECK_THAT(zx.z, WithinAbs(0.0, 1e-15));

    const Vec3 xy = rotation_x(pi / 2.0) * ey;
    CHECK_THAT(xy.x, WithinAbs(0.0, 1e-15));
    CHECK_THAT(xy.y, WithinAbs(0.0, 1e-15));
    CHECK_THAT(xy.z, WithinAbs(1.0, 1e-15));

    const Vec3 xz = rotation_x(pi / 2.0) * ez;
    CHECK_THAT(xz.y, WithinAbs(-1.0, 1e-15));
}

TEST_CASE("rotation matrices are orthonormal and compose additively", "[geometry]") {
    for (double angle : {-1.3, -0.4, 0.0, 0.7, 1.5, 2.9}) {
        CHECK(max_abs_diff_from_identity(rotation_z(angle) * transpose(rotation_z(angle))) < 1e-14);
        CHECK(max_abs_diff_from_identity(rotation_x(angle) * transpose(rotation_x(angle))) < 1e-14);
        const Mat3 composed = rotation_z(angle) * rotation_x(0.8);
        CHECK(max_abs_diff_from_identity(composed * transpose(composed)) < 1e-14);
    }
    const Vec3 v{0.3, -0.7, 0.2};
    const Vec3 lhs = rotation_z(0.5) * (rotation_z(0.9) * v);
    const Vec3 rhs = rotation_z(1.4) * v;
    CHECK_THAT(norm(lhs - rhs), WithinAbs(0.0, 1e-15));
}

TEST_CASE("array specs derive counts, apertures, and diagonals", "[geometry]") {
    const ArraySpec lin = ArraySpec::with_aperture(ArrayKind::linear, 0.1, 5e-4);
    CHECK(lin.per_dim == 201);
    CHECK(lin.element_count() == 201);
    CHECK(lin.centered());
    CHECK_THAT(lin.aperture(), WithinRel(0.1, 1e-15));
    CHECK_THAT(lin.half_diagonal(), WithinRel(0.05, 1e-15));

    const ArraySpec pla = ArraySpec::with_aperture(ArrayKind::planar, 0.05, 5e-4);
    CHECK(pla.per_dim == 101);
    CHECK(pla.element_count() == 101u * 101u);
    CHECK_THAT(pla.half_diagonal(), WithinRel(0.025 * std::sqrt(2.0), 1e-15));

    // Aperture snaps to the nearest whole number of spacings.
    CHECK(ArraySpec::with_aperture(ArrayKind::linear, 0.1001, 5e-4).per_dim == 201);

    const ArraySpec pt = ArraySpec::point();
    CHECK(pt.element_count() == 1);
    CHECK(pt.aperture() == 0.0);
    CHECK(pt.half_diagonal() == 0.0);
    CHECK(pt.centered());

    CHECK_FALSE(ArraySpec::with_elements(ArrayKind::linear, 10, 1e-3).centered());
}

TEST_CASE("array specs reject ill-formed layouts", "[geometry]") {
    CHECK_THROWS_AS(ArraySpec::with_elements(ArrayKind::linear, 0, 1e-3), std::domain_error);
    CHECK_THROWS_AS(ArraySpec::with_elements(ArrayKind::linear, 5, 0.0), std::domain_error);
    CHECK_THROWS_AS(ArraySpec::with_elements(ArrayKind::point, 2, 1e-3), std::domain_error);
    CHECK_THROWS_AS(ArraySpec::with_aperture(ArrayKind::linear, -0.1, 1e-3), std::domain_error);
    CHECK_THROWS_AS(ArraySpec::with_aperture(ArrayKind::linear, 0.1, 0.0), std::domain_error);
}

TEST_CASE("element offsets are centered and evenly spaced", "[geometry]") {
    const ArraySpec odd = ArraySpec::with_elements(ArrayKind::linear, 7, 2e-3);
    const std::vector<double> off = element_offsets(odd);
    REQUIRE(off.size() == 7);
    CHECK(off[3] == 0.0);
    CHECK_THAT(off.front(), WithinRel(-6e-3, 1e-15));
    CHECK(off.front() == -off.back());
    for (std::size_t k = 1; k < off.size(); k++)
        CHECK_THAT(off[k] - off[k - 1], WithinRel(2e-3, 1e-12));

    // Even count: no zero offset, still symmetric about the center.
    const std::vector<double> even = element_offsets(ArraySpec::with_elements(ArrayKind::linear, 4, 1e-3));
    CHECK_THAT(even[0], WithinRel(-1.5e-3, 1e-15));
    CHECK(even[1] == -even[2]);
}

TEST_CASE("link validation enforces family kinds and angle domains", "[geometry]") {
    LinkConfig ok = linear_link(0.02, 0.01, 1e-3, 0.3, 0.2, 1.0);
    CHECK_NOTHROW(ok.validate());
    CHECK_THAT(ok.min_separation(), WithinRel(0.015, 1e-15));

    // Tx rotation more than a quarter turn away from the link direction.
    LinkConfig far = ok;
    far.orientation.theta = 1.5;
    far.link.alpha = -0.8;
    CHECK_THROWS_AS(far.validate(), std::domain_error);

    LinkConfig spun = ok;
    spun.orientation.phi = 0.1; // in-plane linear links have no spin angle
    CHECK_THROWS_AS(spun.validate(), std::domain_error);

    LinkConfig skewed = ok;
    skewed.link.beta = 0.1; // beta only applies to the point-to-planar family
    CHECK_THROWS_AS(skewed.validate(), std::domain_error);

    LinkConfig dark = ok;
    dark.link.wavelength = 0.0;
    CHECK_THROWS_AS(dark.validate(), std::domain_error);

    LinkConfig loose = ok;
    loose.link.phase_threshold = 4.0; // above pi
    CHECK_THROWS_AS(loose.validate(), std::domain_error);

    LinkConfig touching = ok;
    touching.link.distance = 0.01; // below the 0.015 m minimum separation
    CHECK_THROWS_AS(touching.validate(), std::domain_error);

    LinkConfig mismatched = ok;
    mismatched.tx = ArraySpec::with_aperture(ArrayKind::planar, 0.02, 1e-3);
    CHECK_THROWS_AS(mismatched.validate(), std::domain_error);

    LinkConfig pointy;
    pointy.family = Family::p2o;
    pointy.tx = ArraySpec::point();
    pointy.rx = ArraySpec::with_aperture(ArrayKind::planar, 0.01, 1e-3);
    pointy.link.alpha = 0.2;
    pointy.link.beta = 0.1;
    pointy.link.wavelength = 1e-3;
    pointy.link.distance = 1.0;
    CHECK_NOTHROW(pointy.validate());
    pointy.orientation.theta = 0.2; // the point Tx has no rotation
    CHECK_THROWS_AS(pointy.validate(), std::domain_error);
}

TEST_CASE("effective distance attains its minimum r at the array centers", "[geometry]") {
    LinkConfig config = linear_link(0.02, 0.01, 1e-3, pi / 6.0, pi / 9.0, 0.5);
    const double r = config.link.distance;
    const LinkFrame frame = make_link_frame(config);
    REQUIRE(frame.tx.size() == 21);
    REQUIRE(frame.rx.size() == 11);

    double lowest = 1e300;
    for (const Vec3 &t : frame.tx)
        for (const Vec3 &x : frame.rx) {
            const double d = effective_distance_raw(x - t, r, frame.dir);
            CHECK(d >= r - 1e-12);
            lowest = std::min(lowest, d);
        }
    CHECK_THAT(lowest, WithinRel(r, 1e-12));

    // The center pair hits r exactly: both offsets vanish.
    CHECK_THAT(effective_distance(config, 10, 5), WithinRel(r, 1e-15));
}

TEST_CASE("effective distance of a planar pair matches its frame decomposition", "[geometry]") {
    LinkConfig config;
    config.family = Family::p2p_off_dual;
    config.tx = ArraySpec::with_aperture(ArrayKind::planar, 0.01, 2.5e-3);
    config.rx = ArraySpec::with_aperture(ArrayKind::planar, 0.005, 2.5e-3);
    config.orientation = {0.7, 0.4};
    config.link.alpha = 0.3;
    config.link.wavelength = 1e-3;
    config.link.distance = 0.3;

    const LinkFrame frame = make_link_frame(config);
    REQUIRE(frame.tx.size() == 25);
    REQUIRE(frame.rx.size() == 9);
    for (std::size_t ti : {std::size_t{0}, std::size_t{7}, std::size_t{24}})
        for (std::size_t ri : {std::size_t{0}, std::size_t{4}, std::size_t{8}}) {
            const double direct = effective_distance(config, ti, ri);
            const double via_frame =
                effective_distance_raw(frame.rx[ri] - frame.tx[ti], config.link.distance, frame.dir);
            CHECK(direct == via_frame);
        }
    CHECK_THROWS_AS(effective_distance(config, 25, 0), std::out_of_range);
}

TEST_CASE("link frames follow the family axis conventions", "[geometry]") {
    // In-plane linear link: Rx along y, Tx rotated about z, direction in the x-y plane.
    LinkConfig l2l = linear_link(0.02, 0.01, 1e-3, 0.0, 0.0, 1.0);
    LinkFrame frame = make_link_frame(l2l);
    CHECK_THAT(frame.dir.x, WithinRel(1.0, 1e-15));
    CHECK_THAT(frame.tx.front().y, WithinRel(-0.01, 1e-12));
    CHECK_THAT(frame.rx.front().y, WithinRel(-0.005, 1e-12));
    CHECK(frame.tx.front().x == 0.0);

    l2l.orientation.theta = pi / 2.0;
    frame = make_link_frame(l2l);
    // A quarter-turn about z maps the +y end of the Tx onto -x.
    CHECK_THAT(frame.tx.back().x, WithinAbs(-0.01, 1e-12));
    CHECK_THAT(frame.tx.back().y, WithinAbs(0.0, 1e-12));

    l2l.orientation.theta = 0.0;
    l2l.link.alpha = pi / 4.0;
    frame = make_link_frame(l2l);
    CHECK_THAT(frame.dir.x, WithinRel(std::cos(pi / 4.0), 1e-15));
    CHECK_THAT(frame.dir.y, WithinRel(std::sin(pi / 4.0), 1e-15));
    CHECK(frame.dir.z == 0.0);

    // Tilted linear Tx of the linear-to-planar family lies along z before rotation about x.
    LinkConfig p2l;
    p2l.family = Family::p2l_on;
    p2l.tx = ArraySpec::with_aperture(ArrayKind::linear, 0.02, 1e-3);
    p2l.rx = ArraySpec::with_aperture(ArrayKind::planar, 0.01, 1e-3);
    p2l.link.wavelength = 1e-3;
    p2l.link.distance = 1.0;
    frame = make_link_frame(p2l);
    CHECK_THAT(frame.dir.y, WithinRel(1.0, 1e-15));
    CHECK_THAT(frame.tx.front().z, WithinRel(-0.01, 1e-12));
    CHECK(frame.tx.front().x == 0.0);

    // Planar Rx spans x-z, row-major: the first row varies z, the row index varies x.
    const ArraySpec rx = p2l.rx;
    const auto n = static_cast<std::size_t>(rx.per_dim);
    const LinkFrame full = make_link_frame(p2l);
    CHECK(full.rx[0].x == full.rx[n - 1].x);
    CHECK(full.rx[0].z != full.rx[n - 1].z);
    CHECK(full.rx[0].x != full.rx[n].x);
    for (const Vec3 &x : full.rx)
        CHECK(x.y == 0.0);

    // Point-to-planar: the link direction carries both elevation and azimuth.
    LinkConfig p2o;
    p2o.family = Family::p2o;
    p2o.tx = ArraySpec::point();
    p2o.rx = ArraySpec::with_aperture(ArrayKind::planar, 0.01, 1e-3);
    p2o.link.alpha = 0.5;
    p2o.link.beta = 0.25;
    p2o.link.wavelength = 1e-3;
    p2o.link.distance = 1.0;
    frame = make_link_frame(p2o);
    const Vec3 expected = link_unit_vector(0.5, 0.25);
    CHECK_THAT(norm(frame.dir - expected), WithinAbs(0.0, 1e-15));
    CHECK_THAT(norm(frame.dir), WithinRel(1.0, 1e-15));
    REQUIRE(frame.tx.size() == 1);
    CHECK(norm(frame.tx.front()) == 0.0);
}

TEST_CASE("frame subsets select the requested elements", "[geometry]") {
    LinkConfig config = linear_link(0.02, 0.01, 1e-3, 0.2, 0.1, 1.0);
    const LinkFrame full = make_link_frame(config);
    const LinkFrame sub = make_link_frame(config, {0, 10, 20}, {5});
    REQUIRE(sub.tx.size() == 3);
    REQUIRE(sub.rx.size() == 1);
    CHECK(norm(sub.tx[0] - full.tx[0]) == 0.0);
    CHECK(norm(sub.tx[1] - full.tx[10]) == 0.0);
    CHECK(norm(sub.tx[2] - full.tx[20]) == 0.0);
    CHECK(norm(sub.rx[0] - full.rx[5]) == 0.0);
}
