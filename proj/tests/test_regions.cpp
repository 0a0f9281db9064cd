// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include <cmath>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "nearfield/regions.hpp"

using namespace nearfield;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double deg = pi / 180.0;

BoundaryParams canonical() { return {0.1, 0.05, 1e-3, pi / 8.0}; }

GridAxis half_circle(const std::string &name, int count) {
    return GridAxis::linspace(name, -pi / 2.0, pi / 2.0, count);
}

} // namespace

TEST_CASE("grid axes are inclusive uniform subdivisions", "[regions]") {
    const GridAxis axis = GridAxis::linspace("alpha", -1.0, 1.0, 5);
    REQUIRE(axis.values.size() == 5);
    CHECK(axis.values.front() == -1.0);
    CHECK(axis.values.back() == 1.0);
    CHECK_THAT(axis.values[1], WithinAbs(-0.5, 1e-15));
    CHECK_THAT(axis.values[2], WithinAbs(0.0, 1e-15));

    const GridAxis single = GridAxis::linspace("theta", 0.25, 9.0, 1);
    REQUIRE(single.values.size() == 1);
    CHECK(single.values[0] == 0.25);

    CHECK_THROWS_AS(GridAxis::linspace("theta", 0.0, 1.0, 0), std::domain_error);
}

TEST_CASE("linear-link dominance map pins its frozen cells", "[regions]") {
    const RegionMap map = dominance_map_l2l(canonical(), half_circle("theta_prime", 7),
                                            half_circle("alpha", 7));
    REQUIRE(map.labels.size() == 49);

    // Center cell: boresight, branch a dominates with the classical value.
    CHECK(map.label_at(3, 3) == RegionLabel::branch_a);
    CHECK_THAT(map.value_at(3, 3), WithinRel(45.0, 1e-12));

    // theta' = 0 against a quarter-turn misalignment: the branches tie at 20.025 m.
    CHECK(map.label_at(3, 0) == RegionLabel::tie);
    CHECK_THAT(map.value_at(3, 0), WithinRel(20.025, 1e-12));
    CHECK(map.label_at(3, 6) == RegionLabel::tie);

    // Quarter-turn tilt at alpha = -30 deg: branch b wins.
    CHECK(map.label_at(0, 2) == RegionLabel::branch_b);
    CHECK_THAT(map.value_at(0, 2), WithinRel(3.8125, 1e-12));
    // ... and its mirrored cell hands the win to branch a at the same distance.
    CHECK(map.label_at(0, 4) == RegionLabel::branch_a);
    CHECK_THAT(map.value_at(0, 4), WithinRel(3.8125, 1e-12));

    REQUIRE(map.theta_threshold.has_value());
    CHECK_THAT(*map.theta_threshold, WithinRel(87.97449935960813 * deg, 1e-12));
}

TEST_CASE("linear-link dominance map is symmetric under joint sign flips", "[regions]") {
    const int n = 21;
    const RegionMap map = dominance_map_l2l(canonical(), half_circle("theta_prime", n),
                                            half_circle("alpha", n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            const auto mi = static_cast<std::size_t>(n - 1 - i), mj = static_cast<std::size_t>(n - 1 - j);
            CHECK(map.label_at(si, sj) == map.label_at(mi, mj));
            CHECK(map.value_at(si, sj) == map.value_at(mi, mj));
        }
}

TEST_CASE("branch b never wins when tilt and misalignment have opposite signs", "[regions]") {
    const int n = 21;
    const GridAxis tp = half_circle("theta_prime", n), al = half_circle("alpha", n);
    const RegionMap map = dominance_map_l2l(canonical(), tp, al);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (tp.values[static_cast<std::size_t>(i)] * al.values[static_cast<std::size_t>(j)] < 0.0)
                CHECK(map.label_at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) !=
                      RegionLabel::branch_b);
}

TEST_CASE("planar dominance map flips branches with the spin sign", "[regions]") {
    const int n = 9;
    const RegionMap map = dominance_map_p2p(canonical(), half_circle("theta_prime", n),
                                            half_circle("phi", n), 20.0 * deg);
    CHECK_FALSE(map.theta_threshold.has_value());
    // phi -> -phi swaps the coupling factors, so the winning branch swaps while the value holds.
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            const auto mj = static_cast<std::size_t>(n - 1 - j);
            CHECK_THAT(map.value_at(si, sj), WithinRel(map.value_at(si, mj), 1e-12));
            const RegionLabel there = map.label_at(si, sj), mirror = map.label_at(si, mj);
            if (there == RegionLabel::tie)
                CHECK(mirror == RegionLabel::tie);
            else
                CHECK(mirror == (there == RegionLabel::branch_a ? RegionLabel::branch_b
                                                                : RegionLabel::branch_a));
        }
    // Zero spin means identical branches everywhere on that row.
    for (int i = 0; i < n; i++)
        CHECK(map.label_at(static_cast<std::size_t>(i), 4) == RegionLabel::tie);
}

TEST_CASE("boundary landscapes evaluate any family over mixed axes", "[regions]") {
    const BoundaryParams p = canonical();
    const GridAxis alpha = half_circle("alpha", 5);
    const GridAxis d2 = GridAxis::linspace("d2", 0.02, 0.05, 2);
    const RegionMap map = boundary_landscape(Family::l2o, p, alpha, d2, {});
    for (std::size_t i = 0; i < 5; i++)
        for (std::size_t j = 0; j < 2; j++) {
            BoundaryParams q = p;
            q.d2 = d2.values[j];
            CHECK_THAT(map.value_at(i, j), WithinRel(boundary::l2o_off(q, alpha.values[i]), 1e-15));
            CHECK(map.label_at(i, j) == RegionLabel::branch_a); // single-expression family
        }
}

TEST_CASE("tilt-relative axes combine with the misalignment axis cell by cell", "[regions]") {
    const BoundaryParams p = canonical();
    const GridAxis tp = half_circle("theta_prime", 5), al = half_circle("alpha", 5);
    const RegionMap map = boundary_landscape(Family::l2l_off, p, tp, al, {});
    for (std::size_t i = 0; i < 5; i++)
        for (std::size_t j = 0; j < 5; j++) {
            const double direct =
                boundary::l2l_off_exact(p, tp.values[i] + al.values[j], al.values[j]).distance;
            CHECK_THAT(map.value_at(i, j), WithinRel(direct, 1e-15));
        }
}

TEST_CASE("point evaluation applies axis assignments over the fixed state", "[regions]") {
    const BoundaryParams p = canonical();
    const BoundaryResult wide = evaluate_with_axes(Family::l2l_on, p, {}, {{"d1", 0.2}});
    CHECK_THAT(wide.distance, WithinRel(125.0, 1e-12)); // quadratic of the widened 0.25 m sum

    const AngleSet fixed{0.0, 0.0, 30.0 * deg, 0.0};
    const BoundaryResult res =
        evaluate_with_axes(Family::l2l_off, p, fixed, {{"theta_prime", 20.0 * deg}});
    CHECK_THAT(res.distance,
               WithinRel(boundary::l2l_off_exact(p, 50.0 * deg, 30.0 * deg).distance, 1e-15));

    CHECK_THROWS_AS(evaluate_with_axes(Family::l2l_on, p, {}, {{"gamma", 0.1}}),
                    std::invalid_argument);
}

TEST_CASE("grid failures surface once with context", "[regions]") {
    const GridAxis theta = GridAxis::linspace("theta", 0.0, 3.2, 5); // runs past the quarter turn
    const GridAxis d1 = GridAxis::linspace("d1", 0.05, 0.1, 2);
    REQUIRE_THROWS_MATCHES(boundary_landscape(Family::l2l_on, canonical(), theta, d1, {}),
                           std::domain_error,
                           Catch::Matchers::MessageMatches(ContainsSubstring("grid evaluation failed")));
}

TEST_CASE("an oversized tie tolerance collapses every cell to a tie", "[regions]") {
    const RegionMap map = dominance_map_l2l(canonical(), half_circle("theta_prime", 5),
                                            half_circle("alpha", 5), 10.0);
    for (RegionLabel label : map.labels)
        CHECK(label == RegionLabel::tie);
}
