// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links
//
// Statistical characterization of the boundary under random angular misalignment: truncated
// von Mises sampling, seeded Monte Carlo over the closed forms, and empirical CDF/PDF summaries.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearfield/closed_form.hpp"

namespace nearfield {

// Truncated von Mises angular distribution. concentration = 0 degenerates to the uniform
// distribution on [lo, hi].
struct AngularDistribution {
    double mean = 0.0;          // location mu [rad]
    double concentration = 0.0; // kappa >= 0
    double lo = -pi / 2.0;      // truncation bounds [rad]
    double hi = pi / 2.0;

    void validate() const; // kappa >= 0, -pi <= lo < hi <= pi, mu within [lo, hi]
};

// Counter-based splittable generator: stream `stream` of seed `seed` yields a reproducible
// sequence independent of how streams are distributed over workers (splitmix64 increments).
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next_u64();
    double uniform(); // [0, 1)

  private:
    std::uint64_t state_;
};

// Draws one angle. Uses the wrapped-Cauchy proposal method for the von Mises base distribution
// and rejection against the truncation interval.
double sample_tvm(const AngularDistribution &dist, CounterRng &rng);

struct Histogram {
    std::vector<double> edges;   // bin edges, size bins + 1
    std::vector<double> density; // normalized so the densities integrate to 1
};

// Sorted-sample view of a Monte Carlo draw with a right-continuous empirical CDF.
class EmpiricalDistribution {
  public:
    explicit EmpiricalDistribution(std::vector<double> samples); // throws if empty; sorts

    const std::vector<double> &samples() const { return sorted_; } // ascending
    std::size_t size() const { return sorted_.size(); }
    double min() const { return sorted_.front(); }
    double max() const { return sorted_.back(); }
    double mean() const;
    double quantile(double p) const; // nearest-rank, p in [0, 1]
    double cdf(double x) const;      // P(X <= x)

    // bins = 0 selects the Freedman-Diaconis width; degenerate draws collapse to one bin.
    Histogram histogram(int bins = 0) const;

  private:
    std::vector<double> sorted_;
};

// One random or fixed angle of a Monte Carlo run; exactly one member must be set.
struct AngleInput {
    std::optional<double> fixed;
    std::optional<AngularDistribution> dist;

    static AngleInput fixed_value(double v) { return {v, std::nullopt}; }
    static AngleInput von_mises(const AngularDistribution &d) { return {std::nullopt, d}; }
};

// Off-boresight families are parameterized by theta_prime = theta - alpha, whose domain does not
// depend on alpha, so independently drawn angles always satisfy the domain constraints.
// Required keys: l2l_on/p2l_on {theta}; l2l_off/p2p_off_single {theta_prime, alpha};
// l2o {alpha}; p2p_on {theta, phi}; p2p_off_dual {theta_prime, phi, alpha}; p2o {alpha, beta}.
std::vector<std::string> required_angles(Family family);

struct MonteCarloSpec {
    Family family = Family::l2l_on;
    BoundaryParams params;
    std::map<std::string, AngleInput> angles;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
};

// Boundary-distance draws in sample order; bit-identical for a given seed regardless of worker
// count (each sample consumes its own counter stream). Throws on missing or unknown angle keys.
std::vector<double> monte_carlo_samples(const MonteCarloSpec &spec);

// Single-threaded reference path of the same computation, kept for equivalence tests.
std::vector<double> monte_carlo_samples_serial(const MonteCarloSpec &spec);

EmpiricalDistribution monte_carlo_rf(const MonteCarloSpec &spec);

} // namespace nearfield
