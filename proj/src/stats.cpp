// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include "nearfield/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "nearfield/oracle.hpp" // worker_count

namespace nearfield {

void AngularDistribution::validate() const {
    if (concentration < 0.0)
        throw std::domain_error("concentration must be nonnegative");
    if (lo < -pi || hi > pi || !(lo < hi))
        throw std::domain_error("truncation bounds must satisfy -pi <= lo < hi <= pi");
    if (mean < lo || mean > hi)
        throw std::domain_error("mean must lie inside the truncation interval");
}

// ====================================================================================================
// Counter-based RNG (splitmix64 with per-stream starting state)
// ====================================================================================================

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(mix64(seed) ^ (stream * 0xda942042e4dd58b5ull))) {}

std::uint64_t CounterRng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

// ====================================================================================================
// Truncated von Mises sampling
// ====================================================================================================

double sample_tvm(const AngularDistribution &dist, CounterRng &rng) {
    dist.validate();
    if (dist.concentration == 0.0)
        return dist.lo + rng.uniform() * (dist.hi - dist.lo);

    // Wrapped-Cauchy proposal (Best & Fisher); accepted draws outside the truncation interval
    // are rejected and redrawn.
    const double kappa = dist.concentration;
    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    const double rr = (1.0 + rho * rho) / (2.0 * rho);
    for (;;) {
        const double z = std::cos(pi * rng.uniform());
        const double f = (1.0 + rr * z) / (rr + z);
        const double c = kappa * (rr - f);
        const double u2 = rng.uniform();
        if (c * (2.0 - c) - u2 <= 0.0 && std::log(c / u2) + 1.0 - c < 0.0)
            continue;
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        double x = dist.mean + sign * std::acos(f);
        if (x > pi)
            x -= 2.0 * pi;
        else if (x <= -pi)
            x += 2.0 * pi;
        if (x >= dist.lo && x <= dist.hi)
            return x;
    }
}

// ====================================================================================================
// Empirical distribution
// ====================================================================================================

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty())
        throw std::invalid_argument("empirical distribution needs at least one sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::mean() const {
    return std::accumulate(sorted_.begin(), sorted_.end(), 0.0) / static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::quantile(double p) const {
    if (p < 0.0 || p > 1.0)
        throw std::domain_error("quantile level must lie in [0, 1]");
    const auto n = sorted_.size();
    const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
    return sorted_[rank == 0 ? 0 : rank - 1];
}

double EmpiricalDistribution::cdf(double x) const {
    const auto count = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
    return static_cast<double>(count) / static_cast<double>(sorted_.size());
}

Histogram EmpiricalDistribution::histogram(int bins) const {
    if (bins < 0)
        throw std::domain_error("bin count must be nonnegative");
    const double lo = min(), hi = max();
    const auto n = static_cast<double>(sorted_.size());
    if (hi <= lo) { // degenerate draw: a single unit-width bin centered on the value
        return {{lo - 0.5, lo + 0.5}, {1.0}};
    }
    if (bins == 0) {
        const double iqr = quantile(0.75) - quantile(0.25);
        const double width = 2.0 * iqr / std::cbrt(n);
        bins = width > 0.0 ? static_cast<int>(std::ceil((hi - lo) / width))
                           : static_cast<int>(std::ceil(std::sqrt(n)));
        bins = std::clamp(bins, 1, 100000);
    }
    Histogram h;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    const double width = (hi - lo) / bins;
    for (int k = 0; k <= bins; k++)
        h.edges[static_cast<std::size_t>(k)] = lo + k * width;
    h.density.assign(static_cast<std::size_t>(bins), 0.0);
    for (double x : sorted_) {
        auto k = static_cast<std::size_t>((x - lo) / width);
        if (k >= static_cast<std::size_t>(bins))
            k = static_cast<std::size_t>(bins) - 1;
        h.density[k] += 1.0;
    }
    for (double &d : h.density)
        d /= n * width;
    return h;
}

// ====================================================================================================
// Monte Carlo over the closed forms
// ====================================================================================================

std::vector<std::string> required_angles(Family family) {
    switch (family) {
    case Family::l2l_on:
    case Family::p2l_on:
        return {"theta"};
    case Family::l2l_off:
    case Family::p2p_off_single:
        return {"theta_prime", "alpha"};
    case Family::l2o:
        return {"alpha"};
    case Family::p2p_on:
        return {"theta", "phi"};
    case Family::p2p_off_dual:
        return {"theta_prime", "phi", "alpha"};
    case Family::p2o:
        return {"alpha", "beta"};
    }
    throw std::domain_error("unknown family");
}

namespace {

std::vector<double> run_monte_carlo(const MonteCarloSpec &spec, bool parallel) {
    spec.params.validate();
    if (spec.samples == 0)
        throw std::invalid_argument("sample count must be positive");
    const std::vector<std::string> required = required_angles(spec.family);
    for (const auto &[key, input] : spec.angles) {
        if (std::find(required.begin(), required.end(), key) == required.end())
            throw std::invalid_argument("angle '" + key + "' is not used by family " +
                                        std::string(family_name(spec.family)));
        if (input.fixed.has_value() == input.dist.has_value())
            throw std::invalid_argument("angle '" + key + "' needs exactly one of a fixed value or "
                                        "a distribution");
        if (input.dist)
            input.dist->validate();
    }
    std::vector<const AngleInput *> inputs;
    for (const std::string &key : required) {
        const auto it = spec.angles.find(key);
        if (it == spec.angles.end())
            throw std::invalid_argument("family " + std::string(family_name(spec.family)) +
                                        " needs angle '" + key + "'");
        inputs.push_back(&it->second);
    }

    const bool off_boresight = std::find(required.begin(), required.end(), "theta_prime") != required.end();
    const auto n = static_cast<long>(spec.samples);
    std::vector<double> out(spec.samples);
#pragma omp parallel for schedule(static) num_threads(worker_count()) if (parallel)
    for (long i = 0; i < n; i++) {
        CounterRng rng(spec.seed, static_cast<std::uint64_t>(i));
        double drawn[4] = {0.0, 0.0, 0.0, 0.0}; // in canonical required-key order
        for (std::size_t k = 0; k < inputs.size(); k++)
            drawn[k] = inputs[k]->fixed ? *inputs[k]->fixed : sample_tvm(*inputs[k]->dist, rng);
        AngleSet angles;
        for (std::size_t k = 0; k < required.size(); k++) {
            const std::string &key = required[k];
            if (key == "theta")
                angles.theta = drawn[k];
            else if (key == "theta_prime")
                angles.theta = drawn[k]; // alpha added below
            else if (key == "phi")
                angles.phi = drawn[k];
            else if (key == "alpha")
                angles.alpha = drawn[k];
            else
                angles.beta = drawn[k];
        }
        if (off_boresight)
            angles.theta += angles.alpha;
        out[static_cast<std::size_t>(i)] =
            evaluate_family(spec.family, spec.params, angles).distance;
    }
    return out;
}

} // namespace

std::vector<double> monte_carlo_samples(const MonteCarloSpec &spec) { return run_monte_carlo(spec, true); }

std::vector<double> monte_carlo_samples_serial(const MonteCarloSpec &spec) {
    return run_monte_carlo(spec, false);
}

EmpiricalDistribution monte_carlo_rf(const MonteCarloSpec &spec) {
    return EmpiricalDistribution(monte_carlo_samples(spec));
}

} // namespace nearfield
