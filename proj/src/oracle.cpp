// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include "nearfield/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace nearfield {

int worker_count() {
    const char *env = std::getenv("NEARFIELD_THREADS");
    if (env != nullptr && *env != '\0') {
        const int requested = std::atoi(env);
        if (requested > 0)
            return requested;
    }
    return omp_get_max_threads();
}

namespace {

// Element indices of the aperture boundary plus the center element. Only called for arrays with
// an odd per-dimension count, where the center element exists and the restriction is sound.
std::vector<std::size_t> hull_subset(const ArraySpec &spec) {
    const auto n = static_cast<std::size_t>(spec.per_dim);
    std::vector<std::size_t> idx;
    if (spec.kind == ArrayKind::planar) {
        for (std::size_t i = 0; i < n; i++)
            for (std::size_t j = 0; j < n; j++)
                if (i == 0 || i + 1 == n || j == 0 || j + 1 == n)
                    idx.push_back(i * n + j);
        if (n > 2)
            idx.push_back((n / 2) * n + n / 2);
    } else {
        idx.push_back(0);
        if (n > 1)
            idx.push_back(n - 1);
        if (n > 2)
            idx.push_back(n / 2);
    }
    return idx;
}

struct Kernel {
    Vec3 dir;
    std::vector<Vec3> tx;
    std::vector<Vec3> rx;
};

Kernel make_kernel(const LinkConfig &link, EnumerationMode mode) {
    const bool hull_sound = link.tx.centered() && link.rx.centered();
    LinkFrame frame = (mode == EnumerationMode::hull && hull_sound)
                          ? make_link_frame(link, hull_subset(link.tx), hull_subset(link.rx))
                          : make_link_frame(link);
    return {frame.dir, std::move(frame.tx), std::move(frame.rx)};
}

double kernel_spread(const Kernel &k, double r, bool parallel) {
    const auto nt = static_cast<long>(k.tx.size());
    const auto nr = static_cast<long>(k.rx.size());
    const Vec3 dir = k.dir;
    double mx = -std::numeric_limits<double>::infinity();
    double mn = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(max : mx) reduction(min : mn) schedule(static) \
    num_threads(worker_count()) if (parallel)
    for (long i = 0; i < nt; i++) {
        const Vec3 t = k.tx[static_cast<std::size_t>(i)];
        for (long j = 0; j < nr; j++) {
            const double d = effective_distance_raw(k.rx[static_cast<std::size_t>(j)] - t, r, dir);
            mx = std::max(mx, d);
            mn = std::min(mn, d);
        }
    }
    return mx - mn;
}

void check_search(const SearchSettings &s) {
    if (s.r_min < 0.0 || s.r_max < 0.0)
        throw std::domain_error("search bounds must be nonnegative");
    if (s.r_max > 0.0 && s.r_min > 0.0 && s.r_max <= s.r_min)
        throw std::domain_error("r_max must exceed r_min");
    if (s.coarse_steps < 2)
        throw std::domain_error("coarse sweep needs at least two steps");
    if (s.bisect_tol <= 0.0)
        throw std::domain_error("bisection tolerance must be positive");
}

BoundaryParams link_params(const LinkConfig &link) {
    return {link.tx.aperture(), link.rx.aperture(), link.link.wavelength, link.link.phase_threshold};
}

AngleSet link_angles(const LinkConfig &link) {
    return {link.orientation.theta, link.orientation.phi, link.link.alpha, link.link.beta};
}

// Resolved search window. The floor keeps the geometric sweep well-posed even for degenerate
// apertures; the ceiling defaults to four times the closed-form prediction.
std::pair<double, double> search_window(const OracleConfig &config) {
    const LinkConfig &link = config.link;
    double r_min = config.search.r_min;
    if (r_min <= 0.0)
        r_min = std::max(link.min_separation(), link.link.wavelength);
    double r_max = config.search.r_max;
    if (r_max <= 0.0) {
        const double estimate = evaluate_family(link.family, link_params(link), link_angles(link)).distance;
        r_max = std::max(4.0 * estimate, 2.0 * r_min);
    }
    if (r_max <= r_min)
        throw std::domain_error("search window is empty (r_max <= r_min)");
    return {r_min, r_max};
}

} // namespace

double phase_spread(const OracleConfig &config, double r) {
    return kernel_spread(make_kernel(config.link, config.mode), r, true);
}

double phase_spread_serial(const OracleConfig &config, double r) {
    return kernel_spread(make_kernel(config.link, config.mode), r, false);
}

OracleResult oracle_rf(const OracleConfig &config) {
    check_search(config.search);
    const Kernel kernel = make_kernel(config.link, config.mode);
    const double tau = config.link.link.wavelength * config.link.link.phase_threshold / (2.0 * pi);
    const auto [r_min, r_max] = search_window(config);

    OracleResult result;
    double above = r_max; // largest sampled r with spread <= tau
    double below = 0.0;   // first sampled r with spread > tau
    double prev_spread = kernel_spread(kernel, r_max, true);
    result.evaluations++;
    if (prev_spread > tau)
        throw std::runtime_error("phase spread exceeds the threshold at r_max = " +
                                 std::to_string(r_max) + " m; enlarge the search ceiling");

    const int steps = config.search.coarse_steps;
    const double ratio = std::pow(r_min / r_max, 1.0 / (steps - 1));
    for (int k = 1; k < steps; k++) {
        const double r = r_max * std::pow(ratio, k);
        const double s = kernel_spread(kernel, r, true);
        result.evaluations++;
        if (s < prev_spread - 1e-18)
            result.non_monotone = true; // spread should grow as the range shrinks
        prev_spread = s;
        if (s > tau) {
            below = r;
            break;
        }
        above = r;
    }

    if (below == 0.0) {
        result.rf = r_min;
        result.clipped = true;
        return result;
    }

    double lo = below, hi = above;
    while (hi - lo > config.search.bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        const double s = kernel_spread(kernel, mid, true);
        result.evaluations++;
        (s > tau ? lo : hi) = mid;
    }
    result.rf = 0.5 * (lo + hi);
    return result;
}

ValidationRecord validate(const OracleConfig &config, Family selector, double rel_tol) {
    if (selector != config.link.family)
        throw std::invalid_argument(std::string("selector ") + family_name(selector) +
                                    " does not match the config family " +
                                    family_name(config.link.family));
    if (rel_tol <= 0.0)
        throw std::domain_error("relative tolerance must be positive");
    ValidationRecord rec;
    rec.closed_form =
        evaluate_family(config.link.family, link_params(config.link), link_angles(config.link)).distance;
    rec.detail = oracle_rf(config);
    rec.oracle = rec.detail.rf;
    if (rec.oracle <= 0.0)
        throw std::runtime_error("oracle returned a nonpositive boundary distance");
    rec.rel_error = std::abs(rec.closed_form - rec.oracle) / rec.oracle;
    rec.within_tol = rec.rel_error <= rel_tol;
    return rec;
}

} // namespace nearfield
