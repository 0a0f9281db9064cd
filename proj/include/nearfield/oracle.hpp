// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links
//
// Brute-force geometric oracle. Enumerates element pairs, computes exact effective distances
// (no series truncation anywhere), and locates the smallest range where the phase-spread
// criterion holds for every larger range. Used as ground truth for the closed forms.

#pragma once

#include "nearfield/closed_form.hpp"
#include "nearfield/geometry.hpp"

namespace nearfield {

enum class EnumerationMode {
    full, // every element pair
    hull  // aperture boundary only (endpoints/perimeter + center); falls back to full
          // enumeration when an array lacks a center element (even per-dimension count),
          // where the restriction provably misses the spread minimum
};

struct SearchSettings {
    double r_min = 0.0;     // search floor [m]; 0 = max(min separation, wavelength)
    double r_max = 0.0;     // search ceiling [m]; 0 = 4x the closed-form prediction
    int coarse_steps = 48;  // geometrically spaced samples of the descending sweep
    double bisect_tol = 1e-4; // bracket width at which bisection stops [m]
};

struct OracleConfig {
    LinkConfig link;
    EnumerationMode mode = EnumerationMode::hull;
    SearchSettings search;
};

struct OracleResult {
    double rf = 0.0;           // boundary distance [m]
    bool clipped = false;      // spread never exceeded the threshold above r_min (boundary <= r_min;
                               // includes degenerate configs whose spread is identically zero)
    bool non_monotone = false; // spread decreased at some step of the descending sweep
    long evaluations = 0;      // number of spread evaluations spent
};

// Phase spread at range r: max - min of the effective distance over the enumerated element pairs.
// OpenMP-parallel; bit-identical across worker counts (max/min reductions are order-independent).
double phase_spread(const OracleConfig &config, double r);

// Single-threaded reference implementation of the same enumeration, kept for equivalence tests.
double phase_spread_serial(const OracleConfig &config, double r);

// Descending coarse sweep from r_max to find the last crossing of the spread threshold
// lambda * varphi / (2 pi), then bisection on that bracket. Throws std::runtime_error when the
// spread still exceeds the threshold at r_max (bracket failure).
OracleResult oracle_rf(const OracleConfig &config);

struct ValidationRecord {
    double closed_form = 0.0; // closed-form boundary [m]
    double oracle = 0.0;      // oracle boundary [m]
    double rel_error = 0.0;   // |closed - oracle| / oracle
    bool within_tol = false;
    OracleResult detail;
};

// Runs the oracle and compares against the family's closed form. The selector must name the
// config's family; a mismatch throws std::invalid_argument.
ValidationRecord validate(const OracleConfig &config, Family selector, double rel_tol = 0.02);

// Worker cap honored by all parallel kernels: NEARFIELD_THREADS (0 or unset = all cores).
int worker_count();

} // namespace nearfield
