#pragma once

#include <string>

#include "orient/rational.hpp"

namespace orient {

// The parameter modes the harness knows how to derive.
enum class Mode { approx_Oalpha, additive_log, eps_density };

std::string to_string(Mode m);

// Parameter set shared by all engines.
//
// lambda is always eta / (64 b), kept exact. gamma is the slack used by the
// level-set analysis (derived from epsilon in eps_density mode, 1/4 default
// otherwise). All validity checks are exact-rational.
struct Parameters {
    int theta = 0;                 // 0 or 1 (additive slack toggle)
    Rational eta{1};               // positive
    long long b = 1;               // copies per undirected edge
    Rational lambda{0};            // eta / (64 b)
    Rational gamma{1, 4};          // level-set slack
    Rational epsilon{1};           // user-facing accuracy (density mode)
    int n_capacity = 2;            // fixed vertex universe size

    // Cached integer cut-offs used in flip conditions.
    long long floor_b2 = 0;        // floor(b/2)
    long long floor_b4 = 0;        // floor(b/4)
    long long scan_budget = 1;     // ceil(2/lambda), round-robin width

    // Throws Error(bad_parameters) when the invariants do not hold.
    void validate() const;

    // d > max{(1+lambda)*x + theta, floor(b/4)} and x+1 < d (strict progress
    // of a flip), evaluated exactly.
    bool exceeds_flip_threshold(long long d, long long x) const;
    // d >= (1+lambda)*phi, evaluated exactly (amortized trigger).
    bool at_least_lambda_factor(long long d, long long phi) const;
    // phi > (1+lambda)*d (stale-threshold test).
    bool stale_threshold(long long phi, long long d) const;

    Rational one_plus_eta_over_b() const { return Rational(1) + eta / Rational(b); }
    Rational one_plus_lambda() const { return Rational(1) + lambda; }
};

// Derives a full parameter set for one of the supported modes.
// epsilon is only consulted for eps_density.
Parameters derive_parameters(Mode mode, int n_capacity, const Rational& epsilon = Rational(1, 2));

}  // namespace orient
