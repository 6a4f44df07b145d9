#include "orient/params.hpp"

#include <cmath>

#include "orient/error.hpp"

namespace orient {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::approx_Oalpha: return "approx_Oalpha";
        case Mode::additive_log: return "additive_log";
        case Mode::eps_density: return "eps_density";
    }
    return "?";
}

namespace {

// Ceiling with a hair of downward slack so that inputs intended to be exact
// integers (n chosen as e^k and friends) are not bumped one past the target
// by the irrational log landing epsilon above the integer.
long long ceil_with_slack(double x) {
    return static_cast<long long>(std::ceil(x * (1.0 - 1e-4)));
}

}  // namespace

void Parameters::validate() const {
    if (n_capacity < 2) throw Error(Errc::bad_parameters, "n_capacity must be >= 2");
    if (theta != 0 && theta != 1) throw Error(Errc::bad_parameters, "theta must be 0 or 1");
    if (b < 1) throw Error(Errc::bad_parameters, "b must be a positive integer");
    if (eta <= Rational(0)) throw Error(Errc::bad_parameters, "eta must be positive");
    if (gamma <= Rational(0)) throw Error(Errc::bad_parameters, "gamma must be positive");
    if (lambda != eta / Rational(64 * b))
        throw Error(Errc::bad_parameters, "lambda must equal eta/(64 b)");

    const Rational slack = one_plus_eta_over_b();
    if (rational_pow(one_plus_lambda(), 5) > slack)
        throw Error(Errc::bad_parameters, "(1+lambda)^5 <= 1+eta/b violated");

    if (theta == 0) {
        // The floor(b/2) escape clause must be reachable: 0 < b/eta <= floor(b/2).
        if (slack > Rational(2))
            throw Error(Errc::bad_parameters, "1+eta/b <= 2 violated (theta=0)");
        if (Rational(b) / eta > Rational(b / 2))
            throw Error(Errc::bad_parameters, "b/eta <= floor(b/2) violated (theta=0)");
    }

    if (floor_b2 != b / 2 || floor_b4 != b / 4)
        throw Error(Errc::bad_parameters, "cached floor(b/2)/floor(b/4) out of date");
    if (scan_budget != to_long(ceil_rational(Rational(2) / lambda)))
        throw Error(Errc::bad_parameters, "cached scan budget out of date");
}

bool Parameters::exceeds_flip_threshold(long long d, long long x) const {
    if (d <= floor_b4) return false;
    // A flip must make strict progress: it turns (d, x) into (d-1, x+1), so
    // it is only useful while x + 1 < d. Without this guard two vertices of
    // near-equal degree below 1/lambda flip the same copy back and forth
    // forever. For x >= 1/lambda the multiplicative test below subsumes it.
    if (x + 1 >= d) return false;
    // d > (1+p/q)*x + theta  <=>  (d - theta)*q > (q+p)*x
    const BigInt p = lambda.numerator(), q = lambda.denominator();
    return BigInt(d - theta) * q > (q + p) * BigInt(x);
}

bool Parameters::at_least_lambda_factor(long long d, long long phi) const {
    const BigInt p = lambda.numerator(), q = lambda.denominator();
    return BigInt(d) * q >= (q + p) * BigInt(phi);
}

bool Parameters::stale_threshold(long long phi, long long d) const {
    const BigInt p = lambda.numerator(), q = lambda.denominator();
    return BigInt(phi) * q > (q + p) * BigInt(d);
}

Parameters derive_parameters(Mode mode, int n_capacity, const Rational& epsilon) {
    if (n_capacity < 2) throw Error(Errc::bad_parameters, "n_capacity must be >= 2");
    const double n = static_cast<double>(n_capacity);

    Parameters p;
    p.n_capacity = n_capacity;

    switch (mode) {
        case Mode::approx_Oalpha: {
            p.theta = 0;
            p.eta = Rational(3);
            long long b = std::max<long long>(2, ceil_with_slack(3.0 * std::log(n)));
            if (b % 2) ++b;  // rounded up to even
            p.b = b;
            p.gamma = Rational(1, 4);
            break;
        }
        case Mode::additive_log: {
            p.theta = 1;
            p.b = 1;
            p.eta = Rational(std::max<long long>(1, ceil_with_slack(std::log(n))));
            p.gamma = Rational(1, 4);
            break;
        }
        case Mode::eps_density: {
            if (epsilon <= Rational(0) || epsilon > Rational(1))
                throw Error(Errc::bad_parameters, "epsilon must be in (0,1]");
            p.theta = 0;
            p.epsilon = epsilon;
            p.gamma = epsilon / Rational(2);
            p.eta = Rational(3);
            const double g = to_double(p.gamma);
            const double val = (1.0 / g) * to_double(p.eta) * (std::log(n) / std::log1p(g));
            p.b = ceil_with_slack(val);
            break;
        }
    }

    p.lambda = p.eta / Rational(64 * p.b);
    p.floor_b2 = p.b / 2;
    p.floor_b4 = p.b / 4;
    p.scan_budget = to_long(ceil_rational(Rational(2) / p.lambda));
    p.validate();
    return p;
}

}  // namespace orient
