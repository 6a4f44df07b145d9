#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <vector>

#include "orient/rational.hpp"

namespace orient {

// Sentinel key ordered below every real rank / bucket key (d = 0 case).
inline constexpr long long kNegInfKey = std::numeric_limits<long long>::min() / 4;

// Breakpoints saturate here; no degree (<= n*b) ever reaches this value.
inline constexpr long long kMaxBreakpoint = std::numeric_limits<long long>::max() / 4;

// Floor-log base (1+lambda) on positive integers, evaluated against exact
// integer breakpoints ceil((1+lambda)^k). The breakpoint table grows lazily
// with the largest degree seen. Breakpoints are extended with a wide binary
// float carrying ~330 bits of precision; if a power ever lands inside the
// float's guard band around an integer, that single entry is recomputed with
// exact big-integer arithmetic, so the table is bit-exact regardless.
class RankTable {
public:
    explicit RankTable(const Rational& one_plus_lambda);

    // rank(d) = floor(log_{1+lambda} d) for d >= 1; kNegInfKey for d <= 0.
    long long rank(long long d) const;

    // Smallest d with rank(d) >= k, i.e. ceil((1+lambda)^k).
    long long breakpoint(long long k) const;

private:
    void extend_past(long long d) const;

    Rational base_;
    // 2^-320-ish relative error per step; never drifts into the guard band
    // at the scales this library runs at, and the exact fallback covers it if
    // it ever does.
    mutable boost::multiprecision::cpp_bin_float_100 pow_;
    mutable std::vector<long long> bp_;  // bp_[k] = ceil(base^k), bp_[0] = 1
};

}  // namespace orient
