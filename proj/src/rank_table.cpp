#include "orient/rank_table.hpp"

#include <algorithm>
#include <cassert>

namespace orient {

using Float = boost::multiprecision::cpp_bin_float_100;

namespace {

Float to_float(const Rational& r) {
    return Float(r.numerator()) / Float(r.denominator());
}

// Exact ceil(base^k) via big-integer binary powering; only used when the
// float approximation cannot certify which side of an integer the power is.
long long exact_ceil_pow(const Rational& base, long long k) {
    const Rational p = rational_pow(base, k);
    return to_long(ceil_rational(p));
}

}  // namespace

RankTable::RankTable(const Rational& one_plus_lambda)
    : base_(one_plus_lambda), pow_(1) {
    assert(base_ > Rational(1));
    bp_.push_back(1);  // base^0 = 1
}

void RankTable::extend_past(long long d) const {
    const Float fbase = to_float(base_);
    const Float guard("1e-60");
    while (bp_.back() <= d) {
        if (bp_.back() >= kMaxBreakpoint) return;  // saturated; no degree gets here
        pow_ *= fbase;
        if (pow_ >= Float(kMaxBreakpoint)) {
            bp_.push_back(kMaxBreakpoint);
            continue;
        }
        const Float fl = floor(pow_);
        const Float frac = pow_ - fl;
        long long next;
        if (frac < guard || frac > Float(1) - guard) {
            next = exact_ceil_pow(base_, static_cast<long long>(bp_.size()));
            pow_ = to_float(rational_pow(base_, static_cast<long long>(bp_.size())));
        } else {
            next = static_cast<long long>(fl) + 1;  // ceil of a non-integer
        }
        bp_.push_back(next);
    }
}

long long RankTable::rank(long long d) const {
    if (d <= 0) return kNegInfKey;
    extend_past(d);
    // Last index k with bp_[k] <= d.
    auto it = std::upper_bound(bp_.begin(), bp_.end(), d);
    return static_cast<long long>(it - bp_.begin()) - 1;
}

long long RankTable::breakpoint(long long k) const {
    assert(k >= 0);
    while (static_cast<long long>(bp_.size()) <= k) {
        if (bp_.back() >= kMaxBreakpoint)
            bp_.push_back(kMaxBreakpoint);
        else
            extend_past(bp_.back());
    }
    return bp_[static_cast<size_t>(k)];
}

}  // namespace orient
