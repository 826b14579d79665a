#pragma once

#include <map>

#include "zpt/asw.hpp"
#include "zpt/series.hpp"
#include "zpt/zp.hpp"

namespace zpt {

// Multiplicative element of the local field: T^{e} * series, with a p-adic
// exponent e (only its class mod p^n enters the pairing) and a unit series.
// The leading k^* coefficient of the series never contributes.
struct LocalUnit {
    ZpApprox e;
    FqSeries series;
};

// Valuations of the standard-form coefficients: i -> v(c_i), entries with
// v < N only.
struct ValuationProfile {
    long long p = 2;
    int N = 1;
    std::map<long long, int> v;
};

ValuationProfile profile_of(const LocalStandardForm& sf);

// The pairing value in Z/p^n, computed as a residue of x-lift times dlog of
// the Teichmueller lift of y.
ZpApprox symbol_residue(const LocalStandardForm& sf, const LocalUnit& y, int n);

// The same value through the closed double sum over factor divisors.
ZpApprox symbol_sum(const LocalStandardForm& sf, const LocalUnit& y, int n);

// Conductor exponent of the level-n quotient from the valuation profile.
long long conductor_exponent(const ValuationProfile& vp, int n);

// Largest upper-numbering jump of the level-(r+1)-torsion quotient; raw may
// be negative for unramified-at-low-level data, clamped is cut at 0.
struct BreakValue {
    long long raw = 0;
    long long clamped = 0;
};
BreakValue ramification_break(const ValuationProfile& vp, long long r);

// Certify the conductor exponent by pairing against the one-unit filtration
// generators 1 - a T^m, m <= i_bound.  i_bound must reach the predicted
// value (else bound_too_small).
long long conductor_via_symbol(const LocalStandardForm& sf, int n, long long i_bound);

}  // namespace zpt
