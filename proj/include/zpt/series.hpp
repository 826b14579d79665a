#pragma once

#include <map>
#include <utility>

#include "zpt/laurent.hpp"
#include "zpt/unram.hpp"
#include "zpt/witt.hpp"
#include "zpt/zp.hpp"

namespace zpt {

using FqSeries = Laurent<FiniteField>;
using ZqSeries = Laurent<ZqRing>;

// Canonical factorization y = lambda * T^e * prod (1 - a_{ij} T^i)^{p^j},
// i coprime to p.  lambda (the k^* leading unit) is recorded but excluded
// from the factorization's symbol semantics.  Extraction is complete for
// every (i, j) with i * p^j <= complete_below.
struct UnitFactorization {
    long long e = 0;
    FFElem lambda;
    std::map<std::pair<long long, long long>, FFElem> factors;  // (i,j) -> a_ij
    long long complete_below = 0;
};

// Greedy extraction; in characteristic p each (1 - aT^i)^{p^j} is the exact
// binomial 1 - a^{p^j} T^{i p^j}, so one division per support exponent.
// Factors with j > j_max (or i > i_max) are still divided out but not
// recorded unless they fit the window; pass -1 for an unbounded window.
UnitFactorization unit_factorization(const FqLaurentRing& L, const FqSeries& y,
                                     long long i_max = -1, long long j_max = -1);

// Re-expand lambda * T^e * prod (1 - a_ij T^i)^{p^j} to the given precision.
FqSeries expand_factorization(const FqLaurentRing& L, const UnitFactorization& fac,
                              long long known_to);

// Two-sided series over Z_q mod p^N: finitely many stored coefficients,
// valid for exponents < known_to.
struct TwoSidedSeries {
    std::map<long long, ZqElem> coeffs;
    long long known_to = 0;
};

// dlog of the Teichmueller lift T^e * prod (1 - [a_ij] T^i)^{p^j}:
// e/T - sum_{i,j} sum_{s>=1} p^j i [a_ij]^s T^{is-1}, with coefficients
// computed exactly mod p^N for exponents -1 .. pole_depth-1.
// `e_override` substitutes a Z_p exponent for the factorization's integer e.
TwoSidedSeries teich_lift_dlog(const ZqRing& zq, const UnitFactorization& fac,
                               long long pole_depth);
TwoSidedSeries teich_lift_dlog(const ZqRing& zq, const UnitFactorization& fac,
                               long long pole_depth, long long e_override);

// Pointwise sum (for the dlog additivity property tests).
TwoSidedSeries twosided_add(const ZqRing& zq, const TwoSidedSeries& a,
                            const TwoSidedSeries& b);

ZqElem twosided_coeff(const ZqRing& zq, const TwoSidedSeries& s, long long e);

}  // namespace zpt
