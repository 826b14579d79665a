#include "zpt/cft.hpp"

#include <algorithm>

namespace zpt {

ValuationProfile profile_of(const LocalStandardForm& sf) {
    ValuationProfile vp;
    vp.p = sf.spec.p;
    vp.N = sf.N;
    UnramRing U(sf.spec, sf.N);
    for (const auto& [i, ci] : sf.terms) {
        int v = U.valuation(ci);
        if (v < sf.N) vp.v.emplace(i, v);
    }
    return vp;
}

namespace {

struct PairingData {
    ZqRing zq;
    UnramRing U;
    long long pole_depth;
    UnitFactorization fac;
    long long e_total;  // combined T-exponent mod p^N

    PairingData(const LocalStandardForm& sf, const LocalUnit& y, int n)
        : zq(sf.spec, sf.N), U(sf.spec, sf.N), pole_depth(0) {
        if (n < 1 || n > sf.N)
            throw precision_mismatch("pairing level exceeds form precision");
        if (y.e.p != sf.spec.p || y.e.N != sf.N)
            throw precision_mismatch("unit exponent precision mismatch");
        for (const auto& [i, ci] : sf.terms) pole_depth = std::max(pole_depth, i);
        FqLaurentRing L{FiniteField(sf.spec)};
        fac = unit_factorization(L, y.series, std::max<long long>(pole_depth, 1),
                                 sf.N - 1);
        ZpRing zp(sf.spec.p, sf.N);
        e_total = zp.add(zp.from_int(y.e.value), zp.from_int(fac.e));
    }
};

}  // namespace

ZpApprox symbol_residue(const LocalStandardForm& sf, const LocalUnit& y, int n) {
    PairingData D(sf, y, n);
    const auto& zq = D.zq;
    auto d = teich_lift_dlog(zq, D.fac, D.pole_depth, D.e_total);

    auto acc = zq.mul_int(zq.teich(sf.alpha), sf.c.value);
    acc = zq.mul(acc, twosided_coeff(zq, d, -1));
    for (const auto& [i, ci] : sf.terms)
        acc = zq.add(acc, zq.mul(D.U.to_zq(ci), twosided_coeff(zq, d, i - 1)));
    return ZpApprox::from_value(sf.spec.p, sf.N, zq.trace(acc)).truncated(n);
}

ZpApprox symbol_sum(const LocalStandardForm& sf, const LocalUnit& y, int n) {
    PairingData D(sf, y, n);
    const auto& zq = D.zq;
    const long long p = sf.spec.p;

    long long window = std::max<long long>(D.pole_depth, 1);
    for (int j = 0; j + 1 < sf.N; ++j) window *= p;
    if (D.fac.complete_below <= window)
        throw window_too_small("factor window below the pole depth");

    ZpRing zp(p, sf.N);
    // c * e * Tr(beta)
    long long val =
        zp.mul(zp.mul(zp.from_int(sf.c.value), zp.from_int(D.e_total)),
               zp.from_int(zq.trace(zq.teich(sf.alpha))));
    // minus sum_j p^j Tr( sum_i c_i sum_{l|i} l [a_{lj}]^{i/l} )
    long long pj = 1;
    for (int j = 0; j < sf.N; ++j) {
        auto inner = zq.zero();
        for (const auto& [i, ci] : sf.terms) {
            auto per_i = zq.zero();
            for (long long l = 1; l <= i; ++l) {
                if (i % l != 0) continue;
                auto it = D.fac.factors.find({l, (long long)j});
                if (it == D.fac.factors.end()) continue;
                per_i = zq.add(per_i,
                               zq.mul_int(zq.pow(zq.teich(it->second), i / l), l));
            }
            inner = zq.add(inner, zq.mul(D.U.to_zq(ci), per_i));
        }
        val = zp.sub(val, zp.mul(zp.from_int(pj), zp.from_int(zq.trace(inner))));
        pj = zp.mul(pj, p);
    }
    return ZpApprox::from_value(p, sf.N, val).truncated(n);
}

long long conductor_exponent(const ValuationProfile& vp, int n) {
    if (n < 1) throw bad_input("conductor level must be >= 1");
    long long best = -1;
    for (const auto& [i, v] : vp.v) {
        if (v >= n) continue;
        long long t = i;
        for (int s = 0; s < n - 1 - v; ++s) t *= vp.p;
        best = std::max(best, t);
    }
    return best < 0 ? 0 : best + 1;
}

BreakValue ramification_break(const ValuationProfile& vp, long long r) {
    if (vp.v.empty()) throw empty_profile("no ramified coefficients in profile");
    if (r < 0) throw bad_input("break index must be >= 0");
    long long best = 1LL << 60;
    for (const auto& [i, v] : vp.v) {
        long long t;
        if (r == 0) {
            t = 0;
        } else if (i >= r) {
            // largest d with i >= r * p^d, negated
            t = 0;
            long long rp = r;
            while (rp * vp.p <= i) {
                rp *= vp.p;
                --t;
            }
        } else {
            t = 0;
            long long ip = i;
            while (ip < r) {
                ip *= vp.p;
                ++t;
            }
        }
        best = std::min(best, v + t);
    }
    return BreakValue{best, std::max(best, 0LL)};
}

long long conductor_via_symbol(const LocalStandardForm& sf, int n, long long i_bound) {
    auto predicted = conductor_exponent(profile_of(sf), n);
    if (i_bound + 1 < predicted)
        throw bound_too_small("search bound below the predicted conductor");
    FiniteField k(sf.spec);
    long long max_nonzero = 0;
    for (long long m = 1; m <= i_bound; ++m) {
        for (long long idx = 1; idx < k.q(); ++idx) {
            FqLaurentRing L{k};
            LocalUnit y;
            y.e = ZpApprox::from_value(sf.spec.p, sf.N, 0);
            y.series = L.sub(L.one(), L.monomial(k.element(idx), m));
            if (symbol_residue(sf, y, n).value != 0) {
                max_nonzero = m;
                break;
            }
        }
    }
    return max_nonzero == 0 ? 0 : max_nonzero + 1;
}

}  // namespace zpt
