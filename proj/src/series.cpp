#include "zpt/series.hpp"

namespace zpt {

namespace {

// p^j reduced mod m (early out once the power is divisible).
long long pow_mod_ll(long long p, long long j, long long m) {
    long long r = 1 % m;
    for (long long t = 0; t < j; ++t) {
        r = static_cast<long long>(static_cast<__int128>(r) * p % m);
        if (r == 0) break;
    }
    return r;
}

}  // namespace

UnitFactorization unit_factorization(const FqLaurentRing& L, const FqSeries& y,
                                     long long i_max, long long j_max) {
    const auto& k = L.base();
    const long long p = k.p();
    if (L.is_zero(y)) {
        if (y.exact) throw not_a_unit("cannot factor the zero series");
        throw precision_exhausted("unit factorization of inexact zero series");
    }

    UnitFactorization fac;
    fac.e = L.valuation(y);
    fac.lambda = y.a.front();

    // window target: largest exponent i*p^j the caller needs peeled
    long long target = -1;
    if (i_max >= 0 && j_max >= 0) {
        target = i_max;
        for (long long j = 0; j < j_max; ++j) target *= p;
    }

    // one-unit part, relative precision K
    auto u = L.mul(y, L.monomial(k.inv(fac.lambda), -fac.e));
    long long K = L.known_bound(u);
    if (K == L.kInf) {
        if (target < 0)
            throw bad_input("unit factorization of an exact series needs a window");
        K = target + 1;
    } else if (target >= 0 && target >= K) {
        throw precision_exhausted("series precision below the factor window");
    }
    u = L.truncate(u, K);
    fac.complete_below = K;

    // greedy peel: lowest term 1 + c T^m determines the factor at m = i p^j
    for (;;) {
        long long m = 0;
        FFElem c;
        bool found = false;
        for (size_t s = 1; s < u.a.size(); ++s) {
            if (!k.is_zero(u.a[s])) {
                m = u.tail + static_cast<long long>(s);
                c = u.a[s];
                found = true;
                break;
            }
        }
        if (!found) break;

        long long i = m, j = 0;
        while (i % p == 0) { i /= p; ++j; }
        auto b = k.neg(c);  // u = (1 - b T^m) * higher
        auto a = b;
        for (long long t = 0; t < j; ++t) a = k.inv_frobenius(a);
        fac.factors[{i, j}] = a;

        // divide by (1 - b T^m): multiply by the geometric series, truncated
        std::vector<FFElem> geo((K - 1) / m + 1, k.zero());
        auto bs = k.one();
        for (size_t s = 0; s < geo.size(); ++s) {
            geo[s] = bs;
            bs = k.mul(bs, b);
        }
        FqSeries g;
        g.tail = 0;
        g.a = std::move(geo);
        g.exact = false;
        g.known_to = K;
        // stored stride-m support: re-expand to plain exponents
        FqSeries gg;
        gg.tail = 0;
        gg.exact = false;
        gg.known_to = K;
        gg.a.assign(static_cast<size_t>(std::min<long long>(K, m * (long long)g.a.size() - m + 1)),
                    k.zero());
        for (size_t s = 0; s < g.a.size(); ++s)
            if (m * (long long)s < (long long)gg.a.size()) gg.a[m * s] = g.a[s];
        L.normalize(gg);
        u = L.truncate(L.mul(u, gg), K);
    }
    return fac;
}

FqSeries expand_factorization(const FqLaurentRing& L, const UnitFactorization& fac,
                              long long known_to) {
    const auto& k = L.base();
    const long long p = k.p();
    auto acc = L.one();
    for (const auto& [ij, a] : fac.factors) {
        auto [i, j] = ij;
        auto b = a;
        long long m = i;
        for (long long t = 0; t < j; ++t) {
            b = k.frobenius(b);
            m *= p;
        }
        acc = L.mul(acc, L.sub(L.one(), L.monomial(b, m)));
    }
    acc = L.mul(acc, L.monomial(fac.lambda, fac.e));
    return L.truncate(acc, known_to);
}

static TwoSidedSeries dlog_impl(const ZqRing& zq, const UnitFactorization& fac,
                                long long pole_depth, long long e) {
    const long long p = zq.p();
    const long long pM = zq.pM();
    TwoSidedSeries d;
    d.known_to = pole_depth;

    auto bump = [&](long long exp, const ZqElem& v) {
        auto it = d.coeffs.find(exp);
        if (it == d.coeffs.end())
            d.coeffs.emplace(exp, v);
        else
            it->second = zq.add(it->second, v);
    };

    bump(-1, zq.from_int(e));
    for (const auto& [ij, a] : fac.factors) {
        auto [i, j] = ij;
        if (i - 1 >= pole_depth) continue;
        long long w = pow_mod_ll(p, j, pM);
        if (w == 0) continue;
        auto t = zq.teich(a);
        auto ts = zq.one();
        for (long long s = 1; i * s - 1 < pole_depth; ++s) {
            ts = zq.mul(ts, t);
            bump(i * s - 1, zq.neg(zq.mul_int(zq.mul_int(ts, w), i % pM)));
        }
    }
    for (auto it = d.coeffs.begin(); it != d.coeffs.end();)
        it = zq.is_zero(it->second) ? d.coeffs.erase(it) : std::next(it);
    return d;
}

TwoSidedSeries teich_lift_dlog(const ZqRing& zq, const UnitFactorization& fac,
                               long long pole_depth) {
    return dlog_impl(zq, fac, pole_depth, fac.e);
}

TwoSidedSeries teich_lift_dlog(const ZqRing& zq, const UnitFactorization& fac,
                               long long pole_depth, long long e_override) {
    return dlog_impl(zq, fac, pole_depth, e_override);
}

TwoSidedSeries twosided_add(const ZqRing& zq, const TwoSidedSeries& a,
                            const TwoSidedSeries& b) {
    TwoSidedSeries s;
    s.known_to = std::min(a.known_to, b.known_to);
    s.coeffs = a.coeffs;
    for (const auto& [e, v] : b.coeffs) {
        auto it = s.coeffs.find(e);
        if (it == s.coeffs.end())
            s.coeffs.emplace(e, v);
        else
            it->second = zq.add(it->second, v);
    }
    for (auto it = s.coeffs.begin(); it != s.coeffs.end();)
        it = (it->first >= s.known_to || zq.is_zero(it->second))
                 ? s.coeffs.erase(it)
                 : std::next(it);
    return s;
}

ZqElem twosided_coeff(const ZqRing& zq, const TwoSidedSeries& s, long long e) {
    if (e >= s.known_to)
        throw precision_exhausted("two-sided coefficient beyond known precision");
    auto it = s.coeffs.find(e);
    return it == s.coeffs.end() ? zq.zero() : it->second;
}

}  // namespace zpt
