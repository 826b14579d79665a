#include "zpt/universal.hpp"

namespace zpt {

MPoly mp_add(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b) {
        auto& v = r[m];
        v += c;
        if (v == 0) r.erase(m);
    }
    return r;
}

MPoly mp_scale(const MPoly& a, const bigint& c) {
    MPoly r;
    if (c == 0) return r;
    for (const auto& [m, v] : a) r[m] = v * c;
    return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b) { return mp_add(a, mp_scale(b, -1)); }

MPoly mp_mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            std::vector<int> m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            auto& v = r[m];
            v += ca * cb;
            if (v == 0) r.erase(m);
        }
    }
    return r;
}

MPoly mp_pow(const MPoly& a, long long e) {
    ZPT_CHECK(e >= 0, "mp_pow: negative exponent");
    ZPT_CHECK(!a.empty() || e > 0, "mp_pow: 0^0");
    MPoly r, base = a;
    // identity: need the arity; infer from a (a nonempty for our uses)
    ZPT_CHECK(!a.empty(), "mp_pow of zero polynomial");
    r[std::vector<int>(a.begin()->first.size(), 0)] = 1;
    while (e > 0) {
        if (e & 1) r = mp_mul(r, base);
        if (e >>= 1) base = mp_mul(base, base);
    }
    return r;
}

MPoly mp_div_exact(const MPoly& a, const bigint& c) {
    MPoly r;
    for (const auto& [m, v] : a) {
        if (v % c != 0) throw not_divisible("universal polynomial division not exact");
        r[m] = v / c;
    }
    return r;
}

bool mp_eq(const MPoly& a, const MPoly& b) { return mp_sub(a, b).empty(); }

namespace {

MPoly mono(int nvars, int var, int exp) {
    std::vector<int> m(nvars, 0);
    m[var] = exp;
    MPoly r;
    r[m] = 1;
    return r;
}

// ghost_i in one block of variables (offset 0 for x, n for y)
MPoly ghost_poly(long long p, int n, int i, int offset) {
    MPoly g;
    bigint pj = 1;
    long long pe = 1;
    for (int k = 0; k < i; ++k) pe *= p;
    for (int j = 0; j <= i; ++j) {
        g = mp_add(g, mp_scale(mono(2 * n, offset + j, static_cast<int>(pe)), pj));
        pj *= p;
        pe /= p;
    }
    return g;
}

}  // namespace

UniversalPolys::UniversalPolys(long long p, int n) : p_(p), n_(n) {
    const bool in_window = (p <= 3 && n <= 3) || (p == 5 && n <= 2) || n <= 1;
    if (!in_window)
        throw oracle_too_large("universal polynomials limited to n<=3 for p<=3, n<=2 for p=5");
    std::vector<MPoly> gx(n), gy(n);
    for (int i = 0; i < n; ++i) {
        gx[i] = ghost_poly(p, n, i, 0);
        gy[i] = ghost_poly(p, n, i, n);
    }
    auto solve = [&](const std::vector<MPoly>& target) {
        std::vector<MPoly> w;
        for (int i = 0; i < n; ++i) {
            MPoly acc = target[i];
            bigint pj = 1;
            long long pe = 1;
            for (int k = 0; k < i; ++k) pe *= p;
            for (int j = 0; j < i; ++j) {
                acc = mp_sub(acc, mp_scale(mp_pow(w[j], pe), pj));
                pj *= p;
                pe /= p;
            }
            bigint pi = 1;
            for (int k = 0; k < i; ++k) pi *= p;
            w.push_back(mp_div_exact(acc, pi));
        }
        return w;
    };
    std::vector<MPoly> tS(n), tP(n), tN(n);
    for (int i = 0; i < n; ++i) {
        tS[i] = mp_add(gx[i], gy[i]);
        tP[i] = mp_mul(gx[i], gy[i]);
        tN[i] = mp_scale(gx[i], -1);
    }
    S_ = solve(tS);
    P_ = solve(tP);
    N_ = solve(tN);
    // Verify the ghost identity at the top coordinate as a construction check.
    auto verify = [&](const std::vector<MPoly>& w, const MPoly& target) {
        MPoly acc;
        bigint pj = 1;
        long long pe = 1;
        for (int k = 0; k < n - 1; ++k) pe *= p;
        for (int j = 0; j < n; ++j) {
            acc = mp_add(acc, mp_scale(mp_pow(w[j], pe), pj));
            pj *= p;
            pe /= p;
        }
        ZPT_CHECK(mp_eq(acc, target), "ghost identity verification failed");
    };
    verify(S_, tS[n - 1]);
    verify(P_, tP[n - 1]);
    verify(N_, tN[n - 1]);
}

}  // namespace zpt
