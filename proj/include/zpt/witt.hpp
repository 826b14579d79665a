#pragma once

#include <vector>

#include "zpt/fq.hpp"
#include "zpt/laurent.hpp"
#include "zpt/zp.hpp"
#include "zpt/zq.hpp"

namespace zpt {

// Generic ring power via repeated squaring.
template <class R>
typename R::Elem ring_pow(const R& r, typename R::Elem a, long long e) {
    ZPT_CHECK(e >= 0, "ring_pow: negative exponent");
    auto acc = r.one();
    while (e > 0) {
        if (e & 1) acc = r.mul(acc, a);
        if (e >>= 1) a = r.mul(a, a);
    }
    return acc;
}

// Ghost map over a p-torsion-tracked ring: g_i = sum_{j<=i} p^j w_j^{p^{i-j}}.
template <class L>
std::vector<typename L::Elem> witt_ghost(const L& l,
                                         const std::vector<typename L::Elem>& w,
                                         long long p) {
    const int n = static_cast<int>(w.size());
    std::vector<typename L::Elem> g;
    g.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto acc = l.zero();
        long long pj = 1, pe = 1;
        for (int k = 0; k < i; ++k) pe *= p;  // p^{i-j} starting at j=0
        for (int j = 0; j <= i; ++j) {
            acc = l.add(acc, l.mul_int(ring_pow(l, w[j], pe), pj));
            pj *= p;
            pe /= p;
        }
        g.push_back(std::move(acc));
    }
    return g;
}

// Inverse of the ghost map.  Every division by p^i must be exact; a failed
// division throws not_divisible (the ghost vector is not in the image).
template <class L>
std::vector<typename L::Elem> witt_from_ghost(
    const L& l, const std::vector<typename L::Elem>& g, long long p) {
    const int n = static_cast<int>(g.size());
    std::vector<typename L::Elem> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto acc = g[i];
        long long pj = 1, pe = 1;
        for (int k = 0; k < i; ++k) pe *= p;
        for (int j = 0; j < i; ++j) {
            acc = l.sub(acc, l.mul_int(ring_pow(l, w[j], pe), pj));
            pj *= p;
            pe /= p;
        }
        w.push_back(l.div_pow_p(acc, i));
    }
    return w;
}

// Elementwise lift/reduce hooks between a characteristic-p coefficient ring
// and its torsion-tracked lift ring.  New coefficient rings opt in by
// overloading these.
inline ZqElem lift_elem(const FiniteField&, const ZqRing& l, const FFElem& a) {
    return l.lift(a);
}
inline FFElem reduce_elem(const FiniteField&, const ZqRing& l, const ZqElem& a) {
    return l.reduce(a);
}
inline long long lift_elem(const ZpRing&, const ZpRing&, long long a) { return a; }
inline long long reduce_elem(const ZpRing&, const ZpRing&, long long a) { return a; }

template <class CR, class LR>
Laurent<LR> lift_elem(const LaurentRing<CR>&, const LaurentRing<LR>& l,
                      const Laurent<CR>& x) {
    return l.lift(x);
}
template <class CR, class LR>
Laurent<CR> reduce_elem(const LaurentRing<CR>& c, const LaurentRing<LR>& l,
                        const Laurent<LR>& x) {
    return l.reduce_to(c, x);
}

// Truncated p-typical Witt vectors W_N(C).  Production arithmetic lifts
// coordinates into L (arbitrary section), runs the ghost / from-ghost path
// there, and reduces back; for torsion coefficient rings C == L and the
// ghost path applies directly.
template <class C, class L>
class WittRing {
public:
    using CE = typename C::Elem;
    using Vec = std::vector<CE>;

    WittRing(C c, L l, int n, long long p)
        : c_(std::move(c)), l_(std::move(l)), n_(n), p_(p) {
        ZPT_CHECK(n >= 1, "Witt length must be >= 1");
    }

    const C& coeff_ring() const { return c_; }
    const L& lift_ring() const { return l_; }
    int length() const { return n_; }
    long long p() const { return p_; }

    Vec zero() const { return Vec(n_, c_.zero()); }
    Vec one() const {
        auto v = zero();
        v[0] = c_.one();
        return v;
    }
    Vec teich(const CE& a) const {
        auto v = zero();
        v[0] = a;
        return v;
    }
    Vec from_int(long long m) const { return scalar_mul(one(), m); }

    void check(const Vec& a) const {
        if (static_cast<int>(a.size()) != n_)
            throw length_mismatch("WittVec length mismatch");
    }

    std::vector<typename L::Elem> lift(const Vec& a) const {
        check(a);
        std::vector<typename L::Elem> la;
        la.reserve(n_);
        for (const auto& x : a) la.push_back(lift_elem(c_, l_, x));
        return la;
    }
    Vec reduce(const std::vector<typename L::Elem>& la) const {
        Vec a;
        a.reserve(la.size());
        for (const auto& x : la) a.push_back(reduce_elem(c_, l_, x));
        return a;
    }

    std::vector<typename L::Elem> ghost_of(const Vec& a) const {
        return witt_ghost(l_, lift(a), p_);
    }

    Vec add(const Vec& a, const Vec& b) const {
        auto ga = ghost_of(a), gb = ghost_of(b);
        for (int i = 0; i < n_; ++i) ga[i] = l_.add(ga[i], gb[i]);
        return reduce(witt_from_ghost(l_, ga, p_));
    }
    Vec mul(const Vec& a, const Vec& b) const {
        auto ga = ghost_of(a), gb = ghost_of(b);
        for (int i = 0; i < n_; ++i) ga[i] = l_.mul(ga[i], gb[i]);
        return reduce(witt_from_ghost(l_, ga, p_));
    }
    Vec neg(const Vec& a) const {
        auto ga = ghost_of(a);
        for (auto& g : ga) g = l_.neg(g);
        return reduce(witt_from_ghost(l_, ga, p_));
    }
    Vec sub(const Vec& a, const Vec& b) const { return add(a, neg(b)); }

    Vec scalar_mul(Vec a, long long m) const {
        check(a);
        long long pn = 1;
        for (int i = 0; i < n_; ++i) pn *= p_;
        m = ((m % pn) + pn) % pn;
        Vec acc = zero();
        while (m > 0) {
            if (m & 1) acc = add(acc, a);
            if (m >>= 1) a = add(a, a);
        }
        return acc;
    }

    // Verschiebung: shift and truncate.
    Vec V(const Vec& a) const {
        check(a);
        Vec v = zero();
        for (int i = 1; i < n_; ++i) v[i] = a[i - 1];
        return v;
    }

    // Frobenius (coordinatewise p-th power; characteristic p only).
    Vec F(const Vec& a) const {
        check(a);
        if (c_.characteristic() != p_)
            throw wrong_characteristic(
                "coordinatewise Frobenius needs characteristic-p coefficients");
        Vec v;
        v.reserve(n_);
        for (const auto& x : a) v.push_back(c_.pth_power(x));
        return v;
    }

    // Artin-Schreier-Witt operator F - id.
    Vec wp(const Vec& a) const { return sub(F(a), a); }

    bool is_zero(const Vec& a) const {
        check(a);
        for (const auto& x : a)
            if (!c_.is_zero(x)) return false;
        return true;
    }
    bool eq(const Vec& a, const Vec& b) const {
        check(a);
        check(b);
        for (int i = 0; i < n_; ++i)
            if (!c_.eq(a[i], b[i])) return false;
        return true;
    }

private:
    C c_;
    L l_;
    int n_;
    long long p_;
};

// W_N(F_q) with its Z_q/p^N lift.
using WittFq = WittRing<FiniteField, ZqRing>;
inline WittFq make_witt_fq(const FieldSpec& spec, int N) {
    return WittFq(FiniteField(spec), ZqRing(spec, N), N, spec.p);
}

// W_N(k((T))) with Laurent/Z_q lift.
using FqLaurentRing = LaurentRing<FiniteField>;
using ZqLaurentRing = LaurentRing<ZqRing>;
using WittLaurent = WittRing<FqLaurentRing, ZqLaurentRing>;
inline WittLaurent make_witt_laurent(const FieldSpec& spec, int N) {
    return WittLaurent(FqLaurentRing(FiniteField(spec)),
                       ZqLaurentRing(ZqRing(spec, N)), N, spec.p);
}

// W_N(Z/p^M) (torsion coefficients; ghost path direct).
using WittZp = WittRing<ZpRing, ZpRing>;
inline WittZp make_witt_zp(long long p, int N, int M) {
    return WittZp(ZpRing(p, M), ZpRing(p, M), N, p);
}

// Teichmueller representative of a in F_p inside Z/p^M.
inline long long teichmuller_zp(long long p, int M, long long a) {
    ZpRing zp(p, M);
    auto x = zp.from_int(a);
    for (int i = 1; i < M; ++i) x = zp.pow(x, p);
    return x;
}

// Value in Z/p^N of a Witt vector with prime-field coordinates
// (W_N(F_p) = Z/p^N; coordinates (a_0,a_1,...) |-> sum p^j [a_j]).
template <class C>
ZpApprox witt_prime_value(const C& c, const std::vector<typename C::Elem>& a) {
    const long long p = c.characteristic();
    const int N = static_cast<int>(a.size());
    ZpRing zp(p, N);
    long long acc = 0, pj = 1;
    for (int j = 0; j < N; ++j) {
        long long digit = 0;
        // coordinate must lie in the prime field
        for (long long d = 0; d < p; ++d)
            if (c.eq(a[j], c.from_int(d))) { digit = d; goto found; }
        throw not_in_base_field("Witt coordinate not in prime field");
    found:
        acc = zp.add(acc, zp.mul(zp.from_int(pj), teichmuller_zp(p, N, digit)));
        pj = (j + 1 < N) ? pj * p : pj;
    }
    return ZpApprox::from_value(p, N, acc);
}

// Trace of a Witt vector over F_q down to W_N(F_p) = Z/p^N:
// sum of the [k:F_p] Frobenius twists, asserted to land in the prime field.
ZpApprox trace_witt_to_zp(const WittFq& W, const std::vector<FFElem>& a);

}  // namespace zpt
