#pragma once

#include <algorithm>
#include <vector>

#include "zpt/errors.hpp"

namespace zpt {

// Precision-tracked Laurent series over a coefficient ring context R.
// Stored coefficients cover exponents [tail, tail + a.size()); when `exact`
// is set every omitted coefficient is zero, otherwise coefficients at
// exponents >= known_to are unknown and reading one throws
// precision_exhausted.  Canonical form: a.front() nonzero, a.back() nonzero.
template <class R>
struct Laurent {
    using C = typename R::Elem;
    long long tail = 0;
    std::vector<C> a;
    long long known_to = 0;  // meaningful only when !exact
    bool exact = true;
};

template <class R>
class LaurentRing {
public:
    using Base = R;
    using C = typename R::Elem;
    using Elem = Laurent<R>;

    explicit LaurentRing(R base) : r_(std::move(base)) {}

    const R& base() const { return r_; }
    long long characteristic() const { return r_.characteristic(); }
    long long int_modulus() const { return r_.int_modulus(); }

    Elem zero() const { return Elem{}; }
    Elem one() const { return monomial(r_.one(), 0); }
    Elem from_int(long long n) const { return monomial(r_.from_int(n), 0); }

    Elem monomial(const C& c, long long e) const {
        Elem x;
        if (r_.is_zero(c)) return x;
        x.tail = e;
        x.a = {c};
        return x;
    }

    Elem make(long long tail, std::vector<C> coeffs, bool exact,
              long long known_to = 0) const {
        Elem x;
        x.tail = tail;
        x.a = std::move(coeffs);
        x.exact = exact;
        x.known_to = exact ? tail + static_cast<long long>(x.a.size()) : known_to;
        normalize(x);
        return x;
    }

    // True when every coefficient known so far is zero (identically zero for
    // exact series).
    bool is_zero(const Elem& x) const { return x.a.empty(); }

    bool eq(const Elem& x, const Elem& y) const {
        // equality of stored data; both must be normalized
        if (x.a.empty() && y.a.empty()) return true;
        if (x.tail != y.tail || x.a.size() != y.a.size()) return false;
        for (size_t i = 0; i < x.a.size(); ++i)
            if (!r_.eq(x.a[i], y.a[i])) return false;
        return true;
    }

    // Start of the region where coefficients could be nonzero but unknown.
    // +infinity (sentinel) for exact series.
    static constexpr long long kInf = 1LL << 50;
    long long known_bound(const Elem& x) const { return x.exact ? kInf : x.known_to; }
    // First exponent at which x may be nonzero (for precision bookkeeping of
    // products); equals known_to for an inexact zero series.
    long long support_lo(const Elem& x) const {
        if (!x.a.empty()) return x.tail;
        return x.exact ? kInf : x.known_to;
    }

    C coeff(const Elem& x, long long e) const {
        if (e >= known_bound(x))
            throw precision_exhausted("Laurent coefficient beyond known precision");
        if (x.a.empty() || e < x.tail ||
            e >= x.tail + static_cast<long long>(x.a.size()))
            return r_.zero();
        return x.a[e - x.tail];
    }

    long long valuation(const Elem& x) const {
        if (x.a.empty()) {
            if (x.exact) return kInf;
            throw precision_exhausted("valuation of inexact zero series");
        }
        return x.tail;
    }

    Elem add(const Elem& x, const Elem& y) const {
        bool exact = x.exact && y.exact;
        long long kb = std::min(known_bound(x), known_bound(y));
        long long lo = std::min(support_lo(x), support_lo(y));
        Elem z;
        if (lo >= kb && !exact) {  // nothing known nonzero
            z.exact = false;
            z.known_to = kb;
            return z;
        }
        if (x.a.empty() && y.a.empty()) {
            z.exact = exact;
            z.known_to = kb;
            return z;
        }
        long long hi = std::max(x.a.empty() ? lo : x.tail + (long long)x.a.size(),
                                y.a.empty() ? lo : y.tail + (long long)y.a.size());
        if (!exact) hi = std::min(hi, kb);
        z.tail = lo;
        z.exact = exact;
        z.known_to = kb;
        z.a.assign(hi - lo, r_.zero());
        auto fold = [&](const Elem& s) {
            for (size_t i = 0; i < s.a.size(); ++i) {
                long long e = s.tail + static_cast<long long>(i);
                if (e >= lo && e < hi) z.a[e - lo] = r_.add(z.a[e - lo], s.a[i]);
            }
        };
        fold(x);
        fold(y);
        normalize(z);
        return z;
    }

    Elem neg(const Elem& x) const {
        Elem z = x;
        for (auto& c : z.a) c = r_.neg(c);
        return z;
    }

    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

    Elem mul(const Elem& x, const Elem& y) const {
        Elem z;
        bool exact = x.exact && y.exact;
        if ((x.a.empty() && x.exact) || (y.a.empty() && y.exact))
            return z;  // exact zero annihilates
        long long kb = kInf;
        if (!x.exact) kb = std::min(kb, x.known_to + support_lo(y));
        if (!y.exact) kb = std::min(kb, y.known_to + support_lo(x));
        if (x.a.empty() || y.a.empty()) {
            z.exact = false;
            z.known_to = kb;
            return z;
        }
        long long lo = x.tail + y.tail;
        long long hi = x.tail + (long long)x.a.size() + y.tail + (long long)y.a.size() - 1;
        if (!exact) hi = std::min(hi, kb);
        z.tail = lo;
        z.exact = exact;
        z.known_to = kb;
        if (hi <= lo) {
            z.tail = 0;
            z.a.clear();
            return z;
        }
        z.a.assign(hi - lo, r_.zero());
        for (size_t i = 0; i < x.a.size(); ++i) {
            if (r_.is_zero(x.a[i])) continue;
            long long ei = x.tail + static_cast<long long>(i);
            for (size_t j = 0; j < y.a.size(); ++j) {
                long long e = ei + y.tail + static_cast<long long>(j);
                if (e >= hi) break;
                z.a[e - lo] = r_.add(z.a[e - lo], r_.mul(x.a[i], y.a[j]));
            }
        }
        normalize(z);
        return z;
    }

    Elem mul_int(const Elem& x, long long n) const {
        Elem z = x;
        for (auto& c : z.a) c = r_.mul_int(c, n);
        normalize(z);
        return z;
    }

    Elem mul_coeff(const Elem& x, const C& c) const {
        Elem z = x;
        for (auto& cc : z.a) cc = r_.mul(cc, c);
        normalize(z);
        return z;
    }

    Elem pow(const Elem& x, long long e) const {
        ZPT_CHECK(e >= 0, "Laurent pow: negative exponent");
        Elem r = one(), b = x;
        while (e > 0) {
            if (e & 1) r = mul(r, b);
            if (e >>= 1) b = mul(b, b);
        }
        return r;
    }

    // Impose an upper precision bound (marks the series inexact).
    Elem truncate(const Elem& x, long long K) const {
        Elem z = x;
        if (z.exact) {
            z.exact = false;
            z.known_to = K;
        } else {
            z.known_to = std::min(z.known_to, K);
        }
        while (!z.a.empty() &&
               z.tail + static_cast<long long>(z.a.size()) > z.known_to)
            z.a.pop_back();
        normalize(z);
        return z;
    }

    Elem derivative(const Elem& x) const {
        Elem z;
        z.exact = x.exact;
        z.known_to = x.known_to - 1;
        if (x.a.empty()) return z;
        z.tail = x.tail - 1;
        z.a.reserve(x.a.size());
        for (size_t i = 0; i < x.a.size(); ++i) {
            long long e = x.tail + static_cast<long long>(i);
            z.a.push_back(r_.mul_int(x.a[i], e));
        }
        normalize(z);
        return z;
    }

    C residue(const Elem& x) const { return coeff(x, -1); }

    // p-divisibility / exact division (lift coefficient rings only).
    bool divisible(const Elem& x, int i) const {
        for (const auto& c : x.a)
            if (!r_.divisible(c, i)) return false;
        return true;
    }
    Elem div_pow_p(const Elem& x, int i) const {
        Elem z = x;
        for (auto& c : z.a) c = r_.div_pow_p(c, i);
        normalize(z);
        return z;
    }

    // Coefficientwise section/reduction against the base ring's own
    // lift/reduce pair (available when R provides them).
    template <class RC>
    Elem lift(const Laurent<RC>& x) const {
        Elem z;
        z.tail = x.tail;
        z.exact = x.exact;
        z.known_to = x.known_to;
        z.a.reserve(x.a.size());
        for (const auto& c : x.a) z.a.push_back(r_.lift(c));
        return z;
    }
    template <class RC>
    Laurent<RC> reduce_to(const LaurentRing<RC>& target, const Elem& x) const {
        Laurent<RC> z;
        z.tail = x.tail;
        z.exact = x.exact;
        z.known_to = x.known_to;
        z.a.reserve(x.a.size());
        for (const auto& c : x.a) z.a.push_back(r_.reduce(c));
        target.normalize(z);
        return z;
    }

    // x -> x^p via the exponent map (valid in characteristic p only).
    Elem pth_power(const Elem& x) const {
        const long long p = r_.characteristic();
        ZPT_CHECK(p > 0, "pth_power needs characteristic p");
        Elem z;
        z.exact = x.exact;
        z.known_to = p * x.known_to;
        if (x.a.empty()) return z;
        z.tail = p * x.tail;
        z.a.assign(p * (x.a.size() - 1) + 1, r_.zero());
        for (size_t i = 0; i < x.a.size(); ++i) z.a[p * i] = r_.pth_power(x.a[i]);
        normalize(z);
        return z;
    }

    void normalize(Elem& x) const {
        size_t lead = 0;
        while (lead < x.a.size() && r_.is_zero(x.a[lead])) ++lead;
        if (lead > 0) {
            x.a.erase(x.a.begin(), x.a.begin() + lead);
            x.tail += static_cast<long long>(lead);
        }
        while (!x.a.empty() && r_.is_zero(x.a.back())) x.a.pop_back();
        if (x.a.empty()) x.tail = 0;
        if (!x.exact && !x.a.empty())
            ZPT_CHECK(x.tail + (long long)x.a.size() <= x.known_to,
                      "stored coefficients beyond known_to");
    }

private:
    R r_;
};

// Inverse of a unit series (leading coefficient invertible in R, which must
// provide inv()).  For exact input, `want_known_to` bounds the expansion;
// for inexact input the result is additionally capped by the precision rule
// known_to - 2*tail.
template <class R>
Laurent<R> invert_unit(const LaurentRing<R>& L, const Laurent<R>& x,
                       long long want_known_to) {
    if (x.a.empty()) throw not_a_unit("cannot invert (near-)zero series");
    const auto& r = L.base();
    long long e = x.tail;
    long long cap = want_known_to;
    if (!x.exact) cap = std::min(cap, x.known_to - 2 * e);
    long long terms = cap + e;  // relative precision of the unit part
    if (terms <= 0) throw precision_exhausted("invert_unit: no known terms");
    auto lead_inv = r.inv(x.a[0]);  // throws if not invertible
    std::vector<typename R::Elem> out(terms, r.zero());
    // long division: out = 1 / (x * T^{-e} * lead_inv), then scale
    out[0] = r.one();
    for (long long k = 1; k < terms; ++k) {
        auto acc = r.zero();
        for (long long j = 1; j <= k && j < (long long)x.a.size(); ++j)
            acc = r.add(acc, r.mul(r.mul(x.a[j], lead_inv), out[k - j]));
        out[k] = r.neg(acc);
    }
    for (auto& c : out) c = r.mul(c, lead_inv);
    return L.make(-e, std::move(out), false, cap);
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// p-th root of a series all of whose support exponents are divisible by p
// (coefficient ring a finite field).
template <class R>
Laurent<R> pth_root(const LaurentRing<R>& L, const Laurent<R>& x) {
    const auto& r = L.base();
    const long long p = r.characteristic();
    ZPT_CHECK(p > 0, "pth_root needs characteristic p");
    Laurent<R> z;
    z.exact = x.exact;
    if (!x.exact) z.known_to = ceil_div(x.known_to, p);
    if (x.a.empty()) return z;
    if (((x.tail % p) + p) % p != 0)
        throw not_a_pth_power("support exponent not divisible by p");
    z.tail = x.tail / p;
    z.a.assign((x.a.size() - 1) / p + 1, r.zero());
    for (size_t i = 0; i < x.a.size(); ++i) {
        if (r.is_zero(x.a[i])) continue;
        long long e = x.tail + static_cast<long long>(i);
        if (((e % p) + p) % p != 0)
            throw not_a_pth_power("support exponent not divisible by p");
        z.a[e / p - z.tail] = r.inv_frobenius(x.a[i]);
    }
    L.normalize(z);
    return z;
}

}  // namespace zpt
