#include "zpt/zq.hpp"

#include <algorithm>

namespace zpt {

ZqRing::ZqRing(const FieldSpec& spec, int M) : spec_(spec), k_(spec), M_(M) {
    if (M < 1) throw bad_input("ZqRing: precision must be >= 1");
    pM_ = 1;
    for (int i = 0; i < M; ++i) {
        ZPT_CHECK(pM_ < (1LL << 60) / spec_.p, "p^M overflows");
        pM_ *= spec_.p;
    }
}

long long ZqRing::mod(long long v) const { return ((v % pM_) + pM_) % pM_; }

long long ZqRing::mulmod(long long a, long long b) const {
    return static_cast<long long>(static_cast<__int128>(a) * b % pM_);
}

ZqElem ZqRing::zero() const { return ZqElem{std::vector<long long>(spec_.f, 0)}; }

ZqElem ZqRing::one() const {
    auto e = zero();
    e.c[0] = 1;
    return e;
}

ZqElem ZqRing::from_int(long long n) const {
    auto e = zero();
    e.c[0] = mod(n);
    return e;
}

void ZqRing::check(const Elem& a) const {
    if (static_cast<int>(a.c.size()) != spec_.f)
        throw spec_mismatch("ZqElem has wrong length");
    for (auto v : a.c)
        if (v < 0 || v >= pM_) throw spec_mismatch("ZqElem coefficient out of range");
}

ZqElem ZqRing::add(const Elem& a, const Elem& b) const {
    check(a); check(b);
    auto r = a;
    for (int i = 0; i < spec_.f; ++i) r.c[i] = mod(r.c[i] + b.c[i]);
    return r;
}

ZqElem ZqRing::sub(const Elem& a, const Elem& b) const {
    check(a); check(b);
    auto r = a;
    for (int i = 0; i < spec_.f; ++i) r.c[i] = mod(r.c[i] - b.c[i]);
    return r;
}

ZqElem ZqRing::neg(const Elem& a) const { return sub(zero(), a); }

ZqElem ZqRing::mul(const Elem& a, const Elem& b) const {
    check(a); check(b);
    const int f = spec_.f;
    std::vector<long long> prod(2 * f - 1, 0);
    for (int i = 0; i < f; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < f; ++j)
            prod[i + j] = mod(prod[i + j] + mulmod(a.c[i], b.c[j]));
    }
    for (int d = 2 * f - 2; d >= f; --d) {
        long long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < f; ++i)
            prod[d - f + i] = mod(prod[d - f + i] - mulmod(c, spec_.modulus[i]));
    }
    prod.resize(f);
    return ZqElem{std::move(prod)};
}

ZqElem ZqRing::mul_int(const Elem& a, long long n) const {
    check(a);
    n = mod(n);
    auto r = a;
    for (int i = 0; i < spec_.f; ++i) r.c[i] = mulmod(r.c[i], n);
    return r;
}

ZqElem ZqRing::pow(const Elem& a, long long e) const {
    ZPT_CHECK(e >= 0, "pow: negative exponent");
    Elem r = one(), base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool ZqRing::is_zero(const Elem& a) const {
    check(a);
    return std::all_of(a.c.begin(), a.c.end(), [](long long v) { return v == 0; });
}

bool ZqRing::eq(const Elem& a, const Elem& b) const {
    check(a); check(b);
    return a.c == b.c;
}

bool ZqRing::divisible(const Elem& a, int i) const {
    check(a);
    long long pi = 1;
    for (int j = 0; j < i; ++j) pi *= spec_.p;
    return std::all_of(a.c.begin(), a.c.end(), [&](long long v) { return v % pi == 0; });
}

ZqElem ZqRing::div_pow_p(const Elem& a, int i) const {
    if (!divisible(a, i)) throw not_divisible("ZqRing: exact division by p^i failed");
    long long pi = 1;
    for (int j = 0; j < i; ++j) pi *= spec_.p;
    auto r = a;
    for (auto& v : r.c) v /= pi;
    return r;
}

ZqElem ZqRing::lift(const FFElem& a) const {
    k_.check(a);
    return ZqElem{a.c};
}

FFElem ZqRing::reduce(const Elem& a) const {
    check(a);
    FFElem r;
    r.c.resize(spec_.f);
    for (int i = 0; i < spec_.f; ++i) r.c[i] = a.c[i] % spec_.p;
    return r;
}

ZqElem ZqRing::teich(const FFElem& a) const {
    Elem x = lift(a);
    // x^q fixes the residue and gains one digit of agreement per iteration.
    for (int i = 0; i < M_; ++i) x = pow(x, k_.q());
    return x;
}

std::vector<FFElem> ZqRing::digits(const Elem& a) const {
    check(a);
    std::vector<FFElem> d;
    Elem rem = a;
    for (int j = 0; j < M_; ++j) {
        FFElem dj = reduce(rem);
        d.push_back(dj);
        rem = sub(rem, teich(dj));
        ZPT_CHECK(divisible(rem, 1), "digit peeling: remainder not divisible by p");
        rem = div_pow_p(rem, 1);
        // rem is now only meaningful mod p^{M-j-1}; mask to keep reps canonical
        long long mask = pM_;
        for (int t = 0; t <= j; ++t) mask /= spec_.p;
        for (auto& v : rem.c) v %= mask;
    }
    return d;
}

ZqElem ZqRing::from_digits(const std::vector<FFElem>& d) const {
    ZPT_CHECK(static_cast<int>(d.size()) <= M_, "too many digits");
    Elem acc = zero();
    long long pj = 1;
    for (size_t j = 0; j < d.size(); ++j) {
        acc = add(acc, mul_int(teich(d[j]), pj));
        if (j + 1 < d.size()) pj *= spec_.p;
    }
    return acc;
}

ZqElem ZqRing::frobenius(const Elem& a) const {
    auto d = digits(a);
    for (auto& dj : d) dj = k_.frobenius(dj);
    return from_digits(d);
}

long long ZqRing::trace(const Elem& a) const {
    Elem s = zero(), t = a;
    for (int i = 0; i < spec_.f; ++i) {
        s = add(s, t);
        t = frobenius(t);
    }
    return to_scalar(s);
}

int ZqRing::valuation(const Elem& a) const {
    check(a);
    for (int v = 0; v < M_; ++v)
        if (!divisible(a, v + 1)) return v;
    return M_;
}

long long ZqRing::to_scalar(const Elem& a) const {
    check(a);
    for (int i = 1; i < spec_.f; ++i)
        if (a.c[i] != 0) throw not_in_base_field("ZqElem not in Z_p");
    return a.c[0];
}

}  // namespace zpt
