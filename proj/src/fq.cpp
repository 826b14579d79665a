#include "zpt/fq.hpp"

#include <algorithm>

namespace zpt {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense little-endian polynomial arithmetic mod p, for validation only.
std::vector<long long> poly_trim(std::vector<long long> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<long long> poly_mod(std::vector<long long> a,
                                const std::vector<long long>& b, long long p) {
    a = poly_trim(std::move(a));
    auto bt = poly_trim(b);
    ZPT_CHECK(!bt.empty(), "poly_mod by zero");
    long long lead = bt.back();
    // inverse of lead mod p
    long long inv = 1;
    for (long long x = 1; x < p; ++x)
        if (lead * x % p == 1) { inv = x; break; }
    while (a.size() >= bt.size()) {
        long long c = a.back() * inv % p;
        size_t off = a.size() - bt.size();
        for (size_t i = 0; i < bt.size(); ++i)
            a[off + i] = ((a[off + i] - c * bt[i]) % p + p) % p;
        a = poly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

bool poly_irreducible_mod_p(const std::vector<long long>& poly, long long p) {
    auto h = poly_trim(poly);
    if (h.size() < 2) return false;
    int deg = static_cast<int>(h.size()) - 1;
    if (deg == 1) return true;
    // Trial division by all monic polynomials of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<long long> g(d + 1, 0);
            g[d] = 1;
            long long m = idx;
            for (int i = 0; i < d; ++i) { g[i] = m % p; m /= p; }
            if (poly_mod(h, g, p).empty()) return false;
        }
    }
    return true;
}

FiniteField::FiniteField(FieldSpec spec) : spec_(std::move(spec)) {
    if (!is_prime(spec_.p)) throw bad_input("FieldSpec: p is not prime");
    if (spec_.f < 1) throw bad_input("FieldSpec: f must be >= 1");
    if (static_cast<int>(spec_.modulus.size()) != spec_.f + 1)
        throw bad_input("FieldSpec: modulus must have length f+1");
    if (spec_.modulus.back() != 1)
        throw bad_input("FieldSpec: modulus must be monic");
    for (auto c : spec_.modulus)
        if (c < 0 || c >= spec_.p)
            throw bad_input("FieldSpec: modulus coefficients out of [0, p)");
    if (!poly_irreducible_mod_p(spec_.modulus, spec_.p))
        throw bad_input("FieldSpec: modulus is reducible over F_p");
    q_ = 1;
    for (int i = 0; i < spec_.f; ++i) q_ *= spec_.p;
}

FieldSpec FiniteField::default_spec(long long p, int f) {
    if (!is_prime(p)) throw bad_input("default_spec: p is not prime");
    if (f == 1) return FieldSpec{p, 1, {0, 1}};
    long long count = 1;
    for (int i = 0; i < f; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<long long> h(f + 1, 0);
        h[f] = 1;
        long long m = idx;
        for (int i = 0; i < f; ++i) { h[i] = m % p; m /= p; }
        if (poly_irreducible_mod_p(h, p)) return FieldSpec{p, f, h};
    }
    throw internal_error("no irreducible polynomial found");
}

FFElem FiniteField::zero() const { return FFElem{std::vector<long long>(spec_.f, 0)}; }

FFElem FiniteField::one() const {
    auto e = zero();
    e.c[0] = 1;
    return e;
}

FFElem FiniteField::gen() const {
    auto e = zero();
    if (spec_.f == 1) e.c[0] = 1; else e.c[1] = 1;
    return e;
}

FFElem FiniteField::from_int(long long n) const {
    auto e = zero();
    e.c[0] = ((n % spec_.p) + spec_.p) % spec_.p;
    return e;
}

FFElem FiniteField::element(long long index) const {
    ZPT_CHECK(index >= 0 && index < q_, "element index out of range");
    auto e = zero();
    for (int i = 0; i < spec_.f; ++i) { e.c[i] = index % spec_.p; index /= spec_.p; }
    return e;
}

long long FiniteField::index(const Elem& a) const {
    check(a);
    long long idx = 0;
    for (int i = spec_.f - 1; i >= 0; --i) idx = idx * spec_.p + a.c[i];
    return idx;
}

void FiniteField::check(const Elem& a) const {
    if (static_cast<int>(a.c.size()) != spec_.f)
        throw spec_mismatch("FFElem has wrong length for this field");
    for (auto v : a.c)
        if (v < 0 || v >= spec_.p)
            throw spec_mismatch("FFElem coefficient out of range");
}

FFElem FiniteField::add(const Elem& a, const Elem& b) const {
    check(a); check(b);
    auto r = a;
    for (int i = 0; i < spec_.f; ++i) r.c[i] = (r.c[i] + b.c[i]) % spec_.p;
    return r;
}

FFElem FiniteField::sub(const Elem& a, const Elem& b) const {
    check(a); check(b);
    auto r = a;
    for (int i = 0; i < spec_.f; ++i)
        r.c[i] = ((r.c[i] - b.c[i]) % spec_.p + spec_.p) % spec_.p;
    return r;
}

FFElem FiniteField::neg(const Elem& a) const { return sub(zero(), a); }

std::vector<long long> FiniteField::mod_mul(const std::vector<long long>& a,
                                            const std::vector<long long>& b) const {
    const long long p = spec_.p;
    const int f = spec_.f;
    std::vector<long long> prod(2 * f - 1, 0);
    for (int i = 0; i < f; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // reduce by the monic modulus
    for (int d = 2 * f - 2; d >= f; --d) {
        long long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < f; ++i)
            prod[d - f + i] = ((prod[d - f + i] - c * spec_.modulus[i]) % p + p) % p;
    }
    prod.resize(f);
    return prod;
}

FFElem FiniteField::mul(const Elem& a, const Elem& b) const {
    check(a); check(b);
    return FFElem{mod_mul(a.c, b.c)};
}

FFElem FiniteField::pow(const Elem& a, long long e) const {
    check(a);
    ZPT_CHECK(e >= 0, "pow: negative exponent");
    Elem r = one(), base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FFElem FiniteField::inv(const Elem& a) const {
    if (is_zero(a)) throw division_by_zero("inverse of 0 in F_q");
    return pow(a, q_ - 2);
}

FFElem FiniteField::frobenius(const Elem& a) const { return pow(a, spec_.p); }

FFElem FiniteField::inv_frobenius(const Elem& a) const {
    Elem r = a;
    for (int i = 0; i < spec_.f - 1; ++i) r = frobenius(r);
    return r;
}

FFElem FiniteField::mul_int(const Elem& a, long long n) const {
    n = ((n % spec_.p) + spec_.p) % spec_.p;
    auto r = a;
    for (int i = 0; i < spec_.f; ++i) r.c[i] = r.c[i] * n % spec_.p;
    return r;
}

long long FiniteField::trace(const Elem& a) const {
    Elem s = zero(), t = a;
    for (int i = 0; i < spec_.f; ++i) {
        s = add(s, t);
        t = frobenius(t);
    }
    for (int i = 1; i < spec_.f; ++i)
        ZPT_CHECK(s.c[i] == 0, "trace not in prime field");
    return s.c[0];
}

bool FiniteField::is_zero(const Elem& a) const {
    check(a);
    return std::all_of(a.c.begin(), a.c.end(), [](long long v) { return v == 0; });
}

bool FiniteField::eq(const Elem& a, const Elem& b) const {
    check(a); check(b);
    return a.c == b.c;
}

FFElem choose_alpha(const FiniteField& k) {
    for (long long i = 0; i < k.q(); ++i) {
        auto e = k.element(i);
        if (k.trace(e) != 0) return e;
    }
    throw internal_error("no trace-nonzero element found");
}

}  // namespace zpt
