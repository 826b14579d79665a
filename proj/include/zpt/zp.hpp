#pragma once

#include <vector>

#include "zpt/errors.hpp"

namespace zpt {

// Element of Z_p mod p^N, stored by value with its precision.  digits()
// exposes the base-p expansion required by the wire format.
struct ZpApprox {
    long long p = 2;
    int N = 1;
    long long value = 0;  // in [0, p^N)

    bool operator==(const ZpApprox&) const = default;

    long long modulus() const {
        long long m = 1;
        for (int i = 0; i < N; ++i) m *= p;
        return m;
    }
    std::vector<long long> digits() const {
        std::vector<long long> d(N);
        long long v = value;
        for (int i = 0; i < N; ++i) { d[i] = v % p; v /= p; }
        return d;
    }
    static ZpApprox from_digits(long long p, const std::vector<long long>& d) {
        ZpApprox r{p, static_cast<int>(d.size()), 0};
        long long pw = 1;
        for (size_t i = 0; i < d.size(); ++i) {
            if (d[i] < 0 || d[i] >= p) throw bad_input("ZpApprox digit out of range");
            r.value += d[i] * pw;
            pw *= p;
        }
        return r;
    }
    static ZpApprox from_value(long long p, int N, long long v) {
        ZpApprox r{p, N, 0};
        long long m = r.modulus();
        r.value = ((v % m) + m) % m;
        return r;
    }
    ZpApprox truncated(int n) const {
        ZpApprox r{p, n, 0};
        r.value = value % r.modulus();
        return r;
    }
    int valuation() const {  // returns N when value == 0
        if (value == 0) return N;
        int v = 0;
        long long x = value;
        while (x % p == 0) { x /= p; ++v; }
        return v;
    }
};

// Ring context for Z/p^M integers; the torsion-free-lift coefficient ring
// used directly in ghost round-trip tests.
class ZpRing {
public:
    using Elem = long long;

    ZpRing(long long p, int M) : p_(p), M_(M) {
        pM_ = 1;
        for (int i = 0; i < M; ++i) pM_ *= p;
    }

    long long p() const { return p_; }
    int precision() const { return M_; }
    long long pM() const { return pM_; }
    long long characteristic() const { return 0; }
    long long int_modulus() const { return pM_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long n) const { return ((n % pM_) + pM_) % pM_; }
    Elem add(Elem a, Elem b) const { return (a + b) % pM_; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % pM_ + pM_) % pM_; }
    Elem neg(Elem a) const { return sub(0, a); }
    Elem mul(Elem a, Elem b) const {
        return static_cast<long long>(static_cast<__int128>(a) * b % pM_);
    }
    Elem mul_int(Elem a, long long n) const { return mul(a, from_int(n)); }
    Elem pow(Elem a, long long e) const {
        Elem r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem pth_power(Elem a) const { return pow(a, p_); }
    bool is_zero(Elem a) const { return a % pM_ == 0; }
    bool eq(Elem a, Elem b) const { return from_int(a) == from_int(b); }
    bool divisible(Elem a, int i) const {
        long long pi = 1;
        for (int j = 0; j < i; ++j) pi *= p_;
        return a % pi == 0;
    }
    Elem div_pow_p(Elem a, int i) const {
        if (!divisible(a, i)) throw not_divisible("ZpRing: exact division by p^i failed");
        long long pi = 1;
        for (int j = 0; j < i; ++j) pi *= p_;
        return a / pi;
    }

private:
    long long p_;
    int M_;
    long long pM_;
};

}  // namespace zpt
