#pragma once

#include <vector>

#include "zpt/zp.hpp"
#include "zpt/zq.hpp"

namespace zpt {

// Element of Z_q mod p^N in canonical Teichmueller-digit form:
// x = sum_j p^j [digits[j]], digits in F_q, length exactly N.
struct UnramElem {
    std::vector<FFElem> digits;
    bool operator==(const UnramElem&) const = default;
    int precision() const { return static_cast<int>(digits.size()); }
};

// Arithmetic context for Z_q mod p^N on digit representation.  Operations
// route through the polynomial representation (ZqRing); the two round-trip
// exactly, while valuation and Frobenius read directly off the digits.
class UnramRing {
public:
    using Elem = UnramElem;

    UnramRing(const FieldSpec& spec, int N) : zq_(spec, N), N_(N) {}

    const FieldSpec& spec() const { return zq_.spec(); }
    const FiniteField& field() const { return zq_.residue_field(); }
    const ZqRing& zq() const { return zq_; }
    int precision() const { return N_; }
    long long p() const { return zq_.p(); }

    Elem zero() const {
        return Elem{std::vector<FFElem>(N_, field().zero())};
    }
    Elem one() const { return teichmuller(field().one()); }
    Elem teichmuller(const FFElem& a) const {
        auto e = zero();
        e.digits[0] = a;
        return e;
    }
    Elem from_integer(long long m) const { return from_zq(zq_.from_int(m)); }
    Elem from_zp(const ZpApprox& c) const {
        if (c.N != N_ || c.p != p()) throw precision_mismatch("ZpApprox precision");
        return from_zq(zq_.from_int(c.value));
    }

    ZqElem to_zq(const Elem& a) const {
        check(a);
        return zq_.from_digits(a.digits);
    }
    Elem from_zq(const ZqElem& x) const { return Elem{zq_.digits(x)}; }

    Elem add(const Elem& a, const Elem& b) const {
        return from_zq(zq_.add(to_zq(a), to_zq(b)));
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return from_zq(zq_.sub(to_zq(a), to_zq(b)));
    }
    Elem neg(const Elem& a) const { return from_zq(zq_.neg(to_zq(a))); }
    Elem mul(const Elem& a, const Elem& b) const {
        return from_zq(zq_.mul(to_zq(a), to_zq(b)));
    }
    Elem mul_int(const Elem& a, long long n) const {
        return from_zq(zq_.mul_int(to_zq(a), n));
    }

    // Least j with a nonzero digit; N when all digits vanish (the
    // "valuation undefined / >= N" flag of the contract).
    int valuation(const Elem& a) const {
        check(a);
        for (int j = 0; j < N_; ++j)
            if (!field().is_zero(a.digits[j])) return j;
        return N_;
    }
    bool valuation_defined(const Elem& a) const { return valuation(a) < N_; }

    // Frobenius of Z_q: digitwise p-th power.
    Elem frobenius(const Elem& a) const {
        check(a);
        Elem r = a;
        for (auto& d : r.digits) d = field().frobenius(d);
        return r;
    }

    // Tr_{Z_q/Z_p} mod p^N.
    ZpApprox trace(const Elem& a) const {
        return ZpApprox::from_value(p(), N_, zq_.trace(to_zq(a)));
    }

    bool is_zero(const Elem& a) const { return valuation(a) == N_; }
    bool eq(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        return a.digits == b.digits;
    }

    void check(const Elem& a) const {
        if (a.precision() != N_)
            throw precision_mismatch("UnramElem has wrong precision");
        for (const auto& d : a.digits) field().check(d);
    }

private:
    ZqRing zq_;
    int N_;
};

}  // namespace zpt
