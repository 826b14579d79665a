#pragma once

#include <vector>

#include "zpt/fq.hpp"

namespace zpt {

// Element of Z_q mod p^M in polynomial representation: coordinates w.r.t.
// the power basis of the lifted modulus, entries in [0, p^M).
struct ZqElem {
    std::vector<long long> c;
    bool operator==(const ZqElem&) const = default;
};

// The unramified coefficient ring Z_q / p^M = (Z/p^M)[t]/(h), h the lift of
// the F_q modulus.  Serves as the torsion-tracked lift ring for ghost-map
// Witt arithmetic over F_q, and as the workhorse representation behind
// UnramElem.  Exact divisions by powers of p are explicit and asserted.
class ZqRing {
public:
    using Elem = ZqElem;

    ZqRing(const FieldSpec& spec, int M);

    const FieldSpec& spec() const { return spec_; }
    long long p() const { return spec_.p; }
    int f() const { return spec_.f; }
    int precision() const { return M_; }
    long long pM() const { return pM_; }
    long long characteristic() const { return 0; }  // lift ring, not char p
    long long int_modulus() const { return pM_; }

    Elem zero() const;
    Elem one() const;
    Elem from_int(long long n) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_int(const Elem& a, long long n) const;
    Elem pow(const Elem& a, long long e) const;

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;

    // p-divisibility on canonical representatives.
    bool divisible(const Elem& a, int i) const;
    Elem div_pow_p(const Elem& a, int i) const;  // throws not_divisible

    // Section / reduction between F_q and this ring.
    Elem lift(const FFElem& a) const;
    FFElem reduce(const Elem& a) const;

    // Teichmueller lift: the unique multiplicative section, computed by
    // iterating x -> x^q until stable mod p^M.
    Elem teich(const FFElem& a) const;

    // Teichmueller digit expansion: x = sum_j p^j [d_j], d_j in F_q.
    std::vector<FFElem> digits(const Elem& a) const;
    Elem from_digits(const std::vector<FFElem>& d) const;  // d.size() <= M

    // Witt/ring Frobenius of Z_q (lift of x -> x^p on the residue field),
    // computed on Teichmueller digits.
    Elem frobenius(const Elem& a) const;

    // Tr_{Z_q/Z_p} mod p^M.  Result asserted rational.
    long long trace(const Elem& a) const;

    // p-adic valuation; returns M_ when a == 0.
    int valuation(const Elem& a) const;

    // Asserts a lies in Z_p (constant polynomial) and returns its value.
    long long to_scalar(const Elem& a) const;

    const FiniteField& residue_field() const { return k_; }

    void check(const Elem& a) const;

private:
    FieldSpec spec_;
    FiniteField k_;
    int M_;
    long long pM_;

    long long mod(long long v) const;
    long long mulmod(long long a, long long b) const;
};

}  // namespace zpt
