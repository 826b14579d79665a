#pragma once

#include <cstdint>
#include <vector>

#include "zpt/errors.hpp"

namespace zpt {

// Description of F_q = F_p[t]/(h), q = p^f.  The modulus is stored
// little-endian with an explicit leading 1, length f+1.
struct FieldSpec {
    long long p = 2;
    int f = 1;
    std::vector<long long> modulus;  // length f+1, monic

    bool operator==(const FieldSpec&) const = default;
};

// Element of F_q: coordinates w.r.t. the power basis of the modulus,
// length exactly f, entries in [0, p).
struct FFElem {
    std::vector<long long> c;
    bool operator==(const FFElem&) const = default;
};

// Arithmetic context for F_q.  Validates the spec at construction:
// p prime, modulus monic of degree f and irreducible over F_p
// (brute-force check; p <= 7, f <= 6 in scope).
class FiniteField {
public:
    using Elem = FFElem;

    explicit FiniteField(FieldSpec spec);

    // Default modulus: the first irreducible monic polynomial of degree f
    // over F_p in lexicographic order (Conway-free but deterministic).
    static FieldSpec default_spec(long long p, int f);

    const FieldSpec& spec() const { return spec_; }
    long long p() const { return spec_.p; }
    int f() const { return spec_.f; }
    long long q() const { return q_; }
    long long characteristic() const { return spec_.p; }
    long long int_modulus() const { return spec_.p; }

    Elem zero() const;
    Elem one() const;
    Elem gen() const;  // class of t; equals one() when f == 1
    Elem from_int(long long n) const;

    // Fixed enumeration: index n in [0, q) has coefficients given by the
    // base-p digits of n, least significant first.  F_4: 0, 1, w, w+1.
    Elem element(long long index) const;
    long long index(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;  // throws division_by_zero on 0
    Elem pow(const Elem& a, long long e) const;
    Elem frobenius(const Elem& a) const;      // x -> x^p
    Elem inv_frobenius(const Elem& a) const;  // x -> x^{p^{f-1}}
    Elem pth_power(const Elem& a) const { return frobenius(a); }
    Elem mul_int(const Elem& a, long long n) const;

    long long trace(const Elem& a) const;  // Tr_{F_q/F_p}, value in [0, p)

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;

    void check(const Elem& a) const;  // invariant check, throws spec_mismatch

private:
    FieldSpec spec_;
    long long q_;

    std::vector<long long> mod_mul(const std::vector<long long>& a,
                                   const std::vector<long long>& b) const;
};

// First element with nonzero trace in the fixed enumeration — the canonical
// alpha every standard form is written against; always exists.
FFElem choose_alpha(const FiniteField& k);

bool is_prime(long long n);

// Monic polynomials little-endian over F_p; used by the spec validator and
// by FiniteField::default_spec.
bool poly_irreducible_mod_p(const std::vector<long long>& poly, long long p);

}  // namespace zpt
