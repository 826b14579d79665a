#pragma once

#include <map>
#include <vector>

#include "zpt/fq.hpp"
#include "zpt/zq.hpp"

namespace zpt {

// Polynomials over F_q, little-endian, no trailing zeros (zero = empty).
struct FqPoly {
    std::vector<FFElem> c;
    bool operator==(const FqPoly&) const = default;
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
};

class FqPolyRing {
public:
    using Elem = FqPoly;

    explicit FqPolyRing(FiniteField k) : k_(std::move(k)) {}
    const FiniteField& field() const { return k_; }

    Elem zero() const { return {}; }
    Elem one() const { return Elem{{k_.one()}}; }
    Elem x() const { return Elem{{k_.zero(), k_.one()}}; }
    Elem constant(const FFElem& a) const {
        if (k_.is_zero(a)) return {};
        return Elem{{a}};
    }
    Elem make(std::vector<FFElem> coeffs) const {
        Elem p{std::move(coeffs)};
        trim(p);
        return p;
    }

    bool is_zero(const Elem& a) const { return a.c.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a.c == b.c; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_coeff(const Elem& a, const FFElem& s) const;
    // division with remainder; divisor must be nonzero
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const;
    Elem gcd(Elem a, Elem b) const;  // monic gcd
    Elem monic(const Elem& a) const;
    FFElem eval(const Elem& a, const FFElem& at) const;
    Elem pth_power(const Elem& a) const;  // exponent-stretch, coeff Frobenius
    Elem shift(const Elem& a, const FFElem& by) const;  // X -> X + by
    // inverse of a mod X^prec (constant term must be nonzero)
    Elem series_inv(const Elem& a, int prec) const;

    void trim(Elem& a) const {
        while (!a.c.empty() && k_.is_zero(a.c.back())) a.c.pop_back();
    }

private:
    FiniteField k_;
};

// Rational functions over F_q: num/den with den monic and gcd(num,den)=1.
struct RatFunc {
    FqPoly num, den;
    bool operator==(const RatFunc&) const = default;
};

class RatFuncRing {
public:
    using Elem = RatFunc;

    explicit RatFuncRing(FiniteField k) : pr_(std::move(k)) {}
    const FiniteField& field() const { return pr_.field(); }
    const FqPolyRing& polys() const { return pr_; }
    long long characteristic() const { return field().p(); }
    long long int_modulus() const { return field().p(); }

    Elem zero() const { return Elem{{}, pr_.one()}; }
    Elem one() const { return Elem{pr_.one(), pr_.one()}; }
    Elem from_int(long long n) const {
        return Elem{pr_.constant(field().from_int(n)), pr_.one()};
    }
    Elem from_poly(const FqPoly& p) const { return Elem{p, pr_.one()}; }
    Elem make(const FqPoly& num, const FqPoly& den) const;  // normalizes

    bool is_zero(const Elem& a) const { return pr_.is_zero(a.num); }
    bool eq(const Elem& a, const Elem& b) const {
        return a.num == b.num && a.den == b.den;
    }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_int(const Elem& a, long long n) const;
    Elem pth_power(const Elem& a) const;

    void check(const Elem& a) const;

private:
    FqPolyRing pr_;
};

// ---- Lift side: fractions over (Z/p^M)[t]/(h) coefficients --------------

struct ZqPoly {
    std::vector<ZqElem> c;
    bool operator==(const ZqPoly&) const = default;
};

class ZqPolyRing {
public:
    using Elem = ZqPoly;
    explicit ZqPolyRing(ZqRing zq) : zq_(std::move(zq)) {}
    const ZqRing& base() const { return zq_; }

    Elem zero() const { return {}; }
    Elem one() const { return Elem{{zq_.one()}}; }
    bool is_zero(const Elem& a) const { return a.c.empty(); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_int(const Elem& a, long long n) const;
    void trim(Elem& a) const {
        while (!a.c.empty() && zq_.is_zero(a.c.back())) a.c.pop_back();
    }

private:
    ZqRing zq_;
};

// Unnormalized fractions num/den over ZqPoly.  Invariant maintained by all
// operations: den reduces to a nonzero polynomial mod p (a non-zerodivisor),
// so p-divisibility of the fraction is p-divisibility of num.
struct ZqFrac {
    ZqPoly num, den;
};

class ZqFracRing {
public:
    using Elem = ZqFrac;

    explicit ZqFracRing(ZqRing zq) : pr_(zq), zq_(std::move(zq)) {}
    long long characteristic() const { return 0; }
    long long int_modulus() const { return zq_.pM(); }
    const ZqRing& base() const { return zq_; }

    Elem zero() const { return Elem{pr_.zero(), pr_.one()}; }
    Elem one() const { return Elem{pr_.one(), pr_.one()}; }
    Elem from_int(long long n) const {
        Elem e = zero();
        e.num = ZqPoly{{zq_.from_int(n)}};
        pr_.trim(e.num);
        return e;
    }
    bool is_zero(const Elem& a) const { return pr_.is_zero(a.num); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_int(const Elem& a, long long n) const;
    bool divisible(const Elem& a, int i) const;
    Elem div_pow_p(const Elem& a, int i) const;

    // lift/reduce against RatFunc
    Elem lift(const RatFuncRing& c, const RatFunc& a) const;
    RatFunc reduce(const RatFuncRing& c, const Elem& a) const;

private:
    ZqPolyRing pr_;
    ZqRing zq_;
};

// Embedding of one finite field into another (same p, from.f | to.f); the
// generator maps to the first root of the source modulus in enumeration
// order, so embeddings are deterministic.
struct Embedding {
    FiniteField from, to;
    FFElem gen_image;

    FFElem apply(const FFElem& a) const;
};
Embedding make_embedding(const FiniteField& from, const FiniteField& to);

// Evaluate at a point of an extension field; throws pole_at_point.
FFElem eval_ratfunc(const RatFuncRing& R, const RatFunc& r, const Embedding& emb,
                    const FFElem& z);

// Partial fraction decomposition with linear denominator factors over k.
struct PartialFractions {
    FqPoly poly;  // polynomial part
    // root (as field element) -> principal-part coefficients a_1..a_e with
    // r ~ sum a_m / (X - root)^m
    std::map<long long, std::vector<FFElem>> parts;  // keyed by field index
};
PartialFractions partial_fractions(const RatFuncRing& R, const RatFunc& r);

}  // namespace zpt
