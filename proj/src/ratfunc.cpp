#include "zpt/ratfunc.hpp"

namespace zpt {

// ---- FqPolyRing ---------------------------------------------------------

FqPoly FqPolyRing::add(const Elem& a, const Elem& b) const {
    Elem r;
    r.c.resize(std::max(a.c.size(), b.c.size()), k_.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = k_.add(r.c[i], b.c[i]);
    trim(r);
    return r;
}

FqPoly FqPolyRing::neg(const Elem& a) const {
    Elem r = a;
    for (auto& c : r.c) c = k_.neg(c);
    return r;
}

FqPoly FqPolyRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

FqPoly FqPolyRing::mul(const Elem& a, const Elem& b) const {
    if (a.c.empty() || b.c.empty()) return {};
    Elem r;
    r.c.assign(a.c.size() + b.c.size() - 1, k_.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (k_.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = k_.add(r.c[i + j], k_.mul(a.c[i], b.c[j]));
    }
    trim(r);
    return r;
}

FqPoly FqPolyRing::mul_coeff(const Elem& a, const FFElem& s) const {
    Elem r = a;
    for (auto& c : r.c) c = k_.mul(c, s);
    trim(r);
    return r;
}

std::pair<FqPoly, FqPoly> FqPolyRing::divmod(const Elem& a, const Elem& b) const {
    if (b.c.empty()) throw division_by_zero("polynomial division by zero");
    Elem q, r = a;
    auto lead_inv = k_.inv(b.c.back());
    if (r.c.size() >= b.c.size()) q.c.assign(r.c.size() - b.c.size() + 1, k_.zero());
    while (r.c.size() >= b.c.size() && !r.c.empty()) {
        auto coef = k_.mul(r.c.back(), lead_inv);
        size_t off = r.c.size() - b.c.size();
        q.c[off] = coef;
        for (size_t i = 0; i < b.c.size(); ++i)
            r.c[off + i] = k_.sub(r.c[off + i], k_.mul(coef, b.c[i]));
        trim(r);
    }
    trim(q);
    return {q, r};
}

FqPoly FqPolyRing::gcd(Elem a, Elem b) const {
    while (!b.c.empty()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
    }
    return monic(a);
}

FqPoly FqPolyRing::monic(const Elem& a) const {
    if (a.c.empty()) return a;
    return mul_coeff(a, k_.inv(a.c.back()));
}

FFElem FqPolyRing::eval(const Elem& a, const FFElem& at) const {
    auto acc = k_.zero();
    for (size_t i = a.c.size(); i-- > 0;) acc = k_.add(k_.mul(acc, at), a.c[i]);
    return acc;
}

FqPoly FqPolyRing::pth_power(const Elem& a) const {
    if (a.c.empty()) return {};
    const long long p = k_.p();
    Elem r;
    r.c.assign(p * (a.c.size() - 1) + 1, k_.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[p * i] = k_.frobenius(a.c[i]);
    return r;
}

FqPoly FqPolyRing::shift(const Elem& a, const FFElem& by) const {
    // Horner: a(X + by)
    Elem acc;
    Elem lin = make({by, k_.one()});
    for (size_t i = a.c.size(); i-- > 0;)
        acc = add(mul(acc, lin), constant(a.c[i]));
    return acc;
}

FqPoly FqPolyRing::series_inv(const Elem& a, int prec) const {
    if (a.c.empty() || k_.is_zero(a.c[0]))
        throw not_a_unit("series_inv: constant term is zero");
    auto c0 = k_.inv(a.c[0]);
    Elem r;
    r.c.assign(prec, k_.zero());
    r.c[0] = c0;
    for (int n = 1; n < prec; ++n) {
        auto acc = k_.zero();
        for (int j = 1; j <= n && j < static_cast<int>(a.c.size()); ++j)
            acc = k_.add(acc, k_.mul(a.c[j], r.c[n - j]));
        r.c[n] = k_.neg(k_.mul(c0, acc));
    }
    trim(r);
    return r;
}

// ---- RatFuncRing --------------------------------------------------------

void RatFuncRing::check(const Elem& a) const {
    if (pr_.is_zero(a.den)) throw division_by_zero("rational function with zero denominator");
}

RatFunc RatFuncRing::make(const FqPoly& num, const FqPoly& den) const {
    if (pr_.is_zero(den)) throw division_by_zero("rational function with zero denominator");
    if (pr_.is_zero(num)) return zero();
    auto g = pr_.gcd(num, den);
    auto n2 = pr_.divmod(num, g).first;
    auto d2 = pr_.divmod(den, g).first;
    auto lead_inv = field().inv(d2.c.back());
    return RatFunc{pr_.mul_coeff(n2, lead_inv), pr_.mul_coeff(d2, lead_inv)};
}

RatFunc RatFuncRing::add(const Elem& a, const Elem& b) const {
    return make(pr_.add(pr_.mul(a.num, b.den), pr_.mul(b.num, a.den)),
                pr_.mul(a.den, b.den));
}

RatFunc RatFuncRing::neg(const Elem& a) const { return Elem{pr_.neg(a.num), a.den}; }

RatFunc RatFuncRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

RatFunc RatFuncRing::mul(const Elem& a, const Elem& b) const {
    return make(pr_.mul(a.num, b.num), pr_.mul(a.den, b.den));
}

RatFunc RatFuncRing::mul_int(const Elem& a, long long n) const {
    return Elem{pr_.mul_coeff(a.num, field().from_int(n)), a.den};
}

RatFunc RatFuncRing::pth_power(const Elem& a) const {
    return Elem{pr_.pth_power(a.num), pr_.pth_power(a.den)};
}

// ---- ZqPolyRing ---------------------------------------------------------

ZqPoly ZqPolyRing::add(const Elem& a, const Elem& b) const {
    Elem r;
    r.c.resize(std::max(a.c.size(), b.c.size()), zq_.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = zq_.add(r.c[i], b.c[i]);
    trim(r);
    return r;
}

ZqPoly ZqPolyRing::neg(const Elem& a) const {
    Elem r = a;
    for (auto& c : r.c) c = zq_.neg(c);
    return r;
}

ZqPoly ZqPolyRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

ZqPoly ZqPolyRing::mul(const Elem& a, const Elem& b) const {
    if (a.c.empty() || b.c.empty()) return {};
    Elem r;
    r.c.assign(a.c.size() + b.c.size() - 1, zq_.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (zq_.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = zq_.add(r.c[i + j], zq_.mul(a.c[i], b.c[j]));
    }
    trim(r);
    return r;
}

ZqPoly ZqPolyRing::mul_int(const Elem& a, long long n) const {
    Elem r = a;
    for (auto& c : r.c) c = zq_.mul_int(c, n);
    trim(r);
    return r;
}

// ---- ZqFracRing ---------------------------------------------------------

ZqFrac ZqFracRing::add(const Elem& a, const Elem& b) const {
    return Elem{pr_.add(pr_.mul(a.num, b.den), pr_.mul(b.num, a.den)),
                pr_.mul(a.den, b.den)};
}

ZqFrac ZqFracRing::neg(const Elem& a) const { return Elem{pr_.neg(a.num), a.den}; }

ZqFrac ZqFracRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

ZqFrac ZqFracRing::mul(const Elem& a, const Elem& b) const {
    return Elem{pr_.mul(a.num, b.num), pr_.mul(a.den, b.den)};
}

ZqFrac ZqFracRing::mul_int(const Elem& a, long long n) const {
    return Elem{pr_.mul_int(a.num, n), a.den};
}

bool ZqFracRing::divisible(const Elem& a, int i) const {
    for (const auto& c : a.num.c)
        if (!zq_.divisible(c, i)) return false;
    return true;
}

ZqFrac ZqFracRing::div_pow_p(const Elem& a, int i) const {
    Elem r = a;
    for (auto& c : r.num.c) c = zq_.div_pow_p(c, i);
    pr_.trim(r.num);
    return r;
}

ZqFrac ZqFracRing::lift(const RatFuncRing&, const RatFunc& a) const {
    Elem r;
    r.num.c.reserve(a.num.c.size());
    for (const auto& c : a.num.c) r.num.c.push_back(zq_.lift(c));
    r.den.c.reserve(a.den.c.size());
    for (const auto& c : a.den.c) r.den.c.push_back(zq_.lift(c));
    if (r.den.c.empty()) r.den.c.push_back(zq_.one());
    return r;
}

RatFunc ZqFracRing::reduce(const RatFuncRing& c, const Elem& a) const {
    FqPoly num, den;
    num.c.reserve(a.num.c.size());
    for (const auto& x : a.num.c) num.c.push_back(zq_.reduce(x));
    den.c.reserve(a.den.c.size());
    for (const auto& x : a.den.c) den.c.push_back(zq_.reduce(x));
    c.polys().trim(num);
    c.polys().trim(den);
    return c.make(num, den);
}

// ---- embeddings and evaluation ------------------------------------------

FFElem Embedding::apply(const FFElem& a) const {
    from.check(a);
    auto acc = to.zero();
    for (size_t i = a.c.size(); i-- > 0;)
        acc = to.add(to.mul(acc, gen_image), to.from_int(a.c[i]));
    return acc;
}

Embedding make_embedding(const FiniteField& from, const FiniteField& to) {
    if (from.p() != to.p() || to.f() % from.f() != 0)
        throw spec_mismatch("no embedding: incompatible field degrees");
    // evaluate the source modulus at candidate roots in `to`
    for (long long i = 0; i < to.q(); ++i) {
        auto z = to.element(i);
        auto acc = to.zero();
        for (size_t j = from.spec().modulus.size(); j-- > 0;)
            acc = to.add(to.mul(acc, z), to.from_int(from.spec().modulus[j]));
        if (to.is_zero(acc)) return Embedding{from, to, z};
    }
    throw internal_error("embedding root not found");
}

FFElem eval_ratfunc(const RatFuncRing& R, const RatFunc& r, const Embedding& emb,
                    const FFElem& z) {
    const auto& to = emb.to;
    auto eval_poly = [&](const FqPoly& pl) {
        auto acc = to.zero();
        for (size_t i = pl.c.size(); i-- > 0;)
            acc = to.add(to.mul(acc, z), emb.apply(pl.c[i]));
        return acc;
    };
    R.check(r);
    auto d = eval_poly(r.den);
    if (to.is_zero(d)) throw pole_at_point("denominator vanishes at evaluation point");
    return to.mul(eval_poly(r.num), to.inv(d));
}

PartialFractions partial_fractions(const RatFuncRing& R, const RatFunc& r) {
    const auto& P = R.polys();
    const auto& k = R.field();
    PartialFractions out;
    auto [q, rem] = P.divmod(r.num, r.den);
    out.poly = q;
    if (P.is_zero(rem)) return out;
    // factor the denominator into linear pieces
    FqPoly den = r.den;
    std::map<long long, int> mult;
    for (long long i = 0; i < k.q(); ++i) {
        auto x = k.element(i);
        while (!P.is_zero(den) && k.is_zero(P.eval(den, x))) {
            auto lin = P.make({k.neg(x), k.one()});
            auto [qq, rr] = P.divmod(den, lin);
            ZPT_CHECK(P.is_zero(rr), "root division left a remainder");
            den = qq;
            mult[i] += 1;
        }
    }
    if (den.degree() > 0)
        throw unsupported_denominator(
            "denominator has an irreducible factor of degree > 1");
    for (const auto& [idx, e] : mult) {
        auto x = k.element(idx);
        // shift to the origin: principal part of num(X+x) / (X^e * rest(X+x))
        auto num_s = P.shift(rem, x);
        auto den_s = P.shift(r.den, x);
        // den_s = X^e * rest with rest(0) != 0
        std::vector<FFElem> rest(den_s.c.begin() + e, den_s.c.end());
        auto rest_p = P.make(std::move(rest));
        auto inv = P.series_inv(rest_p, e);
        auto series = P.mul(num_s, inv);  // coefficients t_0..t_{e-1} matter
        std::vector<FFElem> a(e, k.zero());
        for (int m = 1; m <= e; ++m) {
            int t = e - m;
            a[m - 1] = (t < static_cast<int>(series.c.size())) ? series.c[t] : k.zero();
        }
        out.parts[idx] = std::move(a);
    }
    return out;
}

}  // namespace zpt
