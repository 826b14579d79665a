#include "zpt/asw.hpp"

#include <algorithm>

namespace zpt {

namespace {

long long inv_mod_p(long long a, long long p) {
    a = ((a % p) + p) % p;
    for (long long x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw division_by_zero("no inverse mod p");
}

// The unique multiple of alpha and Artin-Schreier witness for a constant:
// a = m*alpha + (s^p - s) with 0 <= m < p.  Existence: alpha has nonzero
// trace and p-th powering is onto the trace-zero hyperplane's complement.
struct ConstSplit {
    long long m = 0;
    FFElem s;
};
ConstSplit split_constant(const FiniteField& k, const FFElem& a, const FFElem& alpha) {
    ConstSplit r;
    r.s = k.zero();
    if (k.is_zero(a)) return r;
    const long long p = k.p();
    r.m = k.trace(a) * inv_mod_p(k.trace(alpha), p) % p;
    auto residual = k.sub(a, k.mul_int(alpha, r.m));
    for (long long idx = 0; idx < k.q(); ++idx) {
        auto s = k.element(idx);
        if (k.eq(k.sub(k.pth_power(s), s), residual)) {
            r.s = s;
            return r;
        }
    }
    throw internal_error("trace-zero element without Artin-Schreier root");
}

}  // namespace

ScalarReduction reduce_scalar(const FqLaurentRing& L, const FqSeries& f,
                              const FFElem& alpha, long long budget) {
    const auto& k = L.base();
    const long long p = k.p();
    ScalarReduction out;
    out.witness = L.zero();

    auto rem = L.truncate(f, budget);

    // pole part: peel from the deepest exponent up
    while (!rem.a.empty() && rem.tail < 0) {
        long long e = rem.tail;
        auto c = rem.a.front();
        if ((-e) % p == 0) {
            auto w = L.monomial(k.inv_frobenius(c), e / p);
            out.witness = L.add(out.witness, w);
            // wp(w) = c T^e - w
            rem = L.add(L.sub(rem, L.monomial(c, e)), w);
        } else {
            auto it = out.poles.find(-e);
            if (it == out.poles.end())
                out.poles.emplace(-e, c);
            else
                it->second = k.add(it->second, c);
            rem = L.sub(rem, L.monomial(c, e));
        }
    }
    for (auto it = out.poles.begin(); it != out.poles.end();)
        it = k.is_zero(it->second) ? out.poles.erase(it) : std::next(it);

    // constant part
    auto a0 = L.coeff(rem, 0);
    auto cs = split_constant(k, a0, alpha);
    out.m = cs.m;
    if (!k.is_zero(cs.s)) out.witness = L.add(out.witness, L.monomial(cs.s, 0));
    rem = L.sub(rem, L.monomial(a0, 0));

    // positive tail g: wp(-sum_t g^{p^t}) == g up to the precision bound
    if (!L.is_zero(rem)) {
        long long bound = std::min(L.known_bound(rem), budget);
        auto acc = rem;
        auto w = L.neg(rem);
        for (;;) {
            acc = L.pth_power(acc);
            if (acc.a.empty() || L.valuation(acc) >= bound) break;
            w = L.sub(w, acc);
        }
        out.witness = L.add(out.witness, w);
        rem = L.truncate(L.sub(rem, L.sub(L.pth_power(w), w)), bound);
    }
    ZPT_CHECK(L.is_zero(rem), "scalar reduction left a nonzero remainder");
    return out;
}

long long default_budget(const WittLaurent& W, const std::vector<FqSeries>& x) {
    long long maxpole = 0;
    for (const auto& c : x)
        if (!c.a.empty()) maxpole = std::max(maxpole, -c.tail);
    long long b = maxpole;
    for (int j = 1; j < W.length(); ++j) b *= W.p();
    // the ghost-lift products consume precision proportional to the deepest
    // intermediate pole; a factor of two over that depth keeps every stage's
    // constant term readable
    return 2 * b + 16;
}

namespace {

// Shared V-adic peeling loop.  `Ops` supplies the coordinate reduction and
// the explicit pieces to subtract; used for both k((T)) and k(X).
template <class WR, class Ops>
void stagewise_reduce(const WR& W, std::vector<typename WR::CE>& r,
                      std::vector<typename WR::CE>& witness, const Ops& ops,
                      std::vector<long long>& c_digits) {
    const int N = W.length();
    c_digits.assign(N, 0);
    witness = W.zero();
    for (int j = 0; j < N; ++j) {
        bool first = true;
        for (int round = 0;; ++round) {
            if (ops.coord_zero(r[j])) break;
            if (round > 2 * N + 4)
                throw internal_error("stagewise reduction failed to stabilize");
            auto red = ops.reduce_coord(r[j], j);
            if (!first && (red.m != 0 || !ops.poles_empty(red)))
                throw internal_error("late stage produced new normal-form terms");
            if (first) {
                c_digits[j] = red.m;
                if (red.m != 0) r = W.sub(r, ops.alpha_piece(red.m, j));
                ops.record_poles(red, j);
                for (auto&& piece : ops.pole_pieces(red, j)) r = W.sub(r, piece);
            }
            if (!ops.witness_zero(red)) {
                auto t = W.zero();
                t[j] = ops.witness_of(red);
                r = W.sub(r, W.wp(t));
                witness = W.add(witness, t);
            } else if (!first) {
                throw internal_error("stagewise reduction made no progress");
            }
            first = false;
        }
    }
    for (int j = 0; j < N; ++j)
        ZPT_CHECK(ops.coord_zero(r[j]), "reduction left a nonzero coordinate");
}

struct LocalOps {
    const WittLaurent& W;
    const FqLaurentRing& L;
    const FiniteField& k;
    FFElem alpha;
    long long budget;
    // pole order -> digit per stage
    mutable std::map<long long, std::vector<FFElem>> digits;

    bool coord_zero(const FqSeries& s) const { return L.is_zero(s); }
    // stage j sees the constant obstruction against alpha^{p^j}
    ScalarReduction reduce_coord(const FqSeries& s, int j) const {
        auto aj = alpha;
        for (int t = 0; t < j; ++t) aj = k.frobenius(aj);
        return reduce_scalar(L, s, aj, budget);
    }
    bool poles_empty(const ScalarReduction& red) const { return red.poles.empty(); }
    bool witness_zero(const ScalarReduction& red) const {
        return L.is_zero(red.witness);
    }
    FqSeries witness_of(const ScalarReduction& red) const { return red.witness; }

    std::vector<FqSeries> alpha_piece(long long m, int j) const {
        long long pj = 1;
        for (int t = 0; t < j; ++t) pj *= W.p();
        return W.scalar_mul(W.teich(L.monomial(alpha, 0)), m * pj);
    }
    void record_poles(const ScalarReduction& red, int j) const {
        for (const auto& [i, d] : red.poles) {
            auto it = digits.find(i);
            if (it == digits.end())
                it = digits.emplace(i, std::vector<FFElem>(W.length(), k.zero())).first;
            it->second[j] = k.add(it->second[j], d);
        }
    }
    // p^j [d] [T^{-i}] = V^j [ d^{p^j} T^{-i p^j} ]
    std::vector<std::vector<FqSeries>> pole_pieces(const ScalarReduction& red,
                                                   int j) const {
        std::vector<std::vector<FqSeries>> pieces;
        long long pj = 1;
        for (int t = 0; t < j; ++t) pj *= W.p();
        for (const auto& [i, d] : red.poles) {
            auto dp = d;
            for (int t = 0; t < j; ++t) dp = k.frobenius(dp);
            auto v = W.zero();
            v[j] = L.monomial(dp, -i * pj);
            pieces.push_back(std::move(v));
        }
        return pieces;
    }
};

}  // namespace

LocalReduction reduce_local(const WittLaurent& W, const std::vector<FqSeries>& x,
                            long long budget) {
    W.check(x);
    const auto& L = W.coeff_ring();
    const auto& k = L.base();
    if (budget < 0) budget = default_budget(W, x);

    auto r = x;
    for (auto& c : r) c = L.truncate(c, budget);

    LocalOps ops{W, L, k, choose_alpha(k), budget, {}};
    std::vector<long long> c_digits;
    LocalReduction out;
    stagewise_reduce(W, r, out.witness, ops, c_digits);

    out.form.spec = k.spec();
    out.form.N = W.length();
    out.form.alpha = ops.alpha;
    {
        std::vector<long long> d(c_digits.begin(), c_digits.end());
        out.form.c = ZpApprox::from_digits(W.p(), d);
    }
    UnramRing U(k.spec(), W.length());
    for (auto& [i, d] : ops.digits) {
        UnramElem e{d};
        if (!U.is_zero(e)) out.form.terms.emplace(i, std::move(e));
    }
    return out;
}

std::vector<FqSeries> eval_local_form(const WittLaurent& W,
                                      const LocalStandardForm& sf) {
    const auto& L = W.coeff_ring();
    const auto& k = L.base();
    if (sf.N != W.length()) throw precision_mismatch("form length mismatch");
    auto acc = W.scalar_mul(W.teich(L.monomial(sf.alpha, 0)), sf.c.value);
    for (const auto& [i, ci] : sf.terms) {
        long long pj = 1;
        for (int j = 0; j < W.length(); ++j) {
            const auto& d = ci.digits[j];
            if (!k.is_zero(d)) {
                auto dp = d;
                for (int t = 0; t < j; ++t) dp = k.frobenius(dp);
                auto v = W.zero();
                v[j] = L.monomial(dp, -i * pj);
                acc = W.add(acc, v);
            }
            pj *= W.p();
        }
    }
    return acc;
}

WpMembership in_wp_image(const WittLaurent& W, const std::vector<FqSeries>& x,
                         long long budget) {
    auto red = reduce_local(W, x, budget);
    WpMembership out;
    out.member = red.form.c.value == 0 && red.form.terms.empty();
    if (out.member) out.witness = std::move(red.witness);
    return out;
}

// ---- exact global reduction over k(X) -----------------------------------

GlobalScalarReduction reduce_scalar_global(const RatFuncRing& R, const RatFunc& f,
                                           const FFElem& alpha) {
    const auto& P = R.polys();
    const auto& k = R.field();
    const long long p = k.p();
    GlobalScalarReduction out;
    out.witness = R.zero();

    auto pf = partial_fractions(R, f);

    // polynomial part; degrees divisible by p cascade down via the witness
    auto poly = pf.poly.c;
    for (long long e = static_cast<long long>(poly.size()) - 1; e >= 1; --e) {
        auto a = poly[e];
        if (k.is_zero(a)) continue;
        poly[e] = k.zero();
        if (e % p == 0) {
            auto s = k.inv_frobenius(a);
            std::vector<FFElem> mono(e / p + 1, k.zero());
            mono.back() = s;
            out.witness = R.add(out.witness, R.from_poly(P.make(std::move(mono))));
            poly[e / p] = k.add(poly[e / p], s);
        } else {
            auto& slot = out.poles[-1][e];
            if (slot.c.empty()) slot = k.zero();
            slot = k.add(slot, a);
        }
    }
    // constant part
    {
        auto a0 = poly.empty() ? k.zero() : poly[0];
        auto cs = split_constant(k, a0, alpha);
        out.m = cs.m;
        if (!k.is_zero(cs.s))
            out.witness = R.add(out.witness, R.from_poly(P.constant(cs.s)));
    }

    // finite places
    for (const auto& [idx, pp] : pf.parts) {
        auto root = k.element(idx);
        auto lin = P.make({k.neg(root), k.one()});  // X - root
        std::vector<FFElem> coeffs = pp;            // a_1..a_e at index m-1
        for (long long m = static_cast<long long>(coeffs.size()); m >= 1; --m) {
            auto a = coeffs[m - 1];
            if (k.is_zero(a)) continue;
            coeffs[m - 1] = k.zero();
            if (m % p == 0) {
                auto s = k.inv_frobenius(a);
                auto den = P.one();
                for (long long t = 0; t < m / p; ++t) den = P.mul(den, lin);
                out.witness = R.add(out.witness, R.make(P.constant(s), den));
                coeffs[m / p - 1] = k.add(coeffs[m / p - 1], s);
            } else {
                auto& slot = out.poles[idx][m];
                if (slot.c.empty()) slot = k.zero();
                slot = k.add(slot, a);
            }
        }
    }
    for (auto pit = out.poles.begin(); pit != out.poles.end();) {
        for (auto it = pit->second.begin(); it != pit->second.end();)
            it = k.is_zero(it->second) ? pit->second.erase(it) : std::next(it);
        pit = pit->second.empty() ? out.poles.erase(pit) : std::next(pit);
    }

    // exact verification of the decomposition
    auto check = R.mul_int(R.from_poly(P.constant(alpha)), out.m);
    for (const auto& [place, orders] : out.poles)
        for (const auto& [m, a] : orders) {
            if (place == -1) {
                std::vector<FFElem> mono(m + 1, k.zero());
                mono.back() = a;
                check = R.add(check, R.from_poly(P.make(std::move(mono))));
            } else {
                auto lin = P.make({k.neg(k.element(place)), k.one()});
                auto den = P.one();
                for (long long t = 0; t < m; ++t) den = P.mul(den, lin);
                check = R.add(check, R.make(P.constant(a), den));
            }
        }
    check = R.add(check, R.sub(R.pth_power(out.witness), out.witness));
    ZPT_CHECK(R.is_zero(R.sub(f, check)), "global scalar reduction mismatch");
    return out;
}

namespace {

struct GlobalOps {
    const WittRat& W;
    const RatFuncRing& R;
    const FiniteField& k;
    FFElem alpha;
    // place -> pole order -> digit per stage
    mutable std::map<long long, std::map<long long, std::vector<FFElem>>> digits;

    bool coord_zero(const RatFunc& s) const { return R.is_zero(s); }
    GlobalScalarReduction reduce_coord(const RatFunc& s, int j) const {
        auto aj = alpha;
        for (int t = 0; t < j; ++t) aj = k.frobenius(aj);
        return reduce_scalar_global(R, s, aj);
    }
    bool poles_empty(const GlobalScalarReduction& red) const {
        return red.poles.empty();
    }
    bool witness_zero(const GlobalScalarReduction& red) const {
        return R.is_zero(red.witness);
    }
    RatFunc witness_of(const GlobalScalarReduction& red) const {
        return red.witness;
    }

    std::vector<RatFunc> alpha_piece(long long m, int j) const {
        long long pj = 1;
        for (int t = 0; t < j; ++t) pj *= W.p();
        return W.scalar_mul(W.teich(R.from_poly(R.polys().constant(alpha))), m * pj);
    }
    void record_poles(const GlobalScalarReduction& red, int j) const {
        for (const auto& [place, orders] : red.poles)
            for (const auto& [i, d] : orders) {
                auto& v = digits[place][i];
                if (v.empty()) v.assign(W.length(), k.zero());
                v[j] = k.add(v[j], d);
            }
    }
    std::vector<std::vector<RatFunc>> pole_pieces(const GlobalScalarReduction& red,
                                                  int j) const {
        const auto& P = R.polys();
        std::vector<std::vector<RatFunc>> pieces;
        long long pj = 1;
        for (int t = 0; t < j; ++t) pj *= W.p();
        for (const auto& [place, orders] : red.poles)
            for (const auto& [i, d] : orders) {
                auto dp = d;
                for (int t = 0; t < j; ++t) dp = k.frobenius(dp);
                RatFunc mono;
                if (place == -1) {
                    std::vector<FFElem> m(i * pj + 1, k.zero());
                    m.back() = dp;
                    mono = R.from_poly(P.make(std::move(m)));
                } else {
                    auto lin = P.make({k.neg(k.element(place)), k.one()});
                    auto den = P.one();
                    for (long long t = 0; t < i * pj; ++t) den = P.mul(den, lin);
                    mono = R.make(P.constant(dp), den);
                }
                auto v = W.zero();
                v[j] = std::move(mono);
                pieces.push_back(std::move(v));
            }
        return pieces;
    }
};

}  // namespace

GlobalReduction reduce_global_p1(const WittRat& W, const std::vector<RatFunc>& x) {
    W.check(x);
    const auto& R = W.coeff_ring();
    const auto& k = R.field();

    auto r = x;
    GlobalOps ops{W, R, k, choose_alpha(k), {}};
    std::vector<long long> c_digits;
    GlobalReduction out;
    stagewise_reduce(W, r, out.witness, ops, c_digits);

    out.form.spec = k.spec();
    out.form.N = W.length();
    out.form.alpha = ops.alpha;
    out.form.c = ZpApprox::from_digits(W.p(), c_digits);
    UnramRing U(k.spec(), W.length());
    for (auto& [place, orders] : ops.digits) {
        std::map<long long, UnramElem> terms;
        for (auto& [i, d] : orders) {
            UnramElem e{d};
            if (!U.is_zero(e)) terms.emplace(i, std::move(e));
        }
        if (!terms.empty()) out.form.places.emplace(place, std::move(terms));
    }
    return out;
}

std::vector<RatFunc> eval_global_form(const WittRat& W,
                                      const GlobalStandardForm& sf) {
    const auto& R = W.coeff_ring();
    const auto& P = R.polys();
    const auto& k = R.field();
    if (sf.N != W.length()) throw precision_mismatch("form length mismatch");
    auto acc = W.scalar_mul(W.teich(R.from_poly(P.constant(sf.alpha))), sf.c.value);
    for (const auto& [place, orders] : sf.places)
        for (const auto& [i, ci] : orders) {
            long long pj = 1;
            for (int j = 0; j < W.length(); ++j) {
                const auto& d = ci.digits[j];
                if (!k.is_zero(d)) {
                    auto dp = d;
                    for (int t = 0; t < j; ++t) dp = k.frobenius(dp);
                    RatFunc mono;
                    if (place == -1) {
                        std::vector<FFElem> m(i * pj + 1, k.zero());
                        m.back() = dp;
                        mono = R.from_poly(P.make(std::move(m)));
                    } else {
                        auto lin = P.make({k.neg(k.element(place)), k.one()});
                        auto den = P.one();
                        for (long long t = 0; t < i * pj; ++t) den = P.mul(den, lin);
                        mono = R.make(P.constant(dp), den);
                    }
                    auto v = W.zero();
                    v[j] = std::move(mono);
                    acc = W.add(acc, v);
                }
                pj *= W.p();
            }
        }
    return acc;
}

}  // namespace zpt
