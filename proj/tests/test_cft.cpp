#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "zpt/cft.hpp"

using namespace zpt;
using zpt::testutil::rand_ff;

namespace {

LocalStandardForm make_form(const FieldSpec& spec, int N, long long c_value,
                            std::map<long long, UnramElem> terms) {
    FiniteField k(spec);
    LocalStandardForm sf;
    sf.spec = spec;
    sf.N = N;
    sf.alpha = choose_alpha(k);
    sf.c = ZpApprox::from_value(spec.p, N, c_value);
    sf.terms = std::move(terms);
    return sf;
}

LocalUnit unit_one(long long p, int N) {
    LocalUnit y;
    y.e = ZpApprox::from_value(p, N, 0);
    FqLaurentRing L{FiniteField(FiniteField::default_spec(p, 1))};
    y.series = L.one();
    return y;
}

// Random standard form with pole orders prime to p below `max_pole`.
LocalStandardForm rand_form(const FieldSpec& spec, int N, long long max_pole,
                            std::mt19937_64& rng) {
    FiniteField k(spec);
    std::map<long long, UnramElem> terms;
    for (long long i = 1; i <= max_pole; ++i) {
        if (i % spec.p == 0 || rng() % 2) continue;
        UnramElem e{std::vector<FFElem>(N, k.zero())};
        bool nz = false;
        for (int j = 0; j < N; ++j) {
            e.digits[j] = rand_ff(k, rng);
            nz = nz || !k.is_zero(e.digits[j]);
        }
        if (nz) terms.emplace(i, std::move(e));
    }
    return make_form(spec, N, static_cast<long long>(rng() % 4), std::move(terms));
}

// Random one-unit with enough known coefficients for the factor window.
LocalUnit rand_unit(const FieldSpec& spec, int N, long long known_to,
                    std::mt19937_64& rng) {
    FiniteField k(spec);
    FqLaurentRing L{k};
    std::vector<FFElem> c{k.one()};
    for (long long e = 1; e < known_to; ++e) c.push_back(rand_ff(k, rng));
    LocalUnit y;
    y.e = ZpApprox::from_value(spec.p, N, static_cast<long long>(rng() % 8));
    y.series = L.make(0, std::move(c), false, known_to);
    return y;
}

}  // namespace

TEST_CASE("symbol: frozen values at p = 3") {
    FieldSpec spec = FiniteField::default_spec(3, 1);
    FiniteField k(spec);
    UnramRing U(spec, 1);
    FqLaurentRing L{k};

    // sf = {1 -> [1]}, y = 1 - T: value -1 = 2 mod 3
    auto sf = make_form(spec, 1, 0, {{1, U.one()}});
    LocalUnit y;
    y.e = ZpApprox::from_value(3, 1, 0);
    y.series = L.make(0, {k.one(), k.from_int(-1)}, true);
    CHECK(symbol_residue(sf, y, 1).value == 2);
    CHECK(symbol_sum(sf, y, 1).value == 2);

    // sf = (c = 1), y = T: c * e * Tr(beta) = 1
    auto sfc = make_form(spec, 1, 1, {});
    LocalUnit t;
    t.e = ZpApprox::from_value(3, 1, 1);
    t.series = L.one();
    CHECK(symbol_residue(sfc, t, 1).value == 1);
    CHECK(symbol_sum(sfc, t, 1).value == 1);
}

TEST_CASE("symbol: zero arguments pair to zero") {
    std::mt19937_64 rng(89);
    FieldSpec spec = FiniteField::default_spec(2, 2);
    auto zero_sf = make_form(spec, 2, 0, {});
    for (int t = 0; t < 10; ++t) {
        auto y = rand_unit(spec, 2, 24, rng);
        CHECK(symbol_residue(zero_sf, y, 2).value == 0);
        CHECK(symbol_sum(zero_sf, y, 2).value == 0);
        auto sf = rand_form(spec, 2, 5, rng);
        LocalUnit one;
        one.e = ZpApprox::from_value(2, 2, 0);
        one.series = FqLaurentRing{FiniteField(spec)}.one();
        CHECK(symbol_residue(sf, one, 2).value == 0);
    }
}

TEST_CASE("symbol: two formulas agree on random pairs") {
    std::mt19937_64 rng(97);
    for (auto [p, f] : {std::pair<long long, int>{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        FieldSpec spec = FiniteField::default_spec(p, f);
        for (int t = 0; t < 25; ++t) {
            auto sf = rand_form(spec, 2, 5, rng);
            auto y = rand_unit(spec, 2, 5 * p + 8, rng);
            for (int n = 1; n <= 2; ++n)
                CHECK(symbol_residue(sf, y, n) == symbol_sum(sf, y, n));
        }
    }
}

TEST_CASE("symbol: bilinearity in the unit") {
    std::mt19937_64 rng(101);
    FieldSpec spec = FiniteField::default_spec(3, 1);
    FqLaurentRing L{FiniteField(spec)};
    ZpRing zp(3, 2);
    for (int t = 0; t < 15; ++t) {
        auto sf = rand_form(spec, 2, 4, rng);
        auto y1 = rand_unit(spec, 2, 40, rng);
        auto y2 = rand_unit(spec, 2, 40, rng);
        LocalUnit y12;
        y12.e = ZpApprox::from_value(3, 2, zp.add(y1.e.value, y2.e.value));
        y12.series = L.mul(y1.series, y2.series);
        auto lhs = symbol_residue(sf, y12, 2).value;
        auto rhs = zp.add(symbol_residue(sf, y1, 2).value,
                          symbol_residue(sf, y2, 2).value);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("symbol: additivity and coboundary invariance in the form") {
    std::mt19937_64 rng(103);
    FieldSpec spec = FiniteField::default_spec(2, 1);
    auto W = make_witt_laurent(spec, 2);
    const auto& L = W.coeff_ring();
    ZpRing zp(2, 2);
    for (int t = 0; t < 10; ++t) {
        auto sf1 = rand_form(spec, 2, 3, rng);
        auto sf2 = rand_form(spec, 2, 3, rng);
        auto y = rand_unit(spec, 2, 40, rng);
        auto sum =
            reduce_local(W, W.add(eval_local_form(W, sf1), eval_local_form(W, sf2)));
        CHECK(symbol_residue(sum.form, y, 2).value ==
              zp.add(symbol_residue(sf1, y, 2).value,
                     symbol_residue(sf2, y, 2).value));
        // adding a coboundary leaves the pairing unchanged
        WittLaurent::Vec w{zpt::testutil::rand_poly(L, rng, -2, 2),
                           zpt::testutil::rand_poly(L, rng, -2, 2)};
        auto moved = reduce_local(W, W.add(eval_local_form(W, sf1), W.wp(w)));
        CHECK(symbol_residue(moved.form, y, 2) == symbol_residue(sf1, y, 2));
    }
}

TEST_CASE("symbol: level 1 equals the classical residue formula") {
    std::mt19937_64 rng(107);
    for (auto [p, f] : {std::pair<long long, int>{2, 1}, {3, 1}, {2, 2}}) {
        FieldSpec spec = FiniteField::default_spec(p, f);
        FiniteField k(spec);
        FqLaurentRing L{k};
        for (int t = 0; t < 20; ++t) {
            auto sf = rand_form(spec, 1, 5, rng);
            auto y = rand_unit(spec, 1, 30, rng);
            // x0 = c*alpha + sum c_i T^{-i} on residue coordinates
            auto x0 = L.monomial(k.mul_int(sf.alpha, sf.c.value), 0);
            for (const auto& [i, ci] : sf.terms)
                x0 = L.add(x0, L.monomial(ci.digits[0], -i));
            // dy/y = e/T + u'/u
            auto dlog = L.mul(L.derivative(y.series), invert_unit(L, y.series, 20));
            auto res = k.mul_int(L.residue(L.mul(x0, dlog)),
                                 1);
            long long classical =
                (k.trace(res) + y.e.value * k.trace(L.coeff(x0, 0))) % p;
            CHECK(symbol_residue(sf, y, 1).value == classical);
        }
    }
}

TEST_CASE("conductor exponents: frozen values") {
    ValuationProfile vp;
    vp.p = 2;
    vp.N = 2;
    vp.v = {{1, 1}, {3, 0}};
    CHECK(conductor_exponent(vp, 1) == 4);
    CHECK(conductor_exponent(vp, 2) == 7);
    CHECK(conductor_exponent(vp, 3) == 13);

    ValuationProfile empty{2, 2, {}};
    for (int n = 1; n <= 3; ++n) CHECK(conductor_exponent(empty, n) == 0);

    // single slope d: u_n = 1 + d p^{n-1}
    for (long long p : {2LL, 3LL}) {
        for (long long d = 1; d <= 5; ++d) {
            if (d % p == 0) continue;
            ValuationProfile ur{p, 3, {{d, 0}}};
            long long pw = 1;
            for (int n = 1; n <= 4; ++n) {
                CHECK(conductor_exponent(ur, n) == 1 + d * pw);
                pw *= p;
            }
        }
    }
}

TEST_CASE("ramification breaks: frozen values") {
    ValuationProfile vp{2, 2, {{1, 1}, {3, 0}}};
    CHECK(ramification_break(vp, 0).raw == 0);
    CHECK(ramification_break(vp, 12).raw == 2);
    CHECK(ramification_break(vp, 1).raw == -1);
    CHECK(ramification_break(vp, 1).clamped == 0);

    ValuationProfile single{3, 3, {{1, 0}}};
    CHECK(ramification_break(single, 0).raw == 0);
    CHECK(ramification_break(single, 3).raw == 1);
    CHECK(ramification_break(single, 9).raw == 2);

    ValuationProfile empty{2, 2, {}};
    CHECK_THROWS_AS(ramification_break(empty, 0), empty_profile);
}

TEST_CASE("conductor and break monotonicity") {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 20; ++t) {
        long long p = (t % 2) ? 2 : 3;
        ValuationProfile vp{p, 3, {}};
        for (long long i = 1; i <= 9; ++i) {
            if (i % p == 0 || rng() % 2) continue;
            vp.v.emplace(i, static_cast<long long>(rng() % 3));
        }
        if (vp.v.empty()) vp.v.emplace(1, 0);
        for (int n = 1; n <= 3; ++n)
            CHECK(conductor_exponent(vp, n) <= conductor_exponent(vp, n + 1));
        for (long long r = 1; r < 20; ++r)
            CHECK(ramification_break(vp, r).raw <= ramification_break(vp, r + 1).raw);
    }
}

TEST_CASE("brute-force conductor agrees with the formula") {
    std::mt19937_64 rng(113);
    for (long long p : {2LL, 3LL}) {
        FieldSpec spec = FiniteField::default_spec(p, 1);
        FiniteField k(spec);
        UnramRing U(spec, 2);
        for (int t = 0; t < 6; ++t) {
            auto sf = rand_form(spec, 2, 4, rng);
            for (int n = 1; n <= 2; ++n) {
                auto predicted = conductor_exponent(profile_of(sf), n);
                CHECK(conductor_via_symbol(sf, n, predicted + 2) == predicted);
            }
        }
        // zero form pairs trivially
        auto zero_sf = make_form(spec, 2, 0, {});
        CHECK(conductor_via_symbol(zero_sf, 2, 4) == 0);
        // all valuations >= n: trivial at level n
        UnramElem deep{std::vector<FFElem>{k.zero(), k.one()}};
        auto sfd = make_form(spec, 2, 0, {{1, deep}});
        CHECK(conductor_via_symbol(sfd, 1, 6) == 0);
        CHECK_THROWS_AS(conductor_via_symbol(sfd, 2, 0), bound_too_small);
    }
}
