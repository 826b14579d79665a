#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "zpt/fq.hpp"
#include "zpt/unram.hpp"
#include "zpt/zq.hpp"

using namespace zpt;
using zpt::testutil::rand_ff;
using zpt::testutil::rand_ff_nonzero;

TEST_CASE("F4 multiplication table") {
    FiniteField k(FiniteField::default_spec(2, 2));
    CHECK(k.spec().modulus == std::vector<long long>{1, 1, 1});
    auto w = k.element(2);
    CHECK(k.eq(k.mul(w, w), k.element(3)));          // w^2 = w + 1
    CHECK(k.eq(k.mul(w, k.element(3)), k.one()));    // w * (w+1) = 1
    CHECK(k.eq(k.add(w, w), k.zero()));
    CHECK(k.index(k.frobenius(w)) == 3);
}

TEST_CASE("trace values and canonical alpha") {
    FiniteField f2(FiniteField::default_spec(2, 1));
    FiniteField f4(FiniteField::default_spec(2, 2));
    FiniteField f9(FiniteField::default_spec(3, 2));
    CHECK(f2.trace(f2.one()) == 1);
    CHECK(f4.trace(f4.one()) == 0);
    CHECK(f4.trace(f4.element(2)) == 1);  // Tr(w) = w + w^2 = 1
    CHECK(f9.trace(f9.one()) == 2);
    CHECK(choose_alpha(f2) == f2.one());
    CHECK(f4.index(choose_alpha(f4)) == 2);
    CHECK(choose_alpha(f9) == f9.one());
    // additivity of trace
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto a = rand_ff(f9, rng), b = rand_ff(f9, rng);
        CHECK(f9.trace(f9.add(a, b)) == (f9.trace(a) + f9.trace(b)) % 3);
        CHECK(f9.trace(f9.frobenius(a)) == f9.trace(a));
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (auto [p, f] : {std::pair<long long, int>{2, 1}, {2, 2}, {2, 3},
                        {3, 2}, {5, 1}, {7, 2}}) {
        FiniteField k(FiniteField::default_spec(p, f));
        for (int t = 0; t < 100; ++t) {
            auto a = rand_ff(k, rng), b = rand_ff(k, rng), c = rand_ff(k, rng);
            CHECK(k.eq(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c)));
            CHECK(k.eq(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c))));
            CHECK(k.eq(k.mul(a, b), k.mul(b, a)));
            CHECK(k.eq(k.add(a, k.neg(a)), k.zero()));
            if (!k.is_zero(a)) CHECK(k.eq(k.mul(a, k.inv(a)), k.one()));
            // Frobenius is a p-th power homomorphism of order f
            CHECK(k.eq(k.frobenius(a), k.pow(a, p)));
            CHECK(k.eq(k.frobenius(k.inv_frobenius(a)), a));
            auto x = a;
            for (int i = 0; i < f; ++i) x = k.frobenius(x);
            CHECK(k.eq(x, a));
        }
    }
}

TEST_CASE("field spec validation") {
    CHECK_THROWS_AS(FiniteField((FieldSpec{4, 1, {0, 1}})), zpt::error);
    CHECK_THROWS_AS(FiniteField((FieldSpec{2, 2, {1, 0, 1}})), zpt::error);  // (t+1)^2
    CHECK(poly_irreducible_mod_p({1, 1, 1}, 2));
    CHECK(!poly_irreducible_mod_p({1, 0, 1}, 2));
    CHECK(is_prime(7));
    CHECK(!is_prime(9));
}

TEST_CASE("Zq Teichmueller lift is multiplicative") {
    std::mt19937_64 rng(13);
    for (auto [p, f, N] : {std::tuple<long long, int, int>{2, 2, 3}, {3, 2, 2}, {5, 1, 3}}) {
        ZqRing zq(FiniteField::default_spec(p, f), N);
        const auto& k = zq.residue_field();
        for (int t = 0; t < 40; ++t) {
            auto a = rand_ff(k, rng), b = rand_ff(k, rng);
            CHECK(zq.eq(zq.mul(zq.teich(a), zq.teich(b)), zq.teich(k.mul(a, b))));
            CHECK(k.eq(zq.reduce(zq.teich(a)), a));
            // q-th power fixes the Teichmueller section
            CHECK(zq.eq(zq.pow(zq.teich(a), k.q()), zq.teich(a)));
        }
    }
}

TEST_CASE("Zq digits round trip and Frobenius") {
    std::mt19937_64 rng(17);
    ZqRing zq(FiniteField::default_spec(2, 2), 3);
    const auto& k = zq.residue_field();
    for (int t = 0; t < 60; ++t) {
        ZqElem x{{static_cast<long long>(rng() % 8), static_cast<long long>(rng() % 8)}};
        auto d = zq.digits(x);
        CHECK(d.size() == 3);
        CHECK(zq.eq(zq.from_digits(d), x));
        // Frobenius lifts x -> x^p on the residue field
        CHECK(k.eq(zq.reduce(zq.frobenius(x)), k.frobenius(zq.reduce(x))));
        // and acts digitwise
        auto df = zq.digits(zq.frobenius(x));
        for (int j = 0; j < 3; ++j) CHECK(k.eq(df[j], k.frobenius(d[j])));
    }
}

TEST_CASE("Zq trace examples") {
    ZqRing zq4(FiniteField::default_spec(2, 2), 2);
    auto w = zq4.residue_field().element(2);
    CHECK(zq4.trace(zq4.teich(w)) == 3);  // [w] + [w^2] = -1 mod 4
    CHECK(zq4.trace(zq4.one()) == 2);
    ZpApprox tr = ZpApprox::from_value(2, 2, zq4.trace(zq4.teich(w)));
    CHECK(tr.digits() == std::vector<long long>{1, 1});
}

TEST_CASE("Zq exact division by p") {
    ZqRing zq(FiniteField::default_spec(3, 2), 3);
    auto x = zq.from_int(6);
    CHECK(zq.divisible(x, 1));
    CHECK(!zq.divisible(x, 2));
    CHECK(zq.eq(zq.div_pow_p(x, 1), zq.from_int(2)));
    CHECK_THROWS_AS(zq.div_pow_p(zq.one(), 1), not_divisible);
    CHECK(zq.valuation(zq.zero()) == 3);
    CHECK(zq.valuation(zq.mul_int(zq.one(), 9)) == 2);
}

TEST_CASE("UnramRing digit arithmetic matches ZqRing") {
    std::mt19937_64 rng(19);
    UnramRing U(FiniteField::default_spec(3, 2), 2);
    const auto& k = U.field();
    for (int t = 0; t < 60; ++t) {
        UnramElem a{{rand_ff(k, rng), rand_ff(k, rng)}};
        UnramElem b{{rand_ff(k, rng), rand_ff(k, rng)}};
        CHECK(U.eq(U.from_zq(U.zq().add(U.to_zq(a), U.to_zq(b))), U.add(a, b)));
        CHECK(U.eq(U.add(a, U.neg(a)), U.zero()));
        CHECK(U.eq(U.from_zq(U.to_zq(a)), a));
        // multiplying by p shifts the valuation up
        if (!U.is_zero(a)) {
            auto pa = U.mul_int(a, 3);
            if (U.valuation(a) + 1 < 2) CHECK(U.valuation(pa) == U.valuation(a) + 1);
        }
    }
    // valuation reads off the digits directly
    UnramElem v{{k.zero(), k.one()}};
    CHECK(U.valuation(v) == 1);
    CHECK(U.valuation(U.zero()) == 2);
    CHECK(!U.valuation_defined(U.zero()));
    // Frobenius fixes Z_p, twists digits
    CHECK(U.eq(U.frobenius(U.from_integer(5)), U.from_integer(5)));
    auto g = U.teichmuller(k.gen());
    CHECK(U.eq(U.frobenius(g), U.teichmuller(k.frobenius(k.gen()))));
}
