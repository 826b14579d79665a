#pragma once

#include <random>
#include <vector>

#include "zpt/laurent.hpp"
#include "zpt/fq.hpp"

namespace zpt::testutil {

inline FFElem rand_ff(const FiniteField& k, std::mt19937_64& rng) {
    return k.element(static_cast<long long>(rng() % k.q()));
}

inline FFElem rand_ff_nonzero(const FiniteField& k, std::mt19937_64& rng) {
    return k.element(1 + static_cast<long long>(rng() % (k.q() - 1)));
}

// Inexact series with support in [lo, known_to).
inline Laurent<FiniteField> rand_series(const LaurentRing<FiniteField>& L,
                                        std::mt19937_64& rng, long long lo,
                                        long long known_to) {
    std::vector<FFElem> c;
    for (long long e = lo; e < known_to; ++e)
        c.push_back(rand_ff(L.base(), rng));
    return L.make(lo, std::move(c), false, known_to);
}

// Exact Laurent polynomial with support in [lo, hi].
inline Laurent<FiniteField> rand_poly(const LaurentRing<FiniteField>& L,
                                      std::mt19937_64& rng, long long lo,
                                      long long hi) {
    std::vector<FFElem> c;
    for (long long e = lo; e <= hi; ++e)
        c.push_back(rand_ff(L.base(), rng));
    return L.make(lo, std::move(c), true);
}

}  // namespace zpt::testutil
