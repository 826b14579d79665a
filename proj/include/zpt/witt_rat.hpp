#pragma once

#include "zpt/ratfunc.hpp"
#include "zpt/witt.hpp"

namespace zpt {

inline ZqFrac lift_elem(const RatFuncRing& c, const ZqFracRing& l, const RatFunc& a) {
    return l.lift(c, a);
}
inline RatFunc reduce_elem(const RatFuncRing& c, const ZqFracRing& l, const ZqFrac& a) {
    return l.reduce(c, a);
}

// W_N(k(X)) with exact rational coordinates.
using WittRat = WittRing<RatFuncRing, ZqFracRing>;
inline WittRat make_witt_rat(const FieldSpec& spec, int N) {
    return WittRat(RatFuncRing(FiniteField(spec)), ZqFracRing(ZqRing(spec, N)), N,
                   spec.p);
}

// Coordinatewise evaluation at a point of an extension field; throws
// pole_at_point when any coordinate has a pole there (the caller must then
// re-represent the vector).
std::vector<FFElem> evaluate_witt_rat(const WittRat& W,
                                      const std::vector<RatFunc>& a,
                                      const Embedding& emb, const FFElem& z);

}  // namespace zpt
