#pragma once

#include <map>
#include <vector>

#include "zpt/series.hpp"
#include "zpt/unram.hpp"
#include "zpt/witt.hpp"
#include "zpt/witt_rat.hpp"

namespace zpt {

// Normal form of a length-N Witt vector over k((T)) modulo wp(W_N(k((T)))):
// c * [alpha] + sum_i c_i * [T^{-i}], with i >= 1 coprime to p, c in Z/p^N,
// c_i in Z_q/p^N nonzero, alpha the canonical trace-nonzero element of k.
struct LocalStandardForm {
    FieldSpec spec;
    int N = 1;
    FFElem alpha;
    ZpApprox c;
    std::map<long long, UnramElem> terms;  // pole order -> coefficient
};

// Same normal form over k(X) (projective line, split places): one pole block
// per place.  Place key: index of the root in the field enumeration, -1 for
// the place at infinity (local parameter 1/X).
struct GlobalStandardForm {
    FieldSpec spec;
    int N = 1;
    FFElem alpha;
    ZpApprox c;
    std::map<long long, std::map<long long, UnramElem>> places;
};

// Scalar (length-1) reduction data for one coordinate: f = m*alpha
// + sum_i poles[i] * T^{-i} + (w^p - w) up to the working precision.
struct ScalarReduction {
    long long m = 0;
    std::map<long long, FFElem> poles;
    FqSeries witness;
};

// Reduce a scalar Laurent series; `budget` caps the exponents considered
// (the positive-tail witness is truncated there).
ScalarReduction reduce_scalar(const FqLaurentRing& L, const FqSeries& f,
                              const FFElem& alpha, long long budget);

struct LocalReduction {
    LocalStandardForm form;
    std::vector<FqSeries> witness;  // x = eval(form) + wp(witness)
};

// Working precision used when the caller does not pin one: deep enough for
// every Verschiebung stage of the deepest pole, plus slack.
long long default_budget(const WittLaurent& W, const std::vector<FqSeries>& x);

// Stagewise (V-adic) reduction to the normal form.  Throws
// precision_exhausted when the inputs do not carry enough coefficients.
LocalReduction reduce_local(const WittLaurent& W, const std::vector<FqSeries>& x,
                            long long budget = -1);

// Re-expand a normal form to a Witt vector (exact).
std::vector<FqSeries> eval_local_form(const WittLaurent& W,
                                      const LocalStandardForm& sf);

struct WpMembership {
    bool member = false;
    std::vector<FqSeries> witness;  // valid when member
};
WpMembership in_wp_image(const WittLaurent& W, const std::vector<FqSeries>& x,
                         long long budget = -1);

struct GlobalScalarReduction {
    long long m = 0;
    std::map<long long, std::map<long long, FFElem>> poles;  // place -> order -> coeff
    RatFunc witness;
};
GlobalScalarReduction reduce_scalar_global(const RatFuncRing& R, const RatFunc& f,
                                           const FFElem& alpha);

struct GlobalReduction {
    GlobalStandardForm form;
    std::vector<RatFunc> witness;
};

// Exact global reduction over k(X); denominators must split over k.
GlobalReduction reduce_global_p1(const WittRat& W, const std::vector<RatFunc>& x);

std::vector<RatFunc> eval_global_form(const WittRat& W,
                                      const GlobalStandardForm& sf);

}  // namespace zpt
