#include "zpt/witt.hpp"

#include "zpt/witt_rat.hpp"

namespace zpt {

std::vector<FFElem> evaluate_witt_rat(const WittRat& W,
                                      const std::vector<RatFunc>& a,
                                      const Embedding& emb, const FFElem& z) {
    W.check(a);
    std::vector<FFElem> out;
    out.reserve(a.size());
    for (const auto& coord : a)
        out.push_back(eval_ratfunc(W.coeff_ring(), coord, emb, z));
    return out;
}

std::vector<FFElem> trace_witt(const WittFq& W, const std::vector<FFElem>& a) {
    const auto& k = W.coeff_ring();
    auto s = W.zero();
    auto t = a;
    for (int j = 0; j < k.f(); ++j) {
        s = W.add(s, t);
        t = W.F(t);
    }
    return s;
}

ZpApprox trace_witt_to_zp(const WittFq& W, const std::vector<FFElem>& a) {
    return witt_prime_value(W.coeff_ring(), trace_witt(W, a));
}

}  // namespace zpt
