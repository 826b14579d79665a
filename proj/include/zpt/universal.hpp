#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "zpt/errors.hpp"

namespace zpt {

using bigint = boost::multiprecision::cpp_int;

// Integer multivariate polynomial in x_0..x_{n-1}, y_0..y_{n-1}
// (exponent vector of length 2n, x-block first).
using MPoly = std::map<std::vector<int>, bigint>;

MPoly mp_add(const MPoly& a, const MPoly& b);
MPoly mp_sub(const MPoly& a, const MPoly& b);
MPoly mp_mul(const MPoly& a, const MPoly& b);
MPoly mp_pow(const MPoly& a, long long e);
MPoly mp_scale(const MPoly& a, const bigint& c);
MPoly mp_div_exact(const MPoly& a, const bigint& c);  // throws not_divisible
bool mp_eq(const MPoly& a, const MPoly& b);

// The universal addition / multiplication / negation polynomials of
// W_n, solved symbolically from the ghost identity with exact integer
// divisions.  Window guard: n <= 3 for p <= 3, n <= 2 for p == 5.
class UniversalPolys {
public:
    UniversalPolys(long long p, int n);

    long long p() const { return p_; }
    int arity() const { return n_; }
    const MPoly& S(int i) const { return S_.at(i); }
    const MPoly& P(int i) const { return P_.at(i); }
    const MPoly& N(int i) const { return N_.at(i); }

    // Evaluate a coordinate polynomial in any ring context providing
    // from_int / mul / add / one / zero and int_modulus().
    template <class R>
    typename R::Elem eval(const R& r, const MPoly& poly,
                          const std::vector<typename R::Elem>& xs,
                          const std::vector<typename R::Elem>& ys) const {
        auto acc = r.zero();
        for (const auto& [mono, coef] : poly) {
            bigint m = coef % r.int_modulus();
            auto term = r.from_int(static_cast<long long>(m));
            for (int v = 0; v < n_; ++v) {
                for (int e = 0; e < mono[v]; ++e) term = r.mul(term, xs[v]);
                for (int e = 0; e < mono[n_ + v]; ++e) term = r.mul(term, ys[v]);
            }
            acc = r.add(acc, term);
        }
        return acc;
    }

    template <class R>
    std::vector<typename R::Elem> oracle_add(
        const R& r, const std::vector<typename R::Elem>& a,
        const std::vector<typename R::Elem>& b) const {
        return eval_all(r, S_, a, b);
    }
    template <class R>
    std::vector<typename R::Elem> oracle_mul(
        const R& r, const std::vector<typename R::Elem>& a,
        const std::vector<typename R::Elem>& b) const {
        return eval_all(r, P_, a, b);
    }
    template <class R>
    std::vector<typename R::Elem> oracle_neg(
        const R& r, const std::vector<typename R::Elem>& a) const {
        return eval_all(r, N_, a, a);
    }

private:
    long long p_;
    int n_;
    std::vector<MPoly> S_, P_, N_;

    template <class R>
    std::vector<typename R::Elem> eval_all(
        const R& r, const std::vector<MPoly>& polys,
        const std::vector<typename R::Elem>& a,
        const std::vector<typename R::Elem>& b) const {
        std::vector<typename R::Elem> out;
        out.reserve(polys.size());
        for (const auto& poly : polys) out.push_back(eval(r, poly, a, b));
        return out;
    }
};

}  // namespace zpt
