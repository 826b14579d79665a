#include "zpt/tower.hpp"

#include <algorithm>
#include <array>

namespace zpt {

namespace {

bigint ipow(long long b, long long e) {
    bigint r = 1;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

long long u_from_pairs(long long p, const std::map<long long, long long>& pairs,
                       long long n) {
    long long best = -1;
    for (const auto& [i, v] : pairs) {
        if (v >= n) continue;
        long long t = i;
        for (long long s = 0; s < n - 1 - v; ++s) t *= p;
        best = std::max(best, t);
    }
    return best < 0 ? 0 : best + 1;
}

bool place_trivial(const PlaceProfile& pl) {
    return pl.procedural ? pl.stream.empty() : pl.finite.empty();
}

// quadratic through three exact points (x_i, y_i)
struct Quad {
    bigrat a, b, c;
};
Quad fit_quadratic(const std::array<std::pair<bigint, bigint>, 3>& pts) {
    // Gaussian elimination on the 3x4 system [x^2 x 1 | y]
    bigrat M[3][4];
    for (int r = 0; r < 3; ++r) {
        bigrat x = bigrat(pts[r].first);
        M[r][0] = x * x;
        M[r][1] = x;
        M[r][2] = 1;
        M[r][3] = bigrat(pts[r].second);
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        while (piv < 3 && M[piv][col] == 0) ++piv;
        ZPT_CHECK(piv < 3, "degenerate quadratic fit");
        if (piv != col)
            for (int j = 0; j < 4; ++j) std::swap(M[piv][j], M[col][j]);
        for (int r = 0; r < 3; ++r) {
            if (r == col || M[r][col] == 0) continue;
            bigrat f = M[r][col] / M[col][col];
            for (int j = col; j < 4; ++j) M[r][j] -= f * M[col][j];
        }
    }
    return Quad{M[0][3] / M[0][0], M[1][3] / M[1][1], M[2][3] / M[2][2]};
}

}  // namespace

long long place_u(const RamificationProfile& rp, const PlaceProfile& pl,
                  long long n) {
    if (n < 1) throw bad_input("conductor level must be >= 1");
    if (!pl.procedural) return u_from_pairs(rp.p, pl.finite, n);
    if (n > pl.horizon)
        throw horizon_too_small("stream does not determine this level");
    std::map<long long, long long> pairs;
    for (const auto& [i, v] : pl.stream) pairs.emplace(i, v);
    return u_from_pairs(rp.p, pairs, n);
}

std::vector<GenusLevel> genus_sequence(const RamificationProfile& rp,
                                       long long n_max) {
    if (n_max < 1) throw bad_input("need at least one level");
    if (rp.g0 < 0 || rp.nc < 0) throw bad_input("negative base invariants");
    bool ramified = false;
    for (const auto& pl : rp.places) ramified = ramified || !place_trivial(pl);
    if (!ramified) throw constant_tower("no ramified place in the profile");

    const long long p = rp.p;
    std::vector<GenusLevel> out;
    out.reserve(n_max);
    bigint cond_acc = 0;  // sum_P deg_P sum_{i<=n} phi(p^i) u_{P,i}
    for (long long n = 1; n <= n_max; ++n) {
        GenusLevel lvl;
        lvl.n = n;
        bigint phi = ipow(p, n) - ipow(p, n - 1);
        for (const auto& pl : rp.places) {
            long long u = place_u(rp, pl, n);
            lvl.u.push_back(u);
            lvl.conductor_degree += bigint(pl.degree) * u;
            cond_acc += bigint(pl.degree) * phi * u;
        }
        // second route: the whole double sum from scratch
        bigint full = 0;
        for (long long i = 1; i <= n; ++i) {
            bigint phi_i = ipow(p, i) - ipow(p, i - 1);
            for (const auto& pl : rp.places)
                full += bigint(pl.degree) * phi_i * place_u(rp, pl, i);
        }
        ZPT_CHECK(full == cond_acc, "conductor sum routes disagree");
        bigint rhs = ipow(p, n) * (2 * rp.g0 - 2) + cond_acc;
        bigint denom = ipow(p, std::min(rp.nc, n));
        if (rhs % denom != 0)
            throw non_integral_genus("conductor sum not divisible by p^nc");
        lvl.two_g_minus_2 = rhs / denom;
        bigint t = lvl.two_g_minus_2 + 2;
        if (t % 2 != 0) throw non_integral_genus("odd degree-2 invariant");
        lvl.g = t / 2;
        if (lvl.g < 0) throw non_integral_genus("negative genus");
        out.push_back(std::move(lvl));
    }
    return out;
}

bigrat genus_lower_bound(const RamificationProfile& rp, long long n) {
    const long long p = rp.p;
    long long nu = -1;
    for (const auto& pl : rp.places) {
        if (!pl.procedural) {
            for (const auto& [i, v] : pl.finite)
                nu = (nu < 0) ? v : std::min(nu, v);
        } else {
            for (const auto& [i, v] : pl.stream)
                nu = (nu < 0) ? v : std::min(nu, v);
        }
    }
    if (nu < 0) throw constant_tower("no ramified place in the profile");
    if (n < nu) throw bad_input("bound needs n >= unramified depth");

    bigrat rhs = bigrat(ipow(p, n) * (2 * rp.g0 - 2));
    rhs += bigrat(ipow(p, n) - ipow(p, nu));
    rhs += bigrat(ipow(p, nu) * (ipow(p, 2 * (n - nu)) - 1), bigint(p + 1));
    return (rhs / bigrat(ipow(p, rp.nc)) + 2) / 2;
}

StabilityReport stability_classify(const RamificationProfile& rp,
                                   long long horizon) {
    const long long p = rp.p;
    StabilityReport rep;
    bool any_proc = false;
    long long H = horizon;
    long long max_v = 0;
    for (const auto& pl : rp.places) {
        if (pl.procedural) {
            any_proc = true;
            H = std::min(H, pl.horizon);
        } else {
            for (const auto& [i, v] : pl.finite) max_v = std::max(max_v, v);
        }
    }
    rep.horizon = H;

    auto fit_and_span = [&](const std::vector<GenusLevel>& lv, long long top) {
        // fit on top-2..top (1-based level n == lv[n-1]), extend downwards
        std::array<std::pair<bigint, bigint>, 3> pts;
        for (int t = 0; t < 3; ++t)
            pts[t] = {ipow(p, top - 2 + t), lv[top - 3 + t].g};
        auto q = fit_quadratic(pts);
        long long n0 = top;
        while (n0 > 1) {
            bigrat x = bigrat(ipow(p, n0 - 1));
            if (q.a * x * x + q.b * x + q.c != bigrat(lv[n0 - 2].g)) break;
            --n0;
        }
        return std::make_pair(q, n0);
    };

    if (!any_proc) {
        long long start = std::max<long long>({1, rp.nc, max_v + 1});
        auto lv = genus_sequence(rp, start + 5);
        auto [q, n0] = fit_and_span(lv, start + 5);
        ZPT_CHECK(n0 <= start, "finite profile genus not quadratic past start");
        rep.verdict = StabilityReport::Verdict::Stable;
        rep.has_fit = true;
        rep.a = q.a;
        rep.b = q.b;
        rep.c = q.c;
        rep.start = start;
        rep.cond_quadratic = true;
        rep.cond_sup_attained = true;
        rep.cond_u_linear = true;
        rep.horizon = start + 5;
        return rep;
    }

    if (H < 3) return rep;  // Unknown; nothing decidable yet
    auto lv = genus_sequence(rp, H);

    auto [q, n0] = fit_and_span(lv, H);
    if (H - n0 + 1 >= 6) {
        rep.cond_quadratic = true;
        rep.has_fit = true;
        rep.a = q.a;
        rep.b = q.b;
        rep.c = q.c;
        rep.start = n0;
    }

    bool all_declared = true, all_attained = true;
    for (const auto& pl : rp.places) {
        if (!pl.procedural || place_trivial(pl)) continue;
        all_declared = all_declared && pl.sup_declared;
        all_attained = all_attained && pl.sup_attained;
    }
    if (all_declared) rep.cond_sup_attained = all_attained;

    if (H >= 3) {
        bool linear = true;
        for (const auto& pl : rp.places) {
            if (place_trivial(pl)) continue;
            bigrat A(bigint(place_u(rp, pl, H) - 1), ipow(p, H));
            for (long long n = H - 2; n <= H; ++n)
                linear = linear &&
                         bigrat(bigint(place_u(rp, pl, n) - 1)) ==
                             A * bigrat(ipow(p, n));
        }
        rep.cond_u_linear = linear;
    }

    auto known_diff = [&](std::optional<bool> x, std::optional<bool> y) {
        return x.has_value() && y.has_value() && *x != *y;
    };
    rep.disagreement = known_diff(rep.cond_quadratic, rep.cond_sup_attained) ||
                       known_diff(rep.cond_quadratic, rep.cond_u_linear) ||
                       known_diff(rep.cond_sup_attained, rep.cond_u_linear);

    if (rep.cond_quadratic.has_value())
        rep.verdict = *rep.cond_quadratic ? StabilityReport::Verdict::Stable
                                          : StabilityReport::Verdict::Unstable;
    return rep;
}

LDegree l_degree(const RamificationProfile& rp, long long m) {
    if (m < 1) throw bad_input("character level must be >= 1");
    LDegree out;
    bigint acc = 2 * rp.g0 - 2;
    bool any = false;
    for (const auto& pl : rp.places) {
        long long u = place_u(rp, pl, m);
        any = any || u > 0;
        acc += bigint(pl.degree) * u;
    }
    out.value = acc;
    out.degenerate = !any;
    return out;
}

TowerAnalysis nc_nu(const GlobalStandardForm& sf) {
    UnramRing U(sf.spec, sf.N);
    TowerAnalysis out;
    long long minv = sf.N;
    for (const auto& [place, orders] : sf.places)
        for (const auto& [i, ci] : orders)
            minv = std::min<long long>(minv, U.valuation(ci));
    out.sentinel = minv == sf.N;
    out.n_u = out.n_c = minv;
    out.c_warning = sf.c.valuation() < minv;
    return out;
}

RamificationProfile profile_from_form(const GlobalStandardForm& sf, long long g0) {
    auto an = nc_nu(sf);
    if (an.sentinel) throw constant_tower("form has no ramified coefficient");
    RamificationProfile rp;
    rp.p = sf.spec.p;
    rp.g0 = g0;
    rp.nc = an.n_c;
    UnramRing U(sf.spec, sf.N);
    for (const auto& [place, orders] : sf.places) {
        PlaceProfile pl;
        pl.label = place == -1 ? "inf" : "P" + std::to_string(place);
        pl.degree = 1;
        for (const auto& [i, ci] : orders) {
            long long v = U.valuation(ci);
            if (v < sf.N) pl.finite.emplace(i, v);
        }
        if (!pl.finite.empty()) rp.places.push_back(std::move(pl));
    }
    return rp;
}

GlobalStandardForm unit_root_family(const FieldSpec& spec,
                                    const std::map<long long, FFElem>& coeffs,
                                    int N) {
    FiniteField k(spec);
    UnramRing U(spec, N);
    GlobalStandardForm sf;
    sf.spec = spec;
    sf.N = N;
    sf.alpha = choose_alpha(k);
    sf.c = ZpApprox::from_value(spec.p, N, 0);
    long long d = 0;
    for (const auto& [i, b] : coeffs) {
        if (i < 1 || i % spec.p == 0)
            throw bad_input("exponents must be >= 1 and coprime to p");
        if (k.is_zero(b)) continue;
        sf.places[-1].emplace(i, U.teichmuller(b));
        d = std::max(d, i);
    }
    if (d == 0) throw bad_input("family needs a nonzero coefficient");
    if (d % spec.p == 0) throw bad_degree("leading exponent divisible by p");
    return sf;
}

bigint unit_root_genus(long long p, long long d, long long n) {
    if (d < 1 || d % p == 0) throw bad_degree("degree must be coprime to p");
    if (n < 1) throw bad_input("level must be >= 1");
    bigint num = bigint(d) * (ipow(p, 2 * n) - 1);
    ZPT_CHECK(num % (p + 1) == 0, "closed-form numerator not divisible");
    bigint t = num / (p + 1) - ipow(p, n) - 1;  // 2g - 2
    bigint g2 = t + 2;
    ZPT_CHECK(g2 % 2 == 0, "closed-form genus not integral");
    return g2 / 2;
}

ZpApprox frobenius_at(const FieldSpec& base, const std::vector<RatFunc>& x,
                      const FieldSpec& point_field, const FFElem& z, int n) {
    if (static_cast<int>(x.size()) < n)
        throw precision_mismatch("vector shorter than the requested level");
    RatFuncRing R{FiniteField(base)};
    FiniteField kz(point_field);
    auto emb = make_embedding(R.field(), kz);
    std::vector<FFElem> vals;
    vals.reserve(n);
    for (int j = 0; j < n; ++j) vals.push_back(eval_ratfunc(R, x[j], emb, z));
    auto Wz = make_witt_fq(point_field, n);
    auto tr = trace_witt_to_zp(Wz, vals);
    return ZpApprox::from_value(base.p, n, -tr.value);
}

PlaceProfile discrepancy_stream_place(long long p, long long horizon) {
    PlaceProfile pl;
    pl.label = "stream";
    pl.procedural = true;
    pl.horizon = horizon;
    long long pk = p;
    for (long long k = 0; k < horizon; ++k) {
        pl.stream.emplace_back(pk - 1, k);
        pk *= p;
    }
    pl.sup_declared = true;
    pl.sup_attained = false;
    pl.sup = p;
    return pl;
}

}  // namespace zpt
