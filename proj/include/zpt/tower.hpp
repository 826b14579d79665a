#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zpt/asw.hpp"
#include "zpt/cft.hpp"
#include "zpt/witt_rat.hpp"

namespace zpt {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Ramification data of one place of the base curve.  Finite places carry the
// full map i -> v(c_i); procedural places carry a stream of (i, v) pairs,
// complete for all v < horizon, plus declared sup metadata for the slopes
// i / p^v.
struct PlaceProfile {
    std::string label;
    long long degree = 1;  // residue degree over k
    bool procedural = false;
    std::map<long long, long long> finite;               // i -> v
    std::vector<std::pair<long long, long long>> stream;  // (i, v), v increasing
    long long horizon = 0;                                // trust bound for n
    bool sup_declared = false;
    bool sup_attained = false;
    bigrat sup = 0;
};

struct RamificationProfile {
    long long p = 2;
    long long g0 = 0;
    long long nc = 0;  // constant-field extension depth
    std::vector<PlaceProfile> places;
};

// Conductor exponent u_{P,n}; throws horizon_too_small past a stream's trust
// bound.
long long place_u(const RamificationProfile& rp, const PlaceProfile& pl,
                  long long n);

struct GenusLevel {
    long long n = 0;
    std::vector<long long> u;  // per place, profile order
    bigint conductor_degree = 0;  // sum of deg_P * u_{P,n}
    bigint two_g_minus_2 = 0;
    bigint g = 0;
};

// Exact genus sequence through the conductor-discriminant route; every
// division and parity step is asserted.
std::vector<GenusLevel> genus_sequence(const RamificationProfile& rp,
                                       long long n_max);

// Sharp general lower bound for g_n (valid for n >= n_u).
bigrat genus_lower_bound(const RamificationProfile& rp, long long n);

struct StabilityReport {
    enum class Verdict { Stable, Unstable, Unknown };
    Verdict verdict = Verdict::Unknown;
    // g_n = a p^{2n} + b p^n + c for n >= start (when has_fit)
    bool has_fit = false;
    bigrat a = 0, b = 0, c = 0;
    long long start = 0;
    // the three characterizations, evaluated independently; nullopt when the
    // data cannot decide within the horizon
    std::optional<bool> cond_quadratic;     // genus eventually quadratic in p^n
    std::optional<bool> cond_sup_attained;  // declared: slope sup is attained
    std::optional<bool> cond_u_linear;      // u_n - 1 eventually c * p^n
    bool disagreement = false;
    long long horizon = 0;
};

StabilityReport stability_classify(const RamificationProfile& rp,
                                   long long horizon);

struct LDegree {
    bigint value = 0;
    bool degenerate = false;  // no place ramified at the requested level
};
// Degree of the L-function of a character of exact level m.
LDegree l_degree(const RamificationProfile& rp, long long m);

// ---- tower data over the projective line --------------------------------

struct TowerAnalysis {
    long long n_u = 0;   // unramified depth: min coefficient valuation
    long long n_c = 0;   // constant-extension depth; equals n_u here
    bool sentinel = false;  // no ramified coefficient within precision
    bool c_warning = false;  // v(c) below every coefficient valuation
};
TowerAnalysis nc_nu(const GlobalStandardForm& sf);

// Profile of the tower defined by a (split-place) global standard form.
RamificationProfile profile_from_form(const GlobalStandardForm& sf,
                                      long long g0 = 0);

// The basic totally-ramified-at-infinity family x = sum_i [b_i X^i],
// i coprime to p, deg d coprime to p.
GlobalStandardForm unit_root_family(const FieldSpec& spec,
                                    const std::map<long long, FFElem>& coeffs,
                                    int N);
// Its genus at level n in closed form.
bigint unit_root_genus(long long p, long long d, long long n);

// Frobenius eigenvalue datum at a degree-[point_field:k] split point:
// minus the Witt-vector trace of the evaluated defining vector, mod p^n.
ZpApprox frobenius_at(const FieldSpec& base, const std::vector<RatFunc>& x,
                      const FieldSpec& point_field, const FFElem& z, int n);

// The documented stream with quadratic genus growth but unattained slope
// sup: (i_k, v_k) = (p^{k+1} - 1, k).
PlaceProfile discrepancy_stream_place(long long p, long long horizon);

}  // namespace zpt
