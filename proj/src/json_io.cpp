#include "zpt/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace zpt {

namespace {

const json& need(const json& j, const char* key, const std::string& at) {
    if (!j.is_object()) throw bad_input(at + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw bad_input(at + "." + key + ": missing");
    return *it;
}

long long as_int(const json& j, const std::string& at) {
    if (!j.is_number_integer()) throw bad_input(at + ": expected an integer");
    return j.get<long long>();
}

bool as_bool(const json& j, const std::string& at) {
    if (!j.is_boolean()) throw bad_input(at + ": expected a boolean");
    return j.get<bool>();
}

std::vector<long long> as_int_list(const json& j, const std::string& at) {
    if (!j.is_array()) throw bad_input(at + ": expected an array");
    std::vector<long long> v;
    v.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        v.push_back(as_int(j[i], at + "[" + std::to_string(i) + "]"));
    return v;
}

long long parse_index_key(const std::string& key, const std::string& at) {
    try {
        size_t pos = 0;
        long long v = std::stoll(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw bad_input(at + ": key '" + key + "' is not an integer");
    }
}

json bigint_to_json(const bigint& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

std::string bigrat_str(const bigrat& v) { return v.str(); }

}  // namespace

FieldSpec parse_field_spec(const json& j, const std::string& at) {
    FieldSpec spec;
    spec.p = as_int(need(j, "p", at), at + ".p");
    spec.f = static_cast<int>(as_int(need(j, "f", at), at + ".f"));
    spec.modulus = as_int_list(need(j, "modulus", at), at + ".modulus");
    try {
        FiniteField k(spec);  // full validation
    } catch (const error& e) {
        throw bad_input(at + ": " + e.what());
    }
    return spec;
}

json field_spec_to_json(const FieldSpec& spec) {
    return json{{"p", spec.p}, {"f", spec.f}, {"modulus", spec.modulus}};
}

FFElem parse_ffelem(const json& j, const FiniteField& k, const std::string& at) {
    FFElem a{as_int_list(j, at)};
    try {
        k.check(a);
    } catch (const error& e) {
        throw bad_input(at + ": " + e.what());
    }
    return a;
}

json ffelem_to_json(const FFElem& a) { return json(a.c); }

UnramElem parse_unram(const json& j, const UnramRing& U, const std::string& at) {
    if (!j.is_array()) throw bad_input(at + ": expected an array of digits");
    UnramElem e;
    for (size_t i = 0; i < j.size(); ++i)
        e.digits.push_back(
            parse_ffelem(j[i], U.field(), at + "[" + std::to_string(i) + "]"));
    try {
        U.check(e);
    } catch (const error& er) {
        throw bad_input(at + ": " + er.what());
    }
    return e;
}

json unram_to_json(const UnramElem& a) {
    json out = json::array();
    for (const auto& d : a.digits) out.push_back(ffelem_to_json(d));
    return out;
}

ZpApprox parse_zp_digits(const json& j, long long p, int N, const std::string& at) {
    auto d = as_int_list(j, at);
    if (static_cast<int>(d.size()) != N)
        throw bad_input(at + ": expected " + std::to_string(N) + " digits");
    try {
        return ZpApprox::from_digits(p, d);
    } catch (const error& e) {
        throw bad_input(at + ": " + e.what());
    }
}

json zp_to_json(const ZpApprox& a) { return json(a.digits()); }

FqSeries parse_series(const json& j, const FiniteField& k, const std::string& at) {
    FqLaurentRing L{k};
    long long tail = as_int(need(j, "tail", at), at + ".tail");
    bool exact = as_bool(need(j, "exact", at), at + ".exact");
    const auto& cj = need(j, "coeffs", at);
    if (!cj.is_array()) throw bad_input(at + ".coeffs: expected an array");
    std::vector<FFElem> coeffs;
    for (size_t i = 0; i < cj.size(); ++i)
        coeffs.push_back(
            parse_ffelem(cj[i], k, at + ".coeffs[" + std::to_string(i) + "]"));
    long long known_to = tail + static_cast<long long>(coeffs.size());
    if (auto it = j.find("known_to"); it != j.end())
        known_to = as_int(*it, at + ".known_to");
    if (!exact && known_to < tail + static_cast<long long>(coeffs.size()))
        throw bad_input(at + ".known_to: below the stored coefficients");
    return L.make(tail, std::move(coeffs), exact, known_to);
}

json series_to_json(const FqSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.a) coeffs.push_back(ffelem_to_json(c));
    json out{{"tail", s.tail}, {"coeffs", coeffs}, {"exact", s.exact}};
    if (!s.exact) out["known_to"] = s.known_to;
    return out;
}

LocalVecFile parse_local_vec(const json& j) {
    LocalVecFile v;
    v.spec = parse_field_spec(need(j, "field", "$"), "$.field");
    v.N = static_cast<int>(as_int(need(j, "precision", "$"), "$.precision"));
    if (v.N < 1) throw bad_input("$.precision: must be >= 1");
    FiniteField k(v.spec);
    const auto& cj = need(j, "coords", "$");
    if (!cj.is_array()) throw bad_input("$.coords: expected an array");
    if (static_cast<int>(cj.size()) != v.N)
        throw bad_input("$.coords: expected " + std::to_string(v.N) + " entries");
    for (size_t i = 0; i < cj.size(); ++i)
        v.coords.push_back(
            parse_series(cj[i], k, "$.coords[" + std::to_string(i) + "]"));
    return v;
}

json local_vec_to_json(const LocalVecFile& v) {
    json coords = json::array();
    for (const auto& c : v.coords) coords.push_back(series_to_json(c));
    return json{{"field", field_spec_to_json(v.spec)},
                {"precision", v.N},
                {"coords", coords}};
}

GlobalVecFile parse_global_vec(const json& j) {
    GlobalVecFile v;
    v.spec = parse_field_spec(need(j, "field", "$"), "$.field");
    v.N = static_cast<int>(as_int(need(j, "precision", "$"), "$.precision"));
    if (v.N < 1) throw bad_input("$.precision: must be >= 1");
    RatFuncRing R{FiniteField(v.spec)};
    const auto& cj = need(j, "coords", "$");
    if (!cj.is_array()) throw bad_input("$.coords: expected an array");
    if (static_cast<int>(cj.size()) != v.N)
        throw bad_input("$.coords: expected " + std::to_string(v.N) + " entries");
    for (size_t i = 0; i < cj.size(); ++i) {
        const std::string at = "$.coords[" + std::to_string(i) + "]";
        const auto& e = cj[i];
        const auto& nj = need(e, "num", at);
        const auto& dj = need(e, "den", at);
        if (!nj.is_array() || !dj.is_array())
            throw bad_input(at + ": num/den must be coefficient arrays");
        std::vector<FFElem> num, den;
        for (size_t t = 0; t < nj.size(); ++t)
            num.push_back(parse_ffelem(nj[t], R.field(),
                                       at + ".num[" + std::to_string(t) + "]"));
        for (size_t t = 0; t < dj.size(); ++t)
            den.push_back(parse_ffelem(dj[t], R.field(),
                                       at + ".den[" + std::to_string(t) + "]"));
        try {
            v.coords.push_back(
                R.make(R.polys().make(std::move(num)), R.polys().make(std::move(den))));
        } catch (const error& er) {
            throw bad_input(at + ": " + er.what());
        }
    }
    return v;
}

LocalStandardForm parse_local_form(const json& j) {
    LocalStandardForm sf;
    sf.spec = parse_field_spec(need(j, "field", "$"), "$.field");
    sf.N = static_cast<int>(as_int(need(j, "precision", "$"), "$.precision"));
    if (sf.N < 1) throw bad_input("$.precision: must be >= 1");
    FiniteField k(sf.spec);
    UnramRing U(sf.spec, sf.N);
    sf.alpha = choose_alpha(k);
    if (auto it = j.find("alpha"); it != j.end()) {
        auto a = parse_ffelem(*it, k, "$.alpha");
        if (!k.eq(a, sf.alpha))
            throw bad_input("$.alpha: not the canonical trace-nonzero element");
    }
    sf.c = parse_zp_digits(need(j, "c", "$"), sf.spec.p, sf.N, "$.c");
    const auto& tj = need(j, "terms", "$");
    if (!tj.is_object()) throw bad_input("$.terms: expected an object");
    for (const auto& [key, val] : tj.items()) {
        long long i = parse_index_key(key, "$.terms");
        if (i < 1 || i % sf.spec.p == 0)
            throw bad_input("$.terms." + key + ": order must be >= 1 and coprime to p");
        auto ci = parse_unram(val, U, "$.terms." + key);
        if (U.is_zero(ci))
            throw bad_input("$.terms." + key + ": coefficient is zero");
        sf.terms.emplace(i, std::move(ci));
    }
    return sf;
}

json local_form_to_json(const LocalStandardForm& sf) {
    json terms = json::object();
    for (const auto& [i, ci] : sf.terms)
        terms[std::to_string(i)] = unram_to_json(ci);
    return json{{"field", field_spec_to_json(sf.spec)},
                {"precision", sf.N},
                {"alpha", ffelem_to_json(sf.alpha)},
                {"c", zp_to_json(sf.c)},
                {"terms", terms}};
}

json global_form_to_json(const GlobalStandardForm& sf) {
    FiniteField k(sf.spec);
    json places = json::array();
    for (const auto& [place, orders] : sf.places) {
        json coeffs = json::object();
        for (const auto& [i, ci] : orders)
            coeffs[std::to_string(i)] = unram_to_json(ci);
        json at;
        if (place == -1)
            at = "inf";
        else
            at = ffelem_to_json(k.element(place));
        places.push_back(json{{"at", at}, {"coeffs", coeffs}});
    }
    return json{{"field", field_spec_to_json(sf.spec)},
                {"precision", sf.N},
                {"alpha", ffelem_to_json(sf.alpha)},
                {"c", zp_to_json(sf.c)},
                {"places", places}};
}

GlobalStandardForm parse_global_form(const json& j) {
    GlobalStandardForm sf;
    sf.spec = parse_field_spec(need(j, "field", "$"), "$.field");
    sf.N = static_cast<int>(as_int(need(j, "precision", "$"), "$.precision"));
    if (sf.N < 1) throw bad_input("$.precision: must be >= 1");
    FiniteField k(sf.spec);
    UnramRing U(sf.spec, sf.N);
    sf.alpha = choose_alpha(k);
    sf.c = parse_zp_digits(need(j, "c", "$"), sf.spec.p, sf.N, "$.c");
    const auto& pj = need(j, "places", "$");
    if (!pj.is_array()) throw bad_input("$.places: expected an array");
    for (size_t t = 0; t < pj.size(); ++t) {
        const std::string at = "$.places[" + std::to_string(t) + "]";
        const auto& e = pj[t];
        const auto& aj = need(e, "at", at);
        long long place;
        if (aj.is_string()) {
            if (aj.get<std::string>() != "inf")
                throw bad_input(at + ".at: expected \"inf\" or a field element");
            place = -1;
        } else {
            place = k.index(parse_ffelem(aj, k, at + ".at"));
        }
        if (sf.places.count(place)) throw bad_input(at + ".at: duplicate place");
        const auto& cj = need(e, "coeffs", at);
        if (!cj.is_object()) throw bad_input(at + ".coeffs: expected an object");
        std::map<long long, UnramElem> orders;
        for (const auto& [key, val] : cj.items()) {
            long long i = parse_index_key(key, at + ".coeffs");
            if (i < 1 || i % sf.spec.p == 0)
                throw bad_input(at + ".coeffs." + key +
                                ": order must be >= 1 and coprime to p");
            auto ci = parse_unram(val, U, at + ".coeffs." + key);
            if (U.is_zero(ci))
                throw bad_input(at + ".coeffs." + key + ": coefficient is zero");
            orders.emplace(i, std::move(ci));
        }
        if (!orders.empty()) sf.places.emplace(place, std::move(orders));
    }
    return sf;
}

LocalUnit parse_local_unit(const json& j, const FiniteField& k, int N) {
    LocalUnit y;
    y.e = parse_zp_digits(need(j, "e", "$"), k.p(), N, "$.e");
    y.series = parse_series(need(j, "series", "$"), k, "$.series");
    FqLaurentRing L{k};
    if (L.is_zero(y.series)) throw bad_input("$.series: unit series is zero");
    return y;
}

json local_unit_to_json(const LocalUnit& y, long long) {
    return json{{"e", zp_to_json(y.e)}, {"series", series_to_json(y.series)}};
}

namespace {

PlaceProfile parse_profile_place(const json& e, const std::string& at) {
    PlaceProfile pl;
    pl.label = need(e, "label", at).is_string()
                   ? need(e, "label", at).get<std::string>()
                   : throw bad_input(at + ".label: expected a string");
    pl.degree = as_int(need(e, "degree", at), at + ".degree");
    if (pl.degree < 1) throw bad_input(at + ".degree: must be >= 1");
    if (auto it = e.find("profile"); it != e.end()) {
        if (!it->is_object()) throw bad_input(at + ".profile: expected an object");
        for (const auto& [key, val] : it->items()) {
            long long i = parse_index_key(key, at + ".profile");
            long long v = as_int(val, at + ".profile." + key);
            if (i < 1 || v < 0)
                throw bad_input(at + ".profile." + key + ": bad (i, v) pair");
            pl.finite.emplace(i, v);
        }
        return pl;
    }
    const auto& sj = need(e, "stream", at);
    if (!sj.is_array()) throw bad_input(at + ".stream: expected an array");
    pl.procedural = true;
    long long last_v = -1;
    for (size_t t = 0; t < sj.size(); ++t) {
        auto pair = as_int_list(sj[t], at + ".stream[" + std::to_string(t) + "]");
        if (pair.size() != 2 || pair[0] < 1 || pair[1] <= last_v)
            throw bad_input(at + ".stream[" + std::to_string(t) +
                            "]: expected (i, v) with v strictly increasing");
        pl.stream.emplace_back(pair[0], pair[1]);
        last_v = pair[1];
    }
    pl.horizon = last_v + 1;
    if (auto it = e.find("horizon"); it != e.end())
        pl.horizon = as_int(*it, at + ".horizon");
    if (auto it = e.find("sup_attained"); it != e.end()) {
        pl.sup_declared = true;
        pl.sup_attained = as_bool(*it, at + ".sup_attained");
        if (auto s = e.find("sup"); s != e.end()) {
            auto frac = as_int_list(*s, at + ".sup");
            if (frac.size() != 2 || frac[1] == 0)
                throw bad_input(at + ".sup: expected [num, den]");
            pl.sup = bigrat(bigint(frac[0]), bigint(frac[1]));
        }
    }
    return pl;
}

}  // namespace

TowerFile parse_tower_file(const json& j) {
    TowerFile out;
    if (j.is_object() && j.contains("field")) {
        out.form = parse_global_form(j);
        if (auto it = j.find("g0"); it != j.end()) {
            out.g0 = as_int(*it, "$.g0");
            if (out.g0 < 0) throw bad_input("$.g0: must be >= 0");
        }
        out.profile = profile_from_form(out.form, out.g0);
        if (auto it = j.find("procedural"); it != j.end())
            out.profile.places.push_back(parse_profile_place(*it, "$.procedural"));
        return out;
    }
    out.is_profile = true;
    out.profile.p = as_int(need(j, "p", "$"), "$.p");
    if (!is_prime(out.profile.p)) throw bad_input("$.p: must be prime");
    if (auto it = j.find("g0"); it != j.end())
        out.profile.g0 = as_int(*it, "$.g0");
    if (auto it = j.find("nc"); it != j.end())
        out.profile.nc = as_int(*it, "$.nc");
    if (out.profile.g0 < 0 || out.profile.nc < 0)
        throw bad_input("$: g0 and nc must be >= 0");
    const auto& pj = need(j, "places", "$");
    if (!pj.is_array()) throw bad_input("$.places: expected an array");
    for (size_t t = 0; t < pj.size(); ++t)
        out.profile.places.push_back(
            parse_profile_place(pj[t], "$.places[" + std::to_string(t) + "]"));
    out.g0 = out.profile.g0;
    return out;
}

json genus_levels_to_json(const RamificationProfile& rp,
                          const std::vector<GenusLevel>& levels) {
    json places = json::array();
    for (const auto& pl : rp.places)
        places.push_back(json{{"label", pl.label}, {"degree", pl.degree}});
    json lv = json::array();
    for (const auto& l : levels) {
        json bound;
        try {
            bound = bigrat_str(genus_lower_bound(rp, l.n));
        } catch (const error&) {
            bound = nullptr;  // below the unramified depth
        }
        lv.push_back(json{{"n", l.n},
                          {"u", l.u},
                          {"conductor_degree", bigint_to_json(l.conductor_degree)},
                          {"two_g_minus_2", bigint_to_json(l.two_g_minus_2)},
                          {"g", bigint_to_json(l.g)},
                          {"lower_bound", bound}});
    }
    return json{{"p", rp.p},
                {"g0", rp.g0},
                {"nc", rp.nc},
                {"places", places},
                {"levels", lv}};
}

std::string genus_levels_to_csv(const RamificationProfile& rp,
                                const std::vector<GenusLevel>& levels) {
    std::ostringstream os;
    os << "n";
    for (const auto& pl : rp.places) os << ",u_" << pl.label;
    os << ",conductor_degree,g,lower_bound\n";
    for (const auto& l : levels) {
        os << l.n;
        for (auto u : l.u) os << "," << u;
        os << "," << l.conductor_degree.str() << "," << l.g.str() << ",";
        try {
            os << bigrat_str(genus_lower_bound(rp, l.n));
        } catch (const error&) {
        }
        os << "\n";
    }
    return os.str();
}

json stability_to_json(const StabilityReport& rep) {
    auto verdict_name = [](StabilityReport::Verdict v) {
        switch (v) {
            case StabilityReport::Verdict::Stable: return "stable";
            case StabilityReport::Verdict::Unstable: return "unstable";
            default: return "unknown";
        }
    };
    auto tri = [](const std::optional<bool>& b) {
        return b.has_value() ? json(*b) : json(nullptr);
    };
    json fit;
    if (rep.has_fit)
        fit = json{{"a", bigrat_str(rep.a)},
                   {"b", bigrat_str(rep.b)},
                   {"c", bigrat_str(rep.c)},
                   {"start", rep.start}};
    return json{{"verdict", verdict_name(rep.verdict)},
                {"horizon", rep.horizon},
                {"fit", fit},
                {"conditions",
                 json{{"quadratic", tri(rep.cond_quadratic)},
                      {"sup_attained", tri(rep.cond_sup_attained)},
                      {"u_linear", tri(rep.cond_u_linear)}}},
                {"disagreement", rep.disagreement}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bad_input("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw bad_input(path + ": " + e.what());
    }
}

}  // namespace zpt
