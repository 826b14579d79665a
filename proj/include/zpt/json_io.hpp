#pragma once

#include <string>

#include "json.hpp"
#include "zpt/asw.hpp"
#include "zpt/cft.hpp"
#include "zpt/tower.hpp"

namespace zpt {

using json = nlohmann::json;

// Parsers throw bad_input with a dotted path to the offending field; the CLI
// maps that to the malformed-input exit code.

FieldSpec parse_field_spec(const json& j, const std::string& at);
json field_spec_to_json(const FieldSpec& spec);

FFElem parse_ffelem(const json& j, const FiniteField& k, const std::string& at);
json ffelem_to_json(const FFElem& a);

UnramElem parse_unram(const json& j, const UnramRing& U, const std::string& at);
json unram_to_json(const UnramElem& a);

ZpApprox parse_zp_digits(const json& j, long long p, int N, const std::string& at);
json zp_to_json(const ZpApprox& a);

FqSeries parse_series(const json& j, const FiniteField& k, const std::string& at);
json series_to_json(const FqSeries& s);

// Witt vector over k((T)): {"field":…, "precision":N, "coords":[series…]}
struct LocalVecFile {
    FieldSpec spec;
    int N = 1;
    std::vector<FqSeries> coords;
};
LocalVecFile parse_local_vec(const json& j);
json local_vec_to_json(const LocalVecFile& v);

// Witt vector over k(X): coords are {"num":[FFElem…], "den":[FFElem…]}
struct GlobalVecFile {
    FieldSpec spec;
    int N = 1;
    std::vector<RatFunc> coords;
};
GlobalVecFile parse_global_vec(const json& j);

LocalStandardForm parse_local_form(const json& j);
json local_form_to_json(const LocalStandardForm& sf);

json global_form_to_json(const GlobalStandardForm& sf);
GlobalStandardForm parse_global_form(const json& j);

LocalUnit parse_local_unit(const json& j, const FiniteField& k, int N);
json local_unit_to_json(const LocalUnit& y, long long p);

// Tower datum file and profile file (general bases).
struct TowerFile {
    bool is_profile = false;    // raw ramification profile, no form data
    GlobalStandardForm form;    // when !is_profile
    long long g0 = 0;
    RamificationProfile profile;  // derived or parsed
};
TowerFile parse_tower_file(const json& j);

json genus_levels_to_json(const RamificationProfile& rp,
                          const std::vector<GenusLevel>& levels);
std::string genus_levels_to_csv(const RamificationProfile& rp,
                                const std::vector<GenusLevel>& levels);
json stability_to_json(const StabilityReport& rep);

json load_json_file(const std::string& path);  // throws bad_input

}  // namespace zpt
