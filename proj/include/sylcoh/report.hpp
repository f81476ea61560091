#pragma once

/*
 * JSON report assembly. Reports are deterministic: keys appear in a fixed
 * order and no timestamps or machine data are included, so two runs with the
 * same configuration produce byte-identical files. Wall-clock timings are
 * included only on request, since they would break that property.
 */

#include <bit>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "cmcheck.hpp"
#include "common.hpp"

namespace sylcoh {

inline constexpr const char* kToolName = "sylcoh";
inline constexpr const char* kToolVersion = "1.0.0";

/* Run configuration as parsed from the command line. */
struct RunConfig {
  std::string family;           // "psu3", "sz", or "fixture"
  std::string fixture;          // fixture name when family == "fixture"
  int n = 0;                    // tower parameter (families only)
  int max_degree = 8;
  std::string report_path;      // empty = write the report to stdout
  bool large = false;           // lifts the default size caps
  bool timings = false;         // include wall-clock timings in the report
  std::optional<u32> field_poly;  // extension-field modulus override
};

/* Coordinates of a class, index 0 first. */
inline std::string class_bits(const BitVector& v) {
  std::string s(v.size(), '0');
  for (size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) s[i] = '1';
  return s;
}

inline nlohmann::ordered_json report_json(const CMReport& rep, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};

  nlohmann::ordered_json config;
  config["family"] = rep.family;
  if (rep.family == "fixture")
    config["fixture"] = rep.fixture_name;
  else
    config["n"] = rep.n;
  config["max_degree"] = rep.max_degree;
  if (cfg.field_poly)
    config["field_poly"] = bits_string(*cfg.field_poly, std::bit_width(*cfg.field_poly));
  j["config"] = std::move(config);

  j["group"] = {{"order", rep.group_order},
                {"center_order", rep.center_order},
                {"center_rank", rep.center_rank},
                {"two_rank", rep.two_rank},
                {"involution_count", rep.involution_count},
                {"central_involution_property", rep.civp}};

  nlohmann::ordered_json lemmas = nlohmann::ordered_json::array();
  for (const LemmaCheck& c : rep.lemmas)
    lemmas.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["lemmas"] = std::move(lemmas);

  j["betti"] = rep.betti;

  nlohmann::ordered_json duflot;
  duflot["complete"] = rep.duflot_complete;
  if (rep.duflot_complete)
    duflot["common_l"] = rep.common_l;
  else
    duflot["common_l"] = nullptr;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const DuflotDatum& d : rep.duflot)
    gens.push_back({{"index", d.index},
                    {"l", d.l},
                    {"degree", d.degree},
                    {"preimage", class_bits(d.preimage)}});
  duflot["generators"] = std::move(gens);
  duflot["missing"] = rep.duflot_missing;
  j["duflot"] = std::move(duflot);

  nlohmann::ordered_json regular;
  regular["ran"] = rep.regular_ran;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  if (rep.regular_ran)
    for (const RegularStepResult& s : rep.regular.steps)
      steps.push_back({{"pass", s.pass},
                       {"witness_degree", s.witness_degree},
                       {"witness", class_bits(s.witness)}});
  regular["steps"] = std::move(steps);
  regular["quotient_dims"] = rep.regular_ran ? rep.regular.quotient_dims
                                             : std::vector<size_t>{};
  j["regular"] = std::move(regular);

  j["hilbert"] = {{"ran", rep.hilbert_ran}, {"ok", rep.hilbert_ok}};
  j["verdict"] = rep.verdict;
  j["notes"] = rep.notes;

  if (cfg.timings) {
    nlohmann::ordered_json t;
    for (const auto& [stage, ms] : rep.timings_ms) t[stage] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

/* Serialize with a trailing newline; the whole file is written in one shot. */
inline std::string report_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

inline void write_report_file(const nlohmann::ordered_json& j, const std::string& path) {
  const std::string text = report_text(j);
  std::ofstream out(path, std::ios::binary);
  require_usage(out.good(), "cannot open report file for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  require_usage(out.good(), "report write failed: " + path);
}

}  // namespace sylcoh
