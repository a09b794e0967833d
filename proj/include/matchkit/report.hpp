#pragma once

#include <string>

#include "matchkit/analysis.hpp"
#include "matchkit/suite.hpp"
#include "matchkit/version.hpp"

namespace matchkit {

/// Full analysis document for one input graph. Key order is fixed; vertex
/// ids refer to the input labeling; serialization carries no timing data, so
/// identical inputs produce identical bytes.
inline Json analyze_report(const std::string& input_descriptor, Analysis& a,
                           const HarnessOptions& opt = {}, bool with_verdicts = true) {
  Json j;
  j["tool_version"] = kVersion;
  j["input"] = input_descriptor;
  j["n"] = a.n();
  j["m"] = static_cast<int>(a.graph().edge_count());
  Json props = to_json(a.report());
  for (auto& [k, v] : props.items()) j[k] = v;

  Json cuts = Json::array();
  if (!a.complete()) {
    for (const CutDecomposition& cd : a.min_cuts()) {
      Json c;
      c["S"] = vertex_set_json(cd.S);
      c["k"] = cd.k;
      Json sizes = Json::array();
      for (const auto& p : cd.parts) sizes.push_back(p.size());
      c["component_sizes"] = sizes;
      cuts.push_back(c);
    }
  }
  j["cuts"] = cuts;

  Json verdicts = Json::array();
  if (with_verdicts)
    for (const Verdict& v : run_all_checkers(a, opt)) verdicts.push_back(to_json(v));
  j["verdicts"] = verdicts;
  return j;
}

}  // namespace matchkit
