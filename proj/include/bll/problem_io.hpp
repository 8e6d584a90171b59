#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bll/admissibility.hpp"
#include "bll/deformation.hpp"
#include "bll/errors.hpp"
#include "bll/functional.hpp"
#include "bll/interval_set.hpp"
#include "bll/linear_form.hpp"
#include "bll/rational.hpp"

namespace bll {

using nlohmann::json;

// Wire format for scalars: canonical "p/q" (coprime, q > 1) or "p"; plain
// JSON integers are accepted on input.
inline Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return parse_rat(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw parse_error("rational must be an integer or a 'p/q' string");
}

inline json rat_to_json(const Rat& r) { return json(rat_str(r)); }

inline json rats_to_json(const std::vector<Rat>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(rat_to_json(r));
  return a;
}

inline IntervalSet set_from_json(const json& v) {
  if (!v.is_array()) throw parse_error("interval set must be an array of [lo, hi] pairs");
  std::vector<Interval> parts;
  for (const auto& pair : v) {
    if (!pair.is_array() || pair.size() != 2) throw parse_error("interval must be a [lo, hi] pair");
    Interval iv{rat_from_json(pair[0]), rat_from_json(pair[1])};
    if (iv.lo > iv.hi) throw parse_error("interval with lo > hi");
    parts.push_back(std::move(iv));
  }
  return IntervalSet::from_intervals(std::move(parts));
}

inline json set_to_json(const IntervalSet& e) {
  json a = json::array();
  for (const auto& iv : e.components()) a.push_back(json::array({rat_to_json(iv.lo), rat_to_json(iv.hi)}));
  return a;
}

// Document shape:
//   {"forms": [[a, b], ...], "sets": [[[lo, hi], ...], ...]}
inline Problem problem_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("forms") || !doc.contains("sets"))
    throw parse_error("problem document needs 'forms' and 'sets'");
  const json& forms = doc["forms"];
  const json& sets = doc["sets"];
  if (!forms.is_array() || !sets.is_array() || forms.size() != sets.size())
    throw parse_error("'forms' and 'sets' must be arrays of equal length");
  Problem p;
  for (const auto& f : forms) {
    if (!f.is_array() || f.size() != 2) throw parse_error("form must be an [a, b] pair");
    p.forms.push_back(LinearForm{rat_from_json(f[0]), rat_from_json(f[1])});
  }
  for (const auto& s : sets) p.sets.push_back(set_from_json(s));
  return p;
}

inline json problem_to_json(const Problem& p) {
  json forms = json::array(), sets = json::array();
  for (const auto& f : p.forms) forms.push_back(json::array({rat_to_json(f.a), rat_to_json(f.b)}));
  for (const auto& e : p.sets) sets.push_back(set_to_json(e));
  return json{{"forms", forms}, {"sets", sets}};
}

inline json report_to_json(const AdmissibilityReport& rep) {
  return json{{"verdict", verdict_name(rep.verdict)},
              {"slacks", rats_to_json(rep.slacks)},
              {"witnesses", rep.witnesses}};
}

inline json rbar_to_json(const RBarResult& rb) {
  return json{{"r_bar", rat_to_json(rb.r_bar)},
              {"containment_index", rb.containment_index},
              {"report_at_rbar", report_to_json(rb.report_at_rbar)},
              {"pre_rbar_probe", report_to_json(rb.pre_rbar_probe)}};
}

inline json equality_to_json(const EqualityVerdict& v) {
  json out{{"is_maximizer", v.is_maximizer},
           {"deficit", rat_to_json(v.deficit_value)},
           {"theorem_violation", v.theorem_violation}};
  if (v.structure) {
    out["centers"] = rats_to_json(v.structure->centers);
    out["z"] = json::array({rat_to_json(v.structure->z.x), rat_to_json(v.structure->z.y)});
  }
  return out;
}

// Ordered snapshot list for the single deformation step: the start verdict is
// a precondition of the trace, the end verdict is certified by find_rbar.
inline json trace_to_json(const InductionTrace& tr) {
  const json start{{"r", rat_to_json(rat(0))},
                   {"verdict", verdict_name(Verdict::strictly_admissible)},
                   {"chain", json{{"value", rat_to_json(tr.value)},
                                  {"rearranged_value", rat_to_json(tr.rearranged_value)},
                                  {"scale", rat_to_json(tr.scale)}}}};
  const json end{{"r", rat_to_json(tr.r_bar)},
                 {"verdict", verdict_name(Verdict::admissible_not_strict)},
                 {"chain", json{{"truncation_bound", rat_to_json(tr.truncation_bound)},
                                {"rearranged_bound", rat_to_json(tr.rearranged_bound)},
                                {"truncation_gap", rat_to_json(tr.truncation_gap)},
                                {"rearrangement_gap", rat_to_json(tr.rearrangement_gap)}}}};
  return json::array({start, end});
}

}  // namespace bll
