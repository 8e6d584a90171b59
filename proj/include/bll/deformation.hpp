#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "bll/admissibility.hpp"
#include "bll/errors.hpp"
#include "bll/functional.hpp"
#include "bll/interval_set.hpp"
#include "bll/linear_form.hpp"
#include "bll/rational.hpp"

namespace bll {

// The deformation shaves r/2 of measure off each end of every inner set and
// leaves the base set alone. Admissibility of the deformed measure tuple is
// monitored through its strip half-widths.

inline std::vector<LinearForm> normal_strip_forms(const NormalProblem& np) {
  std::vector<LinearForm> forms{LinearForm{1, 0}};
  for (const auto& tj : np.t) forms.push_back(LinearForm{tj, 1});
  return forms;
}

// measures = full tuple (base first). Base width stays fixed, inner widths
// shrink at rate 1/2.
inline std::vector<Rat> half_widths_at(const std::vector<Rat>& measures, const Rat& r) {
  if (measures.empty()) throw precondition_error("empty measure tuple");
  if (r < 0) throw precondition_error("negative deformation parameter");
  std::vector<Rat> w{measures[0] / 2};
  for (std::size_t j = 1; j < measures.size(); ++j) {
    if (measures[j] < r) throw precondition_error("deformation parameter exceeds an inner measure");
    w.push_back((measures[j] - r) / 2);
  }
  return w;
}

// [base, inner sets truncated by r/2 on each side].
inline std::vector<IntervalSet> sets_at(const NormalProblem& np, const Rat& r) {
  std::vector<IntervalSet> out{np.base};
  const Rat half = r / 2;
  for (const auto& e : np.sets) out.push_back(truncate(e, half, half).set);
  return out;
}

struct RBarResult {
  Rat r_bar;
  AdmissibilityReport report_at_rbar;  // admissible, never strict
  int containment_index;               // always 0: the base strip absorbs its polytope first
  AdmissibilityReport pre_rbar_probe;  // strictly admissible just below r_bar
};

namespace detail {

inline Rat probe_factor_down() { return rat(1048575, 1048576); }  // 1 - 2^-20
inline Rat probe_factor_up() { return rat(1048577, 1048576); }    // 1 + 2^-20

}  // namespace detail

// First deformation parameter at which strict admissibility fails. Strict
// admissibility at r means: r below every inner measure and the strip system
// of the deformed widths classifies strict. The failure set is a closed
// upper interval, so the infimum is attained; it is located on an exact
// candidate grid (vertex-collision roots plus the measure cap) and then
// certified:
//   - the verdict at r_bar is admissible but not strict, with containment
//     witness exactly at index 0,
//   - the grid neighbor below and the probe r_bar*(1 - 2^-20) are strict,
//   - the probe r_bar*(1 + 2^-20) (capped) is not,
//   - an independent continuous bisection isolates the same grid point.
inline RBarResult find_rbar(const NormalProblem& np) {
  if (np.t.size() != np.sets.size() || np.sets.empty()) throw precondition_error("malformed normal problem");
  const std::vector<LinearForm> forms = normal_strip_forms(np);
  const std::vector<Rat> measures = np.measures();
  for (const auto& m : measures)
    if (m <= 0) throw precondition_error("deformation needs positive measures");

  Rat m_min = measures[1];
  for (std::size_t j = 2; j < measures.size(); ++j) m_min = std::min(m_min, measures[j]);

  auto strict_at = [&](const Rat& r) {
    if (!(r < m_min)) return false;  // an inner measure has been exhausted
    return classify_strips(StripSystem{forms, half_widths_at(measures, r)}).verdict ==
           Verdict::strictly_admissible;
  };
  if (!strict_at(0)) throw precondition_error("problem is not strictly admissible");

  // Width of strip idx as an affine function A + B*r.
  const std::size_t n1 = forms.size();
  auto width_aff = [&](std::size_t idx) {
    return std::pair<Rat, Rat>{measures[idx] / 2, idx == 0 ? Rat(0) : rat(-1, 2)};
  };

  std::vector<Rat> candidates{m_min};
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) {
      const Rat D = det(forms[i], forms[j]);
      const auto [wiA, wiB] = width_aff(i);
      const auto [wjA, wjB] = width_aff(j);
      for (int sj : {1, -1}) {
        // v(r) solves L_i = w_i(r), L_j = sj*w_j(r); the mirrored vertex is
        // covered by the sign on the right-hand side below.
        const Rat vxA = (wiA * forms[j].b - sj * wjA * forms[i].b) / D;
        const Rat vxB = (wiB * forms[j].b - sj * wjB * forms[i].b) / D;
        const Rat vyA = (forms[i].a * sj * wjA - forms[j].a * wiA) / D;
        const Rat vyB = (forms[i].a * sj * wjB - forms[j].a * wiB) / D;
        for (std::size_t k = 0; k < n1; ++k) {
          if (k == i || k == j) continue;
          const Rat pA = forms[k].a * vxA + forms[k].b * vyA;
          const Rat pB = forms[k].a * vxB + forms[k].b * vyB;
          const auto [wkA, wkB] = width_aff(k);
          for (int sk : {1, -1}) {
            const Rat denom = pB - sk * wkB;
            if (denom == 0) continue;
            const Rat root = (sk * wkA - pA) / denom;
            if (root > 0 && root <= m_min) candidates.push_back(root);
          }
        }
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const Rat r_bar = detail::first_failure(candidates, strict_at);

  // Independent localization: continuous bisection down to a bracket holding
  // exactly one grid point.
  {
    Rat lo = 0, hi = m_min;
    auto in_bracket = [&](const Rat& lo_, const Rat& hi_) {
      return std::upper_bound(candidates.begin(), candidates.end(), hi_) -
             std::upper_bound(candidates.begin(), candidates.end(), lo_);
    };
    int guard = 0;
    while (in_bracket(lo, hi) > 1) {
      if (++guard > 20000) throw certificate_error("bisection failed to separate candidates");
      const Rat mid = (lo + hi) / 2;
      (strict_at(mid) ? lo : hi) = mid;
    }
    if (in_bracket(lo, hi) != 1 || !(r_bar > lo && r_bar <= hi))
      throw certificate_error("bisection disagrees with the candidate grid");
  }

  if (!(r_bar > 0) || !(r_bar < m_min)) throw certificate_error("critical parameter outside (0, min inner measure)");

  const AdmissibilityReport at_rbar =
      classify_strips(StripSystem{forms, half_widths_at(measures, r_bar)});
  if (at_rbar.verdict != Verdict::admissible_not_strict)
    throw certificate_error("verdict at the critical parameter is not admissible-touching");
  if (at_rbar.witnesses != std::vector<int>{0})
    throw certificate_error("containment witness at the critical parameter is not exactly index 0");

  const Rat below = r_bar * detail::probe_factor_down();
  const AdmissibilityReport pre_probe =
      classify_strips(StripSystem{forms, half_widths_at(measures, below)});
  if (pre_probe.verdict != Verdict::strictly_admissible)
    throw certificate_error("probe below the critical parameter is not strict");
  if (strict_at(std::min(Rat(r_bar * detail::probe_factor_up()), m_min)))
    throw certificate_error("probe above the critical parameter is still strict");

  return RBarResult{r_bar, at_rbar, 0, pre_probe};
}

struct EqualityStructure {
  std::vector<Rat> centers;
  Point z;  // common center: L_j(z) = centers[j] for every j
};

struct EqualityVerdict {
  bool is_maximizer = false;
  Rat deficit_value;
  std::optional<EqualityStructure> structure;
  // Set when the value matches the rearranged value yet the sets are not
  // coherent centered intervals. Admissible inputs can never produce it.
  bool theorem_violation = false;
};

// Decides whether an admissible problem attains the rearranged value, and if
// so extracts the interval structure that must accompany equality.
inline EqualityVerdict equality_analysis(const Problem& p) {
  validate_problem(p);
  if (check(p).verdict == Verdict::inadmissible)
    throw precondition_error("equality analysis requires admissible measures");

  EqualityVerdict out;
  out.deficit_value = deficit(p);
  if (out.deficit_value < 0) throw certificate_error("negative deficit");
  if (out.deficit_value > 0) return out;

  std::vector<Rat> centers;
  for (const auto& e : p.sets) {
    const auto c = interval_center_mod_null(e);
    if (!c) {
      out.theorem_violation = true;
      return out;
    }
    centers.push_back(*c);
  }
  const auto z = coherent_center(p.forms, centers);
  if (!z) {
    out.theorem_violation = true;
    return out;
  }
  out.is_maximizer = true;
  out.structure = EqualityStructure{std::move(centers), *z};
  return out;
}

// The maximizing configuration with the given measures centered at z:
// E_j = [L_j(z) - m_j/2, L_j(z) + m_j/2].
inline Problem construct_maximizer(const std::vector<LinearForm>& forms, const std::vector<Rat>& measures,
                                   const Point& z) {
  if (check(forms, measures).verdict == Verdict::inadmissible)
    throw precondition_error("maximizer construction requires admissible measures");
  Problem out;
  out.forms = forms;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    const Rat c = forms[j](z);
    const Rat w = measures[j] / 2;
    out.sets.push_back(IntervalSet::interval(c - w, c + w));
  }
  return out;
}

// One step of the deficit decomposition, in normal-form values:
//   value <= truncation_bound <= rearranged_bound = rearranged_value,
// where truncation_bound = r_bar*|base| + (value of the truncated family) and
// the last equality is exact for centered intervals. The two gaps add up to
// the (normal-form) deficit; multiply by scale to translate back.
struct InductionTrace {
  Rat scale;  // original deficit = scale * (rearranged_value - value)
  Rat r_bar;
  Rat value;
  Rat truncation_bound;
  Rat rearranged_bound;
  Rat rearranged_value;
  Rat truncation_gap;
  Rat rearrangement_gap;
};

inline InductionTrace induction_trace(const Problem& p) {
  validate_problem(p);
  auto [nf, reduced] = to_normal_form(p, 0, 1);
  const NormalProblem np = as_normal(reduced);
  const RBarResult rb = find_rbar(np);

  NormalProblem trunc{np.base, np.t, {}};
  const Rat half = rb.r_bar / 2;
  for (const auto& e : np.sets) trunc.sets.push_back(truncate(e, half, half).set);

  auto rearranged = [](const NormalProblem& q) {
    NormalProblem s{IntervalSet::from_intervals({symmetrize(q.base)}), q.t, {}};
    for (const auto& e : q.sets) s.sets.push_back(IntervalSet::from_intervals({symmetrize(e)}));
    return s;
  };

  InductionTrace tr;
  tr.scale = nf.c;
  tr.r_bar = rb.r_bar;
  tr.value = evaluate_normal(np);
  const Rat base_measure = np.base.measure();
  tr.truncation_bound = rb.r_bar * base_measure + evaluate_normal(trunc);
  tr.rearranged_bound = rb.r_bar * base_measure + evaluate_normal(rearranged(trunc));
  tr.rearranged_value = evaluate_normal(rearranged(np));

  if (tr.value > tr.truncation_bound) throw certificate_error("truncation bound fails");
  if (tr.truncation_bound > tr.rearranged_bound) throw certificate_error("rearrangement bound fails");
  if (tr.rearranged_value != tr.rearranged_bound)
    throw certificate_error("rearranged chain identity fails");

  tr.truncation_gap = tr.truncation_bound - tr.value;
  tr.rearrangement_gap = tr.rearranged_bound - tr.truncation_bound;
  return tr;
}

}  // namespace bll
