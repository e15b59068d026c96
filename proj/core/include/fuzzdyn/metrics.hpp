#pragma once

#include "fuzzdyn/fuzzy.hpp"

namespace fuzzdyn {

// sup over levels of the Hausdorff distance between cuts. Exact: the sup
// is attained on the merged level partition.
Rat d_infty(const StepFuzzySet& u, const StepFuzzySet& v);

// Hausdorff distance between the two sendographs under the box metric
// max(ground distance, height distance). Exact closed form: the worst
// point of a vertical segment is its top, so only support points and
// positive parts of height gaps enter.
Rat d_sendo(const StepFuzzySet& u, const StepFuzzySet& v);

struct SkorokhodResult {
  Rat value;
  TimeWarp warp;
};

// Best time-warped match: the infimum over increasing homeomorphisms t of
// max(warp_norm(t), d_infty(u, warp_apply(t, v))), with a warp realizing
// the alignment. When the infimum is approached only in the limit the
// returned warp sits within a vanishing nudge of it; the value is always
// the infimum itself.
SkorokhodResult skorokhod_alignment(const StepFuzzySet& u, const StepFuzzySet& v);

Rat d_skorokhod(const StepFuzzySet& u, const StepFuzzySet& v);

// Level-wise entourage: every cut pair within the metric entourage of
// radius eps (strict). Equivalent to d_infty(u, v) < eps.
bool f_entourage_contains(const Rat& eps, const StepFuzzySet& u, const StepFuzzySet& v);

// Warped entourage: some warp of norm under eps_warp aligns the sets with
// every matched cut pair within eps_metric (both strict).
bool g_entourage_contains(const Rat& eps_metric, const Rat& eps_warp,
                          const StepFuzzySet& u, const StepFuzzySet& v);

// Sendograph entourage: every segment of one set is matched by a segment
// of the other within eps_metric horizontally and eps_height vertically
// (both strict).
bool s_entourage_contains(const Rat& eps_metric, const Rat& eps_height,
                          const StepFuzzySet& u, const StepFuzzySet& v);

}  // namespace fuzzdyn
