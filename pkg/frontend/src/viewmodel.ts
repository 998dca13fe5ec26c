/** Pure derivations from service responses to display structures.
 *
 * Everything here formats or rearranges numbers the service returned;
 * nothing recomputes them.
 */

import type { CheckResponse, EvaluateResponse } from "./api.js";
import { format4, formatDelta, formatExact } from "./format.js";

export type GaugeColor = "green" | "amber" | "red";

/** Traffic-light thresholds are a UI affordance, not a method claim. */
export function gaugeColor(cr: number): GaugeColor {
  if (cr < 0.25) return "green";
  if (cr < 0.5) return "amber";
  return "red";
}

/** The judgments most worth revisiting: the criteria whose bound binds. */
export function highlightTargets(check: CheckResponse): string[] {
  switch (check.case) {
    case "CASE_I0":
      return check.i0 ? [check.i0] : [];
    case "CASE_J0":
      return check.j0 ? [check.j0] : [];
    case "CASE_I0J0":
      return [check.i0, check.j0].filter((c): c is string => c !== null);
    default:
      return [];
  }
}

export interface EpsRow {
  label: string;
  value: string;
}

export interface CheckView {
  epsStar: string;
  ci: string;
  cr: string;
  crValue: number;
  gauge: GaugeColor;
  caseTag: string;
  consistent: boolean;
  highlights: string[];
  epsRows: EpsRow[];
  warnings: string[];
}

export function checkView(check: CheckResponse): CheckView {
  const epsRows: EpsRow[] = Object.entries(check.eps_i).map(([name, value]) => ({
    label: `eps[${name}]`,
    value: format4(value),
  }));
  for (const entry of check.eps_ij) {
    epsRows.push({
      label: `eps[${entry.pair[0]},${entry.pair[1]}]`,
      value: format4(entry.value),
    });
  }
  return {
    epsStar: format4(check.eps_star),
    ci: format4(check.ci),
    cr: format4(check.cr),
    crValue: check.cr,
    gauge: gaugeColor(check.cr),
    caseTag: check.case,
    consistent: check.consistent,
    highlights: highlightTargets(check),
    epsRows,
    warnings: check.warnings,
  };
}

export interface WeightRow {
  criterion: string;
  weight: string;
  low: string;
  high: string;
  eta: string;
  /** raw values for bar/whisker geometry */
  weightValue: number;
  lowValue: number;
  highValue: number;
}

export interface ComparisonRow {
  criterion: string;
  originalBto: string;
  modifiedBto: string;
  originalOtw: string;
  modifiedOtw: string;
  changed: boolean;
}

export interface EvaluationView {
  epsStar: string;
  cr: string;
  weights: WeightRow[];
  comparison: ComparisonRow[];
  warnings: string[];
}

export function evaluationView(response: EvaluateResponse): EvaluationView {
  const criteria = response.request.criteria;
  const weights: WeightRow[] = criteria.map((name) => {
    const interval = response.interval_weights[name] ?? [NaN, NaN];
    const weight = response.best_weights[name] ?? NaN;
    return {
      criterion: name,
      weight: format4(weight),
      low: format4(interval[0]),
      high: format4(interval[1]),
      eta: format4(response.deviations[name] ?? NaN),
      weightValue: weight,
      lowValue: interval[0],
      highValue: interval[1],
    };
  });
  const comparison: ComparisonRow[] = criteria.map((name) => {
    const originalBto = response.request.best_to_other[name] ?? NaN;
    const modifiedBto = response.best_modified_pcs.best_to_other[name] ?? NaN;
    const originalOtw = response.request.other_to_worst[name] ?? NaN;
    const modifiedOtw = response.best_modified_pcs.other_to_worst[name] ?? NaN;
    return {
      criterion: name,
      originalBto: format4(originalBto),
      modifiedBto: format4(modifiedBto),
      originalOtw: format4(originalOtw),
      modifiedOtw: format4(modifiedOtw),
      changed:
        format4(originalBto) !== format4(modifiedBto) ||
        format4(originalOtw) !== format4(modifiedOtw),
    };
  });
  return {
    epsStar: format4(response.consistency.eps_star),
    cr: format4(response.consistency.cr),
    weights,
    comparison,
    warnings: response.warnings,
  };
}

export interface WhatIfDelta {
  crMain: string;
  crBranch: string;
  crDelta: string;
  weightDeltas: { criterion: string; main: string; branch: string; delta: string }[];
}

/** Comparison of two service responses; deltas are differences of returned
 * values, never locally derived weights. */
export function whatIfDelta(
  main: CheckResponse,
  branch: CheckResponse,
  mainEval?: EvaluateResponse | null,
  branchEval?: EvaluateResponse | null,
): WhatIfDelta {
  const weightDeltas: WhatIfDelta["weightDeltas"] = [];
  if (mainEval && branchEval) {
    for (const criterion of mainEval.request.criteria) {
      const a = mainEval.best_weights[criterion];
      const b = branchEval.best_weights[criterion];
      if (a === undefined || b === undefined) continue;
      weightDeltas.push({
        criterion,
        main: format4(a),
        branch: format4(b),
        delta: formatDelta(b - a),
      });
    }
  }
  return {
    crMain: format4(main.cr),
    crBranch: format4(branch.cr),
    crDelta: formatDelta(branch.cr - main.cr),
    weightDeltas,
  };
}

/** CSV export of the evaluation table at full precision. */
export function evaluationCsv(response: EvaluateResponse): string {
  const lines = ["criterion,weight,low,high,eta"];
  for (const name of response.request.criteria) {
    const interval = response.interval_weights[name] ?? [NaN, NaN];
    lines.push(
      [
        name,
        formatExact(response.best_weights[name] ?? NaN),
        formatExact(interval[0]),
        formatExact(interval[1]),
        formatExact(response.deviations[name] ?? NaN),
      ].join(","),
    );
  }
  return lines.join("\n") + "\n";
}
