import { describe, expect, it } from "vitest";

import type { EvaluateResponse } from "../src/api.js";
import { weightsChart } from "../src/charts.js";
import { evaluationView } from "../src/viewmodel.js";
import example1Eval from "./fixtures/example1.evaluate.json";

const rows = evaluationView(example1Eval as unknown as EvaluateResponse).weights;

describe("weights chart", () => {
  it("draws one bar and one whisker per criterion", () => {
    const svg = weightsChart(rows);
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg.match(/<rect /g)).toHaveLength(5);
    // three whisker lines per criterion: span plus two caps
    expect(svg.match(/<line /g)).toHaveLength(15);
    for (const row of rows) {
      expect(svg).toContain(`>${row.criterion}</text>`);
      expect(svg).toContain(`>${row.weight}</text>`);
    }
  });

  it("scales bars by the service weights", () => {
    const svg = weightsChart(rows, { width: 560, labelWidth: 72 });
    const widths = [...svg.matchAll(/<rect x="72" y="[\d.]+" width="([\d.]+)"/g)].map(
      (m) => Number(m[1]),
    );
    expect(widths).toHaveLength(5);
    // c2 carries the largest weight, c5 the smallest
    expect(Math.max(...widths)).toBe(widths[1]);
    expect(Math.min(...widths)).toBe(widths[4]);
    const ratio = widths[0]! / widths[1]!;
    expect(ratio).toBeCloseTo(rows[0]!.weightValue / rows[1]!.weightValue, 3);
  });

  it("escapes criterion names in labels", () => {
    const spiky = [{ ...rows[0]!, criterion: "a<b&c" }];
    const svg = weightsChart(spiky);
    expect(svg).toContain("a&lt;b&amp;c");
    expect(svg).not.toContain("a<b&c<");
  });
});
