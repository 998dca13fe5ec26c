/** SVG bar chart of the best weights with interval whiskers.
 *
 * Built as a string so the chart is testable without a DOM; geometry
 * scales the service's numbers, labels format them.
 */

import type { WeightRow } from "./viewmodel.js";

export interface ChartOptions {
  width?: number;
  barHeight?: number;
  gap?: number;
  labelWidth?: number;
}

export function weightsChart(rows: WeightRow[], options: ChartOptions = {}): string {
  const width = options.width ?? 560;
  const barHeight = options.barHeight ?? 26;
  const gap = options.gap ?? 10;
  const labelWidth = options.labelWidth ?? 72;
  const valueWidth = 64;
  const plotWidth = width - labelWidth - valueWidth;
  const maxValue = Math.max(...rows.map((r) => r.highValue), 1e-9);
  const scale = (v: number) => (v / maxValue) * plotWidth;

  const parts: string[] = [];
  const height = rows.length * (barHeight + gap) + gap;
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `width="${width}" height="${height}" role="img" class="weights-chart">`,
  );
  rows.forEach((row, index) => {
    const y = gap + index * (barHeight + gap);
    const mid = y + barHeight / 2;
    const barW = scale(row.weightValue);
    const loX = labelWidth + scale(row.lowValue);
    const hiX = labelWidth + scale(row.highValue);
    parts.push(
      `<text x="${labelWidth - 8}" y="${mid + 4}" text-anchor="end" class="bar-label">` +
        `${escapeXml(row.criterion)}</text>`,
      `<rect x="${labelWidth}" y="${y}" width="${barW.toFixed(2)}" height="${barHeight}" class="bar"/>`,
      // interval whisker: low and high of the optimal weight range
      `<line x1="${loX.toFixed(2)}" y1="${mid}" x2="${hiX.toFixed(2)}" y2="${mid}" class="whisker"/>`,
      `<line x1="${loX.toFixed(2)}" y1="${y + 5}" x2="${loX.toFixed(2)}" y2="${y + barHeight - 5}" class="whisker"/>`,
      `<line x1="${hiX.toFixed(2)}" y1="${y + 5}" x2="${hiX.toFixed(2)}" y2="${y + barHeight - 5}" class="whisker"/>`,
      `<text x="${labelWidth + plotWidth + 8}" y="${mid + 4}" class="bar-value">${row.weight}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
